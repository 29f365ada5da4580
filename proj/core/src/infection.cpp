#include "hcyl/infection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "hcyl/error.hpp"

namespace hcyl {

WittSignatureVector lambda_effect(const LiftData& lifts, long d, const SeifertMatrix& A) {
  int dd = static_cast<int>(d);
  WittSignatureVector total = zero_signatures(dd);
  if (A.empty()) return total;
  std::map<int, WittSignatureVector> at_one;
  for (const auto& L : lifts.lifts) {
    long psi = ((L.psi % d) + d) % d;
    if (psi == 0) continue;  // the two terms coincide
    auto it = at_one.find(L.degree);
    if (it == at_one.end()) it = at_one.emplace(L.degree, witt_signatures(lambda_r(A, {dd, 0}, L.degree), dd)).first;
    total += witt_signatures(lambda_r(A, {dd, psi}, L.degree), dd) - it->second;
  }
  return total;
}

WittSignatureVector lambda_effect(const InfectionSpec& spec) {
  if (spec.alpha.empty()) throw ValidationError("infection curve is trivial");
  if (!(spec.alpha.basis() == spec.tower.basis)) throw ValidationError("infection curve over the wrong basis");
  return lambda_effect(lift_loop(spec.tower, spec.alpha), spec.tower.d(), spec.knot);
}

PStructure GammaTower::structure(long d) const {
  std::vector<long> v;
  for (long x : phi) v.push_back(((x % d) + d) % d);
  auto chars_d = chars;
  chars_d.push_back(cyclic_character(d, v));
  return tower_build(basis, p, chars_d);
}

std::vector<Word> derived_candidates(SurfaceBasis basis, int h, std::size_t limit) {
  std::vector<Word> cur;
  for (int k = 1; k <= basis.rank(); ++k) cur.push_back(Word::generator(basis, k));
  for (int t = 0; t < h; ++t) {
    std::vector<Word> next;
    for (std::size_t i = 0; i < cur.size() && next.size() < limit; ++i)
      for (std::size_t j = i + 1; j < cur.size() && next.size() < limit; ++j) {
        Word w = commutator(cur[i], cur[j]);
        if (!w.empty()) next.push_back(w);
      }
    std::stable_sort(next.begin(), next.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
    cur = std::move(next);
  }
  if (cur.size() > limit) cur.resize(limit);
  return cur;
}

namespace {

// Characters of a level to try: the full mod-p abelianization, then single coordinates.
std::vector<Character> level_characters(const CosetLevel& L, long p) {
  std::vector<Character> out{mod_p_abelianization(L, p)};
  for (int k = 0; k < L.rank(); ++k) {
    std::vector<long> v(L.rank(), 0);
    v[k] = 1;
    out.push_back(cyclic_character(p, v));
  }
  return out;
}

// phi with phi(v) in {-1,0,1} for every v and some value 1.
std::optional<std::vector<long>> find_phi(const std::vector<std::vector<long>>& vecs, int rank) {
  std::vector<std::vector<long>> tries;
  for (int k = 0; k < rank; ++k) {
    std::vector<long> e(rank, 0);
    e[k] = 1;
    tries.push_back(e);
  }
  for (int k = 0; k < rank; ++k)
    for (int l = k + 1; l < rank; ++l)
      for (int s : {1, -1}) {
        std::vector<long> e(rank, 0);
        e[k] = 1;
        e[l] = s;
        tries.push_back(e);
      }
  for (auto phi : tries) {
    bool ok = true, one = false, minus = false;
    for (const auto& v : vecs) {
      long x = 0;
      for (int k = 0; k < rank; ++k) x += phi[k] * v[k];
      if (x < -1 || x > 1) ok = false;
      one = one || x == 1;
      minus = minus || x == -1;
    }
    if (!ok) continue;
    if (!one && minus) {
      for (auto& x : phi) x = -x;
      one = true;
    }
    if (one) return phi;
  }
  return std::nullopt;
}

}  // namespace

GammaTower gamma_tower_search(SurfaceBasis basis, long p, int h) {
  basis.check();
  if (basis.rank() <= 1) throw ValidationError("gamma_tower_search needs b_1 > 1");
  if (h < 0) throw ValidationError("height must be nonnegative");
  auto gammas = derived_candidates(basis, h, 24);
  // towers: every choice of level characters, depth-first
  std::vector<Character> chars;
  std::vector<CosetLevel> levels{base_level(basis)};
  std::optional<GammaTower> found;
  std::function<void()> rec = [&]() {
    if (found) return;
    if (static_cast<int>(chars.size()) == h) {
      const auto& L = levels.back();
      for (const auto& g : gammas) {
        std::vector<std::vector<long>> vecs;
        bool loops = true;
        for (int c = 0; c < L.cosets && loops; ++c) {
          if (L.act(c, g) != c) loops = false;
          else vecs.push_back(L.rewrite(c, g));
        }
        if (!loops) continue;
        auto phi = find_phi(vecs, L.rank());
        if (!phi) continue;
        GammaTower gt;
        gt.basis = basis;
        gt.p = p;
        gt.h = h;
        gt.gamma = g;
        gt.chars = chars;
        gt.phi = *phi;
        for (const auto& v : vecs) {
          long x = 0;
          for (int k = 0; k < L.rank(); ++k) x += (*phi)[k] * v[k];
          gt.lift_values.push_back(x);
          if (x != 0) ++gt.c;
        }
        found = gt;
        return;
      }
      return;
    }
    for (auto& chi : level_characters(levels.back(), p)) {
      if (levels.back().cosets * chi.group_order() > 4096) continue;
      chars.push_back(chi);
      levels.push_back(next_level(basis, levels[levels.size() - 1], chi));
      rec();
      levels.pop_back();
      chars.pop_back();
      if (found) return;
    }
  };
  rec();
  if (!found)
    throw SearchExhausted("gamma_tower_search: no loop and tower found at height " + std::to_string(h));
  return *found;
}

Certificate independence_certificate(const FamilyReport& family, const GammaTower& gt,
                                     const std::vector<long>& coeffs) {
  const auto& mem = family.members;
  if (coeffs.size() != mem.size()) throw ValidationError("one coefficient per family member is required");
  auto nz = std::find_if(coeffs.begin(), coeffs.end(), [](long a) { return a != 0; });
  if (nz == coeffs.end()) throw ValidationError("all coefficients vanish");
  if (family.p != gt.p) throw ValidationError("family prime differs from the tower prime");
  for (const auto& chk : verify_family(family.p, mem))
    if (!chk.ok)
      throw ValidationError("certificate refused: member " + std::to_string(chk.member) + " fails condition (" +
                            chk.condition + "): " + chk.detail);
  Certificate cert;
  std::size_t i0 = static_cast<std::size_t>(nz - coeffs.begin());
  cert.i0 = static_cast<int>(i0) + 1;
  cert.d = mem[i0].d;
  PStructure T = gt.structure(cert.d);
  cert.lifts = lift_loop(T, gt.gamma);
  for (const auto& L : cert.lifts.lifts) {
    if (L.degree != 1) throw ValidationError("a lift of the infection curve is not a loop");
    if (L.psi != 0) ++cert.c;
  }
  int dd = static_cast<int>(cert.d);
  bool zeros = true;
  for (std::size_t i = 0; i < mem.size(); ++i) {
    CertificateTerm t;
    t.coeff = coeffs[i];
    t.d = mem[i].d;
    t.effect = lambda_effect(cert.lifts, cert.d, mem[i].A);
    t.defining_sign = t.effect.at(1);
    t.doubled_contribution = 2 * t.coeff * t.defining_sign;
    if (i > i0) {
      for (long s = 0; s < cert.d; ++s) t.zero_checks.push_back(lt_signature(mem[i].A, {dd, s}));
      t.zeros_ok = t.defining_sign == 0 &&
                   std::all_of(t.zero_checks.begin(), t.zero_checks.end(), [](long v) { return v == 0; });
      zeros = zeros && t.zeros_ok;
    }
    cert.evaluated += t.doubled_contribution;
    cert.terms.push_back(std::move(t));
  }
  cert.sigma_i0 = lt_signature(mem[i0].A, {dd, 1});
  cert.claimed = 2 * coeffs[i0] * cert.c * cert.sigma_i0;
  cert.verdict = zeros && cert.claimed != 0 && cert.claimed == cert.evaluated;
  return cert;
}

}  // namespace hcyl
