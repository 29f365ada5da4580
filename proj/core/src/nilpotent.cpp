#include "hcyl/nilpotent.hpp"

#include "hcyl/error.hpp"
#include "hcyl/lyndon.hpp"
#include "hcyl/magnus.hpp"

namespace hcyl {

bool nil_trivial(const Word& w, int q) {
  if (q < 2) throw ValidationError("nilpotent level must be >= 2");
  return !lcs_weight(w, q).has_value();
}

bool nil_eq(const Word& u, const Word& v, int q) { return nil_trivial(u * v.inverse(), q); }

NilAutomorphism NilAutomorphism::identity(SurfaceBasis basis, int q) {
  NilAutomorphism a{basis, q, {}};
  for (int k = 1; k <= basis.rank(); ++k) a.images.push_back(Word::generator(basis, k));
  return a;
}

NilAutomorphism NilAutomorphism::inner(const Word& w, int q) {
  NilAutomorphism a{w.basis(), q, {}};
  Word wi = w.inverse();
  for (int k = 1; k <= w.basis().rank(); ++k) a.images.push_back(wi * Word::generator(w.basis(), k) * w);
  return a;
}

Word aut_apply(const NilAutomorphism& phi, const Word& w) {
  if (!(w.basis() == phi.basis)) throw ValidationError("aut_apply: basis mismatch");
  return substitute(w, phi.images, phi.basis);
}

NilElement aut_apply(const NilAutomorphism& phi, const NilElement& e) {
  if (phi.q != 0 && phi.q < e.q)
    throw ValidationError("aut_apply: automorphism level " + std::to_string(phi.q) + " below element level " +
                          std::to_string(e.q));
  return {aut_apply(phi, e.rep), e.q};
}

ImageExpander::ImageExpander(const NilAutomorphism& phi, int D) : b_(phi.basis.rank()), D_(D) {
  for (const auto& im : phi.images) {
    letter_.push_back(im.size() == 1 ? im.letters()[0] : 0);
    if (im.size() == 1) {
      fwd_.emplace_back(b_, 0);
      inv_.emplace_back(b_, 0);
    } else {
      fwd_.push_back(expand_dense(im, D));
      inv_.push_back(expand_dense(im.inverse(), D));
    }
  }
}

DenseSeries ImageExpander::operator()(const DenseSeries& prefix, const Word& w) const {
  DenseSeries s = prefix;
  for (int a : w.letters()) {
    int k = std::abs(a) - 1;
    if (letter_[k] != 0)
      s.mul_letter(a > 0 ? letter_[k] : -letter_[k]);
    else
      s = s * (a > 0 ? fwd_[k] : inv_[k]);
  }
  return s;
}

DenseSeries ImageExpander::operator()(const Word& w) const { return (*this)(DenseSeries::one(b_, D_), w); }

Word nil_apply(const NilAutomorphism& phi, const Word& w, int q) {
  return nil_normal_form(ImageExpander(phi, q - 1)(w), phi.basis, q);
}

NilAutomorphism aut_compose(const NilAutomorphism& phi, const NilAutomorphism& psi) {
  if (!(phi.basis == psi.basis)) throw ValidationError("aut_compose: basis mismatch");
  NilAutomorphism r{phi.basis, meet_level(phi.q, psi.q), {}};
  for (const auto& im : psi.images) r.images.push_back(aut_apply(phi, im));
  return r;
}

bool aut_equal(const NilAutomorphism& phi, const NilAutomorphism& psi, int q) {
  for (std::size_t k = 0; k < phi.images.size(); ++k)
    if (!nil_eq(phi.images[k], psi.images[k], q)) return false;
  return true;
}

bool aut_is_identity(const NilAutomorphism& phi, int q) {
  return aut_equal(phi, NilAutomorphism::identity(phi.basis), q);
}

ZMatrix abelianization(const NilAutomorphism& phi) {
  int b = phi.basis.rank();
  ZMatrix a(b, std::vector<mpz_class>(b, 0));
  for (int k = 0; k < b; ++k) {
    auto e = exponent_sums(phi.images[k]);
    for (int i = 0; i < b; ++i) a[i][k] = e[i];
  }
  return a;
}

NilAutomorphism aut_invert(const NilAutomorphism& phi, int q, InvertTrace* trace) {
  if (q == 0) q = phi.q;
  if (q < 2) throw ValidationError("aut_invert needs a level q >= 2");
  SurfaceBasis basis = phi.basis;
  int b = basis.rank();
  auto inv = inverse_unimodular(abelianization(phi));
  if (!inv) throw ValidationError("aut_invert: abelianization is not invertible over the integers");

  NilAutomorphism psi{basis, q, {}};
  for (int k = 0; k < b; ++k) {
    Word w(basis);
    for (int i = 0; i < b; ++i) w.append(Word::generator(basis, i + 1).pow((*inv)[i][k].get_si()));
    psi.images.push_back(w);
  }
  ImageExpander E(phi, q - 1);
  for (int round = 0; round <= q; ++round) {
    std::vector<Word> disc;
    int weight = q;
    for (int k = 0; k < b; ++k) {
      Word x = Word::generator(basis, k + 1);
      Word c = nil_normal_form(E(expand_dense(x.inverse(), q - 1), psi.images[k]), basis, q);
      auto wt = lcs_weight(c, q);
      if (wt) weight = std::min(weight, *wt);
      disc.push_back(std::move(c));
    }
    if (trace) trace->discrepancy_weight.push_back(weight);
    if (weight >= q) {
      if (trace) trace->rounds = round;
      return psi;
    }
    if (weight < round + 2) throw Error("aut_invert: correction failed to raise the discrepancy weight");
    ImageExpander P(psi, q - 1);
    for (int k = 0; k < b; ++k)
      psi.images[k] = nil_normal_form(P(expand_dense(psi.images[k], q - 1), disc[k].inverse()), basis, q);
  }
  throw Error("aut_invert: no convergence");
}

namespace {

// Graded lift: raise a conjugator one weight at a time. Solutions of
// [X_i, h] = lead are unique on Lie elements of degree >= 2, so a failure
// at any step is a genuine obstruction.
std::optional<Word> graded_conjugator(const Word& y, int i, int q) {
  SurfaceBasis basis = y.basis();
  int b = basis.rank();
  auto e = exponent_sums(y);
  for (int k = 0; k < b; ++k)
    if (e[k] != (k + 1 == i ? 1 : 0)) return std::nullopt;
  Word x = Word::generator(basis, i);
  Word mu(basis);
  auto lc = LyndonCommutators::get(basis, std::max(1, q - 2));
  for (int k = 2; k < q; ++k) {
    Word delta = x.inverse() * mu * y * mu.inverse();
    DenseSeries s = expand_dense(delta, k);
    int low = s.lowest_degree();
    if (low > k) continue;
    if (low < k) return std::nullopt;
    const auto& target = s.layer(k);
    std::size_t rows = target.size();
    std::size_t shift = 1;
    for (int t = 0; t < k - 1; ++t) shift *= b;
    std::vector<const LyndonCommutators::Entry*> cols;
    for (const auto& en : lc->of_length(k - 1))
      if (!(k - 1 == 1 && en.word[0] == i - 1)) cols.push_back(&en);
    QMatrix a(rows, std::vector<mpq_class>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& lead = cols[c]->lead;
      for (std::size_t m = 0; m < lead.size(); ++m) {
        if (!sgn(lead[m])) continue;
        a[(i - 1) * shift + m][c] += lead[m];
        a[m * b + (i - 1)][c] -= lead[m];
      }
    }
    std::vector<mpq_class> rhs(rows);
    for (std::size_t r = 0; r < rows; ++r) rhs[r] = target[r];
    auto sol = solve_rational(a, rhs);
    if (!sol) return std::nullopt;
    Word nu(basis);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (sol->x[c] == 0) continue;
      if (sol->x[c].get_den() != 1) return std::nullopt;
      nu.append(cols[c]->group.pow(sol->x[c].get_num().get_si()));
    }
    mu = nu * mu;
  }
  if (nil_eq(mu.inverse() * x * mu, y, q)) return mu;
  return std::nullopt;
}

}  // namespace

std::optional<Word> conjugator(const Word& target, int i, int q, std::string* method) {
  SurfaceBasis basis = target.basis();
  Word x = Word::generator(basis, i);
  const auto& L = target.letters();
  auto try_candidate = [&](const Word& c) { return nil_eq(c.inverse() * x * c, target, q); };
  // Suffixes catch the reduced shape u^{-1} x u; short targets get every subword.
  for (std::size_t s = 0; s <= L.size(); ++s) {
    Word c = Word::reduce(std::vector<int>(L.begin() + s, L.end()), basis);
    if (try_candidate(c)) {
      if (method) *method = "subword";
      return c;
    }
  }
  if (L.size() <= 24) {
    for (std::size_t a = 0; a < L.size(); ++a)
      for (std::size_t z = a + 1; z <= L.size(); ++z) {
        Word c = Word::reduce(std::vector<int>(L.begin() + a, L.begin() + z), basis);
        if (try_candidate(c) ) {
          if (method) *method = "subword";
          return c;
        }
        if (try_candidate(c.inverse())) {
          if (method) *method = "subword";
          return c.inverse();
        }
      }
  }
  auto mu = graded_conjugator(target, i, q);
  if (method) *method = mu ? "graded" : "obstructed";
  return mu;
}

Aut2Report aut2_check(const NilAutomorphism& phi, int q) {
  if (q == 0) q = phi.q;
  if (q < 2) throw ValidationError("aut2_check needs a level q >= 2");
  Aut2Report rep;
  rep.q = q;
  SurfaceBasis basis = phi.basis;
  for (int i = 1; i < basis.n; ++i) {
    std::string how;
    auto w = conjugator(phi.images[i - 1], i, q, &how);
    rep.conj_pass.push_back(w.has_value());
    rep.witness.push_back(w);
    rep.method.push_back(how);
    if (!w) rep.a_pass = false;
  }
  Word d = boundary_word(basis);
  rep.boundary_residual = aut_apply(phi, d) * d.inverse();
  rep.b_pass = nil_trivial(rep.boundary_residual, q);
  return rep;
}

}  // namespace hcyl
