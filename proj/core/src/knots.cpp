#include "hcyl/knots.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

#include "hcyl/error.hpp"

namespace hcyl {

namespace {

bool is_power_of(long d, long p) {
  if (d < p) return false;
  while (d % p == 0) d /= p;
  return d == 1;
}

struct Profile {
  std::string name;
  SeifertMatrix A;
  std::vector<long> sig;  // sigma(zeta_D^t), t = 0..D-1
  std::optional<mpq_class> integral;
  int arf = 0;
  long size = 0;
};

std::string join(const std::vector<long>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

}  // namespace

bool FamilyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.ok; });
}

SeifertMatrix pool_knot(const std::string& name) {
  long v = 0;
  if (std::sscanf(name.c_str(), "T(2,%ld)", &v) == 1) return torus_2n(static_cast<int>(v));
  if (std::sscanf(name.c_str(), "twist(%ld)", &v) == 1) return twist_knot(v);
  throw ValidationError("unknown pool knot '" + name + "'");
}

SeifertMatrix assemble(const std::vector<KnotTerm>& recipe) {
  SeifertMatrix A;
  for (const auto& t : recipe) {
    SeifertMatrix K = pool_knot(t.name);
    if (t.coeff < 0) K = negate(K);
    for (long c = 0; c < std::abs(t.coeff); ++c) A = block_sum(A, K);
  }
  return A;
}

std::vector<std::string> knot_pool(const KnotSearchBounds& b) {
  std::vector<std::string> out;
  for (int n = 3; n <= b.max_torus; n += 2) out.push_back("T(2," + std::to_string(n) + ")");
  for (long k = -b.max_twist; k <= b.max_twist; ++k)
    if (k != 0 && k != -1) out.push_back("twist(" + std::to_string(k) + ")");
  return out;
}

std::vector<ConditionCheck> verify_family(long p, const std::vector<FamilyMember>& members) {
  std::vector<ConditionCheck> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& M = members[i];
    int idx = static_cast<int>(i) + 1;
    bool dok = is_power_of(M.d, p) && (i == 0 || M.d > members[i - 1].d);
    out.push_back({idx, "d", dok, "d = " + std::to_string(M.d)});
    if (!is_seifert(M.A)) {
      out.push_back({idx, "seifert", false, "det(A - A^T) != 1"});
      continue;
    }
    // (1)
    std::vector<long> at_d;
    for (long s = 0; s < M.d; ++s) at_d.push_back(lt_signature(M.A, {static_cast<int>(M.d), s}));
    bool c1 = at_d[1 % M.d] > 0;
    if (p == 2) c1 = c1 && std::all_of(at_d.begin(), at_d.end(), [](long v) { return v >= 0; });
    out.push_back({idx, "1", c1, "sigma(zeta_" + std::to_string(M.d) + "^s), s=0.. : " + join(at_d)});
    // (2)
    for (std::size_t j = 0; j < i; ++j) {
      long dj = members[j].d;
      std::vector<long> at_dj;
      for (long s = 0; s < dj; ++s) at_dj.push_back(lt_signature(M.A, {static_cast<int>(dj), s}));
      bool c2 = std::all_of(at_dj.begin(), at_dj.end(), [](long v) { return v == 0; });
      out.push_back({idx, "2", c2, "sigma(zeta_" + std::to_string(dj) + "^s), s=0.. : " + join(at_dj)});
    }
    // (3)
    auto I = lt_integral(M.A);
    std::string iv = I.exact ? I.exact->get_str() : "inexact";
    out.push_back({idx, "3", I.certainly_zero(), "integral = " + iv});
    // (4)
    int a = arf(M.A);
    out.push_back({idx, "4", a == 0, "arf = " + std::to_string(a)});
  }
  return out;
}

FamilyReport knot_family_search(long p, int count, const KnotSearchBounds& b) {
  if (p < 2) throw ValidationError("p must be prime");
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) throw ValidationError("p must be prime");
  if (count < 1) throw ValidationError("count must be positive");
  std::vector<long> ds;
  long d = 1;
  for (int e = 0; e < b.first_exponent; ++e) d *= p;
  for (int i = 0; i < count; ++i, d *= p) ds.push_back(d);
  long D = ds.back();

  std::vector<Profile> pool;
  for (const auto& name : knot_pool(b)) {
    Profile pr;
    pr.name = name;
    pr.A = pool_knot(name);
    for (long t = 0; t < D; ++t) pr.sig.push_back(lt_signature(pr.A, {static_cast<int>(D), t}));
    pr.integral = lt_integral(pr.A).exact;
    pr.arf = arf(pr.A);
    pr.size = static_cast<long>(pr.A.size());
    // knots with an irrational signature integral cannot be cancelled exactly
    if (pr.integral) pool.push_back(std::move(pr));
  }
  const std::size_t P = pool.size();

  FamilyReport rep;
  rep.p = p;
  for (int i = 0; i < count; ++i) {
    long di = ds[i];
    std::vector<long> best;
    std::vector<std::size_t> best_set;
    long best_cost = -1;
    std::vector<std::size_t> subset;
    auto consider = [&](const std::vector<std::size_t>& S) {
      std::size_t m = S.size();
      QMatrix rows;
      for (int j = 0; j < i; ++j)
        for (long s = 0; s < ds[j]; ++s) {
          std::vector<mpq_class> r;
          for (auto k : S) r.push_back(pool[k].sig[s * (D / ds[j])]);
          rows.push_back(std::move(r));
        }
      {
        std::vector<mpq_class> r;
        for (auto k : S) r.push_back(*pool[k].integral);
        rows.push_back(std::move(r));
      }
      auto ker = integer_nullspace(rows, m);
      if (ker.empty() || ker.size() > 3) return;
      std::vector<std::vector<long>> cands;
      int lo = ker.size() == 1 ? -1 : -2, hi = -lo;
      std::vector<int> w(ker.size(), lo);
      for (;;) {
        std::vector<long> v(m, 0);
        for (std::size_t t = 0; t < ker.size(); ++t)
          for (std::size_t c = 0; c < m; ++c) v[c] += w[t] * ker[t][c].get_si();
        cands.push_back(v);
        std::size_t t = 0;
        while (t < w.size() && w[t] == hi) w[t++] = lo;
        if (t == w.size()) break;
        ++w[t];
      }
      for (auto v : cands) {
        long g = 0;
        for (long x : v) g = std::gcd(g, std::abs(x));
        if (g == 0) continue;
        for (long& x : v) x /= g;
        if (std::any_of(v.begin(), v.end(), [](long x) { return x == 0; })) continue;
        long parity = 0;
        for (std::size_t c = 0; c < m; ++c) parity += std::abs(v[c]) * pool[S[c]].arf;
        if (parity % 2)
          for (long& x : v) x *= 2;
        if (std::any_of(v.begin(), v.end(), [&](long x) { return std::abs(x) > b.max_coeff; })) continue;
        auto sig_at = [&](long s) {
          long tot = 0;
          for (std::size_t c = 0; c < m; ++c) tot += v[c] * pool[S[c]].sig[(s % di) * (D / di)];
          return tot;
        };
        if (sig_at(1) <= 0) continue;
        bool nonneg = true;
        if (p == 2)
          for (long s = 0; s < di; ++s) nonneg = nonneg && sig_at(s) >= 0;
        if (!nonneg) continue;
        long cost = 0;
        for (std::size_t c = 0; c < m; ++c) cost += std::abs(v[c]) * pool[S[c]].size;
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          best = v;
          best_set = S;
        }
      }
    };
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (!subset.empty()) consider(subset);
      if (static_cast<int>(subset.size()) == b.max_support) return;
      for (std::size_t k = start; k < P; ++k) {
        subset.push_back(k);
        rec(k + 1);
        subset.pop_back();
      }
    };
    rec(0);
    if (best_cost < 0)
      throw SearchExhausted("knot_family_search: no member " + std::to_string(i + 1) + " for d = " +
                            std::to_string(di) + " within the search bounds");
    FamilyMember M;
    M.d = di;
    for (std::size_t c = 0; c < best_set.size(); ++c) M.recipe.push_back({pool[best_set[c]].name, best[c]});
    M.A = assemble(M.recipe);
    rep.members.push_back(std::move(M));
  }
  rep.checks = verify_family(p, rep.members);
  return rep;
}

}  // namespace hcyl
