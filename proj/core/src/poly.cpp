#include "hcyl/poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hcyl {

void poly_trim(QPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int poly_degree(const QPoly& a) {
  QPoly t = a;
  poly_trim(t);
  return static_cast<int>(t.size()) - 1;
}

QPoly poly_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]))
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

QPoly poly_scale(const QPoly& a, const mpq_class& c) {
  QPoly r = a;
  for (auto& x : r) x *= c;
  poly_trim(r);
  return r;
}

std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b) {
  QPoly bb = b;
  poly_trim(bb);
  if (bb.empty()) throw std::domain_error("polynomial division by zero");
  QPoly r = a;
  poly_trim(r);
  if (r.size() < bb.size()) return {{}, r};
  QPoly q(r.size() - bb.size() + 1, 0);
  const mpq_class lead = bb.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    mpq_class c = r[k + bb.size() - 1] / lead;
    q[k] = c;
    if (sgn(c))
      for (std::size_t j = 0; j < bb.size(); ++j) r[k + j] -= c * bb[j];
  }
  poly_trim(q);
  poly_trim(r);
  return {q, r};
}

QPoly poly_monic(const QPoly& a) {
  QPoly r = a;
  poly_trim(r);
  if (r.empty()) return r;
  mpq_class l = r.back();
  for (auto& x : r) x /= l;
  return r;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

QPoly poly_derivative(const QPoly& a) {
  QPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
  poly_trim(r);
  return r;
}

mpq_class poly_eval(const QPoly& a, const mpq_class& x) {
  mpq_class v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

QPoly poly_squarefree(const QPoly& a) {
  QPoly g = poly_gcd(a, poly_derivative(a));
  return poly_monic(poly_divmod(a, g).first);
}

QPoly cyclotomic_poly(int n) {
  if (n < 1) throw std::domain_error("cyclotomic_poly: n < 1");
  static std::mutex mu;
  static std::map<int, QPoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  QPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int e = 1; e < n; ++e)
    if (n % e == 0) p = poly_divmod(p, cyclotomic_poly(e)).first;
  std::lock_guard lock(mu);
  cache[n] = p;
  return p;
}

namespace {

using Sturm = std::vector<QPoly>;

Sturm sturm_chain(const QPoly& p) {
  Sturm s{p, poly_derivative(p)};
  while (!s.back().empty()) {
    auto r = poly_divmod(s[s.size() - 2], s.back()).second;
    if (r.empty()) break;
    s.push_back(poly_scale(r, -1));
  }
  return s;
}

int sign_changes(const Sturm& s, const mpq_class& x) {
  int changes = 0, last = 0;
  for (const auto& f : s) {
    int v = sgn(poly_eval(f, x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

// Roots in (a, b] for squarefree p.
int count(const Sturm& s, const mpq_class& a, const mpq_class& b) { return sign_changes(s, a) - sign_changes(s, b); }

// Moves an endpoint off a root of p by nudging it inward.
mpq_class avoid_root(const QPoly& p, mpq_class x, const mpq_class& toward) {
  mpq_class step = (toward - x) / 64;
  while (sgn(poly_eval(p, x)) == 0) {
    x += step;
    step /= 2;
  }
  return x;
}

void isolate(const QPoly& p, const Sturm& s, mpq_class a, mpq_class b, const mpq_class& tol,
             std::vector<RootInterval>& out) {
  int n = count(s, a, b);
  if (n == 0) return;
  if (n == 1 && b - a < tol) {
    out.push_back({a, b});
    return;
  }
  mpq_class m = (a + b) / 2;
  m = avoid_root(p, m, b);
  isolate(p, s, a, m, tol, out);
  isolate(p, s, m, b, tol, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const QPoly& p, const mpq_class& lo, const mpq_class& hi,
                                             const mpq_class& tol) {
  QPoly q = poly_squarefree(p);
  std::vector<RootInterval> out;
  if (poly_degree(q) <= 0) return out;
  auto s = sturm_chain(q);
  if (sgn(poly_eval(q, lo)) == 0 || sgn(poly_eval(q, hi)) == 0)
    throw std::domain_error("isolate_real_roots: root on an endpoint");
  mpq_class a = lo, b = hi;
  isolate(q, s, a, b, tol, out);
  return out;
}

void refine_root(const QPoly& p, RootInterval& r) {
  mpq_class m = (r.a + r.b) / 2;
  int sm = sgn(poly_eval(p, m));
  if (sm == 0) {
    // exact rational root: collapse around it
    mpq_class w = (r.b - r.a) / 4;
    r.a = m - w;
    r.b = m + w;
    while (sgn(poly_eval(p, r.a)) == 0 || sgn(poly_eval(p, r.b)) == 0) {
      w /= 2;
      r.a = m - w;
      r.b = m + w;
    }
    return;
  }
  int sb = sgn(poly_eval(p, r.b));
  if (sm == sb)
    r.b = m;
  else
    r.a = m;
}

}  // namespace hcyl
