#include "hcyl/forms.hpp"

#include <algorithm>
#include <numeric>

#include "hcyl/error.hpp"
#include "hcyl/interval.hpp"

namespace hcyl {

namespace {

std::size_t dim(const SeifertMatrix& A) {
  for (const auto& row : A)
    if (row.size() != A.size()) throw ValidationError("Seifert matrix is not square");
  return A.size();
}

SeifertMatrix transpose(const SeifertMatrix& A) {
  std::size_t n = A.size();
  SeifertMatrix t(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = A[j][i];
  return t;
}

using Field = std::shared_ptr<const CycloField>;

// sum of c_t * M_t with field scalars
CycMatrix combine(const Field& f, std::size_t n, const std::vector<std::pair<Cyc, const SeifertMatrix*>>& terms) {
  CycMatrix H = cyc_zero_matrix(f, n);
  for (const auto& [c, M] : terms)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn((*M)[i][j])) H[i][j] += c * mpq_class((*M)[i][j]);
  return H;
}

void place(CycMatrix& big, const CycMatrix& blk, std::size_t bi, std::size_t bj) {
  std::size_t n = blk.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) big[bi * n + i][bj * n + j] = blk[i][j];
}

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

bool is_seifert(const SeifertMatrix& A) {
  std::size_t n = dim(A);
  if (n % 2) return false;
  ZMatrix D(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) D[i][j] = A[i][j] - A[j][i];
  return n == 0 || det_bareiss(D) == 1;
}

QPoly alexander(const SeifertMatrix& A) {
  std::size_t n = dim(A);
  if (n == 0) return {mpq_class(1)};
  // interpolate det(A - t A^T) through t = 0..n
  std::vector<mpq_class> ts, ys;
  for (std::size_t t = 0; t <= n; ++t) {
    ZMatrix M(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M[i][j] = A[i][j] - static_cast<long>(t) * A[j][i];
    ts.push_back(static_cast<long>(t));
    ys.push_back(mpq_class(det_bareiss(M)));
  }
  QPoly out;
  for (std::size_t i = 0; i <= n; ++i) {
    QPoly basis{mpq_class(1)};
    mpq_class denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis = poly_mul(basis, QPoly{-ts[j], mpq_class(1)});
      denom *= ts[i] - ts[j];
    }
    out = poly_add(out, poly_scale(basis, ys[i] / denom));
  }
  return out;
}

SeifertMatrix block_sum(const SeifertMatrix& A, const SeifertMatrix& B) {
  std::size_t a = dim(A), b = dim(B);
  SeifertMatrix S(a + b, std::vector<mpz_class>(a + b, 0));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) S[i][j] = A[i][j];
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) S[a + i][a + j] = B[i][j];
  return S;
}

SeifertMatrix negate(const SeifertMatrix& A) {
  SeifertMatrix r = A;
  for (auto& row : r)
    for (auto& x : row) x = -x;
  return r;
}

SeifertMatrix torus_2n(int n) {
  if (n % 2 == 0) throw ValidationError("T(2,n) needs odd n");
  int m = std::abs(n) - 1;
  SeifertMatrix A(m, std::vector<mpz_class>(m, 0));
  for (int i = 0; i < m; ++i) {
    A[i][i] = -1;
    if (i + 1 < m) A[i][i + 1] = 1;
  }
  return n < 0 ? negate(A) : A;
}

SeifertMatrix twist_knot(long k) { return {{-1, 1}, {0, k}}; }

CycMatrix lt_matrix(const SeifertMatrix& A, RootSpec w) { return lambda_r(A, w, 1); }

CycMatrix lambda_r(const SeifertMatrix& A, RootSpec w, int r) {
  if (r < 1) throw ValidationError("lambda_r needs r >= 1");
  std::size_t n = dim(A);
  Field f = CycloField::get(w.d);
  SeifertMatrix At = transpose(A);
  Cyc one(f, mpq_class(1)), om = Cyc::zeta_pow(f, w.k), omi = Cyc::zeta_pow(f, -w.k);
  if (r == 1) return combine(f, n, {{one - om, &A}, {one - omi, &At}});
  CycMatrix diag = combine(f, n, {{one, &A}, {one, &At}});
  CycMatrix H = cyc_zero_matrix(f, n * r);
  std::size_t R = static_cast<std::size_t>(r);
  for (std::size_t b = 0; b < R; ++b) place(H, diag, b, b);
  if (r == 2) {
    place(H, combine(f, n, {{-one, &A}, {-omi, &At}}), 0, 1);
    place(H, combine(f, n, {{-one, &At}, {-om, &A}}), 1, 0);
    return H;
  }
  CycMatrix up = combine(f, n, {{-one, &A}}), down = combine(f, n, {{-one, &At}});
  for (std::size_t b = 0; b + 1 < R; ++b) {
    place(H, up, b, b + 1);
    place(H, down, b + 1, b);
  }
  place(H, combine(f, n, {{-omi, &At}}), 0, R - 1);
  place(H, combine(f, n, {{-om, &A}}), R - 1, 0);
  return H;
}

std::vector<Cyc> hermitian_pivots(CycMatrix H) {
  std::size_t n = H.size();
  std::vector<Cyc> piv;
  std::vector<std::size_t> live(n);
  std::iota(live.begin(), live.end(), 0);
  while (!live.empty()) {
    // prefer a nonzero diagonal entry
    std::size_t pk = live.size();
    for (std::size_t t = 0; t < live.size(); ++t)
      if (!H[live[t]][live[t]].is_zero()) {
        pk = t;
        break;
      }
    if (pk == live.size()) {
      // all diagonal zero: row_i += c row_j with c = H_ij gives H_ii = 2 |H_ij|^2
      bool found = false;
      for (std::size_t a = 0; a < live.size() && !found; ++a)
        for (std::size_t b = a + 1; b < live.size() && !found; ++b) {
          std::size_t i = live[a], j = live[b];
          if (H[i][j].is_zero()) continue;
          Cyc c = H[i][j], cc = c.conj();
          for (std::size_t k : live) H[i][k] += c * H[j][k];
          for (std::size_t k : live) H[k][i] += H[k][j] * cc;
          pk = a;
          found = true;
        }
      if (!found) break;  // the rest is the radical
    }
    std::size_t p = live[pk];
    live.erase(live.begin() + pk);
    Cyc d = H[p][p];
    Cyc dinv = d.inverse();
    for (std::size_t i : live) {
      if (H[i][p].is_zero()) continue;
      Cyc f = H[i][p] * dinv;
      for (std::size_t j : live)
        if (!H[p][j].is_zero()) H[i][j] -= f * H[p][j];
    }
    piv.push_back(std::move(d));
  }
  return piv;
}

long signature_at(const std::vector<Cyc>& pivots, long s) {
  long sig = 0;
  for (const auto& p : pivots) sig += certified_sign(p, s);
  return sig;
}

std::vector<long> embedding_classes(int d) {
  std::vector<long> out;
  for (long s = 1; 2 * s <= std::max(d, 2); ++s)
    if (std::gcd(s, static_cast<long>(d)) == 1) out.push_back(s);
  return out;
}

long WittSignatureVector::at(long s) const {
  if (d <= 2) return sig.at(0);
  long r = ((s % d) + d) % d;
  if (2 * r > d) r = d - r;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == r) return sig[i];
  throw ValidationError("embedding " + std::to_string(s) + " is not a unit mod " + std::to_string(d));
}

WittSignatureVector& WittSignatureVector::operator+=(const WittSignatureVector& o) {
  if (o.d != d) throw ValidationError("signature vectors over different fields");
  for (std::size_t i = 0; i < sig.size(); ++i) sig[i] += o.sig[i];
  rank += o.rank;
  return *this;
}

WittSignatureVector WittSignatureVector::operator-(const WittSignatureVector& o) const {
  WittSignatureVector r = *this;
  r += o.scaled(-1);
  r.rank = rank + o.rank;
  return r;
}

WittSignatureVector WittSignatureVector::scaled(long c) const {
  WittSignatureVector r = *this;
  for (auto& s : r.sig) s *= c;
  r.rank *= std::abs(c);
  return r;
}

bool WittSignatureVector::zero() const {
  return std::all_of(sig.begin(), sig.end(), [](long v) { return v == 0; });
}

WittSignatureVector zero_signatures(int d) {
  WittSignatureVector w;
  w.d = d;
  w.classes = embedding_classes(d);
  w.sig.assign(w.classes.size(), 0);
  return w;
}

WittSignatureVector witt_signatures(const CycMatrix& H, int d) {
  WittSignatureVector w = zero_signatures(d);
  if (H.empty()) return w;
  if (H[0][0].field().d() != d) throw ValidationError("matrix field does not match d");
  if (!cyc_is_hermitian(H)) throw ValidationError("matrix is not hermitian");
  auto piv = hermitian_pivots(H);
  w.rank = static_cast<long>(piv.size());
  for (std::size_t i = 0; i < w.classes.size(); ++i) w.sig[i] = signature_at(piv, w.classes[i]);
  return w;
}

long lt_signature(const SeifertMatrix& A, RootSpec w) {
  if (A.empty()) return 0;
  return signature_at(hermitian_pivots(lt_matrix(A, w)), 1);
}

long lt_signature_at_point(const SeifertMatrix& A, const mpq_class& x, const mpq_class& y) {
  std::size_t n = dim(A);
  if (n == 0) return 0;
  Field f = CycloField::get(4);  // Q(i)
  Cyc om(f, std::vector<mpq_class>{x, y}), omb(f, std::vector<mpq_class>{x, -y}), one(f, mpq_class(1));
  SeifertMatrix At = transpose(A);
  auto piv = hermitian_pivots(combine(f, n, {{one - om, &A}, {one - omb, &At}}));
  return signature_at(piv, 1);
}

namespace {

// A root of Delta on the open upper half circle, ordered by angle.
struct CircleRoot {
  bool cyclo = false;
  mpq_class frac;   // angle / pi for roots of unity
  RootInterval x;   // cos(angle) enclosure for the other roots
  long a = 0, n = 0;
};

mpq_class to_q(const mpfr_t v) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v);
  return q;
}

// cos(angle) enclosure as rationals
RootInterval x_range(const CircleRoot& r, mpfr_prec_t prec) {
  if (!r.cyclo) return r.x;
  Interval c = Interval::cos_frac(r.a, r.n, prec);
  return {to_q(c.lo()), to_q(c.hi())};
}

// g(cos t) = e^{-i m t} f(e^{i t}) for palindromic f of degree 2m
QPoly chebyshev_transform(const QPoly& f) {
  int deg = poly_degree(f);
  int m = deg / 2;
  std::vector<QPoly> T{{mpq_class(1)}, {mpq_class(0), mpq_class(1)}};
  for (int j = 2; j <= m; ++j)
    T.push_back(poly_sub(poly_mul(QPoly{mpq_class(0), mpq_class(2)}, T[j - 1]), T[j - 2]));
  QPoly g{f[m]};
  for (int j = 1; j <= m; ++j) g = poly_add(g, poly_scale(T[j], 2 * f[m + j]));
  return g;
}

// rational u with (1-u^2)/(1+u^2) strictly inside (lo, hi)
mpq_class circle_parameter(const mpq_class& lo, const mpq_class& hi) {
  mpq_class x = (lo + hi) / 2;
  for (mpfr_prec_t p = 64; p <= kMaxPrecision; p *= 2) {
    mpfr_t t;
    mpfr_init2(t, p);
    mpq_class ratio = (1 - x) / (1 + x);
    mpfr_set_q(t, ratio.get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(t, t, MPFR_RNDN);
    mpq_class u = to_q(t);
    mpfr_clear(t);
    mpq_class xu = (1 - u * u) / (1 + u * u);
    if (xu > lo && xu < hi) return u;
  }
  throw PrecisionError("no rational circle point inside a signature arc");
}

}  // namespace

SignatureIntegral lt_integral(const SeifertMatrix& A) {
  SignatureIntegral out;
  if (dim(A) == 0) {
    out.exact = 0;
    out.arcs.push_back({"0", "1", 0});
    return out;
  }
  QPoly R = alexander(A);
  if (R.empty()) throw ValidationError("Alexander polynomial vanishes identically");
  std::vector<CircleRoot> roots;
  auto strip = [&](int n) {
    QPoly phi = cyclotomic_poly(n);
    bool hit = false;
    for (;;) {
      auto [q, r] = poly_divmod(R, phi);
      if (!r.empty()) break;
      R = q;
      hit = true;
    }
    return hit;
  };
  strip(1);
  strip(2);
  int bound = 2 * poly_degree(R) * poly_degree(R) + 2;
  for (int n = 3; n <= bound && poly_degree(R) > 0; ++n) {
    if (euler_phi(n) > poly_degree(R)) continue;
    if (!strip(n)) continue;
    for (long a = 1; 2 * a < n; ++a)
      if (std::gcd(a, static_cast<long>(n)) == 1) {
        CircleRoot c;
        c.cyclo = true;
        c.frac = mpq_class(2 * a) / n;
        c.a = a;
        c.n = n;
        roots.push_back(c);
      }
  }
  QPoly g;
  std::vector<RootInterval> other;
  if (poly_degree(R) > 0) {
    g = poly_squarefree(chebyshev_transform(R));
    other = isolate_real_roots(g, -1, 1, mpq_class(1, 1024));
  }
  // separate the other roots from every root of unity
  mpfr_prec_t prec = 128;
  for (auto& r : other) {
    for (;;) {
      bool clash = false;
      for (const auto& c : roots) {
        if (!c.cyclo) continue;
        auto cx = x_range(c, prec);
        if (!(r.b < cx.a || cx.b < r.a)) clash = true;
      }
      if (!clash) break;
      refine_root(g, r);
      if (prec < kMaxPrecision) prec *= 2;
    }
    CircleRoot c;
    c.x = r;
    roots.push_back(c);
  }
  // increasing angle = decreasing cosine
  std::sort(roots.begin(), roots.end(), [&](const CircleRoot& p, const CircleRoot& q) {
    if (p.cyclo && q.cyclo) return p.frac < q.frac;
    return x_range(p, prec).a > x_range(q, prec).b;
  });

  mpq_class rational = 0;
  std::vector<std::pair<long, RootInterval>> jumps;
  long prev_sig = 0;
  auto label = [&](const CircleRoot& r) {
    if (r.cyclo) return r.frac.get_str();
    return "acos(" + r.x.a.get_str() + ".." + r.x.b.get_str() + ")/pi";
  };
  for (std::size_t k = 0; k <= roots.size(); ++k) {
    mpq_class top = k == 0 ? mpq_class(1) : x_range(roots[k - 1], prec).a;
    mpq_class bottom = k == roots.size() ? mpq_class(-1) : x_range(roots[k], prec).b;
    mpq_class u = circle_parameter(bottom, top);
    mpq_class den = 1 + u * u;
    long s = lt_signature_at_point(A, (1 - u * u) / den, 2 * u / den);
    out.arcs.push_back({k == 0 ? "0" : label(roots[k - 1]), k == roots.size() ? "1" : label(roots[k]), s});
    // start point
    if (k > 0) {
      const auto& r = roots[k - 1];
      if (r.cyclo)
        rational -= s * r.frac;
      else
        jumps.push_back({prev_sig - s, r.x});
    }
    if (k < roots.size()) {
      if (roots[k].cyclo) rational += s * roots[k].frac;
    } else {
      rational += s;
    }
    prev_sig = s;
  }
  bool all_zero = std::all_of(jumps.begin(), jumps.end(), [](const auto& j) { return j.first == 0; });
  if (all_zero) out.exact = rational;
  Interval total(rational, 128);
  Interval pi = Interval::pi(128);
  for (auto& [J, r] : jumps) {
    if (J == 0) continue;
    for (int t = 0; t < 60; ++t) refine_root(g, r);
    total = total + Interval(mpq_class(J), 128) * (Interval::acos(r.a, r.b, 128) / pi);
  }
  out.lo = mpfr_get_d(total.lo(), MPFR_RNDD);
  out.hi = mpfr_get_d(total.hi(), MPFR_RNDU);
  return out;
}

int arf(const SeifertMatrix& A) {
  std::size_t n = dim(A);
  if (!is_seifert(A)) throw ValidationError("arf: not a Seifert matrix (det(A - A^T) != 1)");
  if (n == 0) return 0;
  ZMatrix S(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) S[i][j] = A[i][j] + A[j][i];
  mpz_class v = det_bareiss(S);  // Delta(-1)
  mpz_class r = v % 8;
  if (r < 0) r += 8;
  return (r == 1 || r == 7) ? 0 : 1;
}

}  // namespace hcyl
