#include "doctest.h"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hcyl/cyclotomic.hpp"
#include "hcyl/error.hpp"
#include "hcyl/forms.hpp"
#include "hcyl/interval.hpp"

using namespace hcyl;

namespace {

using cd = std::complex<double>;

// Signature of (1 - w) A + (1 - conj w) A^T from floating eigenvalues.
long float_lt(const SeifertMatrix& A, double theta) {
  std::size_t n = A.size();
  cd w = std::polar(1.0, theta);
  Eigen::MatrixXcd M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      M(i, j) = (1.0 - w) * A[i][j].get_d() + (1.0 - std::conj(w)) * A[j][i].get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
  long s = 0;
  for (double ev : es.eigenvalues())
    if (std::abs(ev) > 1e-9) s += ev > 0 ? 1 : -1;
  return s;
}

std::vector<SeifertMatrix> samples() {
  return {torus_2n(3),   torus_2n(-3),  torus_2n(5),  torus_2n(7),  twist_knot(2), twist_knot(-2),
          twist_knot(-1), twist_knot(3), block_sum(torus_2n(3), twist_knot(-2))};
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  for (int d : {3, 5, 8, 9, 12}) {
    auto F = CycloField::get(d);
    Cyc z = Cyc::zeta_pow(F, 1);
    Cyc one(F, mpq_class(1));
    Cyc p = one;
    for (int k = 0; k < d; ++k) p = p * z;
    CHECK(p == one);
    Cyc x = z * mpq_class(3) + one - Cyc::zeta_pow(F, 2);
    CHECK(x * x.inverse() == one);
    CHECK(x.conj().conj() == x);
    CHECK((x * x.conj()).conj() == x * x.conj());
    CHECK(z.conj() == Cyc::zeta_pow(F, d - 1));
  }
}

TEST_CASE("trefoil signature values") {
  auto A = torus_2n(3);
  CHECK(is_seifert(A));
  CHECK(lt_signature(A, {2, 1}) == -2);
  CHECK(lt_signature(A, {1, 0}) == 0);
  CHECK(lt_signature(torus_2n(-3), {2, 1}) == 2);
  // Delta(t) = t^2 - t + 1
  auto D = alexander(A);
  REQUIRE(D.size() == 3);
  CHECK(D[0] == 1);
  CHECK(D[1] == -1);
  CHECK(D[2] == 1);
}

TEST_CASE("exact signatures agree with floating eigenvalues") {
  for (const auto& A : samples())
    for (int d : {3, 4, 5, 7, 8, 12})
      for (long k = 0; k < d; ++k) {
        CAPTURE(d);
        CAPTURE(k);
        CHECK(lt_signature(A, {d, k}) == float_lt(A, 2 * std::numbers::pi * k / d));
      }
}

TEST_CASE("signature properties: omega = 1, conjugate symmetry, additivity, mirror") {
  auto S = samples();
  for (std::size_t i = 0; i < S.size(); ++i) {
    const auto& A = S[i];
    const auto& B = S[(i + 3) % S.size()];
    for (int d : {2, 5, 9}) {
      CHECK(lt_signature(A, {d, 0}) == 0);
      for (long k = 1; k < d; ++k) {
        CHECK(lt_signature(A, {d, k}) == lt_signature(A, {d, d - k}));
        CHECK(lt_signature(block_sum(A, B), {d, k}) == lt_signature(A, {d, k}) + lt_signature(B, {d, k}));
        CHECK(lt_signature(negate(A), {d, k}) == -lt_signature(A, {d, k}));
      }
    }
  }
}

TEST_CASE("Witt signatures are congruence invariants") {
  std::mt19937_64 rng(2);
  auto S = samples();
  for (int t = 0; t < 12; ++t) {
    int d = std::vector<int>{3, 5, 8, 12}[t % 4];
    auto F = CycloField::get(d);
    auto H = lambda_r(S[t % S.size()], {d, 1}, 2);
    std::size_t n = H.size();
    auto P = cyc_zero_matrix(F, n);
    for (std::size_t i = 0; i < n; ++i) P[i][i] = Cyc(F, mpq_class(static_cast<long>(1 + rng() % 3)));
    for (std::size_t i = 0; i + 1 < n; ++i) P[i][i + 1] = Cyc::zeta_pow(F, static_cast<long>(rng() % d));
    auto G = cyc_mul(cyc_mul(cyc_conj_transpose(P), H), P);
    CHECK(cyc_is_hermitian(G));
    CHECK(witt_signatures(G, d) == witt_signatures(H, d));
  }
}

TEST_CASE("embedding classes and signature lookup") {
  CHECK(embedding_classes(1) == std::vector<long>{1});
  CHECK(embedding_classes(2) == std::vector<long>{1});
  CHECK(embedding_classes(8) == std::vector<long>{1, 3});
  CHECK(embedding_classes(9) == std::vector<long>{1, 2, 4});
  auto w = witt_signatures(lt_matrix(torus_2n(5), {9, 1}), 9);
  CHECK(w.at(1) == w.at(8));
  CHECK(w.at(2) == w.at(7));
  CHECK(w.at(4) == lt_signature(torus_2n(5), {9, 4}));
}

TEST_CASE("lambda_r forms are hermitian and singular at omega = 1 only through the radical") {
  for (const auto& A : samples())
    for (int r = 1; r <= 3; ++r) {
      auto H = lambda_r(A, {4, 1}, r);
      CHECK(H.size() == A.size() * r);
      CHECK(cyc_is_hermitian(H));
      auto w = witt_signatures(H, 4);
      CHECK(w.rank <= static_cast<long>(H.size()));
    }
}

TEST_CASE("signature integral: closed forms and a numeric oracle") {
  for (int n : {3, 5, 7, 9}) {
    auto I = lt_integral(torus_2n(n));
    REQUIRE(I.exact.has_value());
    mpq_class want(-(n * n - 1), 2 * n);
    want.canonicalize();
    CHECK(*I.exact == want);
  }
  auto fig8 = lt_integral(twist_knot(1));
  CHECK(fig8.certainly_zero());
  auto A = block_sum(twist_knot(-2), negate(twist_knot(-2)));
  CHECK(lt_integral(A).certainly_zero());
  // irrational jump points: no exact value, but a tight enclosure away from zero
  auto I2 = lt_integral(twist_knot(-2));
  CHECK_FALSE(I2.exact.has_value());
  CHECK(I2.certainly_nonzero());
  CHECK(I2.hi - I2.lo < 1e-6);
  for (const auto& K : samples()) {
    auto I = lt_integral(K);
    // midpoint rule over (0, pi); jumps cost at most 2 per root per cell
    const int cells = 20000;
    double sum = 0;
    for (int c = 0; c < cells; ++c) sum += float_lt(K, std::numbers::pi * (c + 0.5) / cells);
    double approx = sum / cells;
    CHECK(I.lo <= I.hi);
    CHECK(approx > I.lo - 0.01);
    CHECK(approx < I.hi + 0.01);
  }
}

TEST_CASE("Arf against the quadratic form on 2x2 matrices") {
  // q(x) = x^T A x mod 2 on a symplectic basis e1, e2 of A - A^T
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c)
        for (long e : {1L, -1L}) {
          SeifertMatrix A{{a, b}, {b - e, c}};
          if (!is_seifert(A)) continue;
          int q = static_cast<int>(((a % 2) * (c % 2) + 4) % 2);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CHECK(arf(A) == q);
        }
  CHECK(arf(torus_2n(3)) == 1);
  CHECK(arf(torus_2n(7)) == 0);
  CHECK(arf(twist_knot(2)) == 0);
  CHECK(arf(twist_knot(-1)) == 1);
}

TEST_CASE("precision policy") {
  auto before = default_precision();
  set_default_precision(64);
  CHECK(lt_signature(torus_2n(15), {16, 3}) == float_lt(torus_2n(15), 2 * std::numbers::pi * 3 / 16));
  set_default_precision(before);
  auto F = CycloField::get(7);
  Cyc x = Cyc::zeta_pow(F, 1) + Cyc::zeta_pow(F, 6) - Cyc(F, mpq_class(1));
  CHECK(certified_sign(x, 1) == 1);  // 2 cos(2 pi / 7) - 1 > 0
  CHECK(certified_sign(x, 3) == -1);
}

TEST_CASE("non-Seifert input") {
  SeifertMatrix A{{1, 0}, {0, 1}};
  CHECK_FALSE(is_seifert(A));
  CHECK_THROWS_AS(arf(A), ValidationError);
}
