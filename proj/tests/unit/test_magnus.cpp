#include "doctest.h"

#include <random>

#include "hcyl/lyndon.hpp"
#include "hcyl/magnus.hpp"
#include "hcyl/samples.hpp"

using namespace hcyl;

namespace {

// Lyndon words by definition: strictly smaller than every proper rotation.
long brute_lyndon(int m, int q) {
  long total = 1, count = 0;
  for (int i = 0; i < q; ++i) total *= m;
  std::vector<int> w(q);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = q - 1; i >= 0; --i, c /= m) w[i] = static_cast<int>(c % m);
    bool ok = true;
    for (int r = 1; r < q && ok; ++r) {
      std::vector<int> rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      ok = w < rot;
    }
    count += ok;
  }
  return count;
}

Word random_word(SurfaceBasis B, std::mt19937_64& rng, int len) {
  Word w(B);
  std::uniform_int_distribution<int> g(1, B.rank()), s(0, 1);
  for (int i = 0; i < len; ++i) w.push(s(rng) ? g(rng) : -g(rng));
  return w;
}

}  // namespace

TEST_CASE("necklace ranks match brute-force Lyndon counts") {
  for (int m = 1; m <= 4; ++m)
    for (int q = 1; q <= 7; ++q) {
      CAPTURE(m);
      CAPTURE(q);
      long n = brute_lyndon(m, q);
      CHECK(witt_rank(q, m) == n);
      CHECK(static_cast<long>(lyndon_words(m, q).size()) == n);
    }
}

TEST_CASE("known rank values") {
  CHECK(witt_rank(1, 2) == 2);
  CHECK(witt_rank(2, 2) == 1);
  CHECK(witt_rank(3, 2) == 2);
  CHECK(witt_rank(4, 2) == 3);
  CHECK(witt_rank(5, 3) == 48);
  CHECK(witt_rank(2, 1) == 0);
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(7) == -1);
}

TEST_CASE("standard factorization splits into Lyndon words") {
  for (const auto& w : lyndon_words(3, 5)) {
    CHECK(is_lyndon(w));
    auto k = standard_split(w);
    std::vector<int> u(w.begin(), w.begin() + k), v(w.begin() + k, w.end());
    CHECK(is_lyndon(u));
    CHECK(is_lyndon(v));
    CHECK(u < v);
  }
}

TEST_CASE("expansion of a generator and its inverse") {
  SurfaceBasis B{0, 3};
  auto s = expand(Word::generator(B, 1), 4);
  CHECK(s.coeff({}) == 1);
  CHECK(s.coeff({0}) == 1);
  CHECK(s.coeff({0, 0}) == 0);
  auto t = expand(Word::generator(B, 1).inverse(), 4);
  for (int k = 1; k <= 4; ++k) CHECK(t.coeff(Monomial(k, 0)) == (k % 2 ? -1 : 1));
}

TEST_CASE("commutator leading term") {
  SurfaceBasis B{0, 3};
  Word a = Word::generator(B, 1), b = Word::generator(B, 2);
  auto s = expand(commutator(a, b), 3);
  // [a,b] = 1 + XY - YX + ...
  CHECK(s.lowest_degree() == 2);
  CHECK(s.coeff({0, 1}) == -s.coeff({1, 0}));
  CHECK(abs(s.coeff({0, 1})) == 1);
}

TEST_CASE("multiplicativity and weights on random words") {
  std::mt19937_64 rng(3);
  SurfaceBasis B{0, 4};
  for (int t = 0; t < 50; ++t) {
    Word u = random_word(B, rng, 8), v = random_word(B, rng, 8);
    CHECK(expand(u * v, 5) == expand(u, 5) * expand(v, 5));
    CHECK((expand(u, 5) * expand(u.inverse(), 5)).is_one());
    CHECK(expand_dense(u * v, 5).sparse() == expand(u * v, 5));
    // weight of a commutator is at least the sum of the weights
    Word c = commutator(u, v);
    auto wu = lcs_weight(u, 6), wc = lcs_weight(c, 6);
    if (wu && wc) CHECK(*wc >= *wu + 1);
  }
}

TEST_CASE("lcs_weight of iterated commutators") {
  SurfaceBasis B{0, 4};
  Word a = Word::generator(B, 1), b = Word::generator(B, 2), c = Word::generator(B, 3);
  CHECK(lcs_weight(a, 5) == 1);
  CHECK(lcs_weight(commutator(a, b), 5) == 2);
  CHECK(lcs_weight(commutator(commutator(a, b), c), 5) == 3);
  CHECK(lcs_weight(commutator(commutator(commutator(a, b), c), a), 5) == 4);
  CHECK_FALSE(lcs_weight(commutator(commutator(commutator(a, b), c), a), 4).has_value());
  CHECK_FALSE(lcs_weight(Word(B), 4).has_value());
}

TEST_CASE("boundary Lie kernel has rank b N_k - N_{k+1}") {
  // surjectivity of the bracket map onto degree k+1
  for (SurfaceBasis B : {SurfaceBasis{0, 3}, SurfaceBasis{0, 4}, SurfaceBasis{1, 1}})
    for (int k = 1; k <= 4; ++k) {
      if (B.rank() == 3 && k == 4) continue;
      CAPTURE(B.n);
      CAPTURE(k);
      long want = B.rank() * brute_lyndon(B.rank(), k) - brute_lyndon(B.rank(), k + 1);
      CHECK(static_cast<long>(boundary_lie_kernel(B, k).size()) == want);
      CHECK(rank_window(k + 1, B.rank()) == want);
    }
}

TEST_CASE("rank window small cases") {
  CHECK(rank_window(2, 2) == 3);
  // 1 * N_1(1) - N_2(1) = 1 - 0 by the Lyndon count
  CHECK(rank_window(2, 1) == 1);
  CHECK(rank_window(3, 0) == 0);
}
