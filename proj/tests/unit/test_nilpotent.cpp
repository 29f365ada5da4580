#include "doctest.h"

#include <random>

#include "hcyl/lyndon.hpp"
#include "hcyl/nilpotent.hpp"

using namespace hcyl;

namespace {

Word random_word(SurfaceBasis B, std::mt19937_64& rng, int len) {
  Word w(B);
  std::uniform_int_distribution<int> g(1, B.rank()), s(0, 1);
  for (int i = 0; i < len; ++i) w.push(s(rng) ? g(rng) : -g(rng));
  return w;
}

}  // namespace

TEST_CASE("nilpotent equality") {
  SurfaceBasis B{0, 3};
  Word a = Word::generator(B, 1), b = Word::generator(B, 2);
  CHECK(nil_eq(a * b, b * a, 2));
  CHECK_FALSE(nil_eq(a * b, b * a, 3));
  CHECK(nil_trivial(commutator(commutator(a, b), a), 3));
  CHECK_FALSE(nil_trivial(commutator(commutator(a, b), a), 4));
}

TEST_CASE("normal forms are congruent and canonical") {
  std::mt19937_64 rng(9);
  SurfaceBasis B{0, 4};
  for (int t = 0; t < 40; ++t) {
    Word u = random_word(B, rng, 10);
    for (int q = 2; q <= 5; ++q) {
      Word nf = nil_normal_form(u, q);
      CHECK(nil_eq(nf, u, q));
      // multiplying by an element of F_q leaves the normal form alone
      Word deep = random_word(B, rng, 2);
      for (int k = 1; k < q; ++k) deep = commutator(deep, random_word(B, rng, 2));
      CHECK(nil_normal_form(u * deep, q) == nf);
    }
  }
}

TEST_CASE("automorphism composition, inversion and the expander") {
  std::mt19937_64 rng(4);
  SurfaceBasis B{0, 4};
  Word a = Word::generator(B, 1), b = Word::generator(B, 2), c = Word::generator(B, 3);
  NilAutomorphism s{B, 0, {a * b * a.inverse(), a, c}};
  NilAutomorphism t{B, 0, {a, b * c * b.inverse(), b}};
  auto st = aut_compose(s, t);
  for (int k = 0; k < 6; ++k) {
    Word w = random_word(B, rng, 7);
    CHECK(aut_apply(st, w) == aut_apply(s, aut_apply(t, w)));
    ImageExpander ex(s, 5);
    CHECK(ex(w).sparse() == expand(aut_apply(s, w), 5));
    CHECK(nil_eq(nil_apply(s, w, 5), aut_apply(s, w), 5));
  }
  InvertTrace tr;
  auto inv = aut_invert(st, 6, &tr);
  CHECK(aut_is_identity(aut_compose(st, inv), 6));
  CHECK(aut_is_identity(aut_compose(inv, st), 6));
  CHECK(tr.rounds >= 1);
}

TEST_CASE("inner automorphisms pass the conjugacy conditions") {
  SurfaceBasis B{0, 4};
  Word w = Word::reduce({1, 2, -3, 2}, B);
  auto phi = NilAutomorphism::inner(w);
  auto rep = aut2_check(phi, 5);
  for (bool ok : rep.conj_pass) CHECK(ok);
  for (std::size_t i = 0; i < rep.witness.size(); ++i) {
    REQUIRE(rep.witness[i].has_value());
    Word x = Word::generator(B, static_cast<int>(i) + 1);
    CHECK(nil_eq(rep.witness[i]->inverse() * x * *rep.witness[i], phi.images[i], 5));
  }
}

TEST_CASE("a non-conjugate image is detected") {
  SurfaceBasis B{0, 3};
  Word a = Word::generator(B, 1), b = Word::generator(B, 2);
  CHECK_FALSE(conjugator(a * a, 1, 3).has_value());
  CHECK_FALSE(conjugator(b, 1, 3).has_value());
  CHECK(conjugator(b * a * b.inverse(), 1, 4).has_value());
}

TEST_CASE("abelianization matrix") {
  SurfaceBasis B{0, 3};
  Word a = Word::generator(B, 1), b = Word::generator(B, 2);
  NilAutomorphism s{B, 0, {a * b * a.inverse(), a}};
  auto M = abelianization(s);
  CHECK(M[0][0] == 0);
  CHECK(M[1][0] == 1);
  CHECK(M[0][1] == 1);
  CHECK(M[1][1] == 0);
}
