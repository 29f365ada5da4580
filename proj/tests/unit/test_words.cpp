#include "doctest.h"

#include "hcyl/error.hpp"
#include "hcyl/words.hpp"

using namespace hcyl;

TEST_CASE("free reduction and inverses") {
  SurfaceBasis B{0, 4};
  Word w = Word::reduce({1, 2, -2, 3, -3, -1, 2}, B);
  CHECK(w.letters() == std::vector<int>{2});
  Word u = Word::reduce({1, 2, -3}, B);
  CHECK((u * u.inverse()).empty());
  CHECK(u.pow(3).size() == 9);
  CHECK(u.pow(-2) == u.inverse().pow(2));
  CHECK(u.pow(0).empty());
}

TEST_CASE("letters out of range are rejected") {
  SurfaceBasis B{1, 1};
  CHECK_THROWS_AS(Word::reduce({3}, B), ValidationError);
  CHECK_THROWS_AS(Word::reduce({0}, B), ValidationError);
  CHECK_THROWS_AS((SurfaceBasis{0, 0}.check()), ValidationError);
}

TEST_CASE("generator numbering and names") {
  SurfaceBasis B{2, 3};
  CHECK(B.rank() == 6);
  CHECK(B.x(2) == 2);
  CHECK(B.m(1) == 3);
  CHECK(B.l(2) == 6);
  CHECK(B.name(B.m(2)) == "m2");
}

TEST_CASE("commutators and exponent sums") {
  SurfaceBasis B{0, 3};
  Word a = Word::generator(B, 1), b = Word::generator(B, 2);
  Word c = commutator(a, b);
  CHECK(c.size() == 4);
  CHECK(exponent_sums(c) == std::vector<long>{0, 0});
  CHECK(exponent_sums(a.pow(3) * b.inverse()) == std::vector<long>{3, -1});
  CHECK(commutator(a, a).empty());
}

TEST_CASE("boundary word has trivial abelianization") {
  for (SurfaceBasis B : {SurfaceBasis{0, 3}, SurfaceBasis{1, 1}, SurfaceBasis{2, 2}}) {
    auto e = exponent_sums(boundary_word(B));
    long xs = 0;
    for (int i = 1; i < B.n; ++i) xs += e[B.x(i) - 1];
    CHECK(xs == B.n - 1);
    for (int j = 1; j <= B.g; ++j) {
      CHECK(e[B.m(j) - 1] == 0);
      CHECK(e[B.l(j) - 1] == 0);
    }
  }
}

TEST_CASE("substitution is a homomorphism") {
  SurfaceBasis B{0, 3};
  Word a = Word::generator(B, 1), b = Word::generator(B, 2);
  std::vector<Word> im{a * b, b.inverse()};
  Word u = a * b.inverse() * a, v = b * b * a.inverse();
  CHECK(substitute(u * v, im) == substitute(u, im) * substitute(v, im));
  CHECK(substitute(u.inverse(), im) == substitute(u, im).inverse());
}
