#include "doctest.h"

#include "hcyl/error.hpp"
#include "hcyl/infection.hpp"

using namespace hcyl;

namespace {

PStructure abelian_tower() { return tower_build({0, 3}, 2, {cyclic_character(2, {1, 0})}); }

const FamilyReport& family() {
  static FamilyReport f = knot_family_search(2, 3);
  return f;
}

}  // namespace

TEST_CASE("height-zero trefoil effect") {
  SurfaceBasis B{0, 3};
  InfectionSpec s{abelian_tower(), Word::generator(B, 1), torus_2n(3)};
  // one lift with psi = 1: lambda_1 at -1 minus at 1
  auto e = lambda_effect(s);
  CHECK(e.at(1) == -2);
}

TEST_CASE("effect invariants: mirror cancels, sums add, trivial lifts vanish") {
  SurfaceBasis B{0, 3};
  auto ab = mod_p_abelianization(base_level(B), 2);
  auto T = tower_build(B, 2, {ab, cyclic_character(4, {1, 0, 1, 0, 0})});
  for (const auto& alpha : {Word::reduce({1}, B), Word::reduce({1, 2, -1, -2}, B), Word::reduce({1, 1, 2}, B)}) {
    auto L = lift_loop(T, alpha);
    for (const auto& K : {torus_2n(3), torus_2n(5), twist_knot(2)}) {
      auto e = lambda_effect(L, 4, K);
      auto m = lambda_effect(L, 4, negate(K));
      auto sum = e;
      sum += m;
      CHECK(sum.zero());
      CHECK(lambda_effect(L, 4, block_sum(K, K)) == e.scaled(2));
      CHECK(lambda_effect(L, 4, block_sum(K, negate(K))).zero());
    }
  }
  // a loop acting trivially on the top character contributes nothing
  auto L = lift_loop(T, Word::reduce({2, 2, 2, 2}, B));
  bool all_zero = true;
  for (const auto& l : L.lifts) all_zero = all_zero && l.psi % 4 == 0;
  if (all_zero) CHECK(lambda_effect(L, 4, torus_2n(3)).zero());
}

TEST_CASE("derived candidates have zero exponent sums") {
  SurfaceBasis B{0, 3};
  for (const auto& w : derived_candidates(B, 1, 24)) {
    for (long e : exponent_sums(w)) CHECK(e == 0);
  }
  CHECK(derived_candidates(B, 0, 24).size() == 2);
}

TEST_CASE("gamma tower search on the pair of pants") {
  auto g0 = gamma_tower_search({0, 3}, 2, 0);
  CHECK(g0.c >= 1);
  CHECK(g0.chars.empty());
  auto g1 = gamma_tower_search({0, 3}, 2, 1);
  CHECK(g1.h == 1);
  CHECK(g1.c >= 1);
  for (long v : g1.lift_values) CHECK(std::abs(v) <= 1);
  for (long e : exponent_sums(g1.gamma)) CHECK(e == 0);
  CHECK_THROWS_AS(gamma_tower_search({0, 2}, 2, 0), ValidationError);
}

TEST_CASE("certificates: verdict, defining term and refusal") {
  auto gt = gamma_tower_search({0, 3}, 2, 1);
  const auto& f = family();
  auto cert = independence_certificate(f, gt, {0, 2, -1});
  CHECK(cert.i0 == 2);
  CHECK(cert.d == f.members[1].d);
  CHECK(cert.verdict);
  CHECK(cert.claimed == 2 * 2 * cert.c * cert.sigma_i0);
  CHECK(cert.claimed == cert.evaluated);
  CHECK(cert.terms[2].zeros_ok);
  CHECK(cert.terms[0].doubled_contribution == 0);
  CHECK_THROWS_AS(independence_certificate(f, gt, {0, 0, 0}), ValidationError);
  CHECK_THROWS_AS(independence_certificate(f, gt, {1, 1}), ValidationError);
  // a broken family is refused
  FamilyReport bad = f;
  bad.members[0].A = torus_2n(3);
  CHECK_THROWS_AS(independence_certificate(bad, gt, {1, 0, 0}), ValidationError);
}

TEST_CASE("certificate coefficient scaling") {
  auto gt = gamma_tower_search({0, 3}, 2, 0);
  const auto& f = family();
  auto c1 = independence_certificate(f, gt, {1, 1, 1});
  auto c3 = independence_certificate(f, gt, {3, 3, 3});
  CHECK(c3.claimed == 3 * c1.claimed);
  auto neg = independence_certificate(f, gt, {-1, 1, 1});
  CHECK(neg.claimed == -c1.claimed);
}
