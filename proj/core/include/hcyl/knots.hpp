#pragma once

#include <string>
#include <vector>

#include "hcyl/forms.hpp"

namespace hcyl {

struct KnotSearchBounds {
  int max_torus = 31;   // T(2, n) for odd 3 <= n <= max_torus
  long max_twist = 3;   // twist knots with 1 <= |k| <= max_twist, k != -1
  int max_support = 4;  // distinct pool knots per member
  long max_coeff = 24;  // largest multiplicity
  int first_exponent = 1;  // d_1 = p^first_exponent
};

struct KnotTerm {
  std::string name;
  long coeff = 0;  // negative: mirror
};

struct FamilyMember {
  std::vector<KnotTerm> recipe;
  SeifertMatrix A;
  long d = 2;
};

struct ConditionCheck {
  int member = 0;  // 1-based
  std::string condition;  // "1", "2", "3", "4"
  bool ok = true;
  std::string detail;
};

struct FamilyReport {
  long p = 2;
  std::vector<FamilyMember> members;
  std::vector<ConditionCheck> checks;
  bool ok() const;
};

// Pool knot by name: "T(2,n)" or "twist(k)".
SeifertMatrix pool_knot(const std::string& name);
SeifertMatrix assemble(const std::vector<KnotTerm>& recipe);
std::vector<std::string> knot_pool(const KnotSearchBounds& b);

// Exhaustive check of the four family conditions with exact signatures,
// certified integrals and Arf invariants.
std::vector<ConditionCheck> verify_family(long p, const std::vector<FamilyMember>& members);

// Throws SearchExhausted when some member cannot be found within the bounds.
FamilyReport knot_family_search(long p, int count, const KnotSearchBounds& b = {});

}  // namespace hcyl
