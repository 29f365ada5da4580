#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcyl/cylinder.hpp"
#include "hcyl/permgroup.hpp"
#include "hcyl/words.hpp"

namespace hcyl {

// A homomorphism from the Schreier generators of one level onto a finite
// abelian p-group Z_{orders[0]} x ... ; values[k] is the image of generator k.
struct Character {
  std::vector<long> orders;
  std::vector<std::vector<long>> values;

  long group_order() const;
  bool surjective() const;
};

// Coset table of one level: cosets of F_(t) in F under right multiplication.
struct CosetLevel {
  int cosets = 1;
  std::vector<Perm> action;        // one permutation per generator
  std::vector<Perm> inverse_action;
  std::vector<Word> transversal;   // BFS representatives
  std::vector<std::vector<int>> schreier_index;  // [coset][gen-1], -1 on tree edges
  std::vector<Word> schreier_words;              // ambient words of the Schreier generators

  int rank() const { return static_cast<int>(schreier_words.size()); }
  int act(int coset, const Word& w) const;
  // Exponent sums over the Schreier generators of w read from `coset`.
  std::vector<long> rewrite(int coset, const Word& w) const;
};

// levels[t] holds the cosets of F_(t); levels[0] is the single coset of F.
// chars[t] is defined on the Schreier generators of levels[t]; the last one
// is the top character phi with cyclic target Z_d.
struct PStructure {
  SurfaceBasis basis;
  long p = 2;
  std::vector<Character> chars;
  std::vector<CosetLevel> levels;

  int height() const { return static_cast<int>(chars.size()) - 1; }
  long d() const { return chars.back().orders.at(0); }
  const Character& phi() const { return chars.back(); }
  long phi_value(const std::vector<long>& schreier_exponents) const;
};

CosetLevel base_level(SurfaceBasis basis);
CosetLevel next_level(SurfaceBasis basis, const CosetLevel& L, const Character& chi);

// chars[0..h-1] form the tower and chars[h] is phi; phi must be cyclic.
PStructure tower_build(SurfaceBasis basis, long p, std::vector<Character> chars);
// The tower with one more level whose top character is `phi`.
PStructure tower_extend(const PStructure& T, Character phi);

// Least q <= Q with F_q inside F_(h+1); nullopt when there is none up to Q.
std::optional<int> tower_order(const PStructure& T, int Q);
// Same question answered with left-normed generator commutators acting on cosets.
std::optional<int> tower_order_by_commutators(const PStructure& T, int Q);

struct Lift {
  int degree = 1;
  long psi = 0;  // in Z_d
  int base = 0;  // least coset of the cycle
};
struct LiftData {
  std::vector<Lift> lifts;
  int index = 1;
};
LiftData lift_loop(const PStructure& T, const Word& alpha);

enum class C5Status { pass, fail, not_in_subgroup };
std::string to_string(C5Status s);
// Coordinates of M tested in H_1(F_(t)) tensor Z_{p^s}.
std::vector<C5Status> check_c5(const PStructure& T, const CylinderClass& M, int t, int s);

// Character of the mod-p abelianization of a level: (Z_p)^rank with unit values.
Character mod_p_abelianization(const CosetLevel& L, long p);
// Cyclic character Z_d with given values.
Character cyclic_character(long d, std::vector<long> values);

}  // namespace hcyl
