#pragma once

#include <string>
#include <vector>

#include "hcyl/covers.hpp"
#include "hcyl/forms.hpp"
#include "hcyl/knots.hpp"

namespace hcyl {

struct InfectionSpec {
  PStructure tower;
  Word alpha;
  SeifertMatrix knot;
};

// Sum over lifts of [lambda_r(A, zeta_d^psi)] - [lambda_r(A, 1)].
WittSignatureVector lambda_effect(const LiftData& lifts, long d, const SeifertMatrix& A);
WittSignatureVector lambda_effect(const InfectionSpec& spec);

// A loop in the h-th derived subgroup with a tower of height h and an
// integral character phi on the top level taking every lift to -1, 0 or 1.
struct GammaTower {
  SurfaceBasis basis;
  long p = 2;
  int h = 0;
  Word gamma;
  std::vector<Character> chars;  // the tower, h entries
  std::vector<long> phi;         // on the Schreier generators of level h
  std::vector<long> lift_values; // phi of each lift
  int c = 0;                     // lifts sent to +-1

  // The p-structure with top character phi mod d.
  PStructure structure(long d) const;
};

// Left-normed commutator words of F^(h) tried in order of length.
std::vector<Word> derived_candidates(SurfaceBasis basis, int h, std::size_t limit);

// Throws SearchExhausted when no pair is found.
GammaTower gamma_tower_search(SurfaceBasis basis, long p, int h);

struct CertificateTerm {
  long coeff = 0;
  long d = 0;  // of the knot
  WittSignatureVector effect;  // lambda_T(E(alpha, K_i))
  long defining_sign = 0;      // its signature at zeta_d
  long doubled_contribution = 0;  // 2 * coeff * defining_sign
  std::vector<long> zero_checks;  // sigma_{K_i}(zeta_d^s) for i > i0
  bool zeros_ok = true;
};

struct Certificate {
  int i0 = 0;  // 1-based
  long d = 0;
  int c = 0;
  LiftData lifts;
  std::vector<CertificateTerm> terms;
  long sigma_i0 = 0;   // sigma_{K_i0}(zeta_d)
  long claimed = 0;    // 2 a_i0 c sigma_i0
  long evaluated = 0;  // sum of all doubled contributions
  bool verdict = false;
};

// Refuses (ValidationError) when every coefficient vanishes or the family
// fails one of its conditions.
Certificate independence_certificate(const FamilyReport& family, const GammaTower& gt,
                                     const std::vector<long>& coeffs);

}  // namespace hcyl
