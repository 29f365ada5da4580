#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcyl/nilpotent.hpp"
#include "hcyl/words.hpp"

namespace hcyl {

// (eta, mu~) data of a homology cylinder. aut.q is the depth: 0 means the
// words are exact free-group data, otherwise only their classes mod F_depth
// carry meaning. `boundary` is the loop through the basepoint that eta fixes.
struct CylinderClass {
  SurfaceBasis basis;
  std::vector<Word> milnor;
  NilAutomorphism aut;
  Word boundary;

  int depth() const { return aut.q; }
  // Largest level at which the data is meaningful, capped by Q.
  int usable(int Q) const { return depth() == 0 ? Q : (depth() < Q ? depth() : Q); }
};

// x_i -> mu_i^{-1} x_i mu_i, m_j -> mu'_j^{-1} m_j, l_j -> mu''_j^{-1} l_j
std::vector<Word> derived_images(SurfaceBasis basis, const std::vector<Word>& milnor);

struct Violation {
  std::string what;  // "generator" or "boundary"
  int index = 0;     // generator number for "generator"
  int level = 0;     // first q at which the relation fails
  Word residual;
};

// Checks the generator relations and boundary fixing at levels 2..Q.
std::optional<Violation> validate(const CylinderClass& M, int Q);

CylinderClass identity_class(SurfaceBasis basis);
// Throws ValidationError carrying the residual when the data is inconsistent.
CylinderClass from_data(SurfaceBasis basis, std::vector<Word> milnor, std::vector<Word> aut_images,
                        int Q = 5, int depth = 0);
// aut derived from the tuple; not validated.
CylinderClass from_milnor(SurfaceBasis basis, std::vector<Word> milnor, int depth = 0);
CylinderClass from_milnor(SurfaceBasis basis, std::vector<Word> milnor, int depth, Word boundary);

// milnor_k = mu_M[k] * eta_M(mu_N[k]), aut = aut_M o aut_N.
CylinderClass compose(const CylinderClass& M, const CylinderClass& N);
// Result has depth q (or M's depth when finite and smaller).
CylinderClass invert(const CylinderClass& M, int q);

bool milnor_trivial(const CylinderClass& M, int q);
bool class_equal(const CylinderClass& M, const CylinderClass& N, int q);

// Pi_i [x_i, mu_i] Pi_j [l_j, mu'_j][mu'_j, mu''_j][mu''_j, m_j]
Word p_relation_word(const CylinderClass& M);

struct FiltrationLevel {
  int q = 0;
  bool in_H = false;    // H(q)
  bool in_Hb = false;   // H[q]
  bool in_H0 = false;   // H^0[q]
  bool p_checked = false;
  bool p_ok = true;
  std::optional<int> p_weight;  // nullopt: at least q+1
};

struct FiltrationReport {
  std::vector<FiltrationLevel> levels;
  bool chain_ok = true;
  std::string violation;
};

FiltrationReport filtration_report(const CylinderClass& M, int Q);

// New generating set written in the old letters.
//  same_basepoint: x'_i = g_i^{-1} x_i^{e_i} g_i, m'_j = g'_j^{-1} m_j, l'_j = g''_j^{-1} l_j
//  same_component: basepoint slid along its boundary, coordinates unchanged
//  other_component: basepoint moved onto the boundary of x_1
struct BasisChange {
  enum class Kind { same_basepoint, same_component, other_component };
  Kind kind = Kind::same_basepoint;
  std::vector<Word> gamma;  // one per generator (same_basepoint only)
  std::vector<int> signs;   // +-1 per x_i; empty means all +1
  int Q = 5;                // level used to rewrite into the new letters
};

struct BasisChangeResult {
  std::vector<Word> coords_old;  // f(z) in the old letters (same_basepoint)
  CylinderClass cls;             // over the new generators
};

BasisChangeResult change_basis(const CylinderClass& M, const BasisChange& change);

// Old letters expressed through the new ones for a transport to another
// boundary component: x_1 -> x'_1 (x'_2 ... x'_{n-1} Pi [m'_j, l'_j])^{-1}.
std::vector<Word> transport_substitution(SurfaceBasis basis);

struct EmbeddingPiece {
  int g = 0;
  int a = 1;
  int n = 0;
  bool has_basepoint = false;
  std::vector<int> x_src;  // source generators x^r_k: a of them, or a-1 with the basepoint
  std::vector<int> x_dst;  // target generators x'^r_i: n of them, or n-1 with the basepoint
  std::vector<int> m_dst;  // m'^r_j for j <= g + a - 1
  std::vector<int> l_dst;
};

struct EmbeddingSpec {
  SurfaceBasis source;
  SurfaceBasis target;
  std::vector<Word> iota;  // image of each source generator
  std::vector<EmbeddingPiece> pieces;
  std::vector<std::pair<int, int>> y;  // (source generator, target generator)
  std::optional<Word> target_boundary;

  void check() const;
};

CylinderClass embed_pushforward(const CylinderClass& M, const EmbeddingSpec& spec);

// Specs used by the functoriality checks.
EmbeddingSpec annulus_into_pants(bool basepoint_piece);
EmbeddingSpec handle_into_two_boundaries();

}  // namespace hcyl
