#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcyl/intmat.hpp"
#include "hcyl/magnus.hpp"
#include "hcyl/words.hpp"

namespace hcyl {

bool nil_trivial(const Word& w, int q);
bool nil_eq(const Word& u, const Word& v, int q);

struct NilElement {
  Word rep;
  int q = 2;
};

// Level 0 marks images that are exact at the free level (meaningful at every q).
inline int meet_level(int a, int b) {
  if (a == 0) return b;
  if (b == 0) return a;
  return a < b ? a : b;
}

struct NilAutomorphism {
  SurfaceBasis basis;
  int q = 0;
  std::vector<Word> images;

  static NilAutomorphism identity(SurfaceBasis basis, int q = 0);
  // x -> w^{-1} x w
  static NilAutomorphism inner(const Word& w, int q = 0);
};

Word aut_apply(const NilAutomorphism& phi, const Word& w);
NilElement aut_apply(const NilAutomorphism& phi, const NilElement& e);
// (phi o psi)(x) = phi(psi(x)): psi acts first.
NilAutomorphism aut_compose(const NilAutomorphism& phi, const NilAutomorphism& psi);
bool aut_equal(const NilAutomorphism& phi, const NilAutomorphism& psi, int q);
bool aut_is_identity(const NilAutomorphism& phi, int q);

// Expansion of phi(w) to degree D built from cached expansions of the
// images, so phi(w) is never written out.
class ImageExpander {
 public:
  ImageExpander(const NilAutomorphism& phi, int D);
  DenseSeries operator()(const Word& w) const;
  DenseSeries operator()(const DenseSeries& prefix, const Word& w) const;

 private:
  int b_;
  int D_;
  std::vector<int> letter_;  // single-letter images, 0 otherwise
  std::vector<DenseSeries> fwd_, inv_;
};

// nil_normal_form(phi(w), q)
Word nil_apply(const NilAutomorphism& phi, const Word& w, int q);

// Column k holds the exponent sums of the image of generator k.
ZMatrix abelianization(const NilAutomorphism& phi);

struct InvertTrace {
  std::vector<int> discrepancy_weight;  // per round, before correction
  int rounds = 0;
};
// Inverse at level q (defaults to phi.q).
NilAutomorphism aut_invert(const NilAutomorphism& phi, int q = 0, InvertTrace* trace = nullptr);

// Some mu with mu^{-1} x_i mu == target in F/F_q, or nullopt when none exists.
// `method` reports whether a subword of the target or the graded lift found it.
std::optional<Word> conjugator(const Word& target, int i, int q, std::string* method = nullptr);

struct Aut2Report {
  int q = 0;
  std::vector<bool> conj_pass;  // one per x_i, i < n
  std::vector<std::optional<Word>> witness;
  std::vector<std::string> method;
  bool a_pass = true;
  bool b_pass = true;
  Word boundary_residual;
  std::string lift_clause = "unchecked";
};
Aut2Report aut2_check(const NilAutomorphism& phi, int q = 0);

}  // namespace hcyl
