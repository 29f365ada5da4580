#pragma once

#include <gmpxx.h>

#include <vector>

namespace hcyl {

// Images of 0..n-1. Products act left to right: (a*b)(i) = b(a(i)).
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inv(const Perm& a);
bool perm_is_identity(const Perm& a);
Perm perm_commutator(const Perm& a, const Perm& b);  // a^-1 b^-1 a b

// Stabilizer chain built by Schreier-Sims.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }
  bool contains(const Perm& g) const;
  mpz_class order() const;
  bool trivial() const { return base_.empty(); }

 private:
  struct Level {
    int point;
    std::vector<Perm> strong;       // fix every earlier base point
    std::vector<int> orbit;
    std::vector<Perm> transversal;  // indexed by point; empty when outside the orbit
  };

  int n_;
  std::vector<Perm> gens_;
  std::vector<int> base_;
  std::vector<Level> levels_;

  void orbit_of(Level& L) const;
  // Returns the residue and the level at which sifting stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;
  void add_strong(const Perm& g, std::size_t upto);
  void build();
};

// Smallest normal subgroup of G containing S.
PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& S);
// gamma_1 = G, gamma_{i+1} = [gamma_i, G]; stops after a trivial term or max_terms terms.
std::vector<PermGroup> lower_central_series(const PermGroup& G, int max_terms);

}  // namespace hcyl
