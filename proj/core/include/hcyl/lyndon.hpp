#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <vector>

#include "hcyl/magnus.hpp"
#include "hcyl/words.hpp"

namespace hcyl {

// Lyndon words of exactly length n over {0..b-1}, lexicographic (Duval).
std::vector<std::vector<int>> lyndon_words(int b, int n);
bool is_lyndon(const std::vector<int>& w);
// Start of the standard right factor v in w = uv.
std::size_t standard_split(const std::vector<int>& w);

// Group commutators bracketed along the standard factorization of each
// Lyndon word. The degree-|w| part of the Magnus expansion of such a
// commutator has lexicographically least monomial w with coefficient 1,
// which makes decomposition of Lie elements triangular.
class LyndonCommutators {
 public:
  struct Entry {
    std::vector<int> word;
    std::size_t index;  // dense index of the monomial w
    Word group;
    std::vector<mpz_class> lead;  // degree-|w| layer of its expansion
  };

  static std::shared_ptr<const LyndonCommutators> get(SurfaceBasis basis, int max_len);

  const std::vector<Entry>& of_length(int k) const { return by_len_[k]; }
  const Entry* find(int k, std::size_t index) const;

 private:
  LyndonCommutators(SurfaceBasis basis, int max_len);
  std::vector<std::vector<Entry>> by_len_;
  std::vector<std::map<std::size_t, std::size_t>> lookup_;
};

// A word congruent to w modulo F_q, built from Lyndon commutators of
// increasing weight; its length depends only on the class of w.
Word nil_normal_form(const Word& w, int q);
// Same, starting from an expansion of degree at least q-1.
Word nil_normal_form(DenseSeries series, SurfaceBasis basis, int q);

}  // namespace hcyl
