#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcyl/words.hpp"

namespace hcyl {

// Variable indices are 0-based: X_1 is 0.
using Monomial = std::vector<std::uint8_t>;

// Degree first, then lexicographic.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class TruncatedSeries {
 public:
  using Terms = std::map<Monomial, mpz_class, MonomialOrder>;

  TruncatedSeries(int variables, int degree) : b_(variables), D_(degree) {}
  static TruncatedSeries one(int variables, int degree);

  int variables() const { return b_; }
  int degree() const { return D_; }
  const Terms& terms() const { return terms_; }

  mpz_class coeff(const Monomial& m) const;
  void add(const Monomial& m, const mpz_class& c);
  bool is_one() const;
  // Smallest degree of a nonconstant term; degree()+1 when there is none.
  int lowest_degree() const;
  TruncatedSeries truncate(int degree) const;

  bool operator==(const TruncatedSeries& o) const { return D_ == o.D_ && terms_ == o.terms_; }

 private:
  int b_;
  int D_;
  Terms terms_;
};

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& c);
std::string monomial_name(const Monomial& m);

// Dense coefficient layers, layer k indexed base b. This is the working
// representation; the sparse map is produced on demand.
class DenseSeries {
 public:
  DenseSeries(int variables, int degree);
  static DenseSeries one(int variables, int degree);

  int variables() const { return b_; }
  int degree() const { return D_; }

  void mul_letter(int letter);       // S <- S * (1 + X_k)^{+-1}
  void mul_letter_left(int letter);  // S <- (1 + X_k)^{+-1} * S
  std::vector<mpz_class>& layer(int k) { return layers_[k]; }
  const std::vector<mpz_class>& layer(int k) const { return layers_[k]; }
  bool is_one() const;
  int lowest_degree() const;
  TruncatedSeries sparse() const;
  static DenseSeries from_sparse(const TruncatedSeries& s);

  friend DenseSeries operator*(const DenseSeries& a, const DenseSeries& c);

 private:
  int b_;
  int D_;
  std::vector<std::vector<mpz_class>> layers_;
  std::vector<std::size_t> pow_;
};

TruncatedSeries expand(const Word& w, int D);
DenseSeries expand_dense(const Word& w, int D);

// w in F_q for the returned q < Q; nullopt means "at least Q".
std::optional<int> lcs_weight(const Word& w, int Q);

int mobius(long n);
mpz_class witt_rank(int q, long m);
mpz_class rank_window(int q, long m);

}  // namespace hcyl
