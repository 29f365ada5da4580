#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcyl/cyclotomic.hpp"
#include "hcyl/intmat.hpp"
#include "hcyl/poly.hpp"

namespace hcyl {

using SeifertMatrix = ZMatrix;

// omega = zeta_d^k
struct RootSpec {
  int d = 1;
  long k = 0;
};

// det(A - A^T) == 1 and even size.
bool is_seifert(const SeifertMatrix& A);
// Delta_A(t) = det(A - t A^T)
QPoly alexander(const SeifertMatrix& A);

SeifertMatrix block_sum(const SeifertMatrix& A, const SeifertMatrix& B);
SeifertMatrix negate(const SeifertMatrix& A);
SeifertMatrix torus_2n(int n);     // T(2, n), n odd; n < 0 gives the mirror
SeifertMatrix twist_knot(long k);  // [[-1, 1], [0, k]]

CycMatrix lt_matrix(const SeifertMatrix& A, RootSpec w);
CycMatrix lambda_r(const SeifertMatrix& A, RootSpec w, int r);

// Diagonal entries of an exact congruence diagonalization; zeros (the radical) dropped.
std::vector<Cyc> hermitian_pivots(CycMatrix H);
// Signature of diag(pivots) at zeta_d -> exp(2 pi i s / d).
long signature_at(const std::vector<Cyc>& pivots, long s);

// Units of Z/d modulo +-1, smallest representatives.
std::vector<long> embedding_classes(int d);

struct WittSignatureVector {
  int d = 1;
  std::vector<long> classes;
  std::vector<long> sig;
  long rank = 0;

  long at(long s) const;  // any s coprime to d
  WittSignatureVector& operator+=(const WittSignatureVector& o);
  WittSignatureVector operator-(const WittSignatureVector& o) const;
  WittSignatureVector scaled(long c) const;
  bool zero() const;
  bool operator==(const WittSignatureVector& o) const = default;
};
WittSignatureVector zero_signatures(int d);
// d is needed for the empty matrix; otherwise it must match the entries.
WittSignatureVector witt_signatures(const CycMatrix& H, int d);

long lt_signature(const SeifertMatrix& A, RootSpec w);
// Signature at the rational unit-circle point x + i y.
long lt_signature_at_point(const SeifertMatrix& A, const mpq_class& x, const mpq_class& y);

// Normalized integral of the signature function over the circle. `exact`
// holds the value whenever the signature does not jump at any unit-circle
// root of Delta that is not a root of unity; lo/hi always enclose it.
struct SignatureIntegral {
  std::optional<mpq_class> exact;
  double lo = 0, hi = 0;
  struct Arc {
    std::string from, to;  // angles as fractions of pi, or "acos(...)" enclosures
    long signature = 0;
  };
  std::vector<Arc> arcs;
  bool certainly_zero() const { return exact && *exact == 0; }
  bool certainly_nonzero() const { return lo > 0 || hi < 0; }
};
SignatureIntegral lt_integral(const SeifertMatrix& A);

int arf(const SeifertMatrix& A);

}  // namespace hcyl
