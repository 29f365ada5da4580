#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace hcyl {

using ZMatrix = std::vector<std::vector<mpz_class>>;
using QMatrix = std::vector<std::vector<mpq_class>>;

mpz_class det_bareiss(ZMatrix a);
// Inverse over the integers; nullopt when det != +-1.
std::optional<ZMatrix> inverse_unimodular(const ZMatrix& a);

struct RationalSolution {
  std::vector<mpq_class> x;
  bool unique = true;
};
// Some solution of A x = rhs (free variables set to 0), or nullopt.
std::optional<RationalSolution> solve_rational(const QMatrix& a, const std::vector<mpq_class>& rhs);

// Integer vectors spanning the rational kernel of A, one per free column.
std::vector<std::vector<mpz_class>> integer_nullspace(const QMatrix& a, std::size_t cols);

// Rank of the row lattice spanned by `rows` together with e_i * moduli[i];
// true when the quotient Z^r / lattice is trivial.
bool spans_quotient(const std::vector<std::vector<long>>& rows, const std::vector<long>& moduli);

}  // namespace hcyl
