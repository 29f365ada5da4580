#pragma once

#include <gmpxx.h>

#include <optional>
#include <random>
#include <vector>

#include "hcyl/cylinder.hpp"

namespace hcyl {

// Exact classes of mapping-class type. The boundary word of a basis is the
// product of the factors x_1, ..., x_{n-1}, [m_1, l_1], ..., [m_g, l_g].
CylinderClass framing(SurfaceBasis basis, int i, long k);
// Twist about a curve around factors s..t (1-based), power e: every letter
// in those factors is conjugated y -> P^e y P^-e with P their product.
CylinderClass block_twist(SurfaceBasis basis, int s, int t, int e);
// Handle twists: kind 0 sends l_j -> l_j m_j^e, kind 1 sends m_j -> m_j l_j^e.
CylinderClass handle_twist(SurfaceBasis basis, int j, int kind, int e);
// g = 0, n = 4 data mu_i = [x_{i+1}, x_{i+2}]; consistent through level 4 only.
CylinderClass borromean_class();

using Rng = std::mt19937_64;

// Integer solutions (one block of Lyndon coefficients per coordinate) of the
// degree k+1 part of the boundary relation for coordinates of degree k.
std::vector<std::vector<mpz_class>> boundary_lie_kernel(SurfaceBasis basis, int k);
// A random class built from boundary_lie_kernel(basis, k); it lies in H(k),
// has depth k+2 and passes validation; nullopt when the kernel is zero or
// no valid combination turns up.
std::optional<CylinderClass> lie_class(SurfaceBasis basis, int k, Rng& rng);

// `torelli` restricts to generators acting trivially on homology.
CylinderClass random_generator(SurfaceBasis basis, Rng& rng, bool torelli = false);
// Product of `length` random generators; exact.
CylinderClass random_class(SurfaceBasis basis, Rng& rng, int length, bool torelli = false);
// M N M^-1 N^-1 at depth q.
CylinderClass class_commutator(const CylinderClass& M, const CylinderClass& N, int q);
// A class in H(q) built from commutators and, for g = 0, n = 4, the Borromean data.
CylinderClass random_kernel_member(SurfaceBasis basis, Rng& rng, int q);

}  // namespace hcyl
