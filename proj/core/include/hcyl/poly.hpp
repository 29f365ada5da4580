#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace hcyl {

// Dense univariate polynomials, coefficients low degree first, no trailing zeros.
using QPoly = std::vector<mpq_class>;

void poly_trim(QPoly& a);
int poly_degree(const QPoly& a);  // -1 for zero
QPoly poly_add(const QPoly& a, const QPoly& b);
QPoly poly_sub(const QPoly& a, const QPoly& b);
QPoly poly_mul(const QPoly& a, const QPoly& b);
QPoly poly_scale(const QPoly& a, const mpq_class& c);
std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b);
QPoly poly_gcd(QPoly a, QPoly b);  // monic
QPoly poly_derivative(const QPoly& a);
mpq_class poly_eval(const QPoly& a, const mpq_class& x);
QPoly poly_monic(const QPoly& a);
QPoly poly_squarefree(const QPoly& a);

// Phi_n with integer coefficients.
QPoly cyclotomic_poly(int n);

// Real roots of a nonzero polynomial in the open interval (lo, hi), each in a
// rational interval (a, b] of width < tol holding exactly one root; the
// polynomial never vanishes at the returned endpoints. p must not vanish at lo or hi.
struct RootInterval {
  mpq_class a, b;
};
std::vector<RootInterval> isolate_real_roots(const QPoly& p, const mpq_class& lo, const mpq_class& hi,
                                             const mpq_class& tol);
// Halves the interval keeping the root of squarefree p.
void refine_root(const QPoly& p, RootInterval& r);

}  // namespace hcyl
