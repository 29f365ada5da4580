#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

#include "hcyl/cyclotomic.hpp"

namespace hcyl {

// Closed interval with MPFR endpoints; every operation rounds outward.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const mpq_class& q, mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval& operator=(const Interval& o);
  ~Interval();

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  double mid() const;
  // -1 or 1 when the interval excludes 0, 0 otherwise
  int certain_sign() const;
  std::string str() const;

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // o must exclude 0

  static Interval pi(mpfr_prec_t prec);
  // cos(2 pi m / n)
  static Interval cos_frac(long m, long n, mpfr_prec_t prec);
  // arccos over [a, b] inside [-1, 1]
  static Interval acos(const mpq_class& a, const mpq_class& b, mpfr_prec_t prec);

 private:
  mpfr_t lo_, hi_;
};

// Starting precision in bits: HCYL_PRECISION when set, else 128.
mpfr_prec_t default_precision();
void set_default_precision(mpfr_prec_t bits);
constexpr mpfr_prec_t kMaxPrecision = 1 << 16;

// Real part of the image of x under zeta_d -> exp(2 pi i s / d).
Interval embed_real(const Cyc& x, long s, mpfr_prec_t prec);
// Exact sign of the real element x (x == conj(x)) at embedding s; doubles the
// precision until certified, PrecisionError past kMaxPrecision.
int certified_sign(const Cyc& x, long s);

}  // namespace hcyl
