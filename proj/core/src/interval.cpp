#include "hcyl/interval.hpp"

#include <atomic>
#include <cstdlib>
#include <numeric>

#include "hcyl/error.hpp"

namespace hcyl {

namespace {

std::atomic<long> g_precision{0};

void set_q(mpfr_t x, const mpq_class& q, mpfr_rnd_t r) { mpfr_set_q(x, q.get_mpq_t(), r); }

}  // namespace

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const mpq_class& q, mpfr_prec_t prec) : Interval(prec) {
  set_q(lo_, q, MPFR_RNDD);
  set_q(hi_, q, MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, o.prec());
  mpfr_init2(hi_, o.prec());
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec());
    mpfr_set_prec(hi_, o.prec());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

double Interval::mid() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

int Interval::certain_sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

std::string Interval::str() const {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "[%.17Rg, %.17Rg]", lo_, hi_);
  return buf;
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(std::max(prec(), o.prec()));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(std::max(prec(), o.prec()));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  mpfr_prec_t p = std::max(prec(), o.prec());
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  const mpfr_t* a[2] = {&lo_, &hi_};
  const mpfr_t* b[2] = {&o.lo_, &o.hi_};
  bool first = true;
  for (auto x : a)
    for (auto y : b) {
      mpfr_mul(t, *x, *y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, *x, *y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  if (o.certain_sign() == 0) throw PrecisionError("interval division by an interval containing 0");
  Interval inv(o.prec());
  mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
  return *this * inv;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::cos_frac(long m, long n, mpfr_prec_t prec) {
  if (n < 0) {
    n = -n;
    m = -m;
  }
  long g = std::gcd(m, n);
  m /= g;
  n /= g;
  m %= n;
  if (m < 0) m += n;
  if (2 * m > n) m = n - m;
  Interval r(prec);
  if (m == 0) return Interval(mpq_class(1), prec);
  if (2 * m == n) return Interval(mpq_class(-1), prec);
  if (4 * m == n) return Interval(mpq_class(0), prec);
  if (6 * m == n) return Interval(mpq_class(1) / 2, prec);
  if (3 * m == n) return Interval(mpq_class(-1) / 2, prec);
  // theta = 2 pi m / n lies strictly inside (0, pi) where cos decreases
  Interval theta = pi(prec + 16) * Interval(mpq_class(2 * m) / n, prec + 16);
  mpfr_cos(r.lo_, theta.hi_, MPFR_RNDD);
  mpfr_cos(r.hi_, theta.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::acos(const mpq_class& a, const mpq_class& b, mpfr_prec_t prec) {
  Interval lo(b, prec + 16), hi(a, prec + 16);
  Interval r(prec);
  // acos decreases; clamp to the domain
  if (mpfr_cmp_si(lo.hi_, 1) > 0) mpfr_set_si(lo.hi_, 1, MPFR_RNDN);
  if (mpfr_cmp_si(hi.lo_, -1) < 0) mpfr_set_si(hi.lo_, -1, MPFR_RNDN);
  mpfr_acos(r.lo_, lo.hi_, MPFR_RNDD);
  mpfr_acos(r.hi_, hi.lo_, MPFR_RNDU);
  return r;
}

mpfr_prec_t default_precision() {
  long p = g_precision.load();
  if (p > 0) return p;
  if (const char* env = std::getenv("HCYL_PRECISION")) {
    long v = std::atol(env);
    if (v >= 32 && v <= kMaxPrecision) return v;
  }
  return 128;
}

void set_default_precision(mpfr_prec_t bits) { g_precision.store(bits); }

Interval embed_real(const Cyc& x, long s, mpfr_prec_t prec) {
  Interval sum(mpq_class(0), prec);
  long d = x.field().d();
  const auto& c = x.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!sgn(c[k])) continue;
    sum = sum + Interval(c[k], prec) * Interval::cos_frac(s * static_cast<long>(k), d, prec);
  }
  return sum;
}

int certified_sign(const Cyc& x, long s) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.coeffs()[0]);
  for (mpfr_prec_t p = default_precision(); p <= kMaxPrecision; p *= 2) {
    int v = embed_real(x, s, p).certain_sign();
    if (v != 0) return v;
  }
  throw PrecisionError("sign of " + x.str() + " at embedding " + std::to_string(s) +
                       " not certified within " + std::to_string(kMaxPrecision) + " bits");
}

}  // namespace hcyl
