#include "hcyl/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "hcyl/error.hpp"
#include "hcyl/intmat.hpp"
#include "hcyl/poly.hpp"

namespace hcyl {

CycloField::CycloField(int d) : d_(d) {
  if (d < 1) throw ValidationError("cyclotomic field needs d >= 1");
  QPoly phi = cyclotomic_poly(d);
  phi_ = poly_degree(phi);
  std::size_t count = std::max<std::size_t>(d, 2 * phi_);
  std::vector<mpq_class> cur(phi_, 0);
  cur[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    powers_.push_back(cur);
    // multiply by x, reduce with the monic Phi_d
    mpq_class top = cur[phi_ - 1];
    for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (sgn(top))
      for (int i = 0; i < phi_; ++i) cur[i] -= top * phi[i];
  }
}

std::shared_ptr<const CycloField> CycloField::get(int d) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[d];
  if (!slot) slot = std::make_shared<const CycloField>(d);
  return slot;
}

const std::vector<mpq_class>& CycloField::power(long k) const {
  long r = k % d_;
  if (r < 0) r += d_;
  return powers_[r];
}

std::vector<mpq_class> CycloField::multiply(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) const {
  std::vector<mpq_class> prod(2 * phi_ - 1, 0);
  for (int i = 0; i < phi_; ++i) {
    if (!sgn(a[i])) continue;
    for (int j = 0; j < phi_; ++j)
      if (sgn(b[j])) prod[i + j] += a[i] * b[j];
  }
  std::vector<mpq_class> r(phi_, 0);
  for (int k = 0; k < 2 * phi_ - 1; ++k) {
    if (!sgn(prod[k])) continue;
    const auto& pk = powers_[k];
    for (int i = 0; i < phi_; ++i)
      if (sgn(pk[i])) r[i] += prod[k] * pk[i];
  }
  return r;
}

Cyc::Cyc(std::shared_ptr<const CycloField> f, mpq_class r) : f_(std::move(f)), c_(f_->degree(), 0) {
  c_[0] = std::move(r);
}

Cyc::Cyc(std::shared_ptr<const CycloField> f, std::vector<mpq_class> c) : f_(std::move(f)), c_(std::move(c)) {
  if (static_cast<int>(c_.size()) != f_->degree()) throw ValidationError("cyclotomic element of the wrong length");
}

Cyc Cyc::zeta_pow(std::shared_ptr<const CycloField> f, long k) {
  auto c = f->power(k);
  return Cyc(std::move(f), std::move(c));
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x)) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i])) return false;
  return true;
}

Cyc Cyc::conj() const {
  std::vector<mpq_class> r(c_.size(), 0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!sgn(c_[k])) continue;
    const auto& p = f_->power(-static_cast<long>(k));
    for (std::size_t i = 0; i < r.size(); ++i)
      if (sgn(p[i])) r[i] += c_[k] * p[i];
  }
  return Cyc(f_, std::move(r));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in a cyclotomic field");
  if (is_rational()) return Cyc(f_, mpq_class(1 / c_[0]));
  int n = f_->degree();
  // column k of the multiplication matrix is this * zeta^k
  QMatrix m(n, std::vector<mpq_class>(n, 0));
  for (int k = 0; k < n; ++k) {
    auto col = f_->multiply(c_, f_->power(k));
    for (int i = 0; i < n; ++i) m[i][k] = col[i];
  }
  std::vector<mpq_class> e(n, 0);
  e[0] = 1;
  auto sol = solve_rational(m, e);
  if (!sol) throw std::domain_error("cyclotomic inverse failed");
  return Cyc(f_, sol->x);
}

Cyc Cyc::operator+(const Cyc& o) const {
  Cyc r = *this;
  r += o;
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  Cyc r = *this;
  r -= o;
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  if (o.is_rational()) return *this * o.c_[0];
  if (is_rational()) return o * c_[0];
  return Cyc(f_, f_->multiply(c_, o.c_));
}

Cyc Cyc::operator*(const mpq_class& r) const {
  Cyc out = *this;
  for (auto& x : out.c_) x *= r;
  return out;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

bool Cyc::operator==(const Cyc& o) const { return f_->d() == o.f_->d() && c_ == o.c_; }

std::string Cyc::str() const {
  std::ostringstream s;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!sgn(c_[k])) continue;
    if (!first) s << (sgn(c_[k]) > 0 ? " + " : " - ");
    else if (sgn(c_[k]) < 0) s << "-";
    mpq_class a = abs(c_[k]);
    if (k == 0 || a != 1) s << a.get_str();
    if (k > 0) s << (a != 1 ? "*" : "") << "z" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return first ? "0" : s.str();
}

CycMatrix cyc_zero_matrix(std::shared_ptr<const CycloField> f, std::size_t n) {
  return CycMatrix(n, std::vector<Cyc>(n, Cyc(f, mpq_class(0))));
}

CycMatrix cyc_conj_transpose(const CycMatrix& a) {
  std::size_t n = a.size();
  if (n == 0) return {};
  std::size_t m = a[0].size();
  CycMatrix r(m, std::vector<Cyc>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) r[j][i] = a[i][j].conj();
  return r;
}

CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  if (n == 0) return {};
  auto f = a[0][0].field_ptr();
  CycMatrix r(n, std::vector<Cyc>(m, Cyc(f, mpq_class(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[t][j].is_zero()) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

bool cyc_is_hermitian(const CycMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j)
      if (!(a[i][j] == a[j][i].conj())) return false;
  return true;
}

}  // namespace hcyl
