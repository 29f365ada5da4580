#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace hcyl {

// Q(zeta_d) with the power basis 1, zeta, ..., zeta^{phi(d)-1}.
class CycloField {
 public:
  static std::shared_ptr<const CycloField> get(int d);

  int d() const { return d_; }
  int degree() const { return phi_; }
  // zeta^k reduced to the power basis, any integer k.
  const std::vector<mpq_class>& power(long k) const;
  std::vector<mpq_class> multiply(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) const;

  explicit CycloField(int d);

 private:
  int d_, phi_;
  std::vector<std::vector<mpq_class>> powers_;  // zeta^0 .. zeta^{max(d, 2 phi) - 1}
};

class Cyc {
 public:
  Cyc() = default;
  Cyc(std::shared_ptr<const CycloField> f, mpq_class r);
  Cyc(std::shared_ptr<const CycloField> f, std::vector<mpq_class> c);
  static Cyc zeta_pow(std::shared_ptr<const CycloField> f, long k);

  const CycloField& field() const { return *f_; }
  const std::shared_ptr<const CycloField>& field_ptr() const { return f_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Cyc conj() const;
  Cyc inverse() const;

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator*(const mpq_class& r) const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  bool operator==(const Cyc& o) const;

  std::string str() const;

 private:
  std::shared_ptr<const CycloField> f_;
  std::vector<mpq_class> c_;
};

using CycMatrix = std::vector<std::vector<Cyc>>;

CycMatrix cyc_zero_matrix(std::shared_ptr<const CycloField> f, std::size_t n);
CycMatrix cyc_conj_transpose(const CycMatrix& a);
CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b);
bool cyc_is_hermitian(const CycMatrix& a);

}  // namespace hcyl
