#include "hcyl/intmat.hpp"

#include <utility>

namespace hcyl {

mpz_class det_bareiss(ZMatrix a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::optional<ZMatrix> inverse_unimodular(const ZMatrix& a) {
  std::size_t n = a.size();
  QMatrix m(n, std::vector<mpq_class>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m[r][c] == 0) ++r;
    if (r == n) return std::nullopt;
    std::swap(m[c], m[r]);
    mpq_class piv = m[c][c];
    for (auto& v : m[c]) v /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  ZMatrix inv(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][n + j].get_den() != 1) return std::nullopt;
      inv[i][j] = m[i][n + j].get_num();
    }
  return inv;
}

std::optional<RationalSolution> solve_rational(const QMatrix& a, const std::vector<mpq_class>& rhs) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  QMatrix m = a;
  for (std::size_t i = 0; i < rows; ++i) m[i].push_back(rhs[i]);
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    mpq_class piv = m[r][c];
    for (std::size_t j = c; j <= cols; ++j) m[r][j] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  RationalSolution s;
  s.x.assign(cols, 0);
  for (std::size_t i = 0; i < r; ++i) s.x[pivcol[i]] = m[i][cols];
  s.unique = (r == cols);
  return s;
}

std::vector<std::vector<mpz_class>> integer_nullspace(const QMatrix& a, std::size_t cols) {
  QMatrix m = a;
  std::size_t rows = m.size();
  std::vector<long> pivot_of(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    mpq_class piv = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_of[c] = static_cast<long>(r);
    ++r;
  }
  std::vector<std::vector<mpz_class>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_of[f] >= 0) continue;
    std::vector<mpq_class> v(cols, 0);
    v[f] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_of[c] >= 0) v[c] = -m[pivot_of[c]][f];
    mpz_class den = 1;
    for (const auto& x : v) den = lcm(den, mpz_class(x.get_den()));
    std::vector<mpz_class> z(cols);
    mpz_class g = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      z[c] = mpz_class(v[c] * den);
      g = gcd(g, z[c]);
    }
    for (auto& x : z) x /= g;
    basis.push_back(std::move(z));
  }
  return basis;
}

bool spans_quotient(const std::vector<std::vector<long>>& rows, const std::vector<long>& moduli) {
  std::size_t n = moduli.size();
  std::vector<std::vector<mpz_class>> v;
  for (const auto& row : rows) {
    std::vector<mpz_class> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = row[i];
    v.push_back(z);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<mpz_class> z(n, 0);
    z[i] = moduli[i];
    v.push_back(z);
  }
  // Hermite-style elimination column by column with gcd steps.
  std::size_t top = 0;
  mpz_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    for (;;) {
      std::size_t best = v.size();
      for (std::size_t i = top; i < v.size(); ++i)
        if (v[i][c] != 0 && (best == v.size() || abs(v[i][c]) < abs(v[best][c]))) best = i;
      if (best == v.size()) return false;
      std::swap(v[top], v[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < v.size(); ++i) {
        if (v[i][c] == 0) continue;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), v[i][c].get_mpz_t(), v[top][c].get_mpz_t());
        for (std::size_t j = c; j < n; ++j) v[i][j] -= f * v[top][j];
        if (v[i][c] != 0) done = false;
      }
      if (done) break;
    }
    det *= abs(v[top][c]);
    ++top;
  }
  return det == 1;
}

}  // namespace hcyl
