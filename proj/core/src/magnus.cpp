#include "hcyl/magnus.hpp"

#include <cstdlib>

#include "hcyl/error.hpp"

namespace hcyl {

namespace {

constexpr std::size_t kMaxDense = std::size_t(1) << 24;

}  // namespace

TruncatedSeries TruncatedSeries::one(int variables, int degree) {
  TruncatedSeries s(variables, degree);
  s.terms_[{}] = 1;
  return s;
}

mpz_class TruncatedSeries::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void TruncatedSeries::add(const Monomial& m, const mpz_class& c) {
  if (static_cast<int>(m.size()) > D_ || c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool TruncatedSeries::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

int TruncatedSeries::lowest_degree() const {
  for (const auto& [m, c] : terms_)
    if (!m.empty()) return static_cast<int>(m.size());
  return D_ + 1;
}

TruncatedSeries TruncatedSeries::truncate(int degree) const {
  TruncatedSeries s(b_, degree);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) <= degree) s.terms_.emplace(m, c);
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& c) {
  int D = std::min(a.degree(), c.degree());
  TruncatedSeries out(a.variables(), D);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mc, cc] : c.terms()) {
      if (static_cast<int>(ma.size() + mc.size()) > D) break;  // degree-ordered
      Monomial m = ma;
      m.insert(m.end(), mc.begin(), mc.end());
      out.add(m, ca * cc);
    }
  }
  return out;
}

std::string monomial_name(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (auto v : m) s += "X" + std::to_string(int(v) + 1);
  return s;
}

DenseSeries::DenseSeries(int variables, int degree) : b_(variables), D_(degree) {
  if (degree < 0) throw ValidationError("degree bound must be non-negative");
  pow_.assign(D_ + 1, 1);
  std::size_t total = 1;
  for (int k = 1; k <= D_; ++k) {
    pow_[k] = pow_[k - 1] * static_cast<std::size_t>(b_);
    total += pow_[k];
    if (total > kMaxDense)
      throw ValidationError("Magnus expansion too large: " + std::to_string(b_) + " variables at degree " +
                            std::to_string(D_));
  }
  layers_.resize(D_ + 1);
  for (int k = 0; k <= D_; ++k) layers_[k].assign(pow_[k], mpz_class(0));
}

DenseSeries DenseSeries::one(int variables, int degree) {
  DenseSeries s(variables, degree);
  s.layers_[0][0] = 1;
  return s;
}

void DenseSeries::mul_letter(int letter) {
  std::size_t k = static_cast<std::size_t>(std::abs(letter) - 1);
  if (letter > 0) {
    // S (1 + X)
    for (int len = D_ - 1; len >= 0; --len) {
      auto& src = layers_[len];
      auto& dst = layers_[len + 1];
      for (std::size_t i = 0; i < src.size(); ++i)
        if (sgn(src[i])) dst[i * b_ + k] += src[i];
    }
  } else {
    // S' (1 + X) = S, solved layer by layer
    for (int len = 1; len <= D_; ++len) {
      auto& src = layers_[len - 1];
      auto& dst = layers_[len];
      for (std::size_t i = 0; i < src.size(); ++i)
        if (sgn(src[i])) dst[i * b_ + k] -= src[i];
    }
  }
}

void DenseSeries::mul_letter_left(int letter) {
  std::size_t k = static_cast<std::size_t>(std::abs(letter) - 1);
  if (letter > 0) {
    for (int len = D_ - 1; len >= 0; --len) {
      auto& src = layers_[len];
      auto& dst = layers_[len + 1];
      std::size_t off = k * pow_[len];
      for (std::size_t i = 0; i < src.size(); ++i)
        if (sgn(src[i])) dst[off + i] += src[i];
    }
  } else {
    for (int len = 1; len <= D_; ++len) {
      auto& src = layers_[len - 1];
      auto& dst = layers_[len];
      std::size_t off = k * pow_[len - 1];
      for (std::size_t i = 0; i < src.size(); ++i)
        if (sgn(src[i])) dst[off + i] -= src[i];
    }
  }
}

bool DenseSeries::is_one() const { return lowest_degree() > D_ && layers_[0][0] == 1; }

int DenseSeries::lowest_degree() const {
  for (int k = 1; k <= D_; ++k)
    for (const auto& c : layers_[k])
      if (sgn(c)) return k;
  return D_ + 1;
}

TruncatedSeries DenseSeries::sparse() const {
  TruncatedSeries s(b_, D_);
  for (int len = 0; len <= D_; ++len) {
    for (std::size_t i = 0; i < layers_[len].size(); ++i) {
      if (!sgn(layers_[len][i])) continue;
      Monomial m(len);
      std::size_t x = i;
      for (int p = len - 1; p >= 0; --p) {
        m[p] = static_cast<std::uint8_t>(x % b_);
        x /= b_;
      }
      s.add(m, layers_[len][i]);
    }
  }
  return s;
}

DenseSeries DenseSeries::from_sparse(const TruncatedSeries& s) {
  DenseSeries d(s.variables(), s.degree());
  for (const auto& [m, c] : s.terms()) {
    std::size_t idx = 0;
    for (auto v : m) idx = idx * s.variables() + v;
    d.layers_[m.size()][idx] = c;
  }
  return d;
}

DenseSeries operator*(const DenseSeries& a, const DenseSeries& c) {
  int D = std::min(a.D_, c.D_);
  DenseSeries out(a.b_, D);
  for (int i = 0; i <= D; ++i) {
    const auto& la = a.layers_[i];
    for (int j = 0; i + j <= D; ++j) {
      const auto& lc = c.layers_[j];
      auto& lo = out.layers_[i + j];
      std::size_t shift = out.pow_[j];
      for (std::size_t p = 0; p < la.size(); ++p) {
        if (!sgn(la[p])) continue;
        std::size_t base = p * shift;
        for (std::size_t r = 0; r < lc.size(); ++r)
          if (sgn(lc[r])) lo[base + r] += la[p] * lc[r];
      }
    }
  }
  return out;
}

DenseSeries expand_dense(const Word& w, int D) {
  DenseSeries s = DenseSeries::one(w.basis().rank(), D);
  for (int a : w.letters()) s.mul_letter(a);
  return s;
}

TruncatedSeries expand(const Word& w, int D) {
  if (D < 1) throw ValidationError("expand: degree bound must be >= 1");
  return expand_dense(w, D).sparse();
}

std::optional<int> lcs_weight(const Word& w, int Q) {
  if (Q < 2) throw ValidationError("lcs_weight: cutoff must be >= 2");
  if (w.empty()) return std::nullopt;
  int low = expand_dense(w, Q - 1).lowest_degree();
  if (low >= Q) return std::nullopt;
  return low;
}

int mobius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

mpz_class witt_rank(int q, long m) {
  if (q < 1 || m < 0) throw ValidationError("witt_rank needs q >= 1 and m >= 0");
  mpz_class sum = 0;
  for (int d = 1; d <= q; ++d) {
    if (q % d) continue;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(q / d));
    sum += mobius(d) * t;
  }
  return sum / q;
}

mpz_class rank_window(int q, long m) {
  if (q < 2) throw ValidationError("rank_window needs q >= 2");
  return m * witt_rank(q - 1, m) - witt_rank(q, m);
}

}  // namespace hcyl
