#include "hcyl/lyndon.hpp"

#include <mutex>
#include <tuple>

#include "hcyl/error.hpp"
#include "hcyl/magnus.hpp"

namespace hcyl {

std::vector<std::vector<int>> lyndon_words(int b, int n) {
  std::vector<std::vector<int>> out;
  if (b <= 0 || n <= 0) return out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (static_cast<int>(w.size()) == n) out.push_back(w);
    std::size_t m = w.size();
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == b - 1) w.pop_back();
  }
  return out;
}

bool is_lyndon(const std::vector<int>& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!(w < std::vector<int>(w.begin() + i, w.end()))) return false;
  return true;
}

std::size_t standard_split(const std::vector<int>& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (is_lyndon(std::vector<int>(w.begin() + i, w.end()))) return i;
  return w.size();
}

namespace {

Word bracket(const std::vector<int>& w, SurfaceBasis basis) {
  if (w.size() == 1) return Word::generator(basis, w[0] + 1);
  std::size_t s = standard_split(w);
  return commutator(bracket({w.begin(), w.begin() + s}, basis), bracket({w.begin() + s, w.end()}, basis));
}

}  // namespace

LyndonCommutators::LyndonCommutators(SurfaceBasis basis, int max_len) {
  int b = basis.rank();
  by_len_.resize(max_len + 1);
  lookup_.resize(max_len + 1);
  for (int k = 1; k <= max_len; ++k) {
    for (auto& w : lyndon_words(b, k)) {
      Entry e;
      e.word = w;
      e.index = 0;
      for (int v : w) e.index = e.index * b + v;
      e.group = bracket(w, basis);
      e.lead = expand_dense(e.group, k).layer(k);
      if (e.lead[e.index] != 1) throw Error("Lyndon bracket leading coefficient is not 1");
      lookup_[k][e.index] = by_len_[k].size();
      by_len_[k].push_back(std::move(e));
    }
  }
}

const LyndonCommutators::Entry* LyndonCommutators::find(int k, std::size_t index) const {
  auto it = lookup_[k].find(index);
  return it == lookup_[k].end() ? nullptr : &by_len_[k][it->second];
}

std::shared_ptr<const LyndonCommutators> LyndonCommutators::get(SurfaceBasis basis, int max_len) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const LyndonCommutators>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(basis.g, basis.n, max_len);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const LyndonCommutators> p(new LyndonCommutators(basis, max_len));
  cache.emplace(key, p);
  return p;
}

Word nil_normal_form(const Word& w, int q) {
  if (q < 2) throw ValidationError("nil_normal_form: level must be >= 2");
  if (w.basis().rank() == 0) return Word(w.basis());
  return nil_normal_form(expand_dense(w, q - 1), w.basis(), q);
}

Word nil_normal_form(DenseSeries R, SurfaceBasis basis, int q) {
  if (q < 2) throw ValidationError("nil_normal_form: level must be >= 2");
  if (basis.rank() == 0) return Word(basis);
  int D = q - 1;
  if (R.degree() < D) throw ValidationError("nil_normal_form: expansion too shallow");
  auto lc = LyndonCommutators::get(basis, D);
  // invariant: R = M(u)^{-1} M(w)
  Word u(basis);
  for (int k = 1; k <= D; ++k) {
    for (;;) {
      const auto& layer = R.layer(k);
      std::size_t idx = 0;
      while (idx < layer.size() && !sgn(layer[idx])) ++idx;
      if (idx == layer.size()) break;
      const auto* e = lc->find(k, idx);
      if (!e) throw Error("nil_normal_form: leading monomial is not Lyndon");
      long c = layer[idx].get_si();
      if (!layer[idx].fits_slong_p()) throw Error("nil_normal_form: coefficient overflow");
      u.append(e->group.pow(c));
      Word left = e->group.pow(-c);
      for (auto it = left.letters().rbegin(); it != left.letters().rend(); ++it) R.mul_letter_left(*it);
    }
  }
  return u;
}

}  // namespace hcyl
