#include "hcyl/words.hpp"

#include <cstdlib>

#include "hcyl/error.hpp"

namespace hcyl {

void SurfaceBasis::check() const {
  if (g < 0 || n < 1)
    throw ValidationError("surface basis needs g >= 0 and n >= 1, got g=" + std::to_string(g) +
                          " n=" + std::to_string(n));
}

std::string SurfaceBasis::name(int letter) const {
  int k = std::abs(letter);
  std::string s;
  if (k <= n - 1)
    s = "x" + std::to_string(k);
  else if (k <= n - 1 + g)
    s = "m" + std::to_string(k - (n - 1));
  else
    s = "l" + std::to_string(k - (n - 1) - g);
  if (letter < 0) s += "^-1";
  return s;
}

void Word::push(int letter) {
  if (!letters_.empty() && letters_.back() == -letter)
    letters_.pop_back();
  else
    letters_.push_back(letter);
}

void Word::append(const Word& w) {
  for (int a : w.letters_) push(a);
}

Word Word::reduce(const std::vector<int>& raw, SurfaceBasis basis) {
  Word w(basis);
  int b = basis.rank();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    int a = raw[i];
    if (a == 0 || std::abs(a) > b)
      throw ValidationError("letter " + std::to_string(a) + " at position " + std::to_string(i) +
                            " is outside the basis range 1.." + std::to_string(b));
    w.push(a);
  }
  return w;
}

Word Word::generator(SurfaceBasis basis, int k) { return reduce({k}, basis); }

Word Word::inverse() const {
  Word w(basis_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::pow(long e) const {
  Word base = e < 0 ? inverse() : *this;
  Word out(basis_);
  for (long i = 0; i < std::labs(e); ++i) out.append(base);
  return out;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += basis_.name(letters_[i]);
  }
  return s;
}

Word operator*(const Word& u, const Word& v) {
  Word w = u;
  w.append(v);
  return w;
}

Word commutator(const Word& u, const Word& v) {
  if (!(u.basis() == v.basis())) throw ValidationError("commutator: basis mismatch");
  Word w = u;
  w.append(v);
  w.append(u.inverse());
  w.append(v.inverse());
  return w;
}

Word boundary_word(SurfaceBasis basis) {
  Word w(basis);
  for (int i = 1; i < basis.n; ++i) w.push(basis.x(i));
  for (int j = 1; j <= basis.g; ++j)
    w.append(commutator(Word::generator(basis, basis.m(j)), Word::generator(basis, basis.l(j))));
  return w;
}

std::vector<long> exponent_sums(const Word& w) {
  std::vector<long> e(w.basis().rank(), 0);
  for (int a : w.letters()) e[std::abs(a) - 1] += a > 0 ? 1 : -1;
  return e;
}

Word substitute(const Word& w, const std::vector<Word>& images, SurfaceBasis target) {
  if (static_cast<int>(images.size()) != w.basis().rank())
    throw ValidationError("substitute: expected " + std::to_string(w.basis().rank()) + " images");
  std::vector<Word> inv;
  inv.reserve(images.size());
  for (const auto& im : images) inv.push_back(im.inverse());
  Word out(target);
  for (int a : w.letters()) out.append(a > 0 ? images[a - 1] : inv[-a - 1]);
  return out;
}

}  // namespace hcyl
