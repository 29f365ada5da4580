#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace hcyl {

// Generators are numbered 1..b in the order x_1..x_{n-1}, m_1..m_g, l_1..l_g.
struct SurfaceBasis {
  int g = 0;
  int n = 1;

  int rank() const { return 2 * g + n - 1; }
  int x(int i) const { return i; }              // 1 <= i < n
  int m(int j) const { return n - 1 + j; }      // 1 <= j <= g
  int l(int j) const { return n - 1 + g + j; }  // 1 <= j <= g
  std::string name(int letter) const;
  void check() const;

  bool operator==(const SurfaceBasis&) const = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(SurfaceBasis basis) : basis_(basis) {}

  // Free reduction of an arbitrary letter sequence; rejects letters out of range.
  static Word reduce(const std::vector<int>& raw, SurfaceBasis basis);
  static Word generator(SurfaceBasis basis, int k);

  const std::vector<int>& letters() const { return letters_; }
  const SurfaceBasis& basis() const { return basis_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(long e) const;
  // Right multiplication by a single letter, with cancellation.
  void push(int letter);
  void append(const Word& w);

  std::string str() const;

  bool operator==(const Word& o) const { return basis_ == o.basis_ && letters_ == o.letters_; }
  auto operator<=>(const Word& o) const { return letters_ <=> o.letters_; }

 private:
  SurfaceBasis basis_;
  std::vector<int> letters_;
};

Word operator*(const Word& u, const Word& v);
Word commutator(const Word& u, const Word& v);
Word boundary_word(SurfaceBasis basis);

// Exponent sum of each generator; entry k-1 belongs to generator k.
std::vector<long> exponent_sums(const Word& w);

// Replaces letter k by images[k-1] (inverse letters by inverse images).
// The result lives over the basis of the images, or `target` when images is empty.
Word substitute(const Word& w, const std::vector<Word>& images, SurfaceBasis target);
inline Word substitute(const Word& w, const std::vector<Word>& images) {
  return substitute(w, images, images.empty() ? w.basis() : images.front().basis());
}

}  // namespace hcyl
