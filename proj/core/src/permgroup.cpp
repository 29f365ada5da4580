#include "hcyl/permgroup.hpp"

#include <deque>

#include "hcyl/error.hpp"

namespace hcyl {

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm perm_inv(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

bool perm_is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<int>(i)) return false;
  return true;
}

Perm perm_commutator(const Perm& a, const Perm& b) {
  return perm_mul(perm_mul(perm_inv(a), perm_inv(b)), perm_mul(a, b));
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators) : n_(degree) {
  for (auto& g : generators) {
    if (static_cast<int>(g.size()) != n_) throw ValidationError("permutation of the wrong degree");
    if (!perm_is_identity(g)) gens_.push_back(std::move(g));
  }
  build();
}

void PermGroup::orbit_of(Level& L) const {
  L.orbit.assign(1, L.point);
  L.transversal.assign(n_, Perm());
  L.transversal[L.point] = perm_identity(n_);
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    int beta = L.orbit[k];
    for (const auto& s : L.strong) {
      int img = s[beta];
      if (L.transversal[img].empty()) {
        L.transversal[img] = perm_mul(L.transversal[beta], s);
        L.orbit.push_back(img);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const auto& L = levels_[i];
    int img = g[L.point];
    if (L.transversal[img].empty()) return {g, i};
    g = perm_mul(g, perm_inv(L.transversal[img]));
  }
  return {g, levels_.size()};
}

void PermGroup::add_strong(const Perm& g, std::size_t upto) {
  if (upto == levels_.size()) {
    int moved = 0;
    while (g[moved] == moved) ++moved;
    levels_.push_back(Level{moved, {}, {}, {}});
    base_.push_back(moved);
  }
  for (std::size_t i = 0; i <= upto; ++i) levels_[i].strong.push_back(g);
}

void PermGroup::build() {
  for (const auto& g : gens_) {
    auto [res, lvl] = sift(g, 0);
    if (!perm_is_identity(res)) {
      add_strong(res, lvl);
      for (std::size_t i = 0; i <= lvl && i < levels_.size(); ++i) orbit_of(levels_[i]);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = levels_.size(); i-- > 0 && !changed;) {
      auto& L = levels_[i];
      orbit_of(L);
      for (std::size_t k = 0; k < L.orbit.size() && !changed; ++k) {
        int beta = L.orbit[k];
        for (const auto& s : L.strong) {
          int img = s[beta];
          Perm h = perm_mul(perm_mul(L.transversal[beta], s), perm_inv(L.transversal[img]));
          if (perm_is_identity(h)) continue;
          auto [res, lvl] = sift(h, i + 1);
          if (!perm_is_identity(res)) {
            add_strong(res, lvl);
            for (std::size_t j = i + 1; j < levels_.size(); ++j) orbit_of(levels_[j]);
            changed = true;
            break;
          }
        }
      }
    }
  }
}

bool PermGroup::contains(const Perm& g) const {
  if (static_cast<int>(g.size()) != n_) return false;
  return perm_is_identity(sift(g, 0).first);
}

mpz_class PermGroup::order() const {
  mpz_class o = 1;
  for (const auto& L : levels_) o *= static_cast<unsigned long>(L.orbit.size());
  return o;
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& S) {
  std::vector<Perm> gens;
  PermGroup N(G.degree(), {});
  std::deque<Perm> todo(S.begin(), S.end());
  while (!todo.empty()) {
    Perm s = todo.front();
    todo.pop_front();
    if (N.contains(s)) continue;
    gens.push_back(s);
    N = PermGroup(G.degree(), gens);
    for (const auto& g : G.generators()) todo.push_back(perm_mul(perm_mul(perm_inv(g), s), g));
  }
  return N;
}

std::vector<PermGroup> lower_central_series(const PermGroup& G, int max_terms) {
  std::vector<PermGroup> out{G};
  while (static_cast<int>(out.size()) < max_terms && !out.back().trivial()) {
    std::vector<Perm> S;
    for (const auto& a : out.back().generators())
      for (const auto& g : G.generators()) S.push_back(perm_commutator(a, g));
    out.push_back(normal_closure(G, S));
  }
  return out;
}

}  // namespace hcyl
