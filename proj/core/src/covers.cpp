#include "hcyl/covers.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "hcyl/error.hpp"
#include "hcyl/intmat.hpp"

namespace hcyl {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

bool power_of(long v, long p) {
  if (v < p) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

// BFS transversal and Schreier generators from the action tables.
void finish_level(CosetLevel& L, SurfaceBasis B) {
  int b = B.rank();
  L.inverse_action.clear();
  for (const auto& a : L.action) L.inverse_action.push_back(perm_inv(a));
  L.transversal.assign(L.cosets, Word(B));
  std::vector<bool> seen(L.cosets, false);
  std::vector<std::vector<bool>> tree(L.cosets, std::vector<bool>(b, false));
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int k = 1; k <= b; ++k) {
      int fwd = L.action[k - 1][c];
      if (!seen[fwd]) {
        seen[fwd] = true;
        tree[c][k - 1] = true;
        L.transversal[fwd] = L.transversal[c] * Word::generator(B, k);
        queue.push_back(fwd);
      }
      int bwd = L.inverse_action[k - 1][c];
      if (!seen[bwd]) {
        seen[bwd] = true;
        tree[bwd][k - 1] = true;
        L.transversal[bwd] = L.transversal[c] * Word::generator(B, k).inverse();
        queue.push_back(bwd);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw ValidationError("cover is disconnected: coset action is not transitive");
  L.schreier_index.assign(L.cosets, std::vector<int>(b, -1));
  L.schreier_words.clear();
  for (int c = 0; c < L.cosets; ++c)
    for (int k = 1; k <= b; ++k) {
      if (tree[c][k - 1]) continue;
      L.schreier_index[c][k - 1] = static_cast<int>(L.schreier_words.size());
      L.schreier_words.push_back(L.transversal[c] * Word::generator(B, k) *
                                 L.transversal[L.action[k - 1][c]].inverse());
    }
}

}  // namespace

long Character::group_order() const {
  long o = 1;
  for (long a : orders) o *= a;
  return o;
}

bool Character::surjective() const {
  for (const auto& v : values)
    if (v.size() != orders.size()) return false;
  return spans_quotient(values, orders);
}

int CosetLevel::act(int c, const Word& w) const {
  for (int a : w.letters()) c = a > 0 ? action[a - 1][c] : inverse_action[-a - 1][c];
  return c;
}

std::vector<long> CosetLevel::rewrite(int c, const Word& w) const {
  std::vector<long> e(schreier_words.size(), 0);
  for (int a : w.letters()) {
    if (a > 0) {
      int s = schreier_index[c][a - 1];
      if (s >= 0) ++e[s];
      c = action[a - 1][c];
    } else {
      int prev = inverse_action[-a - 1][c];
      int s = schreier_index[prev][-a - 1];
      if (s >= 0) --e[s];
      c = prev;
    }
  }
  return e;
}

long PStructure::phi_value(const std::vector<long>& ex) const {
  const auto& ph = phi();
  long v = 0, D = d();
  for (std::size_t s = 0; s < ex.size(); ++s) v = mod(v + mod(ex[s], D) * ph.values[s][0], D);
  return v;
}

CosetLevel base_level(SurfaceBasis B) {
  CosetLevel L;
  L.cosets = 1;
  for (int k = 0; k < B.rank(); ++k) L.action.push_back(perm_identity(1));
  finish_level(L, B);
  return L;
}

CosetLevel next_level(SurfaceBasis B, const CosetLevel& L, const Character& chi) {
  if (static_cast<int>(chi.values.size()) != L.rank())
    throw ValidationError("character needs one value per Schreier generator (" + std::to_string(L.rank()) + ")");
  if (!chi.surjective()) throw ValidationError("character is not surjective");
  long A = chi.group_order();
  std::size_t r = chi.orders.size();
  auto decode = [&](long a) {
    std::vector<long> v(r);
    for (std::size_t i = r; i-- > 0;) {
      v[i] = a % chi.orders[i];
      a /= chi.orders[i];
    }
    return v;
  };
  auto encode = [&](const std::vector<long>& v) {
    long a = 0;
    for (std::size_t i = 0; i < r; ++i) a = a * chi.orders[i] + mod(v[i], chi.orders[i]);
    return a;
  };
  CosetLevel N;
  N.cosets = static_cast<int>(L.cosets * A);
  for (int k = 1; k <= B.rank(); ++k) {
    Perm p(N.cosets);
    for (int c = 0; c < L.cosets; ++c)
      for (long a = 0; a < A; ++a) {
        auto v = decode(a);
        int s = L.schreier_index[c][k - 1];
        if (s >= 0)
          for (std::size_t i = 0; i < r; ++i) v[i] += chi.values[s][i];
        p[c * A + a] = static_cast<int>(L.action[k - 1][c] * A + encode(v));
      }
    N.action.push_back(std::move(p));
  }
  finish_level(N, B);
  return N;
}

PStructure tower_build(SurfaceBasis B, long p, std::vector<Character> chars) {
  B.check();
  if (p < 2) throw ValidationError("tower: p must be a prime");
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) throw ValidationError("tower: p must be a prime");
  if (chars.empty()) throw ValidationError("tower: need at least the top character");
  for (const auto& c : chars)
    for (long o : c.orders)
      if (!power_of(o, p)) throw ValidationError("tower: character order " + std::to_string(o) + " is not a power of p");
  if (chars.back().orders.size() != 1) throw ValidationError("tower: top character must be cyclic");
  PStructure T{B, p, std::move(chars), {base_level(B)}};
  for (const auto& c : T.chars) T.levels.push_back(next_level(B, T.levels.back(), c));
  return T;
}

PStructure tower_extend(const PStructure& T, Character phi) {
  if (phi.orders.size() != 1) throw ValidationError("tower: top character must be cyclic");
  if (!power_of(phi.orders[0], T.p)) throw ValidationError("tower: wrong prime");
  PStructure R = T;
  R.chars.push_back(phi);
  R.levels.push_back(next_level(T.basis, T.levels.back(), phi));
  return R;
}

std::optional<int> tower_order(const PStructure& T, int Q) {
  const auto& top = T.levels.back();
  PermGroup G(top.cosets, top.action);
  auto lcs = lower_central_series(G, Q);
  for (int q = 2; q <= static_cast<int>(lcs.size()); ++q)
    if (lcs[q - 1].trivial()) return q;
  return std::nullopt;
}

std::optional<int> tower_order_by_commutators(const PStructure& T, int Q) {
  const auto& top = T.levels.back();
  std::vector<Perm> layer = top.action;  // weight 1
  for (int q = 2; q <= Q; ++q) {
    std::vector<Perm> next;
    for (const auto& c : layer)
      for (const auto& g : top.action) next.push_back(perm_commutator(c, g));
    layer = std::move(next);
    bool all = std::all_of(layer.begin(), layer.end(), perm_is_identity);
    if (all) return q;
  }
  return std::nullopt;
}

LiftData lift_loop(const PStructure& T, const Word& alpha) {
  const auto& L = T.levels[T.height()];
  LiftData out;
  out.index = L.cosets;
  std::vector<int> img(L.cosets);
  for (int c = 0; c < L.cosets; ++c) img[c] = L.act(c, alpha);
  std::vector<bool> seen(L.cosets, false);
  for (int c = 0; c < L.cosets; ++c) {
    if (seen[c]) continue;
    int r = 0;
    for (int x = c; !seen[x]; x = img[x]) {
      seen[x] = true;
      ++r;
    }
    out.lifts.push_back(Lift{r, T.phi_value(L.rewrite(c, alpha.pow(r))), c});
  }
  return out;
}

std::string to_string(C5Status s) {
  switch (s) {
    case C5Status::pass: return "pass";
    case C5Status::fail: return "fail";
    default: return "not-in-subgroup";
  }
}

std::vector<C5Status> check_c5(const PStructure& T, const CylinderClass& M, int t, int s) {
  if (t < 0 || t >= static_cast<int>(T.levels.size())) throw ValidationError("check_c5: no such level");
  if (!(M.basis == T.basis)) throw ValidationError("check_c5: basis mismatch");
  const auto& L = T.levels[t];
  long ps = 1;
  for (int i = 0; i < s; ++i) ps *= T.p;
  std::vector<C5Status> out;
  for (const auto& z : M.milnor) {
    if (L.act(0, z) != 0) {
      out.push_back(C5Status::not_in_subgroup);
      continue;
    }
    auto e = L.rewrite(0, z);
    bool zero = std::all_of(e.begin(), e.end(), [&](long v) { return v % ps == 0; });
    out.push_back(zero ? C5Status::pass : C5Status::fail);
  }
  return out;
}

Character mod_p_abelianization(const CosetLevel& L, long p) {
  Character c;
  int r = L.rank();
  c.orders.assign(r, p);
  for (int k = 0; k < r; ++k) {
    std::vector<long> v(r, 0);
    v[k] = 1;
    c.values.push_back(v);
  }
  return c;
}

Character cyclic_character(long d, std::vector<long> values) {
  Character c;
  c.orders = {d};
  for (long v : values) c.values.push_back({mod(v, d)});
  return c;
}

}  // namespace hcyl
