#include "hcyl/cylinder.hpp"

#include <set>

#include "hcyl/error.hpp"
#include "hcyl/lyndon.hpp"
#include "hcyl/magnus.hpp"

namespace hcyl {

namespace {

Word gen(SurfaceBasis b, int k) { return Word::generator(b, k); }

Word normalized(const Word& w, int depth) { return depth > 0 ? nil_normal_form(w, depth) : w; }

void check_tuple(SurfaceBasis basis, const std::vector<Word>& t, const char* what) {
  if (static_cast<int>(t.size()) != basis.rank())
    throw ValidationError(std::string(what) + ": expected " + std::to_string(basis.rank()) + " words");
  for (const auto& w : t)
    if (!(w.basis() == basis)) throw ValidationError(std::string(what) + ": word over a different basis");
}

// First level at which w is nontrivial, or nullopt when trivial through Q.
std::optional<int> failing_level(const Word& w, int Q) {
  auto wt = lcs_weight(w, Q);
  if (!wt) return std::nullopt;
  return *wt + 1;
}

}  // namespace

std::vector<Word> derived_images(SurfaceBasis basis, const std::vector<Word>& milnor) {
  check_tuple(basis, milnor, "derived_images");
  std::vector<Word> im;
  for (int k = 1; k <= basis.rank(); ++k) {
    const Word& z = milnor[k - 1];
    if (k < basis.n)
      im.push_back(z.inverse() * gen(basis, k) * z);
    else
      im.push_back(z.inverse() * gen(basis, k));
  }
  return im;
}

std::optional<Violation> validate(const CylinderClass& M, int Q) {
  int Qe = M.usable(Q);
  auto der = derived_images(M.basis, M.milnor);
  for (int k = 1; k <= M.basis.rank(); ++k) {
    Word res = M.aut.images[k - 1].inverse() * der[k - 1];
    if (auto lv = failing_level(res, Qe)) return Violation{"generator", k, *lv, res};
  }
  Word res = M.boundary.inverse() * aut_apply(M.aut, M.boundary);
  if (auto lv = failing_level(res, Qe)) return Violation{"boundary", 0, *lv, res};
  return std::nullopt;
}

CylinderClass identity_class(SurfaceBasis basis) {
  basis.check();
  return CylinderClass{basis, std::vector<Word>(basis.rank(), Word(basis)),
                       NilAutomorphism::identity(basis), boundary_word(basis)};
}

CylinderClass from_milnor(SurfaceBasis basis, std::vector<Word> milnor, int depth, Word boundary) {
  basis.check();
  check_tuple(basis, milnor, "from_milnor");
  for (auto& w : milnor) w = normalized(w, depth);
  NilAutomorphism aut{basis, depth, derived_images(basis, milnor)};
  for (auto& w : aut.images) w = normalized(w, depth);
  return CylinderClass{basis, std::move(milnor), std::move(aut), std::move(boundary)};
}

CylinderClass from_milnor(SurfaceBasis basis, std::vector<Word> milnor, int depth) {
  return from_milnor(basis, std::move(milnor), depth, boundary_word(basis));
}

CylinderClass from_data(SurfaceBasis basis, std::vector<Word> milnor, std::vector<Word> aut_images,
                        int Q, int depth) {
  basis.check();
  check_tuple(basis, milnor, "from_data milnor");
  check_tuple(basis, aut_images, "from_data aut");
  CylinderClass M{basis, std::move(milnor), NilAutomorphism{basis, depth, std::move(aut_images)},
                  boundary_word(basis)};
  if (!inverse_unimodular(abelianization(M.aut)))
    throw ValidationError("from_data: abelianization not invertible over Z");
  if (auto v = validate(M, Q)) {
    std::string where = v->what == "generator" ? basis.name(v->index) : std::string("boundary");
    throw ValidationError("from_data: " + where + " relation fails at level " + std::to_string(v->level) +
                          ", residual " + v->residual.str());
  }
  return M;
}

CylinderClass compose(const CylinderClass& M, const CylinderClass& N) {
  if (!(M.basis == N.basis)) throw ValidationError("compose: basis mismatch");
  CylinderClass R;
  R.basis = M.basis;
  int d = meet_level(M.depth(), N.depth());
  if (d == 0) {
    R.aut = aut_compose(M.aut, N.aut);
    for (int k = 0; k < M.basis.rank(); ++k) R.milnor.push_back(M.milnor[k] * aut_apply(M.aut, N.milnor[k]));
  } else {
    ImageExpander E(M.aut, d - 1);
    R.aut = NilAutomorphism{M.basis, d, {}};
    for (const auto& im : N.aut.images) R.aut.images.push_back(nil_normal_form(E(im), M.basis, d));
    for (int k = 0; k < M.basis.rank(); ++k)
      R.milnor.push_back(nil_normal_form(E(expand_dense(M.milnor[k], d - 1), N.milnor[k]), M.basis, d));
  }
  R.boundary = M.boundary;
  return R;
}

CylinderClass invert(const CylinderClass& M, int q) {
  int d = M.depth() > 0 && M.depth() < q ? M.depth() : q;
  CylinderClass R;
  R.basis = M.basis;
  R.aut = aut_invert(M.aut, d);
  R.aut.q = d;
  for (const auto& z : M.milnor) R.milnor.push_back(nil_apply(R.aut, z.inverse(), d));
  R.boundary = M.boundary;
  return R;
}

bool milnor_trivial(const CylinderClass& M, int q) {
  for (const auto& z : M.milnor)
    if (!nil_trivial(z, q)) return false;
  return true;
}

bool class_equal(const CylinderClass& M, const CylinderClass& N, int q) {
  if (!(M.basis == N.basis)) return false;
  for (std::size_t k = 0; k < M.milnor.size(); ++k)
    if (!nil_eq(M.milnor[k], N.milnor[k], q)) return false;
  return aut_equal(M.aut, N.aut, q);
}

Word p_relation_word(const CylinderClass& M) {
  const auto& B = M.basis;
  Word w(B);
  for (int i = 1; i < B.n; ++i) w.append(commutator(gen(B, B.x(i)), M.milnor[B.x(i) - 1]));
  for (int j = 1; j <= B.g; ++j) {
    const Word& u = M.milnor[B.m(j) - 1];
    const Word& v = M.milnor[B.l(j) - 1];
    w.append(commutator(gen(B, B.l(j)), u));
    w.append(commutator(u, v));
    w.append(commutator(v, gen(B, B.m(j))));
  }
  return w;
}

FiltrationReport filtration_report(const CylinderClass& M, int Q) {
  if (Q < 2) throw ValidationError("filtration_report: cutoff must be at least 2");
  FiltrationReport rep;
  const auto& B = M.basis;
  bool prev_H = true;  // H(1) is everything
  Word pw = p_relation_word(M);
  for (int q = 2; q <= M.usable(Q); ++q) {
    FiltrationLevel L;
    L.q = q;
    L.in_H = milnor_trivial(M, q);
    L.in_Hb = aut_is_identity(M.aut, q);
    bool x2 = true;
    for (int i = 1; i < B.n; ++i) x2 = x2 && nil_trivial(M.milnor[B.x(i) - 1], 2);
    L.in_H0 = L.in_Hb && x2;
    if (prev_H && (M.depth() == 0 || q + 1 <= M.depth())) {
      L.p_checked = true;
      L.p_weight = lcs_weight(pw, q + 1);
      L.p_ok = !L.p_weight.has_value();
    }
    if (L.in_H && !L.in_H0) {
      rep.chain_ok = false;
      rep.violation += "H(" + std::to_string(q) + ") not in H0[" + std::to_string(q) + "]; ";
    }
    if (L.in_H0 && !prev_H) {
      rep.chain_ok = false;
      rep.violation += "H0[" + std::to_string(q) + "] not in H(" + std::to_string(q - 1) + "); ";
    }
    prev_H = L.in_H;
    rep.levels.push_back(L);
  }
  return rep;
}

std::vector<Word> transport_substitution(SurfaceBasis B) {
  if (B.n < 2) throw ValidationError("transport needs a second boundary component");
  std::vector<Word> im;
  for (int k = 1; k <= B.rank(); ++k) im.push_back(gen(B, k));
  Word rest(B);
  for (int i = 2; i < B.n; ++i) rest.append(gen(B, B.x(i)));
  for (int j = 1; j <= B.g; ++j) rest.append(commutator(gen(B, B.m(j)), gen(B, B.l(j))));
  im[0] = gen(B, 1) * rest.inverse();
  return im;
}

BasisChangeResult change_basis(const CylinderClass& M, const BasisChange& ch) {
  const auto& B = M.basis;
  int b = B.rank();
  using K = BasisChange::Kind;

  if (ch.kind == K::same_component) return {M.milnor, M};

  if (ch.kind == K::other_component) {
    auto phi = transport_substitution(B);
    const Word& z1 = M.milnor[0];
    std::vector<Word> pre(b, Word(B));
    pre[0] = z1;
    for (int i = 2; i < B.n; ++i) pre[B.x(i) - 1] = M.milnor[B.x(i) - 1] * z1.inverse();
    for (int j = 1; j <= B.g; ++j) {
      Word m = gen(B, B.m(j)), l = gen(B, B.l(j));
      pre[B.m(j) - 1] = m * z1 * m.inverse() * M.milnor[B.m(j) - 1] * z1.inverse();
      pre[B.l(j) - 1] = l * z1 * l.inverse() * M.milnor[B.l(j) - 1] * z1.inverse();
    }
    std::vector<Word> out;
    for (const auto& w : pre) out.push_back(substitute(w, phi, B));
    Word bd = phi[0];
    return {pre, from_milnor(B, out, M.depth(), bd)};
  }

  if (static_cast<int>(ch.gamma.size()) != b) throw ValidationError("change_basis: need one comparison word per generator");
  for (const auto& w : ch.gamma)
    if (!(w.basis() == B)) throw ValidationError("change_basis: comparison word over a different basis");
  std::vector<int> signs = ch.signs;
  if (signs.empty()) signs.assign(B.n - 1, 1);
  if (static_cast<int>(signs.size()) != B.n - 1) throw ValidationError("change_basis: one sign per x_i");
  for (int s : signs)
    if (s != 1 && s != -1) throw ValidationError("change_basis: signs must be +-1");

  auto eta = derived_images(B, M.milnor);
  std::vector<Word> coords;
  std::vector<Word> sigma;  // new generator -> old word
  bool trivial = true;
  for (int k = 1; k <= b; ++k) {
    const Word& g = ch.gamma[k - 1];
    coords.push_back(g.inverse() * M.milnor[k - 1] * substitute(g, eta, B));
    if (k < B.n) {
      sigma.push_back(g.inverse() * gen(B, k).pow(signs[k - 1]) * g);
      trivial = trivial && g.empty() && signs[k - 1] == 1;
    } else {
      sigma.push_back(g.inverse() * gen(B, k));
      trivial = trivial && g.empty();
    }
  }
  if (trivial) return {coords, from_milnor(B, coords, M.depth(), M.boundary)};

  NilAutomorphism s{B, 0, sigma};
  if (!inverse_unimodular(abelianization(s)))
    throw ValidationError("change_basis: new words do not generate F");
  int Q = M.depth() > 0 && M.depth() < ch.Q ? M.depth() : ch.Q;
  auto rho = aut_invert(s, Q);
  std::vector<Word> out;
  for (const auto& w : coords) out.push_back(substitute(w, rho.images, B));
  Word bd = nil_normal_form(substitute(M.boundary, rho.images, B), Q);
  return {coords, from_milnor(B, out, Q, bd)};
}

void EmbeddingSpec::check() const {
  source.check();
  target.check();
  if (source.g > target.g || source.g + source.n > target.g + target.n)
    throw ValidationError("embedding: need g <= g' and g + n <= g' + n'");
  if (static_cast<int>(iota.size()) != source.rank()) throw ValidationError("embedding: one image per source generator");
  for (const auto& w : iota)
    if (!(w.basis() == target)) throw ValidationError("embedding: images must be target words");
  std::set<int> src, dst;
  auto take = [&](std::set<int>& s, int k, int lim) {
    if (k < 1 || k > lim || !s.insert(k).second) throw ValidationError("embedding: generator bookkeeping is inconsistent");
  };
  for (const auto& p : pieces) {
    std::size_t xs = p.has_basepoint ? p.a - 1 : p.a;
    std::size_t xd = p.has_basepoint ? p.n - 1 : p.n;
    std::size_t md = p.has_basepoint && p.a == 1 ? p.g : p.g + p.a - 1;
    if (p.a < 1 || p.x_src.size() != xs || p.x_dst.size() != xd || p.m_dst.size() != md || p.l_dst.size() != md)
      throw ValidationError("embedding: piece sizes disagree with (g_r, a_r, n_r)");
    for (int k : p.x_src) take(src, k, source.rank());
    for (int k : p.x_dst) take(dst, k, target.rank());
    for (int k : p.m_dst) take(dst, k, target.rank());
    for (int k : p.l_dst) take(dst, k, target.rank());
  }
  for (auto [s, t] : y) {
    take(src, s, source.rank());
    take(dst, t, target.rank());
  }
  if (static_cast<int>(src.size()) != source.rank() || static_cast<int>(dst.size()) != target.rank())
    throw ValidationError("embedding: every generator must be accounted for exactly once");
}

CylinderClass embed_pushforward(const CylinderClass& M, const EmbeddingSpec& spec) {
  spec.check();
  if (!(M.basis == spec.source)) throw ValidationError("embedding: class lives over a different basis");
  const auto& T = spec.target;
  auto iota = [&](const Word& w) { return substitute(w, spec.iota, T); };
  std::vector<Word> out(T.rank(), Word(T));

  for (const auto& p : spec.pieces) {
    std::vector<Word> Z;
    for (int k : p.x_src) Z.push_back(iota(M.milnor[k - 1]));
    if (p.has_basepoint && p.a == 1) continue;  // every coordinate stays 1
    for (int k : p.x_dst) out[k - 1] = Z[0];
    for (int j = 0; j < p.g; ++j) {
      out[p.m_dst[j] - 1] = commutator(gen(T, p.m_dst[j]), Z[0].inverse());
      out[p.l_dst[j] - 1] = commutator(gen(T, p.l_dst[j]), Z[0].inverse());
    }
    for (int k = 1; k <= p.a - 1; ++k) {
      int mk = p.m_dst[p.g + k - 1], lk = p.l_dst[p.g + k - 1];
      out[mk - 1] = commutator(gen(T, mk), Z[k - 1].inverse());
      if (p.has_basepoint) {
        out[lk - 1] = Z[k - 1];
      } else {
        Word l = gen(T, lk);
        out[lk - 1] = l * Z[k].inverse() * l.inverse() * Z[k - 1];
      }
    }
  }
  for (auto [s, t] : spec.y) out[t - 1] = iota(M.milnor[s - 1]);
  return from_milnor(T, out, M.depth(), spec.target_boundary ? *spec.target_boundary : boundary_word(T));
}

EmbeddingSpec annulus_into_pants(bool basepoint_piece) {
  SurfaceBasis S{0, 2}, T{0, 3};
  EmbeddingSpec e{S, T, {}, {}, {}, std::nullopt};
  if (basepoint_piece) {
    e.iota = {gen(T, 1)};
    e.pieces.push_back(EmbeddingPiece{0, 1, 2, true, {}, {2}, {}, {}});
    e.y = {{1, 1}};
  } else {
    e.iota = {gen(T, 1) * gen(T, 2)};
    e.pieces.push_back(EmbeddingPiece{0, 1, 2, false, {1}, {1, 2}, {}, {}});
  }
  return e;
}

EmbeddingSpec handle_into_two_boundaries() {
  SurfaceBasis S{1, 1}, T{1, 2};
  EmbeddingSpec e{S, T, {gen(T, 2), gen(T, 3)}, {}, {{1, 2}, {2, 3}}, std::nullopt};
  e.pieces.push_back(EmbeddingPiece{0, 1, 2, true, {}, {1}, {}, {}});
  return e;
}

}  // namespace hcyl
