#include "hcyl/samples.hpp"

#include "hcyl/error.hpp"
#include "hcyl/intmat.hpp"
#include "hcyl/lyndon.hpp"

namespace hcyl {

namespace {

Word gen(SurfaceBasis b, int k) { return Word::generator(b, k); }

std::vector<Word> boundary_factors(SurfaceBasis B) {
  std::vector<Word> f;
  for (int i = 1; i < B.n; ++i) f.push_back(gen(B, B.x(i)));
  for (int j = 1; j <= B.g; ++j) f.push_back(commutator(gen(B, B.m(j)), gen(B, B.l(j))));
  return f;
}

// Coordinates of an automorphism whose x-images are given conjugates.
CylinderClass from_aut(SurfaceBasis B, std::vector<Word> images, const std::vector<Word>& xconj) {
  std::vector<Word> mu;
  for (int i = 1; i < B.n; ++i) mu.push_back(xconj[i - 1]);
  for (int k = B.n; k <= B.rank(); ++k) mu.push_back(gen(B, k) * images[k - 1].inverse());
  return CylinderClass{B, std::move(mu), NilAutomorphism{B, 0, std::move(images)}, boundary_word(B)};
}

}  // namespace

CylinderClass framing(SurfaceBasis B, int i, long k) {
  if (i < 1 || i >= B.n) throw ValidationError("framing: no such boundary generator");
  auto M = identity_class(B);
  M.milnor[B.x(i) - 1] = gen(B, B.x(i)).pow(k);
  return M;
}

CylinderClass block_twist(SurfaceBasis B, int s, int t, int e) {
  auto f = boundary_factors(B);
  if (s < 1 || t > static_cast<int>(f.size()) || s > t) throw ValidationError("block_twist: bad factor range");
  Word P(B);
  std::vector<bool> inside(B.rank() + 1, false);
  for (int r = s; r <= t; ++r) {
    P.append(f[r - 1]);
    if (r < B.n) {
      inside[B.x(r)] = true;
    } else {
      int j = r - B.n + 1;
      inside[B.m(j)] = inside[B.l(j)] = true;
    }
  }
  Word Pe = P.pow(e);
  std::vector<Word> im, xc;
  for (int k = 1; k <= B.rank(); ++k) im.push_back(inside[k] ? Pe * gen(B, k) * Pe.inverse() : gen(B, k));
  for (int i = 1; i < B.n; ++i) xc.push_back(inside[B.x(i)] ? Pe.inverse() : Word(B));
  return from_aut(B, std::move(im), xc);
}

CylinderClass handle_twist(SurfaceBasis B, int j, int kind, int e) {
  if (j < 1 || j > B.g) throw ValidationError("handle_twist: no such handle");
  std::vector<Word> im;
  for (int k = 1; k <= B.rank(); ++k) im.push_back(gen(B, k));
  Word m = gen(B, B.m(j)), l = gen(B, B.l(j));
  if (kind == 0)
    im[B.l(j) - 1] = l * m.pow(e);
  else
    im[B.m(j) - 1] = m * l.pow(e);
  return from_aut(B, std::move(im), std::vector<Word>(B.n - 1, Word(B)));
}

CylinderClass borromean_class() {
  SurfaceBasis B{0, 4};
  Word x1 = gen(B, 1), x2 = gen(B, 2), x3 = gen(B, 3);
  return from_milnor(B, {commutator(x2, x3), commutator(x3, x1), commutator(x1, x2)}, 4);
}

std::vector<std::vector<mpz_class>> boundary_lie_kernel(SurfaceBasis B, int k) {
  int b = B.rank();
  if (b == 0 || k < 1) return {};
  auto lc = LyndonCommutators::get(B, k);
  const auto& ent = lc->of_length(k);
  std::size_t N = ent.size(), sz = 1;
  for (int t = 0; t < k; ++t) sz *= static_cast<std::size_t>(b);
  std::size_t rows = sz * static_cast<std::size_t>(b);
  QMatrix A(rows, std::vector<mpq_class>(b * N, 0));
  for (int i = 0; i < b; ++i) {
    // coordinate i enters as [v, a] or, for l_j, as [a, v]
    int v, sign = 1;
    int gnum = i + 1;
    if (gnum < B.n) {
      v = gnum - 1;
    } else if (gnum < B.n + B.g) {
      v = B.l(gnum - B.n + 1) - 1;
    } else {
      v = B.m(gnum - B.n - B.g + 1) - 1;
      sign = -1;
    }
    for (std::size_t t = 0; t < N; ++t) {
      std::size_t col = i * N + t;
      const auto& a = ent[t].lead;
      for (std::size_t p = 0; p < sz; ++p) {
        if (!sgn(a[p])) continue;
        A[v * sz + p][col] += sign * a[p];
        A[p * b + v][col] -= sign * a[p];
      }
    }
  }
  return integer_nullspace(A, b * N);
}

std::optional<CylinderClass> lie_class(SurfaceBasis B, int k, Rng& rng) {
  auto ker = boundary_lie_kernel(B, k);
  if (ker.empty()) return std::nullopt;
  int b = B.rank();
  const auto& ent = LyndonCommutators::get(B, k)->of_length(k);
  std::size_t N = ent.size();
  std::uniform_int_distribution<int> pick(-1, 1);
  // For k = 1 and g >= 1 the quadratic terms [mu', mu''] also have degree 2,
  // so a kernel combination need not satisfy the full relation; resample.
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<mpz_class> c(b * N, 0);
    bool any = false;
    while (!any) {
      for (const auto& v : ker) {
        int r = pick(rng);
        if (r == 0) continue;
        any = true;
        for (std::size_t j = 0; j < c.size(); ++j) c[j] += r * v[j];
      }
    }
    std::vector<Word> mu;
    for (int i = 0; i < b; ++i) {
      Word w(B);
      for (std::size_t t = 0; t < N; ++t) {
        const auto& e = c[i * N + t];
        if (sgn(e)) w.append(ent[t].group.pow(e.get_si()));
      }
      mu.push_back(w);
    }
    auto C = from_milnor(B, mu, k + 2);
    if (!validate(C, k + 2)) return C;
  }
  return std::nullopt;
}

CylinderClass random_generator(SurfaceBasis B, Rng& rng, bool torelli) {
  int nf = B.n - 1 + B.g;
  std::uniform_int_distribution<int> sign(0, 1);
  int e = sign(rng) ? 1 : -1;
  for (;;) {
    int kind = std::uniform_int_distribution<int>(0, 2)(rng);
    if (kind == 0 && B.n >= 2) {
      int i = std::uniform_int_distribution<int>(1, B.n - 1)(rng);
      return framing(B, i, e * std::uniform_int_distribution<int>(1, 2)(rng));
    }
    if (kind == 1 && nf >= 1) {
      int s = std::uniform_int_distribution<int>(1, nf)(rng);
      int t = std::uniform_int_distribution<int>(s, nf)(rng);
      return block_twist(B, s, t, e);
    }
    if (kind == 2 && B.g >= 1 && !torelli) {
      int j = std::uniform_int_distribution<int>(1, B.g)(rng);
      return handle_twist(B, j, sign(rng), e);
    }
  }
}

CylinderClass random_class(SurfaceBasis B, Rng& rng, int length, bool torelli) {
  auto M = identity_class(B);
  for (int t = 0; t < length; ++t) M = compose(M, random_generator(B, rng, torelli));
  return M;
}

CylinderClass class_commutator(const CylinderClass& M, const CylinderClass& N, int q) {
  return compose(compose(M, N), compose(invert(M, q), invert(N, q)));
}

CylinderClass random_kernel_member(SurfaceBasis B, Rng& rng, int q) {
  int k = q;
  while (k <= q + 3 && boundary_lie_kernel(B, k).empty()) ++k;
  if (k > q + 3) return identity_class(B);
  for (int attempt = 0; attempt < 200; ++attempt) {
    CylinderClass C = *lie_class(B, k, rng);
    if (rng() % 2 == 0) C = compose(C, class_commutator(random_class(B, rng, 2, true), random_class(B, rng, 2, true), C.depth()));
    if (B == SurfaceBasis{0, 4} && q <= 3 && rng() % 2 == 0) C = compose(borromean_class(), C);
    if (milnor_trivial(C, q)) return C;
  }
  throw SearchExhausted("random_kernel_member: no member of H(" + std::to_string(q) + ") found");
}

}  // namespace hcyl
