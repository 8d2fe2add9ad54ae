#pragma once

// Named examples, seeds and random generators shared by the unit tests and
// the acceptance binary.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "leibniz/leibniz.hpp"

namespace fixtures {

using namespace leibniz;

inline Matrix diag(std::initializer_list<int> signs) {
  std::vector<Scalar> d;
  for (int s : signs) d.emplace_back(s);
  return Matrix::diagonal(d);
}

/// [e1,e3] = 2e4.
inline LeibnizAlgebra ex310() {
  LeibnizAlgebra a(4);
  a.set(0, 2, 3, 2);
  return a;
}

/// The six product structures on ex310, numbered from 1.
inline Matrix ex310_E(int k) {
  switch (k) {
    case 1: return diag({1, 1, -1, -1});
    case 2: return diag({-1, -1, 1, 1});
    case 3: return diag({1, -1, -1, 1});
    case 4: return diag({1, -1, -1, -1});
    case 5: return diag({1, -1, 1, 1});
    case 6: return diag({-1, 1, -1, -1});
  }
  return {};
}

/// Symmetric matrix with the para-Kähler zero pattern for E1 and E2.
inline Matrix ex310_para_kahler_B(int b13, int b14, int b23) {
  return Matrix{{0, 0, b13, b14}, {0, 0, b23, 0}, {b13, b23, 0, 0}, {b14, 0, 0, 0}};
}

/// [e1,e1] = [e2,e2] = e3.
inline LeibnizAlgebra ex515() {
  LeibnizAlgebra a(4);
  a.set(0, 0, 2, 1);
  a.set(1, 1, 2, 1);
  return a;
}

inline Matrix ex515_J(int k) {
  const int s = (k == 1 || k == 2) ? 1 : -1;
  const int t = (k == 1 || k == 3) ? 1 : -1;
  return Matrix{{0, -s, 0, 0}, {s, 0, 0, 0}, {0, 0, 0, -t}, {0, 0, t, 0}};
}

/// Basis (h, e, f).
inline LeibnizAlgebra sl2() {
  LeibnizAlgebra a(3);
  a.set(0, 1, 1, 2);
  a.set(1, 0, 1, -2);
  a.set(0, 2, 2, -2);
  a.set(2, 0, 2, 2);
  a.set(1, 2, 0, 1);
  a.set(2, 1, 0, -1);
  return a;
}

/// gl(V) ⊕ V for dim V = 1 on the basis (a, u): a◁a = a, a◁u = u, a▷a = -a.
inline DendriformAlgebra gl1() {
  DendriformAlgebra d(2);
  d.left().set(0, 0, 0, 1);
  d.left().set(0, 1, 1, 1);
  d.right().set(0, 0, 0, -1);
  return d;
}

/// One-dimensional: a◁a = a, a▷a = -a.
inline DendriformAlgebra unit1() {
  DendriformAlgebra d(1);
  d.left().set(0, 0, 0, 1);
  d.right().set(0, 0, 0, -1);
  return d;
}

/// Four-dimensional with a skew invariant form: ◁ = 0, p2▷q1 = p1,
/// q1▷q1 = q2 on the basis (p1, p2, q1, q2), ω(p_i, q_j) = δ_ij.
inline DendriformAlgebra skew_seed() {
  DendriformAlgebra d(4);
  d.right().set(1, 2, 0, 1);
  d.right().set(2, 2, 3, 1);
  return d;
}

inline BilinearForm skew_seed_omega() {
  return BilinearForm(Matrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
}

// ---- randomness ----

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Unimodular integer matrix: a product of unit triangular factors.
inline Matrix random_unimodular(Rng& rng, std::size_t n) {
  Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r > c) lower.set(r, c, uniform(rng, -1, 1));
      if (r < c) upper.set(r, c, uniform(rng, -1, 1));
    }
  // A random permutation keeps the pivots from always sitting on the diagonal.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p.set(i, perm[i], 1);
  return p * lower * upper;
}

/// Both products take generator pairs into a subspace that every product
/// annihilates, so all triple products vanish.
inline DendriformAlgebra random_nilpotent(Rng& rng, std::size_t n) {
  DendriformAlgebra d(n);
  if (n < 2) return d;
  const std::size_t gens = 1 + rng() % (n - 1);
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t j = 0; j < gens; ++j)
      for (std::size_t k = gens; k < n; ++k) {
        d.left().set(i, j, k, uniform(rng, -2, 2));
        d.right().set(i, j, k, uniform(rng, -2, 2));
      }
  return d;
}

inline DendriformAlgebra scaled(const DendriformAlgebra& d, const Scalar& c) {
  Product l(d.dim()), r(d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) {
      l.set_basis_product(i, j, c * d.left().on_basis(i, j));
      r.set_basis_product(i, j, c * d.right().on_basis(i, j));
    }
  return {l, r};
}

/// Seed of exactly dimension n (1..3) before the basis change.
inline DendriformAlgebra random_seed(Rng& rng, std::size_t n) {
  switch (n) {
    case 1: return rng() % 3 == 0 ? DendriformAlgebra(1) : unit1();
    case 2:
      switch (rng() % 3) {
        case 0: return gl1();
        case 1: return direct_sum(unit1(), unit1());
        default: return random_nilpotent(rng, 2);
      }
    default:
      switch (rng() % 4) {
        case 0: return direct_sum(gl1(), unit1());
        case 1: return direct_sum(unit1(), random_nilpotent(rng, 2));
        case 2: return direct_sum(gl1(), DendriformAlgebra(1));
        default: return random_nilpotent(rng, 3);
      }
  }
}

/// A validated dendriform algebra of dimension n: seed, rescale, change basis.
inline DendriformAlgebra random_dendriform(Rng& rng, std::size_t n) {
  DendriformAlgebra d = random_seed(rng, n);
  d = scaled(d, Scalar(uniform(rng, 1, 3)) / Scalar(uniform(rng, 1, 2)) * Scalar(rng() % 2 ? 1 : -1));
  return change_basis(d, random_unimodular(rng, n));
}

/// Random nonsingular skew form of even dimension.
inline BilinearForm random_skew(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) {
        const int v = uniform(rng, -3, 3);
        m.set(r, c, v);
        m.set(c, r, -v);
      }
    BilinearForm s(m);
    if (s.is_nondegenerate()) return s;
  }
}

struct SkewInvariant {
  DendriformAlgebra d;
  BilinearForm omega;
};

/// Dendriform algebra with a skew nondegenerate invariant form: the zero
/// algebra with any skew form, the 4-dimensional seed, or their direct sum,
/// then a random basis change (ω becomes PᵀωP).
inline SkewInvariant random_skew_invariant(Rng& rng) {
  SkewInvariant s;
  switch (rng() % 3) {
    case 0: {
      const std::size_t n = 2 * (1 + rng() % 2);
      s = {DendriformAlgebra(n), random_skew(rng, n)};
      break;
    }
    case 1:
      s = {skew_seed(), skew_seed_omega()};
      break;
    default: {
      BilinearForm z = random_skew(rng, 2);
      s = {direct_sum(skew_seed(), DendriformAlgebra(2)),
           BilinearForm(block_diagonal(skew_seed_omega().matrix(), z.matrix()))};
    }
  }
  const Matrix p = random_unimodular(rng, s.d.dim());
  return {change_basis(s.d, p), BilinearForm(p.transpose() * s.omega.matrix() * p)};
}

/// Random Leibniz algebra: the sub-adjacent algebra of a random dendriform.
inline LeibnizAlgebra random_leibniz(Rng& rng, std::size_t n) { return subadjacent(random_dendriform(rng, n)); }

}  // namespace fixtures
