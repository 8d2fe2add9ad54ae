#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/check.hpp"
#include "leibniz/dendriform.hpp"
#include "leibniz/error.hpp"
#include "leibniz/forms.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/representation.hpp"

namespace leibniz {

namespace detail {

/// Both sides of B(z,[x,y]) = -B(y,[x,z]) + B(x,[y,z]) + B(x,[z,y]).
inline std::pair<Scalar, Scalar> symplectic_sides(const LeibnizAlgebra& a, const BilinearForm& b, std::size_t i,
                                                  std::size_t j, std::size_t k) {
  const Vector x = a.unit(i), y = a.unit(j), z = a.unit(k);
  Scalar lhs = b(z, a.on_basis(i, j));
  Scalar rhs = -b(y, a.on_basis(i, k)) + b(x, a.on_basis(j, k)) + b(x, a.on_basis(k, j));
  return {lhs, rhs};
}

}  // namespace detail

/// Symmetric, nondegenerate, and the symplectic identity on every basis triple
/// (x, y, z) = (e_i, e_j, e_k).
inline Check verify_symplectic(const LeibnizAlgebra& a, const BilinearForm& b) {
  require(b.dim() == a.dim(), ErrorCode::DimensionMismatch, "form and algebra dimensions differ");
  if (!b.is_symmetric()) {
    const Matrix& m = b.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i + 1; j < m.cols(); ++j)
        if (m(i, j) != m(j, i)) {
          Check c = Check::failure(Check::reason::kNotSymmetric);
          c.witness = Witness{{i, j}, scalar_vector(m(i, j)), scalar_vector(m(j, i))};
          return c;
        }
  }
  if (!b.is_nondegenerate()) return Check::failure(Check::reason::kDegenerate, "form matrix is singular");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto [lhs, rhs] = detail::symplectic_sides(a, b, i, j, k);
        if (lhs != rhs) return Check::identity("symplectic", {i, j, k}, scalar_vector(lhs), scalar_vector(rhs));
      }
  return Check::pass();
}

struct SymplecticSpace {
  std::size_t dim = 0;
  std::vector<BilinearForm> basis;
};

/// All symmetric forms satisfying the symplectic identity (nondegeneracy is
/// not imposed). Unknowns are the entries b_pq with p <= q.
inline SymplecticSpace solve_symplectic_space(const LeibnizAlgebra& a) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::vector<std::vector<std::size_t>> slot(n, std::vector<std::size_t>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) {
      slot[p][q] = slot[q][p] = unknowns.size();
      unknowns.emplace_back(p, q);
    }

  // One row per basis triple: coefficients of lhs - rhs in the unknowns.
  Matrix system(n * n * n, unknowns.size(), f);
  std::size_t row = 0;
  auto add_term = [&](const Scalar& sign, std::size_t u, const Vector& v) {
    for (std::size_t k = 0; k < n; ++k)
      if (!v[k].is_zero()) system.add_to(row, slot[u][k], sign * v[k]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++row) {
        add_term(1, k, a.on_basis(i, j));
        add_term(1, j, a.on_basis(i, k));
        add_term(-1, i, a.on_basis(j, k));
        add_term(-1, i, a.on_basis(k, j));
      }

  SymplecticSpace space;
  for (const Vector& v : kernel(system)) {
    Matrix m(n, n, f);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      m.set(unknowns[u].first, unknowns[u].second, v[u]);
      m.set(unknowns[u].second, unknowns[u].first, v[u]);
    }
    space.basis.emplace_back(std::move(m));
  }
  space.dim = space.basis.size();
  return space;
}

/// A nonsingular member of the span: first the sum of the basis, then up to
/// 32 seeded combinations with coefficients in [-3, 3].
inline std::optional<BilinearForm> sample_nondegenerate(const std::vector<BilinearForm>& basis, std::uint64_t seed) {
  if (basis.empty()) return std::nullopt;
  const std::size_t n = basis.front().dim();
  auto combine = [&](const std::vector<long long>& coeffs) {
    Matrix m(n, n, basis.front().field());
    for (std::size_t t = 0; t < basis.size(); ++t)
      if (coeffs[t] != 0) m += Scalar(coeffs[t]) * basis[t].matrix();
    return BilinearForm(std::move(m));
  };
  BilinearForm sum = combine(std::vector<long long>(basis.size(), 1));
  if (sum.is_nondegenerate()) return sum;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<long long> coeffs(basis.size());
    for (auto& c : coeffs) c = static_cast<long long>(rng() % 7) - 3;
    BilinearForm b = combine(coeffs);
    if (b.is_nondegenerate()) return b;
  }
  return std::nullopt;
}

/// The compatible dendriform structure of a symplectic form:
/// B(x◁y,z) = -B(y,[x,z]) and B(x▷y,z) = B(x,[y,z]) + B(x,[z,y]),
/// solved column by column with B⁻¹.
inline DendriformAlgebra symplectic_to_dendriform(const LeibnizAlgebra& a, const BilinearForm& b) {
  Check c = verify_symplectic(a, b);
  require(c.ok, ErrorCode::NotSymplectic, "form is not symplectic (" + c.reason + ")");
  const std::size_t n = a.dim();
  const Matrix binv = invert(b.matrix());
  const Field f = join(a.field(), b.field());
  DendriformAlgebra d(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = a.unit(i), y = a.unit(j);
      Vector lhs_rhs(n, f), rhs_rhs(n, f);
      for (std::size_t k = 0; k < n; ++k) {
        lhs_rhs.set(k, -b(y, a.on_basis(i, k)));
        rhs_rhs.set(k, b(x, a.on_basis(j, k)) + b(x, a.on_basis(k, j)));
      }
      d.left().set_basis_product(i, j, binv * lhs_rhs);
      d.right().set_basis_product(i, j, binv * rhs_rhs);
    }
  return d;
}

/// Symplectic Leibniz algebra on L ⊕ L* with the canonical pairing.
struct PhaseSpace {
  LeibnizAlgebra total;
  std::size_t base_dim = 0;
  BilinearForm form;
  DendriformAlgebra origin;

  Subspace base() const { return Subspace::coordinates(total.dim(), range(0)); }
  Subspace dual() const { return Subspace::coordinates(total.dim(), range(base_dim)); }

 private:
  std::vector<std::size_t> range(std::size_t from) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < base_dim; ++i) idx.push_back(from + i);
    return idx;
  }
};

/// [[0, I], [I, 0]] of size 2n.
inline BilinearForm canonical_pairing(std::size_t n, Field f = Field::Rational) {
  const Matrix z(n, n, f);
  const Matrix id = Matrix::identity(n, f);
  return BilinearForm(block(z, id, id, z));
}

/// L ⋉ L* through the dual of (L; L_◁, R_▷), basis (e_1..e_n, e_1*..e_n*).
inline PhaseSpace build_phase_space(const DendriformAlgebra& d) {
  PhaseSpace p;
  p.total = semidirect_product(dual_rep(dendriform_rep(d)));
  p.base_dim = d.dim();
  p.form = canonical_pairing(d.dim(), d.field());
  p.origin = d;
  return p;
}

namespace detail {

/// Closure of W under the bracket. When W and its partner span the space the
/// witness pairs [w_i, w_j] with its component in W along the partner.
inline Check closure_check(const LeibnizAlgebra& a, const Subspace& w, const Subspace& partner, const char* label) {
  std::vector<Vector> both = w.basis();
  both.insert(both.end(), partner.basis().begin(), partner.basis().end());
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) {
      const Vector v = bracket(a, w[i], w[j]);
      if (w.contains(v)) continue;
      Check c = Check::failure(Check::reason::kSubalgebraFails, label);
      if (auto coords = coordinates_in(both, v)) {
        Vector inside(a.dim(), v.field());
        for (std::size_t t = 0; t < w.dim(); ++t) inside.axpy((*coords)[t], w[t]);
        c.witness = Witness{{i, j}, v, inside};
      }
      return c;
    }
  return Check::pass();
}

}  // namespace detail

/// Leibniz, symplectic, both blocks subalgebras, and the form restricted to
/// the blocks is the canonical pairing.
inline Check verify_phase_space(const PhaseSpace& p, const Subspace& base, const Subspace& dual) {
  const std::size_t n = p.base_dim;
  require(base.dim() == n && dual.dim() == n && base.ambient() == 2 * n && dual.ambient() == 2 * n,
          ErrorCode::DimensionMismatch, "phase-space blocks must each have dimension " + std::to_string(n));
  if (Check c = verify_leibniz(p.total); !c.ok) {
    c.reason = Check::reason::kNotLeibniz;
    return c;
  }
  if (Check c = verify_symplectic(p.total, p.form); !c.ok) return c;
  if (Check c = detail::closure_check(p.total, base, dual, "base block"); !c.ok) return c;
  if (Check c = detail::closure_check(p.total, dual, base, "dual block"); !c.ok) return c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar bb = p.form(base[i], base[j]);
      const Scalar dd = p.form(dual[i], dual[j]);
      const Scalar bd = p.form(base[i], dual[j]);
      const Scalar want = i == j ? Scalar(1) : Scalar(0);
      if (!bb.is_zero() || !dd.is_zero() || bd != want) {
        Check c = Check::failure(Check::reason::kNotCanonical);
        c.witness = Witness{{i, j}, scalar_vector(bd), scalar_vector(want)};
        return c;
      }
    }
  return Check::pass();
}

namespace detail {

/// First pair of basis vectors of W on which the form does not vanish.
inline Check isotropy_check(const BilinearForm& b, const Subspace& w, const char* label) {
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) {
      Scalar v = b(w[i], w[j]);
      if (!v.is_zero()) {
        Check c = Check::failure(Check::reason::kIsotropyFails, label);
        c.witness = Witness{{i, j}, scalar_vector(v), scalar_vector(Scalar(0))};
        return c;
      }
    }
  return Check::pass();
}

}  // namespace detail

/// (D, B) quadratic, W1 and W2 isotropic dendriform subalgebras, D = W1 ⊕ W2.
inline Check verify_manin_triple(const DendriformAlgebra& d, const BilinearForm& b, const Subspace& w1,
                                 const Subspace& w2) {
  try {
    Check q = verify_quadratic_dendriform(d, b);
    if (!q.ok) fail(ErrorCode::NotQuadratic, "quadratic identity fails (" + q.axiom + ")");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotQuadratic) throw;
    fail(ErrorCode::NotQuadratic, e.message());
  }
  if (Check c = detail::isotropy_check(b, w1, "first subspace"); !c.ok) return c;
  if (Check c = detail::isotropy_check(b, w2, "second subspace"); !c.ok) return c;
  if (!is_dendriform_subalgebra(d, w1)) return Check::failure(Check::reason::kSubalgebraFails, "first subspace");
  if (!is_dendriform_subalgebra(d, w2)) return Check::failure(Check::reason::kSubalgebraFails, "second subspace");
  if (!is_direct_sum(w1, w2)) return Check::failure(Check::reason::kNotDirectSum);
  return Check::pass();
}

}  // namespace leibniz
