#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/check.hpp"
#include "leibniz/error.hpp"
#include "leibniz/forms.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/representation.hpp"

namespace leibniz {

/// Leibniz-dendriform algebra: two products, ◁ ("left") and ▷ ("right").
class DendriformAlgebra {
 public:
  DendriformAlgebra() = default;
  explicit DendriformAlgebra(std::size_t n, Field f = Field::Rational) : left_(n, f), right_(n, f) {}
  DendriformAlgebra(Product left, Product right) : left_(std::move(left)), right_(std::move(right)) {
    require(left_.dim() == right_.dim(), ErrorCode::DimensionMismatch, "the two products differ in dimension");
  }

  std::size_t dim() const { return left_.dim(); }
  Field field() const { return join(left_.field(), right_.field()); }
  const Product& left() const { return left_; }
  const Product& right() const { return right_; }
  Product& left() { return left_; }
  Product& right() { return right_; }

  Vector lhd(const Vector& x, const Vector& y) const { return left_.apply(x, y); }
  Vector rhd(const Vector& x, const Vector& y) const { return right_.apply(x, y); }
  Vector unit(std::size_t i) const { return Vector::unit(dim(), i, field()); }

  DendriformAlgebra promoted(Field f) const { return {left_.promoted(f), right_.promoted(f)}; }

  friend bool operator==(const DendriformAlgebra& a, const DendriformAlgebra& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  Product left_;
  Product right_;
};

/// Axioms (p1), (p2), (p3) on all basis triples.
inline Check verify_dendriform(const DendriformAlgebra& d) {
  const std::size_t n = d.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = d.unit(i), y = d.unit(j), z = d.unit(k);
        {
          Vector lhs = d.lhd(d.lhd(x, y), z);
          Vector rhs = d.lhd(x, d.lhd(y, z)) - d.lhd(y, d.lhd(x, z)) - d.lhd(d.rhd(x, y), z);
          if (lhs != rhs) return Check::identity("p1", {i, j, k}, lhs, rhs);
        }
        {
          Vector lhs = d.lhd(x, d.rhd(y, z));
          Vector rhs = d.rhd(d.lhd(x, y), z) + d.rhd(y, d.lhd(x, z)) + d.rhd(y, d.rhd(x, z));
          if (lhs != rhs) return Check::identity("p2", {i, j, k}, lhs, rhs);
        }
        {
          Vector lhs = d.rhd(x, d.rhd(y, z));
          Vector rhs = d.rhd(d.rhd(x, y), z) + d.lhd(y, d.rhd(x, z)) - d.rhd(x, d.lhd(y, z));
          if (lhs != rhs) return Check::identity("p3", {i, j, k}, lhs, rhs);
        }
      }
  return Check::pass();
}

/// [x,y] = x◁y + x▷y.
inline LeibnizAlgebra subadjacent(const DendriformAlgebra& d) { return LeibnizAlgebra(d.left() + d.right()); }

/// (L; L_◁, R_▷) as a representation of the sub-adjacent algebra.
inline Representation dendriform_rep(const DendriformAlgebra& d) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < d.dim(); ++i) {
    l.push_back(d.left().left(i));
    r.push_back(d.right().right(i));
  }
  return {subadjacent(d), d.dim(), std::move(l), std::move(r)};
}

namespace detail {

inline void require_operator_shape(const LeibnizAlgebra& a, const Representation& rep, const Matrix& t) {
  require(t.rows() == a.dim() && t.cols() == rep.rep_dim, ErrorCode::DimensionMismatch,
          "operator " + t.shape() + " must map a " + std::to_string(rep.rep_dim) + "-dimensional module into a " +
              std::to_string(a.dim()) + "-dimensional algebra");
  require(rep.algebra.dim() == a.dim(), ErrorCode::DimensionMismatch, "representation of another algebra");
}

}  // namespace detail

/// [Tu, Tv] = T(l(Tu)v + r(Tv)u) on basis pairs of V.
inline Check verify_rota_baxter(const LeibnizAlgebra& a, const Representation& rep, const Matrix& t) {
  detail::require_operator_shape(a, rep, t);
  const std::size_t m = rep.rep_dim;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      const Vector tu = t.col(p), tv = t.col(q);
      Vector lhs = bracket(a, tu, tv);
      Vector rhs = t * (rep.l(tu).col(q) + rep.r(tv).col(p));
      if (lhs != rhs) return Check::identity("rota-baxter", {p, q}, lhs, rhs);
    }
  return Check::pass();
}

/// u◁v = l(Tu)v and u▷v = r(Tv)u on V.
inline DendriformAlgebra rb_to_dendriform(const LeibnizAlgebra& a, const Representation& rep, const Matrix& t) {
  Check c = verify_rota_baxter(a, rep, t);
  require(c.ok, ErrorCode::NotRotaBaxter, "operator fails the Rota-Baxter identity");
  const std::size_t m = rep.rep_dim;
  DendriformAlgebra d(m, join(rep.field(), t.field()));
  for (std::size_t p = 0; p < m; ++p) {
    const Matrix ltu = rep.l(t.col(p));
    const Matrix rtu = rep.r(t.col(p));
    for (std::size_t q = 0; q < m; ++q) {
      d.left().set_basis_product(p, q, ltu.col(q));
      d.right().set_basis_product(q, p, rtu.col(q));
    }
  }
  return d;
}

/// x◁y = T(l(x)T⁻¹y), x▷y = T(r(y)T⁻¹x) on the algebra itself.
inline DendriformAlgebra compatible_dendriform_from_invertible_rb(const LeibnizAlgebra& a, const Representation& rep,
                                                                  const Matrix& t) {
  detail::require_operator_shape(a, rep, t);
  require(t.is_square(), ErrorCode::SingularMatrix, "operator " + t.shape() + " is not square");
  const Matrix tinv = invert(t);
  Check c = verify_rota_baxter(a, rep, t);
  require(c.ok, ErrorCode::NotRotaBaxter, "operator fails the Rota-Baxter identity");
  const std::size_t n = a.dim();
  DendriformAlgebra d(n, join(rep.field(), t.field()));
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix li = t * rep.left[i] * tinv;
    const Matrix ri = t * rep.right[i] * tinv;
    for (std::size_t j = 0; j < n; ++j) {
      d.left().set_basis_product(i, j, li.col(j));
      d.right().set_basis_product(j, i, ri.col(j));
    }
  }
  return d;
}

/// E ⊕ V with [x+u, y+v] = [x,y] + ([Tu,y] - T(r_y u)) + ([x,Tv] - T(l_x v))
///                         + [u,v]_{◁,▷} + l_x v + r_y u.
inline LeibnizAlgebra bowtie_algebra(const LeibnizAlgebra& a, const Representation& rep, const Matrix& t) {
  const DendriformAlgebra dv = rb_to_dendriform(a, rep, t);
  const std::size_t n = a.dim();
  const std::size_t m = rep.rep_dim;
  LeibnizAlgebra s(n + m, join(dv.field(), a.field()));
  auto put = [&s, n](std::size_t i, std::size_t j, const Vector& e_part, const Vector& v_part) {
    for (std::size_t k = 0; k < e_part.size(); ++k)
      if (!e_part[k].is_zero()) s.set(i, j, k, e_part[k]);
    for (std::size_t k = 0; k < v_part.size(); ++k)
      if (!v_part[k].is_zero()) s.set(i, j, n + k, v_part[k]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) put(i, j, a.on_basis(i, j), Vector(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < m; ++v) {
      const Vector lv = rep.left[i].col(v);
      put(i, n + v, bracket(a, a.unit(i), t.col(v)) - t * lv, lv);
      const Vector rv = rep.right[i].col(v);
      put(n + v, i, bracket(a, t.col(v), a.unit(i)) - t * rv, rv);
    }
  const LeibnizAlgebra sub = subadjacent(dv);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) put(n + u, n + v, Vector(n), sub.on_basis(u, v));
  return s;
}

/// Invariance of ω: ω(x◁y,z) = -ω(y,x◁z) and ω(x▷y,z) = ω(x, y◁z + z▷y).
/// Witness sides are one-entry vectors.
inline Check verify_invariant_form(const DendriformAlgebra& d, const BilinearForm& omega) {
  require(omega.dim() == d.dim(), ErrorCode::DimensionMismatch, "form and algebra dimensions differ");
  require(omega.is_nondegenerate(), ErrorCode::DegenerateForm, "invariant form must be nondegenerate");
  const std::size_t n = d.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = d.unit(i), y = d.unit(j), z = d.unit(k);
        Scalar lhs = omega(d.lhd(x, y), z);
        Scalar rhs = -omega(y, d.lhd(x, z));
        if (lhs != rhs) return Check::identity("invariant-lhd", {i, j, k}, scalar_vector(lhs), scalar_vector(rhs));
        lhs = omega(d.rhd(x, y), z);
        rhs = omega(x, d.lhd(y, z) + d.rhd(z, y));
        if (lhs != rhs) return Check::identity("invariant-rhd", {i, j, k}, scalar_vector(lhs), scalar_vector(rhs));
      }
  return Check::pass();
}

/// B(x◁y,z) = -B(y,[x,z]) and B(x▷y,z) = B(x,[y,z]) + B(x,[z,y]) for the
/// sub-adjacent bracket.
inline Check verify_quadratic_dendriform(const DendriformAlgebra& d, const BilinearForm& b) {
  require(b.dim() == d.dim(), ErrorCode::DimensionMismatch, "form and algebra dimensions differ");
  require(b.is_symmetric(), ErrorCode::NotSymmetric, "quadratic form must be symmetric");
  require(b.is_nondegenerate(), ErrorCode::DegenerateForm, "quadratic form must be nondegenerate");
  const LeibnizAlgebra sub = subadjacent(d);
  const std::size_t n = d.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = d.unit(i), y = d.unit(j), z = d.unit(k);
        Scalar lhs = b(d.lhd(x, y), z);
        Scalar rhs = -b(y, bracket(sub, x, z));
        if (lhs != rhs) return Check::identity("quadratic-lhd", {i, j, k}, scalar_vector(lhs), scalar_vector(rhs));
        lhs = b(d.rhd(x, y), z);
        rhs = b(x, bracket(sub, y, z)) + b(x, bracket(sub, z, y));
        if (lhs != rhs) return Check::identity("quadratic-rhd", {i, j, k}, scalar_vector(lhs), scalar_vector(rhs));
      }
  return Check::pass();
}

/// Dendriform structure restricted to a subspace closed under both products,
/// in the coordinates of the subspace basis.
inline DendriformAlgebra restricted_dendriform(const DendriformAlgebra& d, const Subspace& w) {
  Field f = d.field();
  for (const auto& v : w.basis()) f = join(f, v.field());
  DendriformAlgebra r(w.dim(), f);
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) {
      r.left().set_basis_product(i, j, w.coordinates_of(d.lhd(w[i], w[j])));
      r.right().set_basis_product(i, j, w.coordinates_of(d.rhd(w[i], w[j])));
    }
  return r;
}

inline bool is_dendriform_subalgebra(const DendriformAlgebra& d, const Subspace& w) {
  for (const auto& x : w.basis())
    for (const auto& y : w.basis())
      if (!w.contains(d.lhd(x, y)) || !w.contains(d.rhd(x, y))) return false;
  return true;
}

/// Direct sum with zero cross products.
inline DendriformAlgebra direct_sum(const DendriformAlgebra& a, const DendriformAlgebra& b) {
  const Field f = join(a.field(), b.field());
  LeibnizAlgebra l = direct_sum(LeibnizAlgebra(a.left().promoted(f)), LeibnizAlgebra(b.left().promoted(f)));
  LeibnizAlgebra r = direct_sum(LeibnizAlgebra(a.right().promoted(f)), LeibnizAlgebra(b.right().promoted(f)));
  return {l.product(), r.product()};
}

/// Products in the basis f_j = column j of P.
inline DendriformAlgebra change_basis(const DendriformAlgebra& d, const Matrix& p) {
  return {change_basis(LeibnizAlgebra(d.left()), p).product(), change_basis(LeibnizAlgebra(d.right()), p).product()};
}

}  // namespace leibniz
