#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/check.hpp"
#include "leibniz/error.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

/// (V; l, r): one m x m matrix per basis element of the algebra for each side.
struct Representation {
  LeibnizAlgebra algebra;
  std::size_t rep_dim = 0;
  std::vector<Matrix> left;
  std::vector<Matrix> right;

  Representation() = default;
  Representation(LeibnizAlgebra a, std::size_t m, std::vector<Matrix> l, std::vector<Matrix> r)
      : algebra(std::move(a)), rep_dim(m), left(std::move(l)), right(std::move(r)) {
    const std::size_t n = algebra.dim();
    require(left.size() == n && right.size() == n, ErrorCode::DimensionMismatch,
            "representation needs " + std::to_string(n) + " left and right matrices");
    for (const auto* maps : {&left, &right})
      for (const auto& mat : *maps)
        require(mat.rows() == m && mat.cols() == m, ErrorCode::DimensionMismatch,
                "representation matrix " + mat.shape() + " in dimension " + std::to_string(m));
  }

  static Representation zero(const LeibnizAlgebra& a, std::size_t m) {
    std::vector<Matrix> z(a.dim(), Matrix(m, m, a.field()));
    return {a, m, z, z};
  }

  Field field() const {
    Field f = algebra.field();
    for (const auto& mat : left) f = join(f, mat.field());
    for (const auto& mat : right) f = join(f, mat.field());
    return f;
  }

  /// l(x), assembled by linearity.
  Matrix l(const Vector& x) const { return combine(left, x); }
  Matrix r(const Vector& x) const { return combine(right, x); }

 private:
  Matrix combine(const std::vector<Matrix>& maps, const Vector& x) const {
    require(x.size() == algebra.dim(), ErrorCode::DimensionMismatch, "element of the wrong algebra");
    Matrix out(rep_dim, rep_dim, join(field(), x.field()));
    for (std::size_t i = 0; i < maps.size(); ++i)
      if (!x[i].is_zero()) out += x[i] * maps[i];
    return out;
  }
};

/// Axioms rep-1, rep-2, rep-3 on basis pairs (i, j). The witness index triple
/// is (i, j, k): the axiom's two operators differ on column k.
inline Check verify_representation(const Representation& rep) {
  const LeibnizAlgebra& a = rep.algebra;
  const std::size_t n = a.dim();
  auto column_witness = [&](const char* axiom, std::size_t i, std::size_t j, const Matrix& lhs,
                            const Matrix& rhs) -> Check {
    for (std::size_t k = 0; k < rep.rep_dim; ++k)
      if (lhs.col(k) != rhs.col(k)) return Check::identity(axiom, {i, j, k}, lhs.col(k), rhs.col(k));
    return Check::pass();
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix& li = rep.left[i];
      const Matrix& lj = rep.left[j];
      const Matrix& ri = rep.right[i];
      const Matrix& rj = rep.right[j];
      const Vector& cij = a.on_basis(i, j);
      if (Matrix lhs = rep.l(cij), rhs = li * lj - lj * li; lhs != rhs) return column_witness("rep-1", i, j, lhs, rhs);
      if (Matrix lhs = rep.r(cij), rhs = li * rj - rj * li; lhs != rhs) return column_witness("rep-2", i, j, lhs, rhs);
      if (Matrix lhs = rj * li, rhs = -(rj * ri); lhs != rhs) return column_witness("rep-3", i, j, lhs, rhs);
    }
  return Check::pass();
}

inline Representation regular_rep(const LeibnizAlgebra& a) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    l.push_back(a.left(i));
    r.push_back(a.right(i));
  }
  return {a, a.dim(), std::move(l), std::move(r)};
}

/// (V*; l*, -l* - r*) in the dual basis, where l*(x) = -l(x)^T.
inline Representation dual_rep(const Representation& rep) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < rep.algebra.dim(); ++i) {
    l.push_back(-rep.left[i].transpose());
    r.push_back(rep.left[i].transpose() + rep.right[i].transpose());
  }
  return {rep.algebra, rep.rep_dim, std::move(l), std::move(r)};
}

/// E ⋉ V on the basis (e_1..e_n, v_1..v_m): [x+u, y+v] = [x,y] + l_x v + r_y u.
inline LeibnizAlgebra semidirect_product(const Representation& rep) {
  const LeibnizAlgebra& a = rep.algebra;
  const std::size_t n = a.dim();
  const std::size_t m = rep.rep_dim;
  LeibnizAlgebra s(n + m, rep.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.constant(i, j, k).is_zero()) s.set(i, j, k, a.constant(i, j, k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t k = 0; k < m; ++k) {
        if (!rep.left[i](k, v).is_zero()) s.set(i, n + v, n + k, rep.left[i](k, v));
        if (!rep.right[i](k, v).is_zero()) s.set(n + v, i, n + k, rep.right[i](k, v));
      }
  return s;
}

}  // namespace leibniz
