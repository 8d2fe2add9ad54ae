#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/check.hpp"
#include "leibniz/error.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

enum class EndoRole { ProductE, ComplexJ, Nijenhuis, General };

inline std::string_view to_string(EndoRole r) {
  switch (r) {
    case EndoRole::ProductE: return "PRODUCT_E";
    case EndoRole::ComplexJ: return "COMPLEX_J";
    case EndoRole::Nijenhuis: return "NIJENHUIS";
    case EndoRole::General: return "GENERAL";
  }
  return "GENERAL";
}

inline bool is_involution(const Matrix& e) {
  return e.is_square() && e * e == Matrix::identity(e.rows(), e.field());
}

inline bool is_anti_involution(const Matrix& j) {
  return j.is_square() && j * j == -Matrix::identity(j.rows(), j.field());
}

/// Square matrix with a role; the role's algebraic constraint is enforced.
class LinearEndo {
 public:
  LinearEndo() = default;
  explicit LinearEndo(Matrix m, EndoRole role = EndoRole::General) : m_(std::move(m)), role_(role) {
    require(m_.is_square(), ErrorCode::DimensionMismatch, "endomorphism must be square, got " + m_.shape());
    if (role_ == EndoRole::ProductE) require(is_involution(m_), ErrorCode::NotInvolution, "E*E != I");
    if (role_ == EndoRole::ComplexJ) require(is_anti_involution(m_), ErrorCode::NotAntiInvolution, "J*J != -I");
  }

  const Matrix& matrix() const { return m_; }
  EndoRole role() const { return role_; }
  std::size_t dim() const { return m_.rows(); }
  Vector operator()(const Vector& v) const { return m_ * v; }

 private:
  Matrix m_;
  EndoRole role_ = EndoRole::General;
};

namespace detail {

inline void require_endo(const LeibnizAlgebra& a, const Matrix& m) {
  require(m.rows() == a.dim() && m.cols() == a.dim(), ErrorCode::DimensionMismatch,
          "endomorphism " + m.shape() + " on a " + std::to_string(a.dim()) + "-dimensional algebra");
}

/// First basis pair (i, j) where f(e_i, e_j) returns differing sides.
template <typename F>
Check pairwise(const LeibnizAlgebra& a, const char* axiom, F&& sides) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto [lhs, rhs] = sides(i, j);
      if (lhs != rhs) return Check::identity(axiom, {i, j}, std::move(lhs), std::move(rhs));
    }
  return Check::pass();
}

}  // namespace detail

/// [Nx,Ny] = N([Nx,y] + [x,Ny] - N[x,y]) on basis pairs.
inline Check verify_nijenhuis(const LeibnizAlgebra& a, const Matrix& n) {
  detail::require_endo(a, n);
  return detail::pairwise(a, "nijenhuis", [&](std::size_t i, std::size_t j) {
    const Vector x = a.unit(i), y = a.unit(j);
    const Vector nx = n * x, ny = n * y;
    Vector lhs = bracket(a, nx, ny);
    Vector rhs = n * (bracket(a, nx, y) + bracket(a, x, ny) - n * a.on_basis(i, j));
    return std::pair{lhs, rhs};
  });
}

struct StructureReport {
  bool is_nijenhuis = false;
  bool is_product = false;
  bool is_strict = false;
  bool is_abelian = false;
  bool is_paracomplex = false;
  Subspace plus;
  Subspace minus;
};

/// E[x,y] = [Ex,y] + [x,Ey] - E[Ex,Ey].
inline Check verify_product_integrability(const LeibnizAlgebra& a, const Matrix& e) {
  detail::require_endo(a, e);
  return detail::pairwise(a, "product", [&](std::size_t i, std::size_t j) {
    const Vector ex = e.col(i), ey = e.col(j);
    Vector lhs = e * a.on_basis(i, j);
    Vector rhs = bracket(a, ex, a.unit(j)) + bracket(a, a.unit(i), ey) - e * bracket(a, ex, ey);
    return std::pair{lhs, rhs};
  });
}

inline StructureReport classify_product(const LeibnizAlgebra& a, const Matrix& e) {
  detail::require_endo(a, e);
  require(is_involution(e), ErrorCode::NotInvolution, "E*E != I for " + e.str());
  StructureReport rep;
  rep.is_nijenhuis = verify_nijenhuis(a, e).ok;
  rep.is_product = verify_product_integrability(a, e).ok;
  bool strict = true, abelian = true;
  for (std::size_t i = 0; i < a.dim() && (strict || abelian); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector ex = e.col(i), ey = e.col(j);
      const Vector ebr = e * a.on_basis(i, j);
      if (ebr != bracket(a, ex, a.unit(j)) || ebr != bracket(a, a.unit(i), ey)) strict = false;
      if (a.on_basis(i, j) != -bracket(a, ex, ey)) abelian = false;
    }
  rep.is_strict = rep.is_product && strict;
  rep.is_abelian = rep.is_product && abelian;
  const Field f = join(a.field(), e.field());
  rep.plus = Subspace(a.dim(), eigenspace(e, Scalar::one(f)));
  rep.minus = Subspace(a.dim(), eigenspace(e, -Scalar::one(f)));
  rep.is_paracomplex = rep.is_product && rep.plus.dim() == rep.minus.dim();
  return rep;
}

/// Matrix acting as +1 on W+ and -1 on W-.
inline Matrix involution_from_decomposition(const Subspace& wplus, const Subspace& wminus) {
  require(is_direct_sum(wplus, wminus), ErrorCode::NotDirectSum, "subspaces do not form a direct sum");
  const std::size_t n = wplus.ambient();
  std::vector<Vector> cols = wplus.basis();
  cols.insert(cols.end(), wminus.basis().begin(), wminus.basis().end());
  Field f = Field::Rational;
  for (const auto& v : cols) f = join(f, v.field());
  const Matrix p = Matrix::from_columns(n, cols, f);
  std::vector<Scalar> signs;
  for (std::size_t i = 0; i < n; ++i) signs.push_back(i < wplus.dim() ? Scalar(1) : Scalar(-1));
  return p * Matrix::diagonal(signs) * invert(p);
}

inline Matrix product_from_decomposition(const LeibnizAlgebra& a, const Subspace& wplus, const Subspace& wminus) {
  require(is_subalgebra(a, wplus), ErrorCode::NotSubalgebra, "the +1 part is not a subalgebra");
  require(is_subalgebra(a, wminus), ErrorCode::NotSubalgebra, "the -1 part is not a subalgebra");
  return involution_from_decomposition(wplus, wminus);
}

/// Sign-diagonal involutions of the given basis that are product structures.
/// Pattern p puts -1 at position k when bit (n-1-k) of p is set, so the
/// enumeration starts at +I and counts in binary with e_1 as the leading digit.
inline std::vector<std::pair<Matrix, StructureReport>> enumerate_diagonal_products(const LeibnizAlgebra& a) {
  const std::size_t n = a.dim();
  require(n <= 24, ErrorCode::TooLarge, "sign enumeration limited to dimension 24");
  std::vector<std::pair<Matrix, StructureReport>> out;
  for (std::size_t p = 0; p < (std::size_t{1} << n); ++p) {
    std::vector<Scalar> signs;
    for (std::size_t k = 0; k < n; ++k) signs.push_back((p >> (n - 1 - k)) & 1U ? Scalar(-1) : Scalar(1));
    Matrix e = Matrix::diagonal(signs).promoted(a.field());
    StructureReport rep = classify_product(a, e);
    if (rep.is_product) out.emplace_back(std::move(e), std::move(rep));
  }
  return out;
}

}  // namespace leibniz
