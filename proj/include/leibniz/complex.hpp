#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/check.hpp"
#include "leibniz/dendriform.hpp"
#include "leibniz/error.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/product.hpp"

namespace leibniz {

/// Same constants over Q(i).
inline LeibnizAlgebra complexify(const LeibnizAlgebra& a) {
  require(a.field() == Field::Rational, ErrorCode::WrongField, "complexify expects a rational algebra");
  return a.promoted(Field::Gaussian);
}

/// J[x,y] = [Jx,y] + [x,Jy] + J[Jx,Jy], over whatever field the inputs use.
inline Check verify_complex_integrability(const LeibnizAlgebra& a, const Matrix& j) {
  detail::require_endo(a, j);
  return detail::pairwise(a, "complex", [&](std::size_t p, std::size_t q) {
    const Vector jx = j.col(p), jy = j.col(q);
    Vector lhs = j * a.on_basis(p, q);
    Vector rhs = bracket(a, jx, a.unit(q)) + bracket(a, a.unit(p), jy) + j * bracket(a, jx, jy);
    return std::pair{lhs, rhs};
  });
}

struct ComplexReport {
  bool is_complex = false;
  bool is_strict = false;
  bool is_abelian = false;
  /// Eigenspaces of J inside the complexification.
  Subspace eigen_i;
  Subspace eigen_minus_i;
  /// Entrywise conjugation carries eigen_i onto eigen_minus_i.
  bool sigma_swapped = false;
  /// Both eigenspaces are subalgebras of the complexification.
  bool eigen_subalgebras = false;
};

namespace detail {

inline bool conjugates_into(const Subspace& from, const Subspace& to) {
  if (from.dim() != to.dim()) return false;
  for (const auto& v : from.basis())
    if (!to.contains(v.conjugate())) return false;
  return true;
}

}  // namespace detail

inline ComplexReport classify_complex(const LeibnizAlgebra& a, const Matrix& j) {
  require(a.field() == Field::Rational && j.all_real(), ErrorCode::WrongField,
          "complex structures are classified on rational algebras");
  detail::require_endo(a, j);
  require(is_anti_involution(j), ErrorCode::NotAntiInvolution, "J*J != -I for " + j.str());
  ComplexReport rep;
  rep.is_complex = verify_complex_integrability(a, j).ok;
  bool strict = true, abelian = true;
  for (std::size_t p = 0; p < a.dim(); ++p)
    for (std::size_t q = 0; q < a.dim(); ++q) {
      const Vector jx = j.col(p), jy = j.col(q);
      const Vector jbr = j * a.on_basis(p, q);
      if (jbr != bracket(a, jx, a.unit(q)) || jbr != bracket(a, a.unit(p), jy)) strict = false;
      if (a.on_basis(p, q) != bracket(a, jx, jy)) abelian = false;
    }
  rep.is_strict = rep.is_complex && strict;
  rep.is_abelian = rep.is_complex && abelian;

  const Matrix jc = j.promoted(Field::Gaussian);
  rep.eigen_i = Subspace(a.dim(), eigenspace(jc, Scalar::i()));
  rep.eigen_minus_i = Subspace(a.dim(), eigenspace(jc, -Scalar::i()));
  rep.sigma_swapped = detail::conjugates_into(rep.eigen_i, rep.eigen_minus_i) &&
                      detail::conjugates_into(rep.eigen_minus_i, rep.eigen_i);
  const LeibnizAlgebra ac = complexify(a);
  rep.eigen_subalgebras = is_subalgebra(ac, rep.eigen_i) && is_subalgebra(ac, rep.eigen_minus_i);
  return rep;
}

/// φ = (I - iJ)/2, onto the +i eigenspace.
inline Matrix phi_map(const Matrix& j) {
  require(is_anti_involution(j), ErrorCode::NotAntiInvolution, "J*J != -I");
  const std::size_t n = j.rows();
  const Scalar half(1, 2);
  return half * (Matrix::identity(n, Field::Gaussian) - Scalar::i() * j);
}

/// ψ = (I + iJ)/2, onto the -i eigenspace.
inline Matrix psi_map(const Matrix& j) {
  require(is_anti_involution(j), ErrorCode::NotAntiInvolution, "J*J != -I");
  const std::size_t n = j.rows();
  const Scalar half(1, 2);
  return half * (Matrix::identity(n, Field::Gaussian) + Scalar::i() * j);
}

/// [x,y]_J = ([x,y] - [Jx,Jy]) / 2.
inline LeibnizAlgebra bracket_J(const LeibnizAlgebra& a, const Matrix& j) {
  require(classify_complex(a, j).is_complex, ErrorCode::NotComplexStructure, "J is not integrable");
  const std::size_t n = a.dim();
  const Scalar half(1, 2);
  LeibnizAlgebra out(n, a.field());
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Vector v = half * (a.on_basis(p, q) - bracket(a, j.col(p), j.col(q)));
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) out.set(p, q, k, v[k]);
    }
  return out;
}

/// {J, E}: J complex, E product, JE = -EJ. On success J also swaps the
/// eigenspaces of E.
inline Check check_complex_product_pair(const LeibnizAlgebra& a, const Matrix& j, const Matrix& e) {
  detail::require_endo(a, j);
  detail::require_endo(a, e);
  if (!is_anti_involution(j)) return Check::failure(Check::reason::kNotComplex, "J*J != -I");
  if (Check c = verify_complex_integrability(a, j); !c.ok) {
    c.reason = Check::reason::kNotComplex;
    return c;
  }
  if (!is_involution(e)) return Check::failure(Check::reason::kNotProduct, "E*E != I");
  if (Check c = verify_product_integrability(a, e); !c.ok) {
    c.reason = Check::reason::kNotProduct;
    return c;
  }
  const Matrix je = j * e, ej = e * j;
  if (je != -ej) {
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (je.col(k) != -ej.col(k)) {
        Check c = Check::failure(Check::reason::kNotAnticommuting);
        c.witness = Witness{{k}, je.col(k), -ej.col(k)};
        return c;
      }
  }
  const Field f = join(a.field(), e.field());
  const Subspace plus(a.dim(), eigenspace(e, Scalar::one(f)));
  const Subspace minus(a.dim(), eigenspace(e, -Scalar::one(f)));
  for (const auto& v : plus.basis())
    if (!minus.contains(j * v)) return Check::failure(Check::reason::kCompatFails, "J(E+) is not inside E-");
  if (plus.dim() != minus.dim()) return Check::failure(Check::reason::kNotParacomplex);
  return Check::pass();
}

namespace detail {

/// P = [W+ | W-] for the eigenspaces of E.
inline std::pair<Subspace, Subspace> product_eigenspaces(const LeibnizAlgebra& a, const Matrix& e) {
  const Field f = join(a.field(), e.field());
  return {Subspace(a.dim(), eigenspace(e, Scalar::one(f))), Subspace(a.dim(), eigenspace(e, -Scalar::one(f)))};
}

}  // namespace detail

/// φ[x1,x2] = [φx1,x2] + [x1,φx2] - φ⁻¹[φx1,φx2] on basis pairs of W+. The
/// matrix phi maps coordinates in the +1 eigenbasis to coordinates in the -1
/// eigenbasis (both as returned by `eigenspace`).
inline Check check_phi_identity(const LeibnizAlgebra& a, const Matrix& e, const Matrix& phi) {
  auto [plus, minus] = detail::product_eigenspaces(a, e);
  require(phi.rows() == minus.dim() && phi.cols() == plus.dim(), ErrorCode::DimensionMismatch,
          "phi must be " + std::to_string(minus.dim()) + "x" + std::to_string(plus.dim()));
  const Matrix phinv = invert(phi);
  auto phi_of = [&](const Vector& x) { return minus.embed(phi * plus.coordinates_of(x)); };
  auto phinv_of = [&](const Vector& xi) { return plus.embed(phinv * minus.coordinates_of(xi)); };
  for (std::size_t p = 0; p < plus.dim(); ++p)
    for (std::size_t q = 0; q < plus.dim(); ++q) {
      const Vector& x1 = plus[p];
      const Vector& x2 = plus[q];
      const Vector f1 = phi_of(x1), f2 = phi_of(x2);
      Vector lhs = phi_of(bracket(a, x1, x2));
      Vector rhs = bracket(a, f1, x2) + bracket(a, x1, f2) - phinv_of(bracket(a, f1, f2));
      if (lhs != rhs) return Check::identity("phi", {p, q}, lhs, rhs);
    }
  return Check::pass();
}

/// J(x + ξ) = -φ⁻¹(ξ) + φ(x), in the ambient basis.
inline Matrix J_from_phi(const LeibnizAlgebra& a, const Matrix& e, const Matrix& phi) {
  require(verify_product_integrability(a, e).ok && is_involution(e), ErrorCode::NotInvolution,
          "E is not a product structure");
  auto [plus, minus] = detail::product_eigenspaces(a, e);
  require(phi.rows() == minus.dim() && phi.cols() == plus.dim(), ErrorCode::DimensionMismatch,
          "phi must be " + std::to_string(minus.dim()) + "x" + std::to_string(plus.dim()));
  require(is_nonsingular(phi), ErrorCode::SingularMatrix, "phi is not invertible");
  if (Check c = check_phi_identity(a, e, phi); !c.ok) {
    const auto& w = *c.witness;
    fail(ErrorCode::PhiIdentityFails, "at pair (" + std::to_string(w.indices[0]) + ", " +
                                          std::to_string(w.indices[1]) + "): " + w.lhs.str() + " vs " + w.rhs.str());
  }
  const std::size_t k = plus.dim();
  const Matrix phinv = invert(phi);
  const Matrix local = block(Matrix(k, k, phi.field()), -phinv, phi, Matrix(k, k, phi.field()));
  std::vector<Vector> cols = plus.basis();
  cols.insert(cols.end(), minus.basis().begin(), minus.basis().end());
  Field f = join(phi.field(), e.field());
  const Matrix p = Matrix::from_columns(a.dim(), cols, f);
  return p * local * invert(p);
}

struct ProductComplexCorrespondence {
  Matrix j;
  bool is_product = false;
  bool is_complex = false;
  bool agree = false;
};

/// J = iE over Q(i), with both integrability verdicts.
inline ProductComplexCorrespondence product_iff_iE(const LeibnizAlgebra& a, const Matrix& e) {
  require(a.field() == Field::Gaussian, ErrorCode::WrongField, "expects an algebra over Q(i)");
  detail::require_endo(a, e);
  ProductComplexCorrespondence out;
  out.j = Scalar::i() * e.promoted(Field::Gaussian);
  out.is_product = is_involution(e) && verify_product_integrability(a, e).ok;
  out.is_complex = is_anti_involution(out.j) && verify_complex_integrability(a, out.j).ok;
  out.agree = out.is_product == out.is_complex;
  return out;
}

/// Dendriform structures on the eigenspaces of E induced by a complex product
/// pair: x1◁x2 = -π J[x1, Jx2] and x1▷x2 = -π J[Jx1, x2], with π the
/// projection onto the same eigenspace. Coordinates are in the eigenbases.
inline std::pair<DendriformAlgebra, DendriformAlgebra> induced_dendriform_on_eigenspaces(const LeibnizAlgebra& a,
                                                                                        const Matrix& j,
                                                                                        const Matrix& e) {
  Check c = check_complex_product_pair(a, j, e);
  require(c.ok, ErrorCode::NotComplexProduct, "not a complex product structure (" + c.reason + ")");
  auto [plus, minus] = detail::product_eigenspaces(a, e);
  const std::size_t n = a.dim();
  const Field f = join(a.field(), join(j.field(), e.field()));
  const Scalar half(1, 2);
  const Matrix id = Matrix::identity(n, f);
  auto induce = [&](const Subspace& w, const Matrix& proj) {
    DendriformAlgebra d(w.dim(), f);
    for (std::size_t p = 0; p < w.dim(); ++p)
      for (std::size_t q = 0; q < w.dim(); ++q) {
        const Vector& x1 = w[p];
        const Vector& x2 = w[q];
        d.left().set_basis_product(p, q, w.coordinates_of(-(proj * (j * bracket(a, x1, j * x2)))));
        d.right().set_basis_product(p, q, w.coordinates_of(-(proj * (j * bracket(a, j * x1, x2)))));
      }
    return d;
  };
  return {induce(plus, half * (id + e)), induce(minus, half * (id - e))};
}

}  // namespace leibniz
