#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "leibniz/algebra.hpp"
#include "leibniz/check.hpp"
#include "leibniz/complex.hpp"
#include "leibniz/dendriform.hpp"
#include "leibniz/error.hpp"
#include "leibniz/forms.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/product.hpp"
#include "leibniz/symplectic.hpp"

namespace leibniz {

namespace detail {

/// First basis pair where B(Tx,Ty) differs from sign*B(x,y).
inline Check compat_check(const BilinearForm& b, const Matrix& t, const Scalar& sign) {
  const Matrix lhs = t.transpose() * b.matrix() * t;
  const Matrix rhs = sign * b.matrix();
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (lhs(i, j) != rhs(i, j)) {
        Check c = Check::failure(Check::reason::kCompatFails);
        c.witness = Witness{{i, j}, scalar_vector(lhs(i, j)), scalar_vector(rhs(i, j))};
        return c;
      }
  return Check::pass();
}

}  // namespace detail

/// B symplectic, E paracomplex, B(Ex,Ey) = -B(x,y).
inline Check check_para_kahler(const LeibnizAlgebra& a, const BilinearForm& b, const Matrix& e) {
  detail::require_endo(a, e);
  if (Check c = verify_symplectic(a, b); !c.ok) return c;
  if (!is_involution(e)) return Check::failure(Check::reason::kNotParacomplex, "E*E != I");
  const StructureReport rep = classify_product(a, e);
  if (!rep.is_paracomplex) {
    Check c = Check::failure(Check::reason::kNotParacomplex,
                             rep.is_product ? "eigenspace dimensions differ" : "E is not integrable");
    if (!rep.is_product) c.witness = verify_product_integrability(a, e).witness;
    return c;
  }
  return detail::compat_check(b, e, Scalar(-1));
}

/// W+ and W- isotropic subalgebras with W+ ⊕ W- the whole space.
inline Check isotropic_decomposition_check(const LeibnizAlgebra& a, const BilinearForm& b, const Subspace& wplus,
                                           const Subspace& wminus) {
  Check s = verify_symplectic(a, b);
  require(s.ok, ErrorCode::NotSymplectic, "form is not symplectic (" + s.reason + ")");
  if (Check c = detail::isotropy_check(b, wplus, "+1 part"); !c.ok) return c;
  if (Check c = detail::isotropy_check(b, wminus, "-1 part"); !c.ok) return c;
  if (!is_subalgebra(a, wplus)) return Check::failure(Check::reason::kSubalgebraFails, "+1 part");
  if (!is_subalgebra(a, wminus)) return Check::failure(Check::reason::kSubalgebraFails, "-1 part");
  if (!is_direct_sum(wplus, wminus)) return Check::failure(Check::reason::kNotDirectSum);
  return Check::pass();
}

/// B symplectic, J complex, B(Jx,Jy) = B(x,y). Complex structures live on
/// rational algebras; a Q(i) algebra is reported as NOT_COMPLEX.
inline Check check_pseudo_kahler(const LeibnizAlgebra& a, const BilinearForm& b, const Matrix& j) {
  detail::require_endo(a, j);
  if (Check c = verify_symplectic(a, b); !c.ok) return c;
  if (a.field() != Field::Rational || !j.all_real())
    return Check::failure(Check::reason::kNotComplex, "complex structures need a rational algebra and J");
  if (!is_anti_involution(j)) return Check::failure(Check::reason::kNotComplex, "J*J != -I");
  if (Check c = verify_complex_integrability(a, j); !c.ok) {
    c.reason = Check::reason::kNotComplex;
    return c;
  }
  return detail::compat_check(b, j, Scalar(1));
}

/// S(x,y) = B(x,Ey).
inline BilinearForm S_from_B_E(const LeibnizAlgebra& a, const BilinearForm& b, const Matrix& e) {
  Check c = check_para_kahler(a, b, e);
  require(c.ok, ErrorCode::NotParaKahler, "not para-Kahler (" + c.reason + ")");
  BilinearForm s(b.matrix() * e);
  require(s.is_skew(), ErrorCode::NotSkew, "B*E is not skew");
  return s;
}

/// S(x,y) = B(x,Jy).
inline BilinearForm S_from_B_J(const LeibnizAlgebra& a, const BilinearForm& b, const Matrix& j) {
  Check c = check_pseudo_kahler(a, b, j);
  require(c.ok, ErrorCode::NotPseudoKahler, "not pseudo-Kahler (" + c.reason + ")");
  BilinearForm s(b.matrix() * j);
  require(s.is_skew(), ErrorCode::NotSkew, "B*J is not skew");
  return s;
}

/// An algebra with a nonsingular skew form.
struct PseudoRiemannian {
  LeibnizAlgebra algebra;
  BilinearForm s;

  PseudoRiemannian(LeibnizAlgebra a, BilinearForm form) : algebra(std::move(a)), s(std::move(form)) {
    require(s.dim() == algebra.dim(), ErrorCode::DimensionMismatch, "form and algebra dimensions differ");
    require(s.is_skew(), ErrorCode::NotSkew, "S must be skew-symmetric");
    require(s.is_nondegenerate(), ErrorCode::DegenerateForm, "S is singular");
  }
};

struct LeviCivitaPair {
  Product star;
  Product starstar;
};

/// Solves 2S(x∗y,z) = S([x,y],z) + S([y,z],x) + S([z,y],x) + S([x,z],y) and
/// the ⋆ companion (last three terms negated) for every basis pair.
inline LeviCivitaPair levi_civita(const PseudoRiemannian& p) {
  const LeibnizAlgebra& a = p.algebra;
  const BilinearForm& s = p.s;
  require(s.is_nondegenerate(), ErrorCode::DegenerateForm, "S is singular");
  const std::size_t n = a.dim();
  const Field f = join(a.field(), s.field());
  // S(v, e_k) = (S^T v)_k, so v = (S^T)^{-1} of the right-hand sides.
  const Matrix solver = Scalar(1, 2) * invert(s.matrix().transpose());
  LeviCivitaPair out{Product(n, f), Product(n, f)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = a.unit(i), y = a.unit(j);
      Vector star(n, f), starstar(n, f);
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar head = s(a.on_basis(i, j), a.unit(k));
        const Scalar tail = s(a.on_basis(j, k), x) + s(a.on_basis(k, j), x) + s(a.on_basis(i, k), y);
        star.set(k, head + tail);
        starstar.set(k, head - tail);
      }
      out.star.set_basis_product(i, j, solver * star);
      out.starstar.set_basis_product(i, j, solver * starstar);
    }
  return out;
}

/// J(x+ξ) = -ω♯⁻¹(ξ) + ω♯(x) on the phase space of D, where ω♯(x) = ω(x,·).
inline Matrix omega_to_J(const DendriformAlgebra& d, const BilinearForm& omega) {
  Check c = verify_invariant_form(d, omega);
  require(c.ok, ErrorCode::NotInvariant, "form is not invariant (" + c.axiom + ")");
  const Matrix sharp = omega.matrix().transpose();
  const std::size_t n = d.dim();
  const Field f = join(d.field(), omega.field());
  return block(Matrix(n, n, f), -invert(sharp), sharp, Matrix(n, n, f));
}

struct KahlerTriple {
  LeibnizAlgebra algebra;
  BilinearForm form;
  Matrix endo;
};

/// Complex para-Kähler (A, B, E) to the real pseudo-Kähler (A_R, Re B, iE) on
/// the basis (e_1..e_n, ie_1..ie_n).
inline KahlerTriple realify(const LeibnizAlgebra& a, const BilinearForm& b, const Matrix& e) {
  const LeibnizAlgebra ac = a.promoted(Field::Gaussian);
  Check c = check_para_kahler(ac, b, e);
  require(c.ok, ErrorCode::NotParaKahler, "not para-Kahler (" + c.reason + ")");
  const std::size_t n = a.dim();
  LeibnizAlgebra ar(2 * n, Field::Rational);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar z = ac.constant(p, q, k);
        if (z.is_zero()) continue;
        // [e_p,e_q] = z e_k, [ie_p,e_q] = [e_p,ie_q] = iz e_k, [ie_p,ie_q] = -z e_k.
        const Scalar re(z.real()), im(z.imag());
        auto set = [&](std::size_t u, std::size_t v, const Scalar& r, const Scalar& s) {
          if (!r.is_zero()) ar.set(u, v, k, r);
          if (!s.is_zero()) ar.set(u, v, n + k, s);
        };
        set(p, q, re, im);
        set(n + p, q, -im, re);
        set(p, n + q, -im, re);
        set(n + p, n + q, -re, -im);
      }
  Matrix bre(n, n, Field::Rational), bim(n, n, Field::Rational);
  Matrix pe(n, n, Field::Rational), qe(n, n, Field::Rational);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      bre.set(r, s, Scalar(b.matrix()(r, s).real()));
      bim.set(r, s, Scalar(b.matrix()(r, s).imag()));
      pe.set(r, s, Scalar(e(r, s).real()));
      qe.set(r, s, Scalar(e(r, s).imag()));
    }
  // i(P + iQ) = -Q + iP, realified as [[Re, -Im], [Im, Re]].
  Matrix j = block(-qe, -pe, pe, -qe);
  Matrix br = block(bre, -bim, -bim, -bre);
  return {std::move(ar), BilinearForm(std::move(br)), std::move(j)};
}

/// Real pseudo-Kähler (A, B, J) to the complex para-Kähler (A_C, B_C, -iJ).
inline KahlerTriple complexify_pseudo_kahler(const LeibnizAlgebra& a, const BilinearForm& b, const Matrix& j) {
  Check c = check_pseudo_kahler(a, b, j);
  require(c.ok, ErrorCode::NotPseudoKahler, "not pseudo-Kahler (" + c.reason + ")");
  Matrix e = -Scalar::i() * j.promoted(Field::Gaussian);
  return {complexify(a), BilinearForm(b.matrix().promoted(Field::Gaussian)), std::move(e)};
}

}  // namespace leibniz
