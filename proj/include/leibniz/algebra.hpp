#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/check.hpp"
#include "leibniz/error.hpp"
#include "leibniz/forms.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

/// Bilinear product on an n-dimensional space given by structure constants:
/// e_i * e_j = sum_k c[i][j][k] e_k. Stored as n*n coordinate vectors.
class Product {
 public:
  Product() = default;
  explicit Product(std::size_t n, Field f = Field::Rational) : n_(n), field_(f), table_(n * n, Vector(n, f)) {}

  std::size_t dim() const { return n_; }
  Field field() const { return field_; }

  const Vector& on_basis(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return table_[i * n_ + j][k]; }

  void set(std::size_t i, std::size_t j, std::size_t k, Scalar c) {
    check_index(i);
    check_index(j);
    check_index(k);
    field_ = join(field_, c.field());
    table_[i * n_ + j].set(k, std::move(c));
  }
  void set_basis_product(std::size_t i, std::size_t j, const Vector& v) {
    require(v.size() == n_, ErrorCode::DimensionMismatch, "product value has wrong length");
    for (std::size_t k = 0; k < n_; ++k) set(i, j, k, v[k]);
  }

  Vector apply(const Vector& x, const Vector& y) const {
    require(x.size() == n_ && y.size() == n_, ErrorCode::DimensionMismatch,
            "operands of length " + std::to_string(x.size()) + ", " + std::to_string(y.size()) +
                " in dimension " + std::to_string(n_));
    Vector out(n_, join(field_, join(x.field(), y.field())));
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (y[j].is_zero()) continue;
        out.axpy(x[i] * y[j], on_basis(i, j));
      }
    }
    return out;
  }

  /// Matrix of y -> x * y.
  Matrix left(const Vector& x) const {
    Matrix m(n_, n_, field_);
    for (std::size_t j = 0; j < n_; ++j) m.set_col(j, apply(x, Vector::unit(n_, j, field_)));
    return m;
  }
  /// Matrix of y -> y * x.
  Matrix right(const Vector& x) const {
    Matrix m(n_, n_, field_);
    for (std::size_t j = 0; j < n_; ++j) m.set_col(j, apply(Vector::unit(n_, j, field_), x));
    return m;
  }
  Matrix left(std::size_t i) const {
    Matrix m(n_, n_, field_);
    for (std::size_t j = 0; j < n_; ++j) m.set_col(j, on_basis(i, j));
    return m;
  }
  Matrix right(std::size_t i) const {
    Matrix m(n_, n_, field_);
    for (std::size_t j = 0; j < n_; ++j) m.set_col(j, on_basis(j, i));
    return m;
  }

  Product promoted(Field f) const {
    Product p = *this;
    for (auto& v : p.table_) v = v.promoted(f);
    p.field_ = join(field_, f);
    return p;
  }

  bool is_zero() const {
    for (const auto& v : table_)
      if (!v.is_zero()) return false;
    return true;
  }

  friend Product operator+(const Product& a, const Product& b) {
    require(a.n_ == b.n_, ErrorCode::DimensionMismatch, "sum of products of different dimension");
    Product p(a.n_, join(a.field_, b.field_));
    for (std::size_t t = 0; t < a.table_.size(); ++t) p.table_[t] = a.table_[t] + b.table_[t];
    return p;
  }
  friend bool operator==(const Product& a, const Product& b) { return a.n_ == b.n_ && a.table_ == b.table_; }
  friend bool operator!=(const Product& a, const Product& b) { return !(a == b); }

 private:
  void check_index(std::size_t i) const {
    require(i < n_, ErrorCode::DimensionMismatch, "basis index " + std::to_string(i) + " out of range");
  }

  std::size_t n_ = 0;
  Field field_ = Field::Rational;
  std::vector<Vector> table_;
};

/// Structure constants of a (left) Leibniz algebra plus optional basis labels.
class LeibnizAlgebra {
 public:
  LeibnizAlgebra() = default;
  explicit LeibnizAlgebra(std::size_t n, Field f = Field::Rational) : product_(n, f) {}
  explicit LeibnizAlgebra(Product p) : product_(std::move(p)) {}

  std::size_t dim() const { return product_.dim(); }
  Field field() const { return product_.field(); }
  const Product& product() const { return product_; }

  void set(std::size_t i, std::size_t j, std::size_t k, Scalar c) { product_.set(i, j, k, std::move(c)); }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return product_.constant(i, j, k); }
  const Vector& on_basis(std::size_t i, std::size_t j) const { return product_.on_basis(i, j); }

  Matrix left(std::size_t i) const { return product_.left(i); }
  Matrix right(std::size_t i) const { return product_.right(i); }
  Matrix left(const Vector& x) const { return product_.left(x); }
  Matrix right(const Vector& x) const { return product_.right(x); }

  Vector unit(std::size_t i) const { return Vector::unit(dim(), i, field()); }
  Vector zero() const { return Vector(dim(), field()); }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    require(labels.empty() || labels.size() == dim(), ErrorCode::DimensionMismatch, "label count");
    labels_ = std::move(labels);
  }

  /// Same constants tagged with the join of the current field and `f`.
  LeibnizAlgebra promoted(Field f) const {
    LeibnizAlgebra a(product_.promoted(f));
    a.labels_ = labels_;
    return a;
  }
  /// Reinterprets the constants in `f`; demotion requires real constants.
  LeibnizAlgebra in_field(Field f) const {
    LeibnizAlgebra a(dim(), f);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k) a.set(i, j, k, constant(i, j, k).in_field(f));
    a.labels_ = labels_;
    return a;
  }

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) { return a.product_ == b.product_; }
  friend bool operator!=(const LeibnizAlgebra& a, const LeibnizAlgebra& b) { return !(a == b); }

 private:
  Product product_;
  std::vector<std::string> labels_;
};

inline Vector bracket(const LeibnizAlgebra& a, const Vector& x, const Vector& y) { return a.product().apply(x, y); }

/// Linearly independent list of vectors in an ambient space of dimension n.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, std::vector<Vector> basis) : ambient_(ambient), basis_(std::move(basis)) {
    for (const auto& v : basis_)
      require(v.size() == ambient_, ErrorCode::DimensionMismatch, "subspace vector length");
    require(rank_of(basis_, ambient_) == basis_.size(), ErrorCode::NotIndependent,
            "subspace basis is linearly dependent");
  }

  static Subspace full(std::size_t n, Field f = Field::Rational) {
    std::vector<Vector> b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(Vector::unit(n, i, f));
    return {n, std::move(b)};
  }
  static Subspace zero(std::size_t n) { return {n, {}}; }
  /// Span of the listed coordinate vectors e_i.
  static Subspace coordinates(std::size_t n, const std::vector<std::size_t>& idx, Field f = Field::Rational) {
    std::vector<Vector> b;
    for (auto i : idx) b.push_back(Vector::unit(n, i, f));
    return {n, std::move(b)};
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const Vector& operator[](std::size_t i) const { return basis_[i]; }

  bool contains(const Vector& v) const { return in_span(basis_, v); }
  /// Coordinates of a member vector relative to this basis.
  Vector coordinates_of(const Vector& v) const {
    auto c = coordinates_in(basis_, v);
    require(c.has_value(), ErrorCode::NotSubalgebra, "vector " + v.str() + " is outside the subspace");
    return *c;
  }
  /// Ambient vector with the given coordinates in this basis.
  Vector embed(const Vector& coords) const {
    Vector v(ambient_, coords.field());
    for (std::size_t i = 0; i < basis_.size(); ++i) v.axpy(coords[i], basis_[i]);
    return v;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
};

/// Whether U + W is the whole space with U ∩ W = 0.
inline bool is_direct_sum(const Subspace& u, const Subspace& w) {
  if (u.dim() + w.dim() != u.ambient() || u.ambient() != w.ambient()) return false;
  std::vector<Vector> all = u.basis();
  all.insert(all.end(), w.basis().begin(), w.basis().end());
  return rank_of(all, u.ambient()) == u.ambient();
}

/// Left Leibniz identity [x,[y,z]] = [[x,y],z] + [y,[x,z]] on all basis triples.
inline Check verify_leibniz(const LeibnizAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < n; ++i) {
    l.push_back(a.left(i));
    r.push_back(a.right(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = l[i] * a.on_basis(j, k);
        Vector rhs = r[k] * a.on_basis(i, j) + l[j] * a.on_basis(i, k);
        if (lhs != rhs) return Check::identity("leibniz", {i, j, k}, lhs, rhs);
      }
  return Check::pass();
}

namespace detail {

inline void require_ambient(const LeibnizAlgebra& a, const Subspace& w) {
  require(w.ambient() == a.dim(), ErrorCode::DimensionMismatch,
          "subspace of a " + std::to_string(w.ambient()) + "-dimensional space in dimension " +
              std::to_string(a.dim()));
}

}  // namespace detail

inline bool is_subalgebra(const LeibnizAlgebra& a, const Subspace& w) {
  detail::require_ambient(a, w);
  for (const auto& x : w.basis())
    for (const auto& y : w.basis())
      if (!w.contains(bracket(a, x, y))) return false;
  return true;
}

inline bool is_abelian_subalgebra(const LeibnizAlgebra& a, const Subspace& w) {
  detail::require_ambient(a, w);
  for (const auto& x : w.basis())
    for (const auto& y : w.basis())
      if (!bracket(a, x, y).is_zero()) return false;
  return true;
}

inline bool is_two_sided_ideal(const LeibnizAlgebra& a, const Subspace& w) {
  detail::require_ambient(a, w);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vector e = a.unit(i);
    for (const auto& x : w.basis()) {
      if (!w.contains(bracket(a, e, x)) || !w.contains(bracket(a, x, e))) return false;
    }
  }
  return true;
}

/// [U, W] = [W, U] = 0 for the two subspaces.
inline bool brackets_vanish_between(const LeibnizAlgebra& a, const Subspace& u, const Subspace& w) {
  for (const auto& x : u.basis())
    for (const auto& y : w.basis())
      if (!bracket(a, x, y).is_zero() || !bracket(a, y, x).is_zero()) return false;
  return true;
}

inline LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  require(a.field() == b.field(), ErrorCode::FieldMismatch,
          "direct sum of algebras over " + std::string(to_string(a.field())) + " and " +
              std::string(to_string(b.field())));
  const std::size_t n = a.dim();
  const std::size_t m = b.dim();
  LeibnizAlgebra s(n + m, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.constant(i, j, k).is_zero()) s.set(i, j, k, a.constant(i, j, k));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (!b.constant(i, j, k).is_zero()) s.set(n + i, n + j, n + k, b.constant(i, j, k));
  return s;
}

/// The bracket of a subalgebra written in the coordinates of its basis.
inline LeibnizAlgebra restricted_algebra(const LeibnizAlgebra& a, const Subspace& w) {
  detail::require_ambient(a, w);
  Field f = a.field();
  for (const auto& v : w.basis()) f = join(f, v.field());
  LeibnizAlgebra r(w.dim(), f);
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) {
      Vector c = w.coordinates_of(bracket(a, w[i], w[j]));
      for (std::size_t k = 0; k < w.dim(); ++k)
        if (!c[k].is_zero()) r.set(i, j, k, c[k]);
    }
  return r;
}

/// Change of basis: the new basis vector f_j is column j of P (invertible).
/// Returns the constants of the same bracket in the basis f.
inline LeibnizAlgebra change_basis(const LeibnizAlgebra& a, const Matrix& p) {
  const std::size_t n = a.dim();
  require(p.rows() == n && p.cols() == n, ErrorCode::DimensionMismatch, "basis change shape");
  const Matrix inv = invert(p);
  LeibnizAlgebra b(n, join(a.field(), p.field()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector c = inv * bracket(a, p.col(i), p.col(j));
      for (std::size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) b.set(i, j, k, c[k]);
    }
  return b;
}

/// B(e_i, e_j) = tr(L_i L_j) with L the left multiplications. For Lie
/// algebras this is the Killing form.
inline BilinearForm killing_form(const LeibnizAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back(a.left(i));
  Matrix b(n, n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.set(i, j, (l[i] * l[j]).trace());
  return BilinearForm(std::move(b));
}

}  // namespace leibniz
