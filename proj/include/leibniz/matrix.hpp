#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/error.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

/// Coordinate column relative to a fixed basis.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n, Field f = Field::Rational) : data_(n, Scalar::zero(f)), field_(f) {}
  Vector(std::initializer_list<Scalar> xs) : data_(xs) { refresh_field(); }
  explicit Vector(std::vector<Scalar> xs) : data_(std::move(xs)) { refresh_field(); }

  static Vector unit(std::size_t n, std::size_t i, Field f = Field::Rational) {
    Vector v(n, f);
    v.data_[i] = Scalar::one(f);
    return v;
  }

  std::size_t size() const { return data_.size(); }
  Field field() const { return field_; }
  const Scalar& operator[](std::size_t i) const { return data_[i]; }
  void set(std::size_t i, Scalar s) {
    field_ = join(field_, s.field());
    data_[i] = std::move(s);
  }
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  Vector promoted(Field f) const {
    Vector v = *this;
    for (auto& s : v.data_) s = s.promoted(f);
    v.field_ = join(field_, f);
    return v;
  }

  Vector conjugate() const {
    Vector v = *this;
    for (auto& s : v.data_) s = s.conjugate();
    return v;
  }

  Vector& operator+=(const Vector& o) {
    check_size(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    field_ = join(field_, o.field_);
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    check_size(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    field_ = join(field_, o.field_);
    return *this;
  }
  Vector& operator*=(const Scalar& a) {
    for (auto& s : data_) s *= a;
    field_ = join(field_, a.field());
    return *this;
  }
  /// v += a * o, skipping the work when a is zero.
  void axpy(const Scalar& a, const Vector& o) {
    check_size(o);
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (!o.data_[i].is_zero()) data_[i] += a * o.data_[i];
    }
    field_ = join(field_, join(a.field(), o.field_));
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator-(Vector a) {
    for (auto& s : a.data_) s = -s;
    return a;
  }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector& a, const Vector& b) { return a.data_ == b.data_; }
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (i) out += ", ";
      out += data_[i].str();
    }
    return out + ")";
  }

 private:
  void check_size(const Vector& o) const {
    require(o.size() == size(), ErrorCode::DimensionMismatch,
            "vector sizes " + std::to_string(size()) + " and " + std::to_string(o.size()));
  }
  void refresh_field() {
    field_ = Field::Rational;
    for (const auto& s : data_) field_ = join(field_, s.field());
  }

  std::vector<Scalar> data_;
  Field field_ = Field::Rational;
};

inline Scalar dot(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "dot product of unequal sizes");
  Scalar acc = Scalar::zero(join(a.field(), b.field()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

/// Dense row-major matrix. Square matrices act on columns: (M v)_i = sum_j M(i,j) v_j,
/// so column j holds the image of the j-th basis vector. Bilinear forms use
/// M(i,j) = form(e_i, e_j).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f = Field::Rational)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)), field_(f) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      require(r.size() == cols_, ErrorCode::DimensionMismatch, "ragged matrix literal");
      for (const auto& s : r) {
        field_ = join(field_, s.field());
        data_.push_back(s);
      }
    }
  }

  static Matrix identity(std::size_t n, Field f = Field::Rational) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Scalar::one(f);
    return m;
  }
  static Matrix diagonal(const std::vector<Scalar>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
    return m;
  }
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols, Field f = Field::Rational) {
    Matrix m(rows, cols.size(), f);
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Field field() const { return field_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar s) {
    field_ = join(field_, s.field());
    data_[r * cols_ + c] = std::move(s);
  }
  void add_to(std::size_t r, std::size_t c, const Scalar& s) {
    field_ = join(field_, s.field());
    data_[r * cols_ + c] += s;
  }

  Vector col(std::size_t c) const {
    Vector v(rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r) v.set(r, (*this)(r, c));
    return v;
  }
  Vector row(std::size_t r) const {
    Vector v(cols_, field_);
    for (std::size_t c = 0; c < cols_; ++c) v.set(c, (*this)(r, c));
    return v;
  }
  void set_col(std::size_t c, const Vector& v) {
    require(v.size() == rows_, ErrorCode::DimensionMismatch, "column length");
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, v[r]);
  }

  Matrix promoted(Field f) const {
    Matrix m = *this;
    for (auto& s : m.data_) s = s.promoted(f);
    m.field_ = join(field_, f);
    return m;
  }
  Matrix conjugate() const {
    Matrix m = *this;
    for (auto& s : m.data_) s = s.conjugate();
    return m;
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
  }
  bool is_symmetric() const { return is_square() && *this == transpose(); }
  bool is_skew() const { return is_square() && *this == -transpose(); }
  bool all_real() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_real(); });
  }

  Scalar trace() const {
    require(is_square(), ErrorCode::DimensionMismatch, "trace of non-square matrix");
    Scalar t = Scalar::zero(field_);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    field_ = join(field_, o.field_);
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    field_ = join(field_, o.field_);
    return *this;
  }
  Matrix& operator*=(const Scalar& a) {
    for (auto& s : data_) s *= a;
    field_ = join(field_, a.field());
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& s : a.data_) s = -s;
    return a;
  }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorCode::DimensionMismatch,
            "product of " + a.shape() + " and " + b.shape());
    Matrix p(a.rows_, b.cols_, join(a.field_, b.field_));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b(k, j);
          if (!bkj.is_zero()) p.data_[i * p.cols_ + j] += aik * bkj;
        }
      }
    }
    return p;
  }
  friend Vector operator*(const Matrix& a, const Vector& v) {
    require(a.cols_ == v.size(), ErrorCode::DimensionMismatch, "matrix-vector product of " + a.shape());
    Vector out(a.rows_, join(a.field_, v.field()));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      Scalar acc = Scalar::zero(out.field());
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (!a(i, j).is_zero() && !v[j].is_zero()) acc += a(i, j) * v[j];
      }
      out.set(i, std::move(acc));
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }
  std::string str() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) out += ", ";
      out += row(r).str();
    }
    return out + "]";
  }

 private:
  void check_same(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DimensionMismatch, shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
  Field field_ = Field::Rational;
};

/// Bilinear value x^T M y.
inline Scalar bilinear(const Matrix& m, const Vector& x, const Vector& y) { return dot(x, m * y); }

inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols(), join(a.field(), b.field()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.set(r, c, a(r, c));
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m.set(a.rows() + r, a.cols() + c, b(r, c));
  return m;
}

/// [[a, b], [c, d]] assembled from four blocks.
inline Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  require(a.rows() == b.rows() && c.rows() == d.rows() && a.cols() == c.cols() && b.cols() == d.cols(),
          ErrorCode::DimensionMismatch, "incompatible blocks");
  Field f = join(join(a.field(), b.field()), join(c.field(), d.field()));
  Matrix m(a.rows() + c.rows(), a.cols() + b.cols(), f);
  auto put = [&m](const Matrix& src, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < src.rows(); ++r)
      for (std::size_t c = 0; c < src.cols(); ++c) m.set(r0 + r, c0 + c, src(r, c));
  };
  put(a, 0, 0);
  put(b, 0, a.cols());
  put(c, a.rows(), 0);
  put(d, a.rows(), a.cols());
  return m;
}

/// Reduced row echelon form with the list of pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

namespace detail {

/// Common multiple of every denominator in a row, so the scaled row has
/// Gaussian-integer entries.
inline BigInt row_denominator_lcm(const Matrix& m, std::size_t r) {
  BigInt l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Scalar& s = m(r, c);
    if (s.is_zero()) continue;
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(s.real()));
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(s.imag()));
  }
  return l;
}

}  // namespace detail

/// Fraction-free (Bareiss) forward elimination on the integer-scaled matrix,
/// followed by normalization and back substitution.
inline Echelon rref(const Matrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  const Field f = input.field();
  Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r) {
    Scalar scale = Scalar(Rational(detail::row_denominator_lcm(input, r))).promoted(f);
    for (std::size_t c = 0; c < cols; ++c) {
      if (!input(r, c).is_zero()) m.set(r, c, input(r, c) * scale);
    }
  }

  std::vector<std::size_t> pivots;
  Scalar prev = Scalar::one(f);
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t p = pr;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != pr) {
      for (std::size_t j = 0; j < cols; ++j) {
        Scalar tmp = m(p, j);
        m.set(p, j, m(pr, j));
        m.set(pr, j, std::move(tmp));
      }
    }
    const Scalar pivot = m(pr, c);
    for (std::size_t i = pr + 1; i < rows; ++i) {
      const Scalar lead = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Scalar v = pivot * m(i, j);
        if (!lead.is_zero() && !m(pr, j).is_zero()) v -= lead * m(pr, j);
        m.set(i, j, v / prev);
      }
      m.set(i, c, Scalar::zero(f));
    }
    prev = pivot;
    pivots.push_back(c);
    ++pr;
  }

  // Normalize pivot rows and clear entries above each pivot.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    const Scalar pivot = m(k, c);
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(k, j).is_zero()) m.set(k, j, m(k, j) / pivot);
    }
    for (std::size_t i = 0; i < k; ++i) {
      const Scalar factor = m(i, c);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(k, j).is_zero()) m.set(i, j, m(i, j) - factor * m(k, j));
      }
    }
  }
  for (std::size_t r = pivots.size(); r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Scalar::zero(f));
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

inline bool is_nonsingular(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

namespace detail {

/// Kernel basis read off a reduced echelon form: one vector per free column,
/// with a 1 in that column.
inline std::vector<Vector> kernel_from_echelon(const Echelon& e, std::size_t ncols, Field f) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(ncols, f);
    v.set(free, Scalar::one(f));
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      const Scalar& entry = e.reduced(k, free);
      if (!entry.is_zero()) v.set(e.pivots[k], -entry);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

inline std::vector<Vector> kernel(const Matrix& m) {
  return detail::kernel_from_echelon(rref(m), m.cols(), m.field());
}

struct LinearSolution {
  Vector solution;
  std::vector<Vector> nullspace;
};

/// Exact particular solution of A x = b plus a basis of ker(A); nullopt when
/// rank([A|b]) > rank(A).
inline std::optional<LinearSolution> solve_linear(const Matrix& a, const Vector& b) {
  require(a.rows() == b.size(), ErrorCode::DimensionMismatch,
          "system " + a.shape() + " with right-hand side of length " + std::to_string(b.size()));
  const Field f = join(a.field(), b.field());
  Matrix aug(a.rows(), a.cols() + 1, f);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a(r, c));
    aug.set(r, a.cols(), b[r]);
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;

  Vector x(a.cols(), f);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x.set(e.pivots[k], e.reduced(k, a.cols()));
  Echelon ea{e.reduced, e.pivots};
  std::vector<Vector> null = detail::kernel_from_echelon(ea, a.cols(), f);
  return LinearSolution{std::move(x), std::move(null)};
}

inline Matrix invert(const Matrix& m) {
  require(m.is_square(), ErrorCode::DimensionMismatch, "inverse of non-square " + m.shape());
  const std::size_t n = m.rows();
  const Field f = m.field();
  Matrix aug(n, 2 * n, f);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m(r, c));
    aug.set(r, n + r, Scalar::one(f));
  }
  Echelon e = rref(aug);
  require(n == 0 || (e.pivots.size() >= n && e.pivots[n - 1] == n - 1), ErrorCode::SingularMatrix,
          "matrix " + m.str() + " is singular");
  Matrix inv(n, n, f);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, e.reduced(r, n + c));
  return inv;
}

/// Basis of ker(M - lambda I), in reduced echelon order; empty when lambda is
/// not an eigenvalue.
inline std::vector<Vector> eigenspace(const Matrix& m, const Scalar& lambda) {
  require(m.is_square(), ErrorCode::DimensionMismatch, "eigenspace of non-square " + m.shape());
  const Field f = join(m.field(), lambda.field());
  Matrix shifted = m.promoted(f) - lambda * Matrix::identity(m.rows(), f);
  return kernel(shifted);
}

/// Rank of a list of vectors of a common length `n`.
inline std::size_t rank_of(const std::vector<Vector>& vs, std::size_t n) {
  if (vs.empty()) return 0;
  Field f = Field::Rational;
  for (const auto& v : vs) f = join(f, v.field());
  return rank(Matrix::from_columns(n, vs, f));
}

/// Coordinates of v in the (independent) list `basis`, if v lies in its span.
inline std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v) {
  Field f = v.field();
  for (const auto& b : basis) f = join(f, b.field());
  auto sol = solve_linear(Matrix::from_columns(v.size(), basis, f), v);
  if (!sol) return std::nullopt;
  return sol->solution;
}

inline bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  if (v.is_zero()) return true;
  return coordinates_in(basis, v).has_value();
}

}  // namespace leibniz
