#pragma once

#include <cstddef>
#include <string_view>
#include <utility>

#include "leibniz/error.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

enum class Symmetry { Symmetric, Skew, None };

inline std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "SYMMETRIC";
    case Symmetry::Skew: return "SKEW";
    case Symmetry::None: return "NONE";
  }
  return "NONE";
}

/// Bilinear form with matrix B(i,j) = form(e_i, e_j). The symmetry tag is
/// computed from the matrix (the zero form reads as symmetric).
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix m) : m_(std::move(m)) {
    require(m_.is_square(), ErrorCode::DimensionMismatch, "bilinear form must be square, got " + m_.shape());
    if (m_.is_symmetric()) {
      sym_ = Symmetry::Symmetric;
    } else if (m_.is_skew()) {
      sym_ = Symmetry::Skew;
    } else {
      sym_ = Symmetry::None;
    }
  }

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  Field field() const { return m_.field(); }
  Symmetry symmetry() const { return sym_; }
  bool is_symmetric() const { return sym_ == Symmetry::Symmetric; }
  bool is_skew() const { return m_.is_skew(); }
  bool is_nondegenerate() const { return is_nonsingular(m_); }

  Scalar operator()(const Vector& x, const Vector& y) const { return bilinear(m_, x, y); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
  Symmetry sym_ = Symmetry::Symmetric;
};

}  // namespace leibniz
