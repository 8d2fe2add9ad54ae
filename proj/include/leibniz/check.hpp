#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

/// Basis indices at which an identity failed, with both evaluated sides.
/// Scalar identities report one-entry vectors.
struct Witness {
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;
};

/// Outcome of a verifier. A failed check carries a reason code, an optional
/// sub-label naming the failed axiom, and a witness when the failure comes
/// from an identity evaluated on basis elements.
struct Check {
  bool ok = true;
  std::string reason;
  std::string axiom;
  std::string detail;
  std::optional<Witness> witness;

  static Check pass() { return {}; }
  static Check failure(std::string reason, std::string detail = {}) {
    Check c;
    c.ok = false;
    c.reason = std::move(reason);
    c.detail = std::move(detail);
    return c;
  }
  static Check identity(std::string axiom, std::vector<std::size_t> idx, Vector lhs, Vector rhs) {
    Check c = failure(reason::kIdentityFails);
    c.axiom = std::move(axiom);
    c.witness = Witness{std::move(idx), std::move(lhs), std::move(rhs)};
    return c;
  }

  /// Reason codes shared by the verifiers.
  struct reason {
    static constexpr const char* kIdentityFails = "IDENTITY_FAILS";
    static constexpr const char* kNotSymmetric = "NOT_SYMMETRIC";
    static constexpr const char* kNotSkew = "NOT_SKEW";
    static constexpr const char* kDegenerate = "DEGENERATE";
    static constexpr const char* kSubalgebraFails = "SUBALGEBRA_FAILS";
    static constexpr const char* kIsotropyFails = "ISOTROPY_FAILS";
    static constexpr const char* kNotDirectSum = "NOT_DIRECT_SUM";
    static constexpr const char* kCompatFails = "COMPAT_FAILS";
    static constexpr const char* kNotProduct = "NOT_PRODUCT";
    static constexpr const char* kNotParacomplex = "NOT_PARACOMPLEX";
    static constexpr const char* kNotComplex = "NOT_COMPLEX";
    static constexpr const char* kNotAnticommuting = "NOT_ANTICOMMUTING";
    static constexpr const char* kNotCanonical = "NOT_CANONICAL_PAIRING";
    static constexpr const char* kNotLeibniz = "NOT_LEIBNIZ";
  };

  /// Prefixes the first failing sub-check's axiom label, keeping its witness.
  Check tagged(const std::string& prefix) const {
    Check c = *this;
    if (!c.ok) c.axiom = c.axiom.empty() ? prefix : prefix + "/" + c.axiom;
    return c;
  }
};

/// One-entry vector, for witnesses of scalar identities.
inline Vector scalar_vector(const Scalar& s) { return Vector{s}; }

}  // namespace leibniz
