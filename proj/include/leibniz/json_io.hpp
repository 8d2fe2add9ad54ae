#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "leibniz/algebra.hpp"
#include "leibniz/check.hpp"
#include "leibniz/dendriform.hpp"
#include "leibniz/error.hpp"
#include "leibniz/forms.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/representation.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

using Json = nlohmann::ordered_json;

namespace detail {

/// 1-based line and column of a byte offset.
inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void schema_error(const std::string& where, const std::string& what) {
  fail(ErrorCode::ParseError, where + ": " + what);
}

inline const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing \"") + key + "\"");
  return *it;
}

inline std::size_t index_value(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema_error(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline std::size_t index_in_range(const Json& j, std::size_t n, const std::string& where) {
  std::size_t v = index_value(j, where);
  if (v >= n) schema_error(where, "index " + std::to_string(v) + " out of range for dimension " + std::to_string(n));
  return v;
}

inline Field field_value(const Json& doc, const std::string& where, Field fallback = Field::Rational) {
  if (!doc.is_object() || !doc.contains("field")) return fallback;
  const Json& f = doc["field"];
  if (f == "Q") return Field::Rational;
  if (f == "Q(i)") return Field::Gaussian;
  schema_error(where + "/field", "expected \"Q\" or \"Q(i)\"");
}

inline Scalar scalar_value(const Json& j, Field f, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long long>()).promoted(f);
  if (!j.is_string()) schema_error(where, "expected a scalar string");
  try {
    return parse_scalar(j.get<std::string>(), f);
  } catch (const Error& e) {
    schema_error(where, e.message());
  }
}

inline bool validate_flag(const Json& doc) {
  if (!doc.is_object() || !doc.contains("validate")) return true;
  if (!doc["validate"].is_boolean()) schema_error("/validate", "expected a boolean");
  return doc["validate"].get<bool>();
}

inline std::string describe(const Check& c) {
  std::string s = c.reason;
  if (!c.axiom.empty()) s += " (" + c.axiom + ")";
  if (c.witness) {
    s += " at (";
    for (std::size_t t = 0; t < c.witness->indices.size(); ++t)
      s += (t ? ", " : "") + std::to_string(c.witness->indices[t]);
    s += "): " + c.witness->lhs.str() + " != " + c.witness->rhs.str();
  }
  if (!c.detail.empty()) s += "; " + c.detail;
  return s;
}

inline void validated(const Check& c, const std::string& what) {
  if (!c.ok) fail(ErrorCode::ValidationError, what + " fails validation: " + describe(c));
}

inline Product product_value(const Json& list, std::size_t n, Field f, const std::string& where) {
  Product p(n, f);
  if (!list.is_array()) schema_error(where, "expected an array of bracket entries");
  for (std::size_t t = 0; t < list.size(); ++t) {
    const std::string at = where + "/" + std::to_string(t);
    const Json& entry = list[t];
    const std::size_t i = index_in_range(member(entry, "i", at), n, at + "/i");
    const std::size_t j = index_in_range(member(entry, "j", at), n, at + "/j");
    const Json& value = member(entry, "value", at);
    if (!value.is_array()) schema_error(at + "/value", "expected an array");
    for (std::size_t u = 0; u < value.size(); ++u) {
      const std::string vat = at + "/value/" + std::to_string(u);
      const std::size_t k = index_in_range(member(value[u], "k", vat), n, vat + "/k");
      p.set(i, j, k, p.constant(i, j, k) + scalar_value(member(value[u], "c", vat), f, vat + "/c"));
    }
  }
  return p;
}

inline Json product_json(const Product& p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) {
      Json value = Json::array();
      for (std::size_t k = 0; k < p.dim(); ++k)
        if (!p.constant(i, j, k).is_zero()) value.push_back({{"k", k}, {"c", p.constant(i, j, k).str()}});
      if (!value.empty()) out.push_back({{"i", i}, {"j", j}, {"value", std::move(value)}});
    }
  return out;
}

inline std::size_t dim_value(const Json& doc, const std::string& where) {
  return index_value(member(doc, "dim", where), where + "/dim");
}

}  // namespace detail

/// Parses JSON text; syntax errors become ParseError with a line and column.
inline Json parse_json_text(const std::string& text, const std::string& source = "<input>") {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    fail(ErrorCode::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

/// "-" reads standard input.
inline Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::ParseError, path + ": cannot open file");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_json_text(text, path);
}

// ---- scalars, vectors, matrices ----

inline Json to_json(const Scalar& s) { return s.str(); }

inline Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v.entries()) out.push_back(s.str());
  return out;
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

/// Row-major array of scalar strings. Entries are read over Q(i); the result
/// is tagged Q(i) only when some entry is not real, unless `field` says so.
inline Matrix matrix_from_json(const Json& rows, std::optional<Field> field = std::nullopt,
                               const std::string& where = "") {
  if (!rows.is_array()) detail::schema_error(where, "expected an array of rows");
  const std::size_t r = rows.size();
  std::size_t c = 0;
  std::vector<Scalar> entries;
  for (std::size_t a = 0; a < r; ++a) {
    const std::string at = where + "/" + std::to_string(a);
    if (!rows[a].is_array()) detail::schema_error(at, "expected a row array");
    if (a == 0) c = rows[a].size();
    if (rows[a].size() != c) detail::schema_error(at, "ragged matrix");
    for (std::size_t b = 0; b < c; ++b)
      entries.push_back(detail::scalar_value(rows[a][b], field.value_or(Field::Gaussian), at + "/" + std::to_string(b)));
  }
  Field f = field.value_or(Field::Rational);
  for (const auto& s : entries)
    if (!s.is_real()) f = Field::Gaussian;
  Matrix m(r, c, f);
  for (std::size_t t = 0; t < entries.size(); ++t) m.set(t / c, t % c, entries[t].in_field(f));
  return m;
}

/// `{"matrix": [[...]]}` with optional "field", or a bare row array.
inline Matrix matrix_document(const Json& doc, const std::string& where = "") {
  if (doc.is_array()) return matrix_from_json(doc, std::nullopt, where);
  std::optional<Field> f;
  if (doc.is_object() && doc.contains("field")) f = detail::field_value(doc, where);
  return matrix_from_json(detail::member(doc, "matrix", where), f, where + "/matrix");
}

inline Json matrix_document_json(const Matrix& m) {
  return {{"field", std::string(to_string(m.field()))}, {"matrix", to_json(m)}};
}

inline Vector vector_from_json(const Json& j, Field f, const std::string& where) {
  if (!j.is_array()) detail::schema_error(where, "expected a vector array");
  Vector v(j.size(), f);
  for (std::size_t t = 0; t < j.size(); ++t) v.set(t, detail::scalar_value(j[t], f, where + "/" + std::to_string(t)));
  return v;
}

// ---- algebras ----

inline LeibnizAlgebra algebra_from_json(const Json& doc, std::optional<bool> validate = std::nullopt) {
  const std::size_t n = detail::dim_value(doc, "");
  const Field f = detail::field_value(doc, "");
  Product p = doc.contains("brackets") ? detail::product_value(doc["brackets"], n, f, "/brackets") : Product(n, f);
  LeibnizAlgebra a(std::move(p));
  if (doc.contains("basis")) {
    const Json& b = doc["basis"];
    if (!b.is_array() || b.size() != n) detail::schema_error("/basis", "expected " + std::to_string(n) + " labels");
    std::vector<std::string> labels;
    for (std::size_t t = 0; t < n; ++t) {
      if (!b[t].is_string()) detail::schema_error("/basis/" + std::to_string(t), "expected a string label");
      labels.push_back(b[t].get<std::string>());
    }
    a.set_labels(std::move(labels));
  }
  if (validate.value_or(detail::validate_flag(doc))) detail::validated(verify_leibniz(a), "algebra");
  return a;
}

inline Json to_json(const LeibnizAlgebra& a) {
  Json out = {{"dim", a.dim()}, {"field", std::string(to_string(a.field()))}};
  Json basis = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    basis.push_back(a.labels().empty() ? "e" + std::to_string(i + 1) : a.labels()[i]);
  out["basis"] = std::move(basis);
  out["brackets"] = detail::product_json(a.product());
  return out;
}

// ---- dendriform algebras ----

inline DendriformAlgebra dendriform_from_json(const Json& doc, std::optional<bool> validate = std::nullopt) {
  const std::size_t n = detail::dim_value(doc, "");
  const Field f = detail::field_value(doc, "");
  Product l = doc.contains("left") ? detail::product_value(doc["left"], n, f, "/left") : Product(n, f);
  Product r = doc.contains("right") ? detail::product_value(doc["right"], n, f, "/right") : Product(n, f);
  DendriformAlgebra d(std::move(l), std::move(r));
  if (validate.value_or(detail::validate_flag(doc))) detail::validated(verify_dendriform(d), "dendriform algebra");
  return d;
}

inline Json to_json(const DendriformAlgebra& d) {
  Json out = {{"dim", d.dim()}, {"field", std::string(to_string(d.field()))}};
  out["left"] = detail::product_json(d.left());
  out["right"] = detail::product_json(d.right());
  return out;
}

// ---- representations ----

/// The "algebra" member is an inline document or a path resolved against
/// `base_dir`.
inline Representation representation_from_json(const Json& doc, const std::filesystem::path& base_dir = {},
                                                std::optional<bool> validate = std::nullopt) {
  const Json& alg = detail::member(doc, "algebra", "");
  LeibnizAlgebra a;
  if (alg.is_string()) {
    std::filesystem::path p = alg.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    a = algebra_from_json(read_json_file(p.string()));
  } else {
    a = algebra_from_json(alg);
  }
  const std::size_t m = detail::index_value(detail::member(doc, "repDim", ""), "/repDim");
  const Field f = detail::field_value(doc, "", a.field());
  auto maps = [&](const char* key) {
    const Json& list = detail::member(doc, key, "");
    const std::string where = std::string("/") + key;
    if (!list.is_array() || list.size() != a.dim())
      detail::schema_error(where, "expected " + std::to_string(a.dim()) + " matrices");
    std::vector<Matrix> out;
    for (std::size_t t = 0; t < list.size(); ++t) {
      Matrix mat = matrix_from_json(list[t], f, where + "/" + std::to_string(t));
      if (mat.rows() != m || mat.cols() != m)
        detail::schema_error(where + "/" + std::to_string(t), "expected " + std::to_string(m) + "x" + std::to_string(m));
      out.push_back(std::move(mat));
    }
    return out;
  };
  Representation rep(a, m, maps("left"), maps("right"));
  if (validate.value_or(detail::validate_flag(doc))) detail::validated(verify_representation(rep), "representation");
  return rep;
}

inline Json to_json(const Representation& rep) {
  Json out = {{"algebra", to_json(rep.algebra)}, {"repDim", rep.rep_dim}};
  out["field"] = std::string(to_string(rep.field()));
  Json l = Json::array(), r = Json::array();
  for (const auto& mat : rep.left) l.push_back(to_json(mat));
  for (const auto& mat : rep.right) r.push_back(to_json(mat));
  out["left"] = std::move(l);
  out["right"] = std::move(r);
  return out;
}

// ---- forms and subspaces ----

inline BilinearForm form_from_json(const Json& doc) { return BilinearForm(matrix_document(doc)); }

inline Json to_json(const BilinearForm& b) {
  Json out = matrix_document_json(b.matrix());
  out["symmetry"] = std::string(to_string(b.symmetry()));
  return out;
}

/// `{"ambient": n, "basis": [[...], ...]}`; the basis must be independent.
inline Subspace subspace_from_json(const Json& doc) {
  const std::size_t n = detail::index_value(detail::member(doc, "ambient", ""), "/ambient");
  const Field f = detail::field_value(doc, "", Field::Gaussian);
  const Json& basis = detail::member(doc, "basis", "");
  if (!basis.is_array()) detail::schema_error("/basis", "expected an array of vectors");
  std::vector<Vector> vs;
  for (std::size_t t = 0; t < basis.size(); ++t) {
    Vector v = vector_from_json(basis[t], f, "/basis/" + std::to_string(t));
    if (v.size() != n) detail::schema_error("/basis/" + std::to_string(t), "expected length " + std::to_string(n));
    bool real = true;
    for (const auto& s : v.entries()) real = real && s.is_real();
    if (real && !doc.contains("field")) {
      Vector w(n);
      for (std::size_t k = 0; k < n; ++k) w.set(k, v[k].in_field(Field::Rational));
      v = std::move(w);
    }
    vs.push_back(std::move(v));
  }
  try {
    return Subspace(n, std::move(vs));
  } catch (const Error& e) {
    fail(ErrorCode::ValidationError, "subspace: " + e.message());
  }
}

inline Json to_json(const Subspace& w) {
  Json basis = Json::array();
  for (const auto& v : w.basis()) basis.push_back(to_json(v));
  return {{"ambient", w.ambient()}, {"basis", std::move(basis)}};
}

// ---- checks ----

inline Json to_json(const Witness& w) {
  return {{"indices", w.indices}, {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}};
}

inline Json to_json(const Check& c) {
  Json out = {{"ok", c.ok}};
  if (!c.ok) {
    out["reason"] = c.reason;
    if (!c.axiom.empty()) out["axiom"] = c.axiom;
    if (!c.detail.empty()) out["detail"] = c.detail;
    out["witnesses"] = Json::array();
    if (c.witness) out["witnesses"].push_back(to_json(*c.witness));
  }
  return out;
}

// ---- generic documents ----

using Document = std::variant<LeibnizAlgebra, DendriformAlgebra, Representation, Matrix, Subspace>;

/// Recognizes the document kind from its keys: "repDim" for a representation,
/// "left"/"right" for a dendriform algebra, "brackets" or "dim" for an algebra,
/// "ambient" for a subspace and "matrix" (or a bare array) for a matrix.
inline Document parse_document(const Json& doc, const std::filesystem::path& base_dir = {}) {
  if (doc.is_array()) return matrix_document(doc);
  if (!doc.is_object()) detail::schema_error("", "expected a JSON object");
  if (doc.contains("repDim")) return representation_from_json(doc, base_dir);
  if (doc.contains("left") || doc.contains("right")) return dendriform_from_json(doc);
  if (doc.contains("ambient")) return subspace_from_json(doc);
  if (doc.contains("matrix")) return matrix_document(doc);
  if (doc.contains("dim")) return algebra_from_json(doc);
  detail::schema_error("", "unrecognized document kind");
}

inline Document parse_document_file(const std::string& path) {
  std::filesystem::path base = path == "-" ? std::filesystem::path{} : std::filesystem::path(path).parent_path();
  return parse_document(read_json_file(path), base);
}

}  // namespace leibniz
