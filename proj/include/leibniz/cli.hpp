#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "leibniz/leibniz.hpp"

namespace leibniz::cli {

/// Exit statuses: 0 ok, 1 mathematical violation, 2 input or usage error.
enum Status : int { kOk = 0, kViolation = 1, kInputError = 2 };

struct Context {
  std::uint64_t seed = 1;
};

namespace detail {

using Files = std::vector<std::string>;
using Handler = std::function<Json(const Files&, const Context&)>;

inline LeibnizAlgebra load_algebra(const std::string& path, std::optional<bool> validate = std::nullopt) {
  return algebra_from_json(read_json_file(path), validate);
}

inline DendriformAlgebra load_dendriform(const std::string& path, std::optional<bool> validate = std::nullopt) {
  return dendriform_from_json(read_json_file(path), validate);
}

inline Representation load_rep(const std::string& path, std::optional<bool> validate = std::nullopt) {
  std::filesystem::path base = path == "-" ? std::filesystem::path{} : std::filesystem::path(path).parent_path();
  return representation_from_json(read_json_file(path), base, validate);
}

inline Matrix load_matrix(const std::string& path) { return matrix_document(read_json_file(path)); }
inline BilinearForm load_form(const std::string& path) { return form_from_json(read_json_file(path)); }
inline Subspace load_subspace(const std::string& path) { return subspace_from_json(read_json_file(path)); }

inline Json verdict(const Check& c) { return to_json(c); }

inline Json flagged(bool ok, Json body) {
  Json out = {{"ok", ok}};
  out.update(body);
  return out;
}

inline Json constructed(Json payload) { return {{"ok", true}, {"payload", std::move(payload)}}; }

inline Json triple_json(const KahlerTriple& t) {
  return {{"algebra", to_json(t.algebra)}, {"form", to_json(t.form)}, {"endo", matrix_document_json(t.endo)}};
}

struct Command {
  const char* group;
  const char* name;
  std::size_t min_files;
  std::size_t max_files;
  const char* usage;
  Handler run;
};

inline std::vector<Command> commands() {
  return {
      {"verify", "leibniz", 1, 1, "<algebra.json>",
       [](const Files& f, const Context&) { return verdict(verify_leibniz(load_algebra(f[0], false))); }},
      {"verify", "rep", 1, 1, "<rep.json>",
       [](const Files& f, const Context&) { return verdict(verify_representation(load_rep(f[0], false))); }},
      {"verify", "dendriform", 1, 1, "<dendriform.json>",
       [](const Files& f, const Context&) { return verdict(verify_dendriform(load_dendriform(f[0], false))); }},
      {"verify", "symplectic", 2, 2, "<algebra.json> <form.json>",
       [](const Files& f, const Context&) { return verdict(verify_symplectic(load_algebra(f[0]), load_form(f[1]))); }},
      {"verify", "invariant", 2, 2, "<dendriform.json> <form.json>",
       [](const Files& f, const Context&) {
         return verdict(verify_invariant_form(load_dendriform(f[0]), load_form(f[1])));
       }},
      {"verify", "quadratic", 2, 2, "<dendriform.json> <form.json>",
       [](const Files& f, const Context&) {
         return verdict(verify_quadratic_dendriform(load_dendriform(f[0]), load_form(f[1])));
       }},
      {"verify", "rota-baxter", 2, 2, "<rep.json> <T.json>",
       [](const Files& f, const Context&) {
         Representation rep = load_rep(f[0]);
         return verdict(verify_rota_baxter(rep.algebra, rep, load_matrix(f[1])));
       }},
      {"classify", "product", 2, 2, "<algebra.json> <E.json>",
       [](const Files& f, const Context&) {
         StructureReport r = classify_product(load_algebra(f[0]), load_matrix(f[1]));
         return flagged(r.is_product, {{"isProduct", r.is_product},
                                       {"isStrict", r.is_strict},
                                       {"isAbelian", r.is_abelian},
                                       {"isParacomplex", r.is_paracomplex},
                                       {"isNijenhuis", r.is_nijenhuis},
                                       {"plus", to_json(r.plus)},
                                       {"minus", to_json(r.minus)}});
       }},
      {"classify", "complex", 2, 2, "<algebra.json> <J.json>",
       [](const Files& f, const Context&) {
         ComplexReport r = classify_complex(load_algebra(f[0]), load_matrix(f[1]));
         return flagged(r.is_complex, {{"isComplex", r.is_complex},
                                       {"isStrict", r.is_strict},
                                       {"isAbelian", r.is_abelian},
                                       {"sigmaSwapped", r.sigma_swapped},
                                       {"eigenSubalgebras", r.eigen_subalgebras},
                                       {"eigenI", to_json(r.eigen_i)},
                                       {"eigenMinusI", to_json(r.eigen_minus_i)}});
       }},
      {"enumerate", "products", 1, 1, "<algebra.json>",
       [](const Files& f, const Context&) {
         Json list = Json::array();
         for (const auto& [e, r] : enumerate_diagonal_products(load_algebra(f[0]))) {
           Json signs = Json::array();
           for (std::size_t k = 0; k < e.rows(); ++k) signs.push_back(e(k, k).str());
           list.push_back({{"signs", std::move(signs)},
                           {"isStrict", r.is_strict},
                           {"isAbelian", r.is_abelian},
                           {"isParacomplex", r.is_paracomplex}});
         }
         return flagged(true, {{"count", list.size()}, {"products", std::move(list)}});
       }},
      {"solve", "symplectic", 1, 1, "<algebra.json>",
       [](const Files& f, const Context& ctx) {
         SymplecticSpace s = solve_symplectic_space(load_algebra(f[0]));
         Json basis = Json::array();
         for (const auto& b : s.basis) basis.push_back(to_json(b.matrix()));
         auto sample = sample_nondegenerate(s.basis, ctx.seed);
         return flagged(true, {{"dim", s.dim},
                               {"basis", std::move(basis)},
                               {"sampleNondegenerate", sample ? to_json(sample->matrix()) : Json(nullptr)}});
       }},
      {"construct", "phase-space", 1, 1, "<dendriform.json>",
       [](const Files& f, const Context&) {
         PhaseSpace p = build_phase_space(load_dendriform(f[0]));
         return constructed({{"algebra", to_json(p.total)}, {"form", to_json(p.form)}, {"baseDim", p.base_dim}});
       }},
      {"construct", "subadjacent", 1, 1, "<dendriform.json>",
       [](const Files& f, const Context&) { return constructed(to_json(subadjacent(load_dendriform(f[0])))); }},
      {"construct", "semidirect", 1, 1, "<rep.json>",
       [](const Files& f, const Context&) { return constructed(to_json(semidirect_product(load_rep(f[0])))); }},
      {"construct", "dual-rep", 1, 1, "<rep.json>",
       [](const Files& f, const Context&) { return constructed(to_json(dual_rep(load_rep(f[0])))); }},
      {"construct", "levi-civita", 2, 2, "<algebra.json> <S.json>",
       [](const Files& f, const Context&) {
         LeviCivitaPair lc = levi_civita(PseudoRiemannian(load_algebra(f[0]), load_form(f[1])));
         // Dendriform layout with left = ∗ and right = ⋆; not validated as dendriform.
         Json doc = to_json(DendriformAlgebra(lc.star, lc.starstar));
         doc["validate"] = false;
         return constructed(std::move(doc));
       }},
      {"construct", "complexify", 1, 3, "<algebra.json> [<B.json> <J.json>]",
       [](const Files& f, const Context&) {
         if (f.size() == 1) return constructed(to_json(complexify(load_algebra(f[0]))));
         require(f.size() == 3, ErrorCode::UsageError, "complexify takes an algebra, or an algebra, B and J");
         return constructed(triple_json(complexify_pseudo_kahler(load_algebra(f[0]), load_form(f[1]), load_matrix(f[2]))));
       }},
      {"construct", "realify", 3, 3, "<algebra.json> <B.json> <E.json>",
       [](const Files& f, const Context&) {
         return constructed(triple_json(realify(load_algebra(f[0]), load_form(f[1]), load_matrix(f[2]))));
       }},
      {"construct", "bowtie", 2, 2, "<rep.json> <T.json>",
       [](const Files& f, const Context&) {
         Representation rep = load_rep(f[0]);
         return constructed(to_json(bowtie_algebra(rep.algebra, rep, load_matrix(f[1]))));
       }},
      {"check", "para-kahler", 3, 3, "<algebra.json> <B.json> <E.json>",
       [](const Files& f, const Context&) {
         return verdict(check_para_kahler(load_algebra(f[0]), load_form(f[1]), load_matrix(f[2])));
       }},
      {"check", "pseudo-kahler", 3, 3, "<algebra.json> <B.json> <J.json>",
       [](const Files& f, const Context&) {
         return verdict(check_pseudo_kahler(load_algebra(f[0]), load_form(f[1]), load_matrix(f[2])));
       }},
      {"check", "complex-product", 3, 3, "<algebra.json> <J.json> <E.json>",
       [](const Files& f, const Context&) {
         return verdict(check_complex_product_pair(load_algebra(f[0]), load_matrix(f[1]), load_matrix(f[2])));
       }},
      {"check", "manin-triple", 4, 4, "<dendriform.json> <B.json> <W1.json> <W2.json>",
       [](const Files& f, const Context&) {
         return verdict(verify_manin_triple(load_dendriform(f[0]), load_form(f[1]), load_subspace(f[2]),
                                            load_subspace(f[3])));
       }},
      {"check", "phase-space", 1, 1, "<dendriform.json>",
       [](const Files& f, const Context&) {
         PhaseSpace p = build_phase_space(load_dendriform(f[0]));
         return verdict(verify_phase_space(p, p.base(), p.dual()));
       }},
  };
}

inline bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::UsageError:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::FieldMismatch:
    case ErrorCode::WrongField:
    case ErrorCode::TooLarge:
    case ErrorCode::NotIndependent:
      return true;
    default:
      return false;
  }
}

inline std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("LEIBNIZ_LAB_SEED");
  if (s == nullptr || *s == '\0') return std::nullopt;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    fail(ErrorCode::UsageError, "LEIBNIZ_LAB_SEED is not an unsigned integer");
  }
}

}  // namespace detail

/// Runs one command. `args` excludes the program name. Only JSON is written
/// to `out`; diagnostics go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier and constructor for Leibniz and Leibniz-dendriform structures", "leibniz-lab"};
  app.fallthrough();
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  app.add_option("--seed", seed, "Seed for sampling (overrides LEIBNIZ_LAB_SEED)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));

  auto table = detail::commands();
  std::vector<detail::Files> files(table.size());
  std::vector<CLI::App*> leaves;
  std::map<std::string, CLI::App*> groups;
  for (std::size_t t = 0; t < table.size(); ++t) {
    const auto& c = table[t];
    CLI::App*& g = groups[c.group];
    if (g == nullptr) {
      g = app.add_subcommand(c.group, std::string(c.group) + " commands");
      g->require_subcommand(1);
    }
    CLI::App* leaf = g->add_subcommand(c.name, c.usage);
    leaf->add_option("files", files[t], c.usage)
        ->required()
        ->expected(static_cast<int>(c.min_files), static_cast<int>(c.max_files));
    leaves.push_back(leaf);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, err, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, err, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    out << Json{{"ok", false}, {"error", "UsageError"}, {"message", e.what()}}.dump(2) << "\n";
    return kInputError;
  }

  std::size_t chosen = 0;
  while (chosen < leaves.size() && !leaves[chosen]->parsed()) ++chosen;
  const auto& cmd = table[chosen];
  const std::string name = std::string(cmd.group) + " " + cmd.name;
  Json result;
  int status = kOk;
  try {
    Context ctx;
    if (auto s = detail::env_seed()) ctx.seed = *s;
    if (seed) ctx.seed = *seed;
    if (files[chosen].size() < cmd.min_files || files[chosen].size() > cmd.max_files)
      fail(ErrorCode::UsageError, name + " " + cmd.usage);
    result = cmd.run(files[chosen], ctx);
    status = result.value("ok", false) ? kOk : kViolation;
  } catch (const Error& e) {
    status = detail::is_input_error(e.code()) ? kInputError : kViolation;
    if (status == kInputError) err << e.what() << "\n";
    result = {{"ok", false}, {"reason", std::string(to_string(e.code()))}, {"detail", e.message()}};
    if (status == kInputError) result["error"] = std::string(to_string(e.code()));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    result = {{"ok", false}, {"error", "InternalError"}, {"detail", e.what()}};
    status = kInputError;
  }
  Json verdict = {{"command", name}};
  verdict.update(result);
  out << verdict.dump(2) << "\n";
  return status;
}

}  // namespace leibniz::cli
