#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "leibniz/cli.hpp"
#include "leibniz/json_io.hpp"
#include "leibniz/leibniz.hpp"
#include "support/fixtures.hpp"

using namespace leibniz;
using namespace fixtures;

namespace {

std::string sample(const std::string& name) { return std::string(LEIBNIZ_SAMPLES_DIR) + "/" + name; }

struct Outcome {
  int status;
  Json doc;
  std::string err;
};

Outcome lab(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, Json::parse(out.str()), err.str()};
}

/// A scratch file that removes itself.
class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("leibniz_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

void expect_parse_error(const std::string& text, const std::string& fragment = {}) {
  try {
    (void)parse_document(parse_json_text(text));
    ADD_FAILURE() << "accepted " << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError) << text;
    if (!fragment.empty()) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  }
}

}  // namespace

TEST(Json, AlgebraRoundTripProperty) {
  Rng rng(81);
  for (int t = 0; t < 40; ++t) {
    const LeibnizAlgebra a = random_leibniz(rng, 1 + t % 3);
    const Json doc = to_json(a);
    EXPECT_EQ(algebra_from_json(doc), a);
    EXPECT_EQ(algebra_from_json(parse_json_text(doc.dump())), a);
    const DendriformAlgebra d = random_dendriform(rng, 1 + t % 3);
    EXPECT_EQ(dendriform_from_json(to_json(d)), d);
  }
}

TEST(Json, GaussianMatricesAndSubspacesRoundTrip) {
  const Matrix m{{Scalar::gaussian(1, -2), Scalar(1, 3)}, {Scalar::i(), Scalar(0)}};
  EXPECT_EQ(matrix_document(matrix_document_json(m)), m);
  EXPECT_EQ(matrix_document(matrix_document_json(m)).field(), Field::Gaussian);
  const Matrix r{{1, 2}, {3, 4}};
  EXPECT_EQ(matrix_document(Json::parse(R"([["1","2"],[3,4]])")), r);
  EXPECT_EQ(matrix_document(Json::parse(R"([["1","2"],[3,4]])")).field(), Field::Rational);

  const Subspace w(3, {Vector{1, 0, Scalar(1, 2)}, Vector{0, 1, 1}});
  const Subspace back = subspace_from_json(to_json(w));
  EXPECT_EQ(back.basis(), w.basis());
  EXPECT_EQ(back[0].field(), Field::Rational);
}

TEST(Json, RepresentationRoundTrip) {
  const Representation rep = regular_rep(sl2());
  const Representation back = representation_from_json(to_json(rep));
  EXPECT_EQ(back.algebra, rep.algebra);
  EXPECT_EQ(back.left, rep.left);
  EXPECT_EQ(back.right, rep.right);
}

TEST(Json, EverySampleParses) {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(LEIBNIZ_SAMPLES_DIR)) {
    if (entry.path().extension() != ".json") continue;
    EXPECT_NO_THROW((void)parse_document_file(entry.path().string())) << entry.path();
    ++count;
  }
  EXPECT_GE(count, 20u);
  EXPECT_EQ(std::get<LeibnizAlgebra>(parse_document_file(sample("ex310.json"))), ex310());
  EXPECT_EQ(std::get<Matrix>(parse_document_file(sample("ex310_E5.json"))), ex310_E(5));
  EXPECT_EQ(std::get<Matrix>(parse_document_file(sample("ex515_J3.json"))), ex515_J(3));
  EXPECT_EQ(std::get<LeibnizAlgebra>(parse_document_file(sample("sl2.json"))), sl2());
  EXPECT_EQ(std::get<DendriformAlgebra>(parse_document_file(sample("gl1_dendriform.json"))), gl1());
  const auto rep = std::get<Representation>(parse_document_file(sample("ex310_regular_rep.json")));
  EXPECT_EQ(rep.left, regular_rep(ex310()).left);
}

TEST(Json, SchemaAndSyntaxErrors) {
  try {
    (void)parse_json_text("{\n  \"dim\": 2,\n  oops\n}", "doc.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("doc.json:3:"), std::string::npos) << e.what();
  }
  expect_parse_error(R"({"dim": 2, "brackets": [{"i": 0, "j": 2, "value": []}]})", "/brackets/0/j");
  expect_parse_error(R"({"dim": 2, "brackets": [{"i": 0, "j": 0, "value": [{"k": 0, "c": "1/0"}]}]})",
                     "/brackets/0/value/0/c");
  expect_parse_error(R"({"dim": 1, "field": "R"})", "/field");
  expect_parse_error(R"({"dim": -1})");
  expect_parse_error(R"({"matrix": [[1, 2], [3]]})", "ragged");
  expect_parse_error(R"({"dim": 1, "brackets": [{"i": 0, "j": 0, "value": [{"k": 0, "c": "i"}]}]})");
  expect_parse_error(R"({"what": 1})", "unrecognized");
  // No doubled code prefix in the message.
  try {
    (void)parse_document(parse_json_text(R"({"dim": 1, "brackets": [{"i": 0, "j": 0, "value": [{"k": 0, "c": "x"}]}]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()).find("ParseError", 1), std::string::npos) << e.what();
  }
}

TEST(Json, ValidationCanBeSwitchedOff) {
  const std::string text = R"({"dim": 1, "brackets": [{"i": 0, "j": 0, "value": [{"k": 0, "c": 1}]}]})";
  try {
    (void)algebra_from_json(parse_json_text(text));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ValidationError);
  }
  Json doc = parse_json_text(text);
  doc["validate"] = false;
  EXPECT_EQ(algebra_from_json(doc).constant(0, 0, 0), Scalar(1));
  // Repeated entries for the same (i, j, k) accumulate.
  const Json twice = Json::parse(
      R"({"dim": 2, "brackets": [{"i": 0, "j": 0, "value": [{"k": 1, "c": 1}, {"k": 1, "c": "1/2"}]}]})");
  EXPECT_EQ(algebra_from_json(twice).constant(0, 0, 1), Scalar(3, 2));
  try {
    (void)subspace_from_json(Json::parse(R"({"ambient": 2, "basis": [[1, 1], [2, 2]]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ValidationError);
  }
}

TEST(Json, CheckSerialization) {
  LeibnizAlgebra a(1);
  a.set(0, 0, 0, 1);
  const Json j = to_json(verify_leibniz(a));
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["reason"], "IDENTITY_FAILS");
  EXPECT_EQ(j["axiom"], "leibniz");
  ASSERT_EQ(j["witnesses"].size(), 1u);
  EXPECT_EQ(j["witnesses"][0]["indices"], Json::parse("[0,0,0]"));
  EXPECT_EQ(j["witnesses"][0]["lhs"], Json::parse(R"(["1"])"));
  EXPECT_EQ(j["witnesses"][0]["rhs"], Json::parse(R"(["2"])"));
  EXPECT_EQ(to_json(Check::pass()), Json::parse(R"({"ok": true})"));
}

TEST(Cli, VerifyAndClassify) {
  auto v = lab({"verify", "leibniz", sample("ex310.json")});
  EXPECT_EQ(v.status, 0);
  EXPECT_EQ(v.doc["command"], "verify leibniz");
  EXPECT_EQ(v.doc["ok"], true);

  auto p = lab({"classify", "product", sample("ex310.json"), sample("ex310_E5.json")});
  EXPECT_EQ(p.status, 0);
  EXPECT_EQ(p.doc["isProduct"], true);
  EXPECT_EQ(p.doc["isStrict"], true);
  EXPECT_EQ(p.doc["isAbelian"], false);
  EXPECT_EQ(p.doc["isParacomplex"], false);

  for (int k = 1; k <= 4; ++k) {
    auto c = lab({"classify", "complex", sample("ex515.json"), sample("ex515_J" + std::to_string(k) + ".json")});
    EXPECT_EQ(c.status, 0);
    EXPECT_EQ(c.doc["isAbelian"], true);
    EXPECT_EQ(c.doc["sigmaSwapped"], true);
    EXPECT_EQ(c.doc["eigenI"]["basis"].size(), 2u);
  }

  auto e = lab({"enumerate", "products", sample("ex310.json")});
  EXPECT_EQ(e.doc["count"], 12);

  auto s = lab({"solve", "symplectic", sample("ex310.json")});
  EXPECT_EQ(s.doc["dim"], 7);
  EXPECT_FALSE(s.doc["sampleNondegenerate"].is_null());

  EXPECT_EQ(lab({"verify", "rep", sample("ex310_regular_rep.json")}).status, 0);
  EXPECT_EQ(lab({"verify", "symplectic", sample("sl2.json"), sample("sl2.json")}).status, 2);
}

TEST(Cli, ChecksReportViolationsWithExitOne) {
  auto ok = lab({"check", "para-kahler", sample("ex310.json"), sample("ex310_B_para_kahler.json"),
                 sample("ex310_E1.json")});
  EXPECT_EQ(ok.status, 0);
  auto bad = lab({"check", "para-kahler", sample("ex310.json"), sample("ex310_B_not_para_kahler.json"),
                  sample("ex310_E1.json")});
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(bad.doc["reason"], "COMPAT_FAILS");
  EXPECT_EQ(bad.doc["witnesses"].size(), 1u);
  EXPECT_EQ(lab({"check", "phase-space", sample("gl1_dendriform.json")}).status, 0);
}

TEST(Cli, Constructions) {
  auto ps = lab({"construct", "phase-space", sample("gl1_dendriform.json")});
  EXPECT_EQ(ps.status, 0);
  const LeibnizAlgebra total = algebra_from_json(ps.doc["payload"]["algebra"]);
  EXPECT_EQ(total, build_phase_space(gl1()).total);

  auto lc = lab({"construct", "levi-civita", sample("abelian_2.json"), sample("S_skew_2.json")});
  EXPECT_EQ(lc.status, 0);
  EXPECT_EQ(lc.doc["payload"]["validate"], false);
  EXPECT_NO_THROW((void)dendriform_from_json(lc.doc["payload"]));

  auto cx = lab({"construct", "complexify", sample("ex310.json")});
  EXPECT_EQ(cx.doc["payload"]["field"], "Q(i)");

  auto sub = lab({"construct", "subadjacent", sample("gl1_dendriform.json")});
  EXPECT_EQ(algebra_from_json(sub.doc["payload"]), subadjacent(gl1()));
}

TEST(Cli, InputErrorsExitTwo) {
  TempFile broken("{\"dim\": 2,");
  auto a = lab({"verify", "leibniz", broken.path()});
  EXPECT_EQ(a.status, 2);
  EXPECT_EQ(a.doc["error"], "ParseError");

  TempFile bad_scalar(R"({"dim": 1, "brackets": [{"i": 0, "j": 0, "value": [{"k": 0, "c": "1/0"}]}]})");
  EXPECT_EQ(lab({"verify", "leibniz", bad_scalar.path()}).doc["error"], "ParseError");

  TempFile not_leibniz(R"({"dim": 1, "brackets": [{"i": 0, "j": 0, "value": [{"k": 0, "c": 1}]}]})");
  auto v = lab({"verify", "leibniz", not_leibniz.path()});
  // verify commands load their subject without validation, so this is a violation.
  EXPECT_EQ(v.status, 1);
  EXPECT_EQ(v.doc["reason"], "IDENTITY_FAILS");
  // Other commands validate their inputs.
  EXPECT_EQ(lab({"enumerate", "products", not_leibniz.path()}).doc["error"], "ValidationError");

  EXPECT_EQ(lab({"verify", "nothing", sample("ex310.json")}).status, 2);
  EXPECT_EQ(lab({"verify", "leibniz"}).status, 2);
  EXPECT_EQ(lab({"classify", "product", sample("ex310.json"), sample("omega_skew_2.json")}).doc["error"], "DimensionMismatch");
  EXPECT_EQ(lab({"verify", "leibniz", "/nonexistent/file.json"}).doc["error"], "ParseError");
}

TEST(Cli, MathematicalPreconditionsExitOne) {
  auto r = lab({"classify", "complex", sample("ex515.json"), sample("ex310_E1.json")});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.doc["reason"], "NotAntiInvolution");
  EXPECT_FALSE(r.doc.contains("error"));
  auto p = lab({"classify", "product", sample("ex310.json"), sample("ex515_J1.json")});
  EXPECT_EQ(p.status, 1);
  EXPECT_EQ(p.doc["reason"], "NotInvolution");
}

TEST(Cli, SeedSelection) {
  auto a = lab({"--seed", "5", "solve", "symplectic", sample("ex310.json")});
  auto b = lab({"--seed", "5", "solve", "symplectic", sample("ex310.json")});
  EXPECT_EQ(a.doc, b.doc);
}

TEST(Cli, BinaryKeepsStdoutPureJson) {
  const std::string cmd = std::string(LEIBNIZ_LAB_PATH) + " verify leibniz " + sample("ex310.json") + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string text;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  const int status = ::pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 0);
  const Json doc = Json::parse(text);
  EXPECT_EQ(doc["ok"], true);

  const std::string usage = std::string(LEIBNIZ_LAB_PATH) + " frobnicate >/dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(usage.c_str())), 2);
}
