#include <gtest/gtest.h>

#include "leibniz/leibniz.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace leibniz;
using namespace fixtures;

namespace {

std::vector<oracle::Mat> entries(const std::vector<Matrix>& ms) {
  std::vector<oracle::Mat> out;
  for (const auto& m : ms) out.push_back(oracle::entries(m));
  return out;
}

bool oracle_representation(const Representation& rep) {
  const oracle::Tensor c = oracle::constants(rep.algebra);
  const auto l = entries(rep.left), r = entries(rep.right);
  for (const char* axiom : {"rep-1", "rep-2", "rep-3"})
    for (std::size_t i = 0; i < rep.algebra.dim(); ++i)
      for (std::size_t j = 0; j < rep.algebra.dim(); ++j)
        for (std::size_t k = 0; k < rep.rep_dim; ++k) {
          const auto s = oracle::representation(c, l, r, axiom, i, j, k);
          if (s.lhs != s.rhs) return false;
        }
  return true;
}

}  // namespace

TEST(Representation, RegularAndDualOfNamedAlgebras) {
  for (const auto& a : {sl2(), ex310(), ex515()}) {
    const Representation reg = regular_rep(a);
    EXPECT_TRUE(verify_representation(reg).ok);
    EXPECT_TRUE(oracle_representation(reg));
    EXPECT_TRUE(verify_representation(dual_rep(reg)).ok);
    EXPECT_TRUE(oracle_representation(dual_rep(reg)));
  }
}

TEST(Representation, RegularAndDualProperty) {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const LeibnizAlgebra a = random_leibniz(rng, 1 + t % 3);
    const Representation reg = regular_rep(a), dual = dual_rep(reg);
    EXPECT_TRUE(verify_representation(reg).ok);
    EXPECT_TRUE(verify_representation(dual).ok);
    EXPECT_TRUE(oracle_representation(dual));
    const LeibnizAlgebra s = semidirect_product(dual);
    EXPECT_TRUE(verify_leibniz(s).ok);
    EXPECT_TRUE(is_subalgebra(s, Subspace::coordinates(2 * a.dim(), [&] {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < a.dim(); ++i) idx.push_back(i);
      return idx;
    }())));
  }
}

TEST(Representation, DualFormulas) {
  const Representation reg = regular_rep(sl2());
  const Representation dual = dual_rep(reg);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(dual.left[i], -reg.left[i].transpose());
    EXPECT_EQ(dual.right[i], reg.left[i].transpose() + reg.right[i].transpose());
  }
}

TEST(Representation, SemidirectProductBrackets) {
  const Representation reg = regular_rep(ex310());
  const LeibnizAlgebra s = semidirect_product(reg);
  ASSERT_EQ(s.dim(), 8u);
  // [e0, v2] = 2 v3 and [v0, e2] = 2 v3 through l and r (0-based).
  EXPECT_EQ(s.constant(0, 6, 7), Scalar(2));
  EXPECT_EQ(s.constant(4, 2, 7), Scalar(2));
  EXPECT_EQ(s.constant(0, 2, 3), Scalar(2));
  EXPECT_TRUE(s.on_basis(4, 6).is_zero());
}

TEST(Representation, ZeroRepresentationIsValid) {
  EXPECT_TRUE(verify_representation(Representation::zero(sl2(), 3)).ok);
}

TEST(Representation, ShapeErrors) {
  try {
    Representation bad(sl2(), 2, {Matrix(2, 2), Matrix(2, 2)}, {Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
  EXPECT_THROW(Representation(sl2(), 2, std::vector<Matrix>(3, Matrix(2, 3)), std::vector<Matrix>(3, Matrix(2, 2))),
               Error);
}

TEST(Representation, BrokenActionsHaveOracleWitnesses) {
  Rng rng(32);
  int failures = 0;
  for (int t = 0; t < 80; ++t) {
    Representation rep = regular_rep(random_leibniz(rng, 2 + t % 2));
    auto& maps = rng() % 2 ? rep.left : rep.right;
    const std::size_t i = rng() % maps.size(), r = rng() % rep.rep_dim, c = rng() % rep.rep_dim;
    maps[i].set(r, c, maps[i](r, c) + Scalar(uniform(rng, 1, 3)));
    const Check chk = verify_representation(rep);
    EXPECT_EQ(chk.ok, oracle_representation(rep));
    if (chk.ok) continue;
    ++failures;
    ASSERT_TRUE(chk.witness.has_value());
    const auto& w = *chk.witness;
    const auto s = oracle::representation(oracle::constants(rep.algebra), entries(rep.left), entries(rep.right),
                                          chk.axiom, w.indices[0], w.indices[1], w.indices[2]);
    EXPECT_TRUE(oracle::same(s.lhs, w.lhs));
    EXPECT_TRUE(oracle::same(s.rhs, w.rhs));
  }
  EXPECT_GT(failures, 0);
}

TEST(Representation, LinearExtension) {
  const Representation reg = regular_rep(sl2());
  const Vector x{1, 2, -1};
  EXPECT_EQ(reg.l(x), sl2().left(x));
  EXPECT_EQ(reg.r(x), sl2().right(x));
}
