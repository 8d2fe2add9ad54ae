#include <gtest/gtest.h>

#include "leibniz/leibniz.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace leibniz;
using namespace fixtures;

namespace {

bool oracle_dendriform(const DendriformAlgebra& d) {
  const oracle::Tensor l = oracle::constants(d.left()), r = oracle::constants(d.right());
  for (const char* axiom : {"p1", "p2", "p3"})
    for (std::size_t i = 0; i < d.dim(); ++i)
      for (std::size_t j = 0; j < d.dim(); ++j)
        for (std::size_t k = 0; k < d.dim(); ++k) {
          const auto s = oracle::dendriform(l, r, axiom, i, j, k);
          if (s.lhs != s.rhs) return false;
        }
  return true;
}

std::vector<oracle::Mat> entries(const std::vector<Matrix>& ms) {
  std::vector<oracle::Mat> out;
  for (const auto& m : ms) out.push_back(oracle::entries(m));
  return out;
}

}  // namespace

TEST(Dendriform, SeedsSatisfyTheAxioms) {
  for (const auto& d : {gl1(), unit1(), skew_seed(), DendriformAlgebra(3)}) {
    EXPECT_TRUE(verify_dendriform(d).ok);
    EXPECT_TRUE(oracle_dendriform(d));
    EXPECT_TRUE(verify_leibniz(subadjacent(d)).ok);
  }
}

TEST(Dendriform, RandomGeneratorProperty) {
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const DendriformAlgebra d = random_dendriform(rng, 1 + t % 3);
    EXPECT_TRUE(verify_dendriform(d).ok);
    EXPECT_TRUE(oracle_dendriform(d));
    EXPECT_TRUE(verify_leibniz(subadjacent(d)).ok);
    EXPECT_TRUE(verify_representation(dendriform_rep(d)).ok);
  }
}

TEST(Dendriform, VerifierAgreesWithOracleOnPerturbations) {
  Rng rng(42);
  int failures = 0;
  for (int t = 0; t < 120; ++t) {
    DendriformAlgebra d = random_dendriform(rng, 2 + t % 2);
    Product& p = rng() % 2 ? d.left() : d.right();
    const std::size_t n = d.dim(), i = rng() % n, j = rng() % n, k = rng() % n;
    p.set(i, j, k, p.constant(i, j, k) + Scalar(uniform(rng, 1, 2)));
    const Check c = verify_dendriform(d);
    EXPECT_EQ(c.ok, oracle_dendriform(d));
    if (c.ok) continue;
    ++failures;
    const auto& w = *c.witness;
    const auto s = oracle::dendriform(oracle::constants(d.left()), oracle::constants(d.right()), c.axiom,
                                      w.indices[0], w.indices[1], w.indices[2]);
    EXPECT_TRUE(oracle::same(s.lhs, w.lhs)) << c.axiom;
    EXPECT_TRUE(oracle::same(s.rhs, w.rhs)) << c.axiom;
  }
  EXPECT_GT(failures, 0);
}

TEST(Dendriform, ChangeOfBasisAndDirectSum) {
  Rng rng(43);
  for (int t = 0; t < 40; ++t) {
    const DendriformAlgebra d = random_dendriform(rng, 1 + t % 3);
    const Matrix p = random_unimodular(rng, d.dim());
    EXPECT_EQ(change_basis(change_basis(d, p), invert(p)), d);
    const DendriformAlgebra s = direct_sum(d, gl1());
    EXPECT_TRUE(verify_dendriform(s).ok);
    std::vector<std::size_t> first;
    for (std::size_t i = 0; i < d.dim(); ++i) first.push_back(i);
    const Subspace w = Subspace::coordinates(s.dim(), first);
    EXPECT_TRUE(is_dendriform_subalgebra(s, w));
    EXPECT_EQ(restricted_dendriform(s, w), d);
  }
}

TEST(RotaBaxter, IdentityOnTheDendriformModule) {
  Rng rng(44);
  for (int t = 0; t < 40; ++t) {
    const DendriformAlgebra d = random_dendriform(rng, 1 + t % 3);
    const LeibnizAlgebra a = subadjacent(d);
    const Representation rep = dendriform_rep(d);
    const Matrix id = Matrix::identity(d.dim());
    EXPECT_TRUE(verify_rota_baxter(a, rep, id).ok);
    EXPECT_EQ(rb_to_dendriform(a, rep, id), d);
    EXPECT_EQ(compatible_dendriform_from_invertible_rb(a, rep, id), d);
    const Matrix twice = Scalar(2) * id;
    EXPECT_TRUE(verify_rota_baxter(a, rep, twice).ok);
    const DendriformAlgebra induced = rb_to_dendriform(a, rep, twice);
    EXPECT_TRUE(verify_dendriform(induced).ok);
    EXPECT_EQ(induced, scaled(d, Scalar(2)));
  }
}

TEST(RotaBaxter, InducedStructuresOnRandomOperators) {
  // Solutions are rare among random matrices, so compose known ones with the
  // module automorphisms given by basis changes of a dendriform algebra.
  Rng rng(45);
  for (int t = 0; t < 30; ++t) {
    const DendriformAlgebra d = random_dendriform(rng, 2 + t % 2);
    const LeibnizAlgebra a = subadjacent(d);
    const Representation rep = dendriform_rep(d);
    const Matrix t0 = Scalar(uniform(rng, 1, 3)) * Matrix::identity(d.dim());
    ASSERT_TRUE(verify_rota_baxter(a, rep, t0).ok);
    const DendriformAlgebra induced = rb_to_dendriform(a, rep, t0);
    EXPECT_TRUE(oracle_dendriform(induced));
    // The operator is a homomorphism from the induced sub-adjacent algebra.
    const LeibnizAlgebra sub = subadjacent(induced);
    for (std::size_t p = 0; p < d.dim(); ++p)
      for (std::size_t q = 0; q < d.dim(); ++q)
        EXPECT_EQ(t0 * sub.on_basis(p, q), bracket(a, t0.col(p), t0.col(q)));
    const LeibnizAlgebra bowtie = bowtie_algebra(a, rep, t0);
    EXPECT_TRUE(verify_leibniz(bowtie).ok);
  }
}

TEST(RotaBaxter, FailuresMatchTheOracle) {
  Rng rng(46);
  int failures = 0;
  for (int t = 0; t < 60; ++t) {
    const DendriformAlgebra d = random_dendriform(rng, 2 + t % 2);
    const LeibnizAlgebra a = subadjacent(d);
    const Representation rep = dendriform_rep(d);
    Matrix op = Matrix::identity(d.dim());
    op.set(rng() % d.dim(), rng() % d.dim(), uniform(rng, -2, 2));
    const Check c = verify_rota_baxter(a, rep, op);
    if (c.ok) continue;
    ++failures;
    EXPECT_THROW((void)rb_to_dendriform(a, rep, op), Error);
    const auto& w = *c.witness;
    const auto s = oracle::rota_baxter(oracle::constants(a), entries(rep.left), entries(rep.right),
                                       oracle::entries(op), w.indices[0], w.indices[1]);
    EXPECT_TRUE(oracle::same(s.lhs, w.lhs));
    EXPECT_TRUE(oracle::same(s.rhs, w.rhs));
  }
  EXPECT_GT(failures, 0);
}

TEST(RotaBaxter, ShapeAndSingularity) {
  const DendriformAlgebra d = gl1();
  const Representation rep = dendriform_rep(d);
  EXPECT_THROW((void)verify_rota_baxter(subadjacent(d), rep, Matrix(3, 2)), Error);
  try {
    (void)compatible_dendriform_from_invertible_rb(subadjacent(d), rep, Matrix(2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(InvariantForm, SeedAndRandomInstances) {
  EXPECT_TRUE(verify_invariant_form(skew_seed(), skew_seed_omega()).ok);
  Rng rng(47);
  for (int t = 0; t < 40; ++t) {
    const SkewInvariant s = random_skew_invariant(rng);
    EXPECT_TRUE(verify_dendriform(s.d).ok);
    EXPECT_TRUE(verify_invariant_form(s.d, s.omega).ok);
    const oracle::Tensor l = oracle::constants(s.d.left()), r = oracle::constants(s.d.right());
    const oracle::Mat w = oracle::entries(s.omega.matrix());
    for (const char* axiom : {"invariant-lhd", "invariant-rhd"})
      for (std::size_t i = 0; i < s.d.dim(); ++i)
        for (std::size_t j = 0; j < s.d.dim(); ++j)
          for (std::size_t k = 0; k < s.d.dim(); ++k) {
            const auto sides = oracle::invariant(l, r, w, axiom, i, j, k);
            EXPECT_EQ(sides.lhs, sides.rhs);
          }
  }
}

TEST(InvariantForm, RejectsNonInvariantAndDegenerate) {
  const Check c = verify_invariant_form(gl1(), BilinearForm(Matrix{{0, 1}, {-1, 0}}));
  ASSERT_FALSE(c.ok);
  ASSERT_TRUE(c.witness.has_value());
  const auto& w = *c.witness;
  const auto s = oracle::invariant(oracle::constants(gl1().left()), oracle::constants(gl1().right()),
                                   oracle::entries(Matrix{{0, 1}, {-1, 0}}), c.axiom, w.indices[0], w.indices[1],
                                   w.indices[2]);
  EXPECT_TRUE(oracle::same(s.lhs, w.lhs));
  EXPECT_TRUE(oracle::same(s.rhs, w.rhs));
  try {
    (void)verify_invariant_form(skew_seed(), BilinearForm(Matrix(4, 4)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateForm);
  }
}
