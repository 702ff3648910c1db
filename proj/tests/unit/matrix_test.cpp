#include <gtest/gtest.h>

#include <random>

#include "mwp/matrix.hpp"
#include "oracle.hpp"

using mwp::Coefficient;
using mwp::FlowMatrix;
using mwp::Polynomial;

namespace {

void expect_eval_equal(const FlowMatrix& m, const oracle::ScalarMatrix& expected,
                       const oracle::Choice& c) {
  ASSERT_EQ(oracle::eval(m, c), expected);
}

}  // namespace

TEST(Matrix, Identity) {
  EXPECT_EQ(FlowMatrix::identity(0).dim(), 0u);
  const auto i2 = FlowMatrix::identity(2);
  EXPECT_EQ(i2.at(0, 0), Polynomial(Coefficient::M));
  EXPECT_TRUE(i2.at(0, 1).is_zero());
  EXPECT_TRUE(i2.at(1, 0).is_zero());
  EXPECT_EQ(i2.at(1, 1), Polynomial(Coefficient::M));
}

TEST(Matrix, UnitAndZeroLaws) {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto a = oracle::random_matrix(rng, 3, 3, 0.6);
    const FlowMatrix z(3);
    EXPECT_EQ(mwp::matrix_product(FlowMatrix::identity(3), a), a);
    EXPECT_EQ(mwp::matrix_product(a, FlowMatrix::identity(3)), a);
    EXPECT_EQ(mwp::matrix_product(a, z), z);
    EXPECT_EQ(mwp::matrix_sum(z, a), a);
    EXPECT_EQ(mwp::matrix_sum(a, a), a);
  }
}

TEST(Matrix, SumAndProductMatchOracle) {
  std::mt19937 rng(6);
  const auto choices = oracle::all_choices(3);
  for (int t = 0; t < 100; ++t) {
    const auto a = oracle::random_matrix(rng, 3, 3, 0.5);
    const auto b = oracle::random_matrix(rng, 3, 3, 0.5);
    const auto s = mwp::matrix_sum(a, b);
    const auto p = mwp::matrix_product(a, b);
    for (const auto& c : choices) {
      expect_eval_equal(s, oracle::sum(oracle::eval(a, c), oracle::eval(b, c)), c);
      expect_eval_equal(p, oracle::product(oracle::eval(a, c), oracle::eval(b, c)), c);
    }
  }
}

TEST(Matrix, TwoByTwoProductByHand) {
  FlowMatrix a(2), b(2);
  a.at(0, 1) = Polynomial({mwp::Monomial(Coefficient::W, {{0, 0}}), mwp::Monomial(Coefficient::M, {{1, 0}})});
  a.at(1, 1) = Polynomial(Coefficient::M);
  b.at(1, 0) = Polynomial({mwp::Monomial(Coefficient::P, {{2, 1}})});
  b.at(1, 1) = Polynomial(Coefficient::M);
  const auto p = mwp::matrix_product(a, b);
  // (0,0) = a01*b10 ; (0,1) = a01 ; (1,0) = b10 ; (1,1) = m
  EXPECT_EQ(p.at(0, 0), Polynomial({mwp::Monomial(Coefficient::P, {{0, 0}, {2, 1}}),
                                    mwp::Monomial(Coefficient::P, {{1, 0}, {2, 1}})}));
  EXPECT_EQ(p.at(0, 1), a.at(0, 1));
  EXPECT_EQ(p.at(1, 0), b.at(1, 0));
  EXPECT_EQ(p.at(1, 1), Polynomial(Coefficient::M));
  for (const auto& c : oracle::all_choices(2))
    expect_eval_equal(p, oracle::product(oracle::eval(a, c), oracle::eval(b, c)), c);
}

TEST(Matrix, DimensionMismatchThrows) {
  EXPECT_THROW(mwp::matrix_sum(FlowMatrix(2), FlowMatrix(3)), mwp::InternalError);
  EXPECT_THROW(mwp::matrix_product(FlowMatrix(2), FlowMatrix(3)), mwp::InternalError);
}

TEST(Matrix, ClosureExamples) {
  EXPECT_EQ(mwp::closure(FlowMatrix(3)), FlowMatrix::identity(3));
  EXPECT_EQ(mwp::closure(FlowMatrix::identity(3)), FlowMatrix::identity(3));
  FlowMatrix edge(2);
  edge.at(0, 1) = Polynomial(Coefficient::M);
  EXPECT_EQ(mwp::closure(edge), mwp::matrix_sum(FlowMatrix::identity(2), edge));
}

TEST(Matrix, ClosureMatchesOracle) {
  std::mt19937 rng(8);
  const auto choices = oracle::all_choices(3);
  for (int t = 0; t < 60; ++t) {
    const auto a = oracle::random_matrix(rng, 4, 3, 0.4);
    const auto s = mwp::closure(a);
    EXPECT_EQ(mwp::matrix_sum(s, mwp::matrix_product(s, a)), s);
    for (const auto& c : choices) expect_eval_equal(s, oracle::star(oracle::eval(a, c)), c);
  }
}

TEST(Matrix, IndexQueries) {
  FlowMatrix m(2);
  m.at(0, 1) = Polynomial({mwp::Monomial(Coefficient::W, {{0, 4}, {1, 1}})});
  EXPECT_EQ(m.index_bound(), 5u);
  EXPECT_EQ(m.distinct_indices(), 2u);
}
