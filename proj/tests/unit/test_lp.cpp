#include <gtest/gtest.h>

#include "thresholds/lp.hpp"

using namespace thresholds;
using namespace thresholds::lp;

namespace {

Constraint row(std::vector<Rational> c, Relation rel, Rational rhs) { return {std::move(c), rel, std::move(rhs)}; }

}  // namespace

TEST(Simplex, SmallMaximization) {
  // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x <= 3
  Program prog{2, {-3, -2}, {}};
  prog.constraints.push_back(row({1, 1}, Relation::LessEqual, 4));
  prog.constraints.push_back(row({1, 3}, Relation::LessEqual, 6));
  prog.constraints.push_back(row({1, 0}, Relation::LessEqual, 3));
  auto s = solve(prog);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_EQ(s.value, -11);
  EXPECT_EQ(s.x[0], 3);
  EXPECT_EQ(s.x[1], 1);
}

TEST(Simplex, EqualityAndGreaterRows) {
  // min x + y s.t. x + 2y = 3, 3x + y >= 4
  Program prog{2, {1, 1}, {}};
  prog.constraints.push_back(row({1, 2}, Relation::Equal, 3));
  prog.constraints.push_back(row({3, 1}, Relation::GreaterEqual, 4));
  auto s = solve(prog);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_EQ(s.value, Rational(2));
  EXPECT_EQ(s.x[0], 1);
  EXPECT_EQ(s.x[1], 1);
}

TEST(Simplex, FractionalOptimum) {
  // min -x - y s.t. 2x + y <= 2, x + 3y <= 3
  Program prog{2, {-1, -1}, {}};
  prog.constraints.push_back(row({2, 1}, Relation::LessEqual, 2));
  prog.constraints.push_back(row({1, 3}, Relation::LessEqual, 3));
  auto s = solve(prog);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_EQ(s.value, Rational(-7, 5));
  EXPECT_EQ(s.x[0], Rational(3, 5));
  EXPECT_EQ(s.x[1], Rational(4, 5));
}

TEST(Simplex, Infeasible) {
  Program prog{1, {1}, {}};
  prog.constraints.push_back(row({1}, Relation::GreaterEqual, 2));
  prog.constraints.push_back(row({1}, Relation::LessEqual, 1));
  EXPECT_EQ(solve(prog).status, Status::Infeasible);
}

TEST(Simplex, Unbounded) {
  Program prog{2, {-1, 0}, {}};
  prog.constraints.push_back(row({1, -1}, Relation::LessEqual, 1));
  EXPECT_EQ(solve(prog).status, Status::Unbounded);
}

TEST(Simplex, NegativeRightHandSide) {
  // -x <= -2 means x >= 2
  Program prog{1, {1}, {}};
  prog.constraints.push_back(row({-1}, Relation::LessEqual, -2));
  auto s = solve(prog);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_EQ(s.value, 2);
}

// Beale's example cycles under the textbook largest-coefficient rule.
TEST(Simplex, BealeCyclingExampleTerminates) {
  Program prog{4, {Rational(-3, 4), 150, Rational(-1, 50), 6}, {}};
  prog.constraints.push_back(row({Rational(1, 4), -60, Rational(-1, 25), 9}, Relation::LessEqual, 0));
  prog.constraints.push_back(row({Rational(1, 2), -90, Rational(-1, 50), 3}, Relation::LessEqual, 0));
  prog.constraints.push_back(row({0, 0, 1, 0}, Relation::LessEqual, 1));
  auto s = solve(prog);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_EQ(s.value, Rational(-1, 20));
  EXPECT_EQ(s.x[2], 1);
}

TEST(Simplex, RedundantEqualities) {
  Program prog{2, {1, 2}, {}};
  prog.constraints.push_back(row({1, 1}, Relation::Equal, 2));
  prog.constraints.push_back(row({2, 2}, Relation::Equal, 4));
  auto s = solve(prog);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_EQ(s.value, 2);
}
