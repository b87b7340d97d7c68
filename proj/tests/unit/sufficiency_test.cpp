#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace discmom;
using testing_support::frac;
using testing_support::LinearForm;
using testing_support::M;

TEST(ShiftMatrix, Examples) {
  EXPECT_EQ(shift_matrix(0), (std::vector<std::vector<Integer>>{{1}}));
  EXPECT_EQ(shift_matrix(1), (std::vector<std::vector<Integer>>{{1, -1}, {0, 1}}));
  EXPECT_EQ(shift_matrix(3)[0][3], Integer(-1));
  EXPECT_EQ(shift_matrix(3)[1][3], Integer(3));
  EXPECT_EQ(shift_matrix(3)[2][3], Integer(-3));
  EXPECT_EQ(shift_matrix(3)[3][1], Integer(0));
}

TEST(ShiftMatrix, ShiftsPolynomialArgument) {
  testing_support::Gen gen(81);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = static_cast<std::size_t>(gen.integer(0, 6));
    const Polynomial v = gen.polynomial(static_cast<int>(k));
    const auto h = shift_matrix(k);
    // V(x - 1) by composition.
    Polynomial shifted;
    Polynomial power = Polynomial::constant(1);
    for (std::size_t i = 0; i <= k; ++i) {
      shifted = shifted + power * v.coeff(i);
      power = power * Polynomial{-1, 1};
    }
    for (std::size_t i = 0; i <= k; ++i) {
      Rational b = 0;
      for (std::size_t l = 0; l <= k; ++l) b += Rational(h[i][l]) * v.coeff(l);
      EXPECT_EQ(b, shifted.coeff(i));
    }
  }
}

TEST(DMatrix, Examples) {
  const SymmetricRationalMatrix d2 = d_matrix(M({"1/2", "3/4"}), 2);
  EXPECT_EQ(d2(0, 0), 1);
  EXPECT_EQ(d2(0, 1), 0);
  EXPECT_EQ(d2(1, 1), frac(1, 4));
  EXPECT_EQ(d_matrix(M({"7/3"}), 1)(0, 0), frac(7, 3));
  const SymmetricRationalMatrix d3 = d_matrix(M({"1", "2", "5"}), 3);
  EXPECT_EQ(d3(0, 0), 1);
  EXPECT_EQ(d3(0, 1), frac(3, 2));
  EXPECT_EQ(d3(1, 1), 3);
  EXPECT_THROW(d_matrix(M({"1"}), 2), ArityError);
}

TEST(DMatrix, SymbolicDisplays) {
  const std::vector<LinearForm> sym = testing_support::symbolic_moments(4);
  const auto displays = testing_support::reference_d_displays();
  for (std::size_t j = 1; j <= 4; ++j) {
    const SymmetricMatrix<LinearForm> d = d_matrix_from<LinearForm>(sym, j);
    const auto& ref = displays[j - 1];
    ASSERT_EQ(d.dim(), ref.size());
    for (std::size_t p = 0; p < ref.size(); ++p)
      for (std::size_t q = 0; q < ref.size(); ++q) EXPECT_TRUE(d(p, q) == ref[p][q]) << "D_" << j << " (" << p << "," << q << ")";
  }
}

TEST(DMatrix, EntriesAreShiftedHankelPlusLowerMoments) {
  const std::vector<LinearForm> sym = testing_support::symbolic_moments(10);
  for (std::size_t j = 1; j <= 10; ++j) {
    const SymmetricMatrix<LinearForm> d = d_matrix_from<LinearForm>(sym, j);
    for (std::size_t p = 0; p < d.dim(); ++p)
      for (std::size_t q = 0; q < d.dim(); ++q) {
        const std::size_t top = p + q + j % 2;
        EXPECT_EQ(d(p, q).coeff(top), 1);
        for (std::size_t k = top + 1; k <= 10; ++k) EXPECT_EQ(d(p, q).coeff(k), 0);
      }
  }
}

TEST(SufficientCheck, Examples) {
  EXPECT_TRUE(sufficient_check(M({"1/2", "3/4"})));
  EXPECT_EQ(classify(M({"1/2", "3/4"}), Grid::naturals()).status, Status::IRealizable);
  EXPECT_FALSE(sufficient_check(M({"1/2", "1/2"})));
  EXPECT_EQ(classify(M({"1/2", "1/2"}), Grid::naturals()).status, Status::BRealizable);
  EXPECT_FALSE(sufficient_check(M({"3/2", "12/5"})));
  EXPECT_EQ(determinant(d_matrix(M({"3/2", "12/5"}), 2)), frac(-1, 10));
}

TEST(SufficientCheck, ImpliesInterior) {
  testing_support::Gen gen(82);
  int positives = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    const AtomicMeasure mu = gen.measure(4, 8);
    const MomentVector exact = mu.moments(n);
    std::vector<Rational> values(exact.values().begin(), exact.values().end());
    values.back() += gen.rational(-1, 3, 6);
    const MomentVector m(values);
    if (!sufficient_check(m)) continue;
    ++positives;
    EXPECT_EQ(classify(m, Grid::naturals()).status, Status::IRealizable);
  }
  EXPECT_GT(positives, 50);
}

TEST(SufficientCheck, SecondOrderThresholds) {
  for (int num = 1; num < 40; ++num) {
    const Rational m1 = frac(num, 8);
    const Rational theta = m1 - floor(m1);
    const Rational exact = theta * (1 - theta);
    EXPECT_LE(0, exact);
    EXPECT_LE(exact, frac(1, 4));
    for (const Rational& gap : {Rational(0), exact, frac(1, 4), exact / 2, (exact + frac(1, 4)) / 2, frac(1, 2)}) {
      for (const Rational& eps : {frac(-1, 1000), Rational(0), frac(1, 1000)}) {
        const Rational var = gap + eps;
        const MomentVector m{m1, m1 * m1 + var};
        EXPECT_EQ(sufficient_check(m), var > frac(1, 4));
        EXPECT_EQ(psd_classify(hankel(m, 2)).cls == PositivityClass::PositiveDefinite, var > 0);
        const Status s = classify(m, Grid::naturals()).status;
        EXPECT_EQ(s == Status::IRealizable, var > exact);
        EXPECT_EQ(s == Status::BRealizable, var == exact);
      }
    }
  }
}
