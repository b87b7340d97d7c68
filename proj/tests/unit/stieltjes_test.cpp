#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace discmom;
using testing_support::frac;
using testing_support::M;

TEST(Stieltjes, Examples) {
  const StieltjesVerdict delta2 = stieltjes_classify(M({"2", "4", "8"}));
  ASSERT_EQ(delta2.status, Status::BRealizable);
  EXPECT_EQ(delta2.boundary_index, 2u);
  EXPECT_EQ(delta2.phi, (std::vector<Rational>{2}));
  EXPECT_EQ(delta2.measure->support_polynomial(), (Polynomial{-2, 1}));
  EXPECT_EQ(*delta2.measure->as_rational(), make_measure({2}, {1}));

  EXPECT_EQ(stieltjes_classify(M({"1/2", "3/4"})).status, Status::IRealizable);

  // Realizable on [0, inf) (variance 3/20) though not on the integers.
  EXPECT_EQ(stieltjes_classify(M({"3/2", "12/5"})).status, Status::IRealizable);
  const StieltjesVerdict bad = stieltjes_classify(M({"3/2", "2"}));
  ASSERT_EQ(bad.status, Status::NotRealizable);
  EXPECT_EQ(bad.witness->index, 2u);
  EXPECT_LT(bad.witness->quadratic_value, 0);

  const StieltjesVerdict zero = stieltjes_classify(M({"0", "0", "1"}));
  ASSERT_EQ(zero.status, Status::NotRealizable);
  ASSERT_TRUE(zero.witness->recurrence_k);
  EXPECT_EQ(zero.witness->residual, Rational(1));

  const StieltjesVerdict at0 = stieltjes_classify(M({"0", "0", "0"}));
  ASSERT_EQ(at0.status, Status::BRealizable);
  EXPECT_EQ(*at0.measure->as_rational(), make_measure({0}, {1}));
  EXPECT_EQ(stieltjes_classify(M({"-1"})).status, Status::NotRealizable);
}

TEST(SupportPolynomial, Examples) {
  EXPECT_EQ(support_polynomial(M({"3/2"}), 2), (Polynomial{frac(-3, 2), 1}));
  const Polynomial g4 = support_polynomial(M({"4/3", "10/3", "28/3"}), 4);
  EXPECT_EQ(g4 * Rational(7), (Polynomial{6, -22, 7}));
  const auto roots3 = isolate_roots(support_polynomial(M({"3/2", "5/2"}), 3));
  ASSERT_EQ(roots3.size(), 2u);
  EXPECT_EQ(roots3[0].rational(), 0);
  EXPECT_EQ(roots3[1].rational(), frac(5, 3));
  EXPECT_EQ(support_polynomial(MomentVector{}, 1), (Polynomial{0, 1}));
  EXPECT_THROW(support_polynomial(M({"1", "1", "1"}), 4), PreconditionError);
}

TEST(MinimalStieltjesExtension, Examples) {
  auto [hat, nu] = minimal_stieltjes_extension(M({"3/2"}));
  EXPECT_EQ(hat, frac(9, 4));
  EXPECT_EQ(*nu.as_rational(), make_measure({frac(3, 2)}, {1}));
  EXPECT_EQ(minimal_stieltjes_extension(M({"1/2"})).first, frac(1, 4));
  const MomentVector m = M({"4/3", "10/3", "28/3"});
  auto [hat4, nu4] = minimal_stieltjes_extension(m);
  EXPECT_EQ(nu4.moments(4), m.extended(hat4));
  EXPECT_EQ(determinant(hankel(m.extended(hat4), 4)), 0);
  EXPECT_THROW(minimal_stieltjes_extension(M({"0"})), PreconditionError);
}

TEST(Stieltjes, MeasureMomentsNeverNot) {
  testing_support::Gen gen(51);
  for (int trial = 0; trial < 200; ++trial) {
    const AtomicMeasure mu = gen.real_measure(4, 6);
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 8));
    const MomentVector m = mu.moments(n);
    const StieltjesVerdict v = stieltjes_classify(m);
    ASSERT_NE(v.status, Status::NotRealizable);
    if (v.status == Status::BRealizable) {
      EXPECT_EQ(v.measure->moments(n), m);
      EXPECT_EQ(*v.measure->as_rational(), mu);
    }
  }
}

TEST(MinimalStieltjesExtension, Properties) {
  testing_support::Gen gen(52);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const AtomicMeasure mu = gen.real_measure(5, 6);
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 7));
    const MomentVector m = mu.moments(n - 1);
    if (stieltjes_classify(m).status != Status::IRealizable) continue;
    ++checked;
    auto [hat, nu] = minimal_stieltjes_extension(m);
    const MomentVector full = m.extended(hat);
    EXPECT_EQ(determinant(hankel(full, n)), 0);
    for (std::size_t j = 1; j <= n; ++j) EXPECT_NE(psd_classify(hankel(full, j)).cls, PositivityClass::Indefinite);
    EXPECT_EQ(nu.moments(n), full);
    EXPECT_EQ(stieltjes_classify(full).status, Status::BRealizable);
    EXPECT_EQ(stieltjes_classify(m.extended(hat - gen.rational(0, 2, 7) - frac(1, 1000))).status,
              Status::NotRealizable);
    // n = 2k: k atoms; n = 2k+1: k+1 atoms including 0.
    EXPECT_EQ(nu.size(), n % 2 == 0 ? n / 2 : n / 2 + 1);
    EXPECT_EQ(nu.contains_zero(), n % 2 == 1);
    for (std::size_t i = 0; i < nu.size(); ++i) EXPECT_EQ(nu.weight_sign(i), 1);
  }
  EXPECT_EQ(checked, 60);
}
