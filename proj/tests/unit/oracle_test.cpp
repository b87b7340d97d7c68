#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace discmom;
using testing_support::frac;
using testing_support::M;

namespace {

const Grid kN0 = Grid::naturals();

RootPattern rp(std::initializer_list<long> values) {
  RootPattern out;
  for (long v : values) out.push_back(v);
  return out;
}

std::vector<RootPattern> as_rational(const std::vector<std::vector<long>>& patterns) {
  std::vector<RootPattern> out;
  for (const auto& p : patterns) {
    RootPattern r;
    for (long v : p) r.push_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

/// Moments of a random atomic measure on {0..8} plus a signed perturbation
/// of total mass zero on the same points.
MomentVector perturbed_vector(testing_support::Gen& gen) {
  const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
  const AtomicMeasure mu = gen.measure(3, 8);
  std::vector<Rational> w(9, Rational(0));
  for (std::size_t i = 0; i < mu.atoms.size(); ++i) w[static_cast<std::size_t>(numerator(mu.atoms[i]))] += mu.weights[i];
  const std::size_t a = static_cast<std::size_t>(gen.integer(0, 8));
  const std::size_t b = static_cast<std::size_t>(gen.integer(0, 8));
  const Rational eps = gen.rational(-1, 1, 12) / 4;
  w[a] += eps;
  w[b] -= eps;
  std::vector<Rational> v;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * pow(Rational(static_cast<long>(i)), k);
    v.push_back(acc);
  }
  return MomentVector(std::move(v));
}

Rational max_atom(const AtomicMeasure& mu) { return *std::max_element(mu.atoms.begin(), mu.atoms.end()); }

}  // namespace

TEST(EnumeratePatterns, Examples) {
  EXPECT_EQ(enumerate_patterns(2, 3), (std::vector<RootPattern>{rp({0, 1}), rp({1, 2}), rp({2, 3})}));
  EXPECT_EQ(enumerate_patterns(3, 3), (std::vector<RootPattern>{rp({0, 1, 2}), rp({0, 2, 3})}));
  EXPECT_EQ(enumerate_patterns(1, 2), (std::vector<RootPattern>{rp({0})}));
  EXPECT_EQ(enumerate_upper_family(1, 2), (std::vector<Polynomial>{Polynomial{2, -1}}));
  EXPECT_THROW(enumerate_patterns(4, 3), DomainError);
}

TEST(EnumeratePatterns, ClosedFormCounts) {
  for (long bound = 3; bound <= 30; ++bound) {
    EXPECT_EQ(enumerate_patterns(2, bound).size(), static_cast<std::size_t>(bound));
    EXPECT_EQ(enumerate_patterns(3, bound).size(), static_cast<std::size_t>(bound - 1));
  }
}

TEST(EnumeratePatterns, MatchesFilteredTuples) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (long bound = static_cast<long>(n); bound <= 9; ++bound) {
      std::vector<std::vector<long>> filtered;
      testing_support::patterns_by_filter(n, bound, filtered);
      EXPECT_EQ(enumerate_patterns(n, bound), as_rational(filtered)) << "n=" << n << " N=" << bound;

      std::vector<std::vector<long>> lower;
      if (n > 1) testing_support::patterns_by_filter(n - 1, bound - 1, lower);
      std::vector<Polynomial> expected;
      if (n == 1) expected.push_back(Polynomial{Rational(bound), -1});
      for (const auto& a : lower) expected.push_back(testing_support::pattern_polynomial(a) * Polynomial{Rational(bound), -1});
      EXPECT_EQ(enumerate_upper_family(n, bound), expected);
    }
}

TEST(RealizableOnNN, Examples) {
  EXPECT_TRUE(realizable_on_NN(M({"3/2", "5/2"}), 5).satisfied);

  const ConditionReport r = realizable_on_NN(M({"3/2", "12/5"}), 10);
  ASSERT_FALSE(r.satisfied);
  EXPECT_EQ(r.first_violation->family, ConditionFamily::P);
  EXPECT_EQ(r.first_violation->polynomial, (Polynomial{2, -3, 1}));
  EXPECT_EQ(r.first_violation->value, frac(-1, 10));

  const ConditionReport q = realizable_on_NN(M({"6", "36"}), 5);
  ASSERT_FALSE(q.satisfied);
  EXPECT_EQ(q.first_violation->family, ConditionFamily::Q);
  EXPECT_EQ(q.first_violation->polynomial, (Polynomial{0, 5, -1}));
  EXPECT_EQ(q.first_violation->value, -6);

  EXPECT_THROW(realizable_on_NN(M({"1", "1", "1"}), 2), DomainError);
}

TEST(RealizableOnNN, MeasuresOnTheGridAreAccepted) {
  testing_support::Gen gen(91);
  for (int trial = 0; trial < 200; ++trial) {
    const AtomicMeasure mu = gen.measure(4, 9);
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    const long bound = std::max<long>(9, static_cast<long>(n));
    const ConditionReport r = realizable_on_NN(mu.moments(n), bound);
    EXPECT_TRUE(r.satisfied);
    EXPECT_EQ(r.checked, enumerate_patterns(n, bound).size() + enumerate_upper_family(n, bound).size());
  }
}

TEST(RealizableOnNN, ViolationIsNegativeMember) {
  testing_support::Gen gen(92);
  for (int trial = 0; trial < 300; ++trial) {
    const MomentVector m = perturbed_vector(gen);
    const long bound = 12;
    const ConditionReport r = realizable_on_NN(m, bound);
    if (r.satisfied) continue;
    const ConditionViolation& v = *r.first_violation;
    EXPECT_LT(v.value, 0);
    EXPECT_EQ(testing_support::pair(v.polynomial, m), v.value);
    const auto family = v.family == ConditionFamily::P ? [&] {
      std::vector<Polynomial> out;
      for (const RootPattern& a : enumerate_patterns(m.size(), bound)) out.push_back(Polynomial::from_roots(a));
      return out;
    }()
                                                        : enumerate_upper_family(m.size(), bound);
    EXPECT_NE(std::find(family.begin(), family.end(), v.polynomial), family.end());
  }
}

TEST(Fixture, Examples) {
  EXPECT_EQ(fixture(rp({1, 2}), FixtureCase::A, 2), M({"3/2", "9/4"}));
  EXPECT_EQ(fixture(rp({1, 2}), FixtureCase::C, 3), M({"3/2", "5/2", "11/2"}));
  EXPECT_EQ(fixture(rp({0, 1}), FixtureCase::B, 3), M({"1/2", "1/4", "1/2"}));
  EXPECT_EQ(fixture(rp({1, 2}), FixtureCase::C, 3, frac(1, 3)), M({"3/2", "5/2", "29/6"}));
  EXPECT_THROW(fixture(rp({1, 3}), FixtureCase::A, 2), DomainError);
  EXPECT_THROW(fixture(rp({1, 2}), FixtureCase::A, 3), DomainError);
  EXPECT_THROW(fixture(rp({1, 2}), FixtureCase::C, 3, 0), DomainError);
}

TEST(Fixture, AllSmallFixturesAreNotRealizable) {
  std::size_t count = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const RootPattern& a : enumerate_patterns(n, 8)) {
      const MomentVector m = fixture(a, FixtureCase::A, n);
      const Verdict v = classify(m, kN0);
      EXPECT_EQ(v.status, Status::NotRealizable);
      EXPECT_TRUE(verify_certificate(m, v, kN0));
      EXPECT_LT(lform_eval(Polynomial::from_roots(a), m), 0);
      ++count;
    }
    for (const RootPattern& a : enumerate_patterns(n - 1, 8))
      for (FixtureCase which : {FixtureCase::B, FixtureCase::C}) {
        const MomentVector m = fixture(a, which, n);
        const Verdict v = classify(m, kN0);
        EXPECT_EQ(v.status, Status::NotRealizable);
        EXPECT_TRUE(verify_certificate(m, v, kN0));
        ++count;
      }
  }
  EXPECT_GT(count, 100u);
}

TEST(Fixture, CaseCIsAForcedMismatch) {
  const MomentVector m = fixture(rp({1, 2}), FixtureCase::C, 3);
  const Verdict v = classify(m, kN0);
  ASSERT_TRUE(std::holds_alternative<ForcedMismatch>(v.certificate));
  const ForcedMismatch& f = std::get<ForcedMismatch>(v.certificate);
  EXPECT_EQ(f.index, 3u);
  EXPECT_EQ(f.forced, frac(9, 2));
  EXPECT_EQ(f.actual, frac(11, 2));
}

TEST(VerifyCertificate, AcceptsClassifyOutput) {
  for (const MomentVector& m : {M({"3/2", "5/2"}), M({"3/2", "12/5"}), M({"1/2", "3/4"}), M({"4/3", "10/3", "28/3", "82/3"}),
                                M({"3/2", "5/2", "11/2"}), M({"1"})})
    EXPECT_TRUE(verify_certificate(m, classify(m, kN0), kN0));
}

TEST(VerifyCertificate, RejectsTampering) {
  const MomentVector b = M({"3/2", "5/2"});
  const Verdict vb = classify(b, kN0);
  Verdict negated = vb;
  std::get<BoundaryCertificate>(negated.certificate).measure.weights[0] *= -1;
  EXPECT_FALSE(verify_certificate(b, negated, kN0));
  Verdict moved = vb;
  std::get<BoundaryCertificate>(moved.certificate).measure.atoms[1] = 3;
  EXPECT_FALSE(verify_certificate(b, moved, kN0));
  Verdict relabeled = vb;
  relabeled.status = Status::IRealizable;
  EXPECT_FALSE(verify_certificate(b, relabeled, kN0));

  const MomentVector bad = M({"3/2", "12/5"});
  const Verdict vn = classify(bad, kN0);
  Verdict broken = vn;
  std::get<NegativityWitness>(broken.certificate).polynomial = Polynomial::from_roots({1, 3});
  EXPECT_FALSE(verify_certificate(bad, broken, kN0));
  Verdict wrong_value = vn;
  std::get<NegativityWitness>(wrong_value.certificate).value = -1;
  EXPECT_FALSE(verify_certificate(bad, wrong_value, kN0));
  EXPECT_FALSE(verify_certificate(M({"3/2", "5/2"}), vn, kN0));

  const MomentVector in = M({"1/2", "3/4"});
  Verdict vi = classify(in, kN0);
  std::get<MinPolyCertificate>(vi.certificate).value = 7;
  EXPECT_FALSE(verify_certificate(in, vi, kN0));

  const MomentVector c = M({"3/2", "5/2", "11/2"});
  Verdict vf = classify(c, kN0);
  std::get<ForcedMismatch>(vf.certificate).forced = frac(11, 2);
  EXPECT_FALSE(verify_certificate(c, vf, kN0));
}

TEST(Differential, AgreesWithOracle) {
  testing_support::Gen gen(93);
  int nots = 0, reals = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const MomentVector m = perturbed_vector(gen);
    const Verdict v = classify(m, kN0);
    EXPECT_TRUE(verify_certificate(m, v, kN0));
    if (v.status == Status::NotRealizable) {
      ++nots;
      for (long bound : {10L, 20L, 30L}) EXPECT_FALSE(realizable_on_NN(m, bound).satisfied) << testing_support::show(m) << " N=" << bound;
      continue;
    }
    ++reals;
    const AtomicMeasure mu = v.status == Status::BRealizable ? std::get<BoundaryCertificate>(v.certificate).measure
                                                             : minimal_extension(m, kN0).second;
    EXPECT_EQ(mu.moments(m.size()), m);
    const Rational top = max_atom(mu);
    ASSERT_TRUE(is_integer(top));
    const long bound = std::max(static_cast<long>(numerator(top)), static_cast<long>(m.size()));
    EXPECT_TRUE(realizable_on_NN(m, bound).satisfied) << testing_support::show(m) << " N=" << bound;
  }
  EXPECT_GT(nots, 30);
  EXPECT_GT(reals, 30);
}
