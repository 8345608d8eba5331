#include <algorithm>
#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "klein/io.hpp"
#include "klein/volume.hpp"

using klein::CycElem;

namespace {

CycElem coeffs(std::initializer_list<long long> v) {
  CycElem::Coeffs c;
  int k = 0;
  for (long long x : v) c[k++] = x;
  return CycElem(c);
}

const klein::XTable& table() {
  static const klein::XTable x = klein::compute_x_table();
  return x;
}

const klein::VolumeReport& report() {
  static const klein::VolumeReport r = klein::compute_volume_report();
  return r;
}

// 30-digit reference values.
constexpr double kI123Imag = -30.60955498754449202602;
constexpr double kVMinus = 0.86135136017156637705;
constexpr double kTwiceVMinus = 0.7227027203431327541;

} // namespace

TEST(Periods, FirstLoopOfFirstForm) {
  EXPECT_EQ(klein::period_exact(1, 1), 1 - CycElem::zeta());
  EXPECT_THROW(klein::period_exact(1, 0), std::out_of_range);
  EXPECT_THROW(klein::period_exact(1, 8), std::out_of_range);
}

TEST(Periods, Telescope) {
  for (int i = 1; i <= 3; ++i) {
    CycElem sum = 0;
    for (int k = 1; k <= 7; ++k) sum = sum + klein::period_exact(i, k);
    EXPECT_TRUE(sum.is_zero()) << i;
  }
}

TEST(Periods, ScaledByBeta) {
  for (int i = 1; i <= 3; ++i)
    for (int k = 1; k <= 6; ++k) {
      const auto p = klein::period(i, k);
      const double b = klein::specfun::period_beta(i).value;
      EXPECT_NEAR(std::abs(p.value.value - p.normalized.value * b), 0.0, 1e-13);
      EXPECT_LE(p.value.error_bound, 1e-11);
    }
}

TEST(IteratedIntegrals, CoefficientAtFirstLoop) {
  EXPECT_EQ(klein::iterated_integral_form(1, 2, 1).x_coeff, 1 - CycElem::zeta_pow(3));
}

TEST(IteratedIntegrals, ReversalIdentityOnAll63Triples) {
  const auto& x = table();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 7; ++k) {
        const auto pi = klein::embed(klein::period_exact(i, k)).value;
        const auto pj = klein::embed(klein::period_exact(j, k)).value;
        const auto ij = klein::iterated_integral(i, j, k, x).value;
        const auto ji = klein::iterated_integral(j, i, k, x).value;
        EXPECT_LT(std::abs(ij + ji - pi * pj), 1e-9) << i << j << k;
      }
}

TEST(IteratedIntegrals, AntisymmetricForm) {
  const auto& x = table();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      for (int k = 1; k <= 7; ++k) {
        const auto a = klein::antisym_integral(i, j, k, x).value;
        const auto d = klein::iterated_integral(i, j, k, x).value - klein::iterated_integral(j, i, k, x).value;
        EXPECT_LT(std::abs(a - d), 1e-10) << i << j << k;

        // Conjugating the exact coefficients conjugates the value (x is real).
        const auto f = klein::antisym_integral_form(i, j, k);
        const klein::ClosedForm fc{klein::conj(f.x_coeff), klein::conj(f.constant)};
        EXPECT_LT(std::abs(klein::evaluate(fc, x(i, j)).value - std::conj(a)), 1e-12);
      }
    }
}

TEST(IteratedIntegrals, HalfMakesTheXTermSymmetric) {
  const klein::NumValue half{0.5, 0.0, klein::BoundKind::rigorous, "test"};
  for (int k = 1; k <= 7; ++k) {
    const auto f = klein::antisym_integral_form(1, 2, k);
    const auto g = klein::iterated_integral_form(1, 2, k);
    EXPECT_EQ(CycElem(klein::Rational(1, 2)) * f.x_coeff, g.x_coeff);
    EXPECT_LT(std::abs(klein::evaluate(f, half).value -
                       (klein::embed(f.x_coeff).value * 0.5 + klein::embed(f.constant).value)),
              1e-14);
  }
}

TEST(I123, ClosedFormCoefficientsAreFrozen) {
  const auto c = klein::closed_form_coefficients();
  EXPECT_EQ(c.x_coeffs[0], coeffs({0, 0, 14, -14, 14, -14}));
  EXPECT_EQ(c.x_coeffs[1], coeffs({14, 28, 14, 0, 28, 14}));
  EXPECT_EQ(c.x_coeffs[2], coeffs({14, 28, 28, 14, 14, 0}));
  EXPECT_EQ(c.constant, -21 * klein::sqrt_minus7());
}

TEST(I123, KSumReproducesClosedFormExactly) {
  const auto a = klein::closed_form_coefficients();
  const auto b = klein::brute_force_coefficients();
  for (int n = 0; n < 3; ++n) EXPECT_EQ(a.x_coeffs[n], b.x_coeffs[n]) << n;
  EXPECT_EQ(a.constant, b.constant);
  // Every coefficient is purely imaginary.
  for (const auto& c : a.x_coeffs) EXPECT_EQ(klein::conj(c), -c);
  EXPECT_EQ(klein::conj(a.constant), -a.constant);
}

TEST(I123, TwoRoutesAgreeAndArePureImaginary) {
  const auto r = klein::compute_I123(table());
  EXPECT_LE(r.mismatch, 1e-8);
  EXPECT_LE(std::fabs(r.closed_form.value.real()), 1e-10);
  EXPECT_NEAR(r.closed_form.value.imag(), kI123Imag, 1e-11);
  EXPECT_NEAR(r.brute_force.value.imag(), kI123Imag, 1e-11);
  EXPECT_EQ(r.closed_form.method, "closed-form");
  EXPECT_EQ(r.brute_force.method, "brute-force");
}

TEST(XTable, DiagonalIsFixedByShuffle) {
  klein::XTable x;
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(x(i, i).value, 0.5);
  EXPECT_THROW(x.set(2, 2, {0.4, 0.0, klein::BoundKind::heuristic, "test"}), std::invalid_argument);
  EXPECT_THROW(x(0, 1), std::out_of_range);
}

TEST(HarmonicValues, FrozenValues) {
  const auto h = klein::harmonic_values(klein::compute_I123(table()).value());
  EXPECT_LE(h.v_plus.distance_to_integer, 1e-6);
  EXPECT_NEAR(h.v_minus.representative, kVMinus, 1e-11);
  EXPECT_NEAR(h.twice_v_minus.representative, kTwiceVMinus, 1e-11);
  EXPECT_NEAR(h.twice_v_minus.representative, 0.72270, 1e-5);
  EXPECT_LE(h.twice_v_minus.error_bound, 1e-5);
  for (const auto* m : {&h.v_plus, &h.v_minus, &h.twice_v_minus}) {
    EXPECT_GE(m->representative, 0.0);
    EXPECT_LT(m->representative, 1.0);
  }
}

TEST(HarmonicValues, MinusPartIsTwiceImaginaryOverRootSeven) {
  const auto I = klein::compute_I123(table()).value();
  const auto h = klein::harmonic_values(I);
  const double direct = 2 * I.value.imag() / std::sqrt(7.0);
  EXPECT_LT(klein::circle_distance(h.v_minus.representative, direct - std::floor(direct)), 1e-12);
}

TEST(HarmonicValues, RealPartFeedsOnlyThePlusValue) {
  // (I + conj I)/7 picks up Re I; (I - conj I)/sqrt(-7) stays real regardless.
  const klein::ComplexValue I{{0.5, -30.6}, 1e-12, klein::BoundKind::heuristic, "test"};
  const auto h = klein::harmonic_values(I);
  EXPECT_NEAR(h.v_plus.representative, 1.0 / 7, 1e-12);
}

TEST(HarmonicValues, TheoremFormDiffersByAnInteger) {
  const auto& x = table();
  const auto t = klein::theorem_form_value(x);
  const auto h = klein::harmonic_values(klein::compute_I123(x).value());
  EXPECT_LT(klein::circle_distance(t.representative, h.v_minus.representative), 1e-10);
}

TEST(Report, ContainsEveryIntermediate) {
  const auto& r = report();
  const klein::json j = r;
  ASSERT_EQ(j.at("periods").size(), 3u);
  for (const auto& row : j.at("periods")) EXPECT_EQ(row.size(), 6u);
  EXPECT_EQ(j.at("iterated").size(), 3u);
  EXPECT_EQ(j.at("iterated")[0].size(), 3u);
  EXPECT_EQ(j.at("iterated")[0][0].size(), 7u);
  EXPECT_EQ(j.at("x_values").size(), 3u);
  EXPECT_EQ(j.at("x_oracle").at("x12").at("method"), "simplex-oracle");
  EXPECT_EQ(j.at("I123").at("brute_force").at("method"), "brute-force");
  EXPECT_TRUE(j.at("headline").at("matches_value").get<bool>());
  EXPECT_FALSE(j.at("headline").at("matches_mirror").get<bool>());
  EXPECT_LE(std::fabs(r.I123.closed_form.value.real()), r.error_budget);
  EXPECT_EQ(j.at("periods")[0][0].at("exact"), klein::json(1 - CycElem::zeta()));
}

TEST(Report, CsvHasOneRowPerQuantity) {
  std::ostringstream os;
  klein::write_csv(os, report());
  std::istringstream is(os.str());
  std::string line;
  int rows = 0;
  std::getline(is, line);
  EXPECT_EQ(line, "quantity,method,re,im,error_bound,bound_kind");
  while (std::getline(is, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5) << line;
  }
  // 3 betas + 18 periods + 9 x rows + 63 iterated + 2 I123 + 4 values.
  EXPECT_EQ(rows, 3 + 18 + 9 + 63 + 2 + 4);
}

TEST(Report, CoarsePolicyStillBracketsTheValue) {
  const auto r = klein::compute_volume_report({1e-2, 100, klein::specfun::Acceleration::none});
  const auto& t = r.values.twice_v_minus;
  EXPECT_LE(klein::circle_distance(t.representative, kTwiceVMinus), t.error_bound);
  EXPECT_GT(t.error_bound, 1e-5);
}
