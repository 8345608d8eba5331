#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "klein/specfun/gamma.hpp"
#include "klein/specfun/hypergeometric.hpp"
#include "klein/specfun/iterated.hpp"
#include "klein/specfun/quadrature.hpp"
#include "klein/specfun/series.hpp"

namespace sf = klein::specfun;
using sf::Acceleration;

namespace {

double rel_err(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

double gauss_sum(double a, double b, double c) {
  return sf::gamma(c).value * sf::gamma(c - a - b).value / (sf::gamma(c - a).value * sf::gamma(c - b).value);
}

sf::SeriesPolicy policy(Acceleration a, double tol = 1e-9, std::size_t max_terms = 2'000'000) {
  return {tol, max_terms, a};
}

} // namespace

TEST(Gamma, FrozenValues) {
  // Reference digits from a 30-digit mpmath run.
  EXPECT_LT(rel_err(sf::gamma(0.3).value, 2.9915689876875906283), 1e-14);
  EXPECT_LT(rel_err(sf::gamma(1.7).value, 0.90863873285329044998), 1e-14);
  EXPECT_LT(rel_err(sf::gamma(4.25).value, 8.2850851418352201659), 1e-14);
  EXPECT_LT(rel_err(sf::gamma(9.5).value, 119292.46199460900709), 1e-14);
  EXPECT_LT(rel_err(sf::gamma(17.125).value, 29717922239708.028702), 1e-13);
}

TEST(Gamma, HalfIsRootPi) {
  EXPECT_LT(rel_err(sf::gamma(0.5).value, std::sqrt(std::numbers::pi)), 1e-12);
}

TEST(Gamma, RecurrenceAndLog) {
  for (double x : {0.1, 0.5, 1.3, 2.75, 8.0, 30.5}) {
    EXPECT_LT(rel_err(sf::gamma(x + 1).value, x * sf::gamma(x).value), 1e-13) << x;
    EXPECT_NEAR(sf::log_gamma(x), std::log(sf::gamma(x).value), 1e-13 * std::max(1.0, std::fabs(sf::log_gamma(x))));
    EXPECT_LT(rel_err(sf::gamma(x).value, std::tgamma(x)), 1e-13) << x;
  }
  EXPECT_DOUBLE_EQ(sf::pochhammer(0.5, 3), 0.5 * 1.5 * 2.5);
  EXPECT_THROW(sf::gamma(0.0), std::invalid_argument);
  EXPECT_THROW(sf::gamma(-1.5), std::invalid_argument);
}

TEST(Gamma, AgreesWithIntegralRepresentation) {
  // Gamma(x) = int_0^1 (-log t)^{x-1} dt.
  for (double x : {0.3, 0.75, 1.7, 3.2, 5.5}) {
    const auto q = sf::tanh_sinh(
        [x](double t, double tc) { return std::pow(t < 0.5 ? -std::log(t) : -std::log1p(-tc), x - 1); },
        {.tol = 1e-12});
    EXPECT_LT(rel_err(sf::gamma(x).value, q.value), 1e-10) << x;
  }
}

TEST(Beta, AgreesWithQuadrature) {
  const double u = 1.0 / 7, v = 2.0 / 7;
  const auto q = sf::tanh_sinh([&](double x, double xc) { return std::pow(x, u - 1) * std::pow(xc, v - 1); },
                               {.tol = 1e-11});
  EXPECT_LT(rel_err(sf::beta(u, v).value, q.value), 1e-10);
  EXPECT_LT(rel_err(sf::beta(u, v).value, 9.9736333933568617198), 1e-14);
  EXPECT_LT(rel_err(sf::beta(100.5, 80.25).value, std::exp(std::lgamma(100.5) + std::lgamma(80.25) - std::lgamma(180.75))),
            1e-11);
}

TEST(Beta, FrozenPeriods) {
  EXPECT_LT(rel_err(sf::period_beta(1).value, 9.9736333933568617198), 1e-14);
  EXPECT_LT(rel_err(sf::period_beta(2).value, 4.438684435255308298), 1e-14);
  EXPECT_LT(rel_err(sf::period_beta(3).value, 7.9982329812161274054), 1e-14);
}

TEST(Levin, AcceleratesAlternatingAndLogarithmicSeries) {
  sf::LevinU<long double> alt;
  long double sign = 1;
  for (int n = 1; n <= 20; ++n, sign = -sign) alt.push(sign / n);
  EXPECT_NEAR(static_cast<double>(alt.estimate()), std::log(2.0), 1e-14);

  sf::LevinU<long double> zeta2;
  for (int n = 1; n <= 20; ++n) zeta2.push(1.0L / (static_cast<long double>(n) * n));
  EXPECT_NEAR(static_cast<double>(zeta2.estimate()), std::numbers::pi * std::numbers::pi / 6, 1e-9);
}

TEST(Richardson, RemovesKnownPowers) {
  // S(N) = 1 + 2 N^{-0.5} + 3 N^{-1.5}.
  sf::Richardson<double> r(0.5);
  for (double n = 16; n <= 1024; n *= 2) r.push(1 + 2 / std::sqrt(n) + 3 / std::pow(n, 1.5));
  EXPECT_NEAR(r.best(), 1.0, 1e-12);
}

TEST(Hyp3F2, GaussSummationCollapse) {
  // 3F2(a, b, d; c, d; 1) = 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
  const double sets[5][4] = {
      {0.2, 0.3, 1.5, 0.7}, {0.5, 0.5, 2.0, 1.3}, {1.0 / 7, 2.0 / 7, 1.2, 0.9}, {0.25, 0.6, 1.1, 2.0}, {0.1, 0.9, 1.3, 0.4}};
  for (const auto& s : sets)
    for (auto a : {Acceleration::levin, Acceleration::richardson}) {
      const auto r = sf::hyp3f2_at_1({s[0], s[1], s[3], s[2], s[3]}, policy(a));
      EXPECT_NEAR(r.value.value, gauss_sum(s[0], s[1], s[2]), 1e-9) << s[0] << " " << sf::to_string(a);
      EXPECT_LE(r.value.error_bound, 1e-9);
    }
}

TEST(Hyp3F2, FrozenKleinValues) {
  const double frozen[3][3] = {
      {0, 1.0774871069255838103, 1.2531689284793984222},
      {1.1179406085225137922, 0, 1.1959204644152951733},
      {1.9181074988717448947, 1.5260621105467599477, 0},
  };
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const auto r = sf::hyp3f2_at_1(sf::klein_params(i, j));
      EXPECT_NEAR(r.value.value, frozen[i - 1][j - 1], 1e-12) << i << j;
    }
}

TEST(Hyp3F2, TermsDecayWithTheMarginExponent) {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const auto p = sf::klein_params(i, j);
      double t = 1, t_n = 0;
      const std::size_t n1 = 20000, n2 = 40000;
      for (std::size_t n = 0; n < n2; ++n) {
        if (n == n1) t_n = t;
        t *= sf::hyp3f2_term_ratio<double>(p, n);
      }
      const double exponent = -std::log(t / t_n) / std::log(2.0);
      EXPECT_NEAR(exponent, 1 + p.margin(), 0.1 * (1 + p.margin())) << i << j;
    }
}

TEST(Hyp3F2, AccelerationsAgree) {
  for (const auto& [i, j] : {std::pair{1, 2}, {2, 3}, {3, 1}}) {
    const auto p = sf::klein_params(i, j);
    const double levin = sf::hyp3f2_at_1(p, policy(Acceleration::levin)).value.value;
    const double rich = sf::hyp3f2_at_1(p, policy(Acceleration::richardson)).value.value;
    const auto plain = sf::hyp3f2_at_1(p, policy(Acceleration::none, 1e-2, 100));
    EXPECT_NEAR(levin, rich, 1e-9);
    EXPECT_NEAR(plain.value.value, levin, plain.value.error_bound);
    EXPECT_LE(plain.value.error_bound, 1e-2);
  }
}

TEST(Hyp3F2, ForcedFailuresAreNamed) {
  const auto p = sf::klein_params(1, 2);
  EXPECT_THROW(sf::hyp3f2_at_1(p, policy(Acceleration::levin, 1e-9, 5)), klein::NoConvergence);
  EXPECT_THROW(sf::hyp3f2_at_1(p, policy(Acceleration::none, 1e-9, 1000)), klein::NoConvergence);
  EXPECT_THROW(sf::hyp3f2_at_1({0.5, 0.5, 1.0, 1.0, 1.0}), klein::MarginViolation);
  EXPECT_THROW(sf::hyp3f2_at_1({0.5, 0.5, 1.0, -2.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(sf::hyp3f2_at_1(p, policy(Acceleration::levin, 0.0)), std::invalid_argument);
}

TEST(Hyp3F2, TerminatingSeriesIsExact) {
  const auto r = sf::hyp3f2_at_1({0.0, 0.3, 0.6, 1.2, 1.5});
  EXPECT_EQ(r.value.value, 1.0);
  EXPECT_EQ(r.value.error_bound, 0.0);
  EXPECT_THROW(sf::hyp3f2_at_1({-2.0, 1.0, 1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST(Simplex, MatchesSeriesOnRandomParameters) {
  // int_{0<=u<=v<=1} u^{a-1}(1-u)^{b-1} v^{p-1}(1-v)^{q-1}
  //   = B(a+p, q)/a * 3F2(a, 1-b, a+p; a+1, a+p+q; 1).
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ua(0.15, 1.5), ub(0.1, 0.9), up(0.15, 1.5), uq(0.1, 1.0);
  for (int n = 0; n < 10; ++n) {
    const double a = ua(rng), b = ub(rng), p = up(rng), q = uq(rng);
    const auto s = sf::simplex_oracle(a, b, p, q);
    const auto f = sf::hyp3f2_at_1({a, 1 - b, a + p, a + 1, a + p + q});
    const double series = sf::beta(a + p, q).value / a * f.value.value;
    EXPECT_NEAR(s.value, series, 1e-9 * std::max(1.0, series)) << a << " " << b << " " << p << " " << q;
  }
  EXPECT_THROW(sf::simplex_oracle(0.5, 1.5, 0.5, 0.5), std::invalid_argument);
  EXPECT_THROW(sf::simplex_oracle(-0.5, 0.5, 0.5, 0.5), std::invalid_argument);
}

TEST(IteratedParameters, FrozenXValuesAndShuffle) {
  const double frozen[3][3] = {
      {0.5, 0.54900944953607486565, 0.83091687767070851698},
      {0.45099055046392513435, 0.5, 0.85368670814893084942},
      {0.16908312232929148302, 0.14631329185106915058, 0.5},
  };
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) {
        EXPECT_THROW(sf::x_ij(i, j), std::invalid_argument);
        continue;
      }
      const auto x = sf::x_ij(i, j);
      EXPECT_NEAR(x.value, frozen[i - 1][j - 1], 1e-12) << i << j;
      EXPECT_LE(x.error_bound, 1e-9);
      EXPECT_NEAR(sf::x_ij_oracle(i, j).value, frozen[i - 1][j - 1], 1e-9) << i << j;
      if (i < j) {
        EXPECT_NEAR(x.value + sf::x_ij(j, i).value, 1.0, 1e-12);
      }
    }
  EXPECT_THROW(sf::x_ij(0, 1), std::out_of_range);
}
