#ifndef KLEIN_SPECFUN_HYPERGEOMETRIC_HPP
#define KLEIN_SPECFUN_HYPERGEOMETRIC_HPP

// 3F2(a1, a2, a3; b1, b2; t) in the limit t -> 1 - 0, and the simplex
// integral it represents.
//
// At t = 1 the terms decay like n^{-1-s}, s = b1 + b2 - a1 - a2 - a3, so the
// series converges only logarithmically. Three evaluation routes:
//   levin       Levin u-transform in 50-digit arithmetic; falls back to
//               richardson if it stagnates before reaching the tolerance.
//   richardson  partial sums at N0 * 2^m extrapolated with the known
//               exponents s, s+1, s+2, ...
//   none        plain partial sum of max_terms terms plus the integral of the
//               leading n^{-1-s} tail; no sequence transformation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "klein/errors.hpp"
#include "klein/numeric.hpp"
#include "klein/specfun/gamma.hpp"
#include "klein/specfun/quadrature.hpp"
#include "klein/specfun/series.hpp"

namespace klein::specfun {

struct HypParams {
  double alpha1 = 0, alpha2 = 0, alpha3 = 0;
  double beta1 = 0, beta2 = 0;

  /// s = beta1 + beta2 - alpha1 - alpha2 - alpha3; t = 1 requires s > 0.
  double margin() const { return beta1 + beta2 - alpha1 - alpha2 - alpha3; }
};

enum class Acceleration { levin, richardson, none };

inline const char* to_string(Acceleration a) {
  switch (a) {
    case Acceleration::levin: return "levin";
    case Acceleration::richardson: return "richardson";
    case Acceleration::none: return "none";
  }
  return "?";
}

struct SeriesPolicy {
  double tol = 1e-9;
  std::size_t max_terms = 2'000'000;
  Acceleration accel = Acceleration::levin;
};

struct SeriesResult {
  NumValue value;
  std::size_t terms_used = 0;
  Acceleration method = Acceleration::levin;
};

/// t_{n+1} / t_n for the series at t = 1.
template <class Real>
Real hyp3f2_term_ratio(const HypParams& p, std::size_t n) {
  const Real k = Real(static_cast<double>(n));
  return (Real(p.alpha1) + k) * (Real(p.alpha2) + k) * (Real(p.alpha3) + k) /
         ((Real(p.beta1) + k) * (Real(p.beta2) + k) * (k + 1));
}

namespace detail {

inline void validate(const HypParams& p) {
  for (double v : {p.alpha1, p.alpha2, p.alpha3, p.beta1, p.beta2})
    if (!(v > -1.0) || !std::isfinite(v)) throw std::invalid_argument("3F2 parameters must be finite and > -1");
  for (double b : {p.beta1, p.beta2})
    if (b <= 0 && b == std::floor(b)) throw std::invalid_argument("3F2 denominator parameter is a non-positive integer");
  if (!(p.margin() > 0)) {
    std::ostringstream os;
    os << "boundary evaluation needs b1 + b2 - a1 - a2 - a3 > 0, got " << p.margin();
    throw MarginViolation(os.str());
  }
}

inline std::string describe(const HypParams& p) {
  std::ostringstream os;
  os.precision(6);
  os << "3F2(" << p.alpha1 << ", " << p.alpha2 << ", " << p.alpha3 << "; " << p.beta1 << ", " << p.beta2 << "; 1)";
  return os.str();
}

inline constexpr std::size_t kLevinMaxOrder = 60;

/// Levin route. Runs until the spread of the last three estimates drops below
/// tol * kLevinRefine, then reports the estimate with the smallest spread seen.
/// Returns false if that spread never reaches tol within the allowed terms.
inline constexpr double kLevinRefine = 1e-6;

inline bool levin_at_1(const HypParams& p, const SeriesPolicy& pol, SeriesResult& out, double& best_spread) {
  using Real = boost::multiprecision::cpp_bin_float_50;
  LevinU<Real> levin;
  Real term = 1;
  Real e0 = 0, e1 = 0, e2 = 0;  // last three estimates, e2 most recent
  Real best_value = 0;
  std::size_t best_terms = 0;
  const std::size_t limit = std::min(pol.max_terms, kLevinMaxOrder + 1);
  for (std::size_t n = 0; n < limit; ++n) {
    if (term == 0) {  // terminating series: the partial sum is exact
      out = {{levin.partial_sum().convert_to<double>(), 0.0, BoundKind::rigorous, "series-exact"}, n, Acceleration::levin};
      return true;
    }
    levin.push(term);
    term *= hyp3f2_term_ratio<Real>(p, n);
    e0 = e1;
    e1 = e2;
    e2 = levin.estimate();
    if (levin.size() < 5) continue;
    const Real hi = std::max({e0, e1, e2}), lo = std::min({e0, e1, e2});
    const double spread = (hi - lo).convert_to<double>();
    if (spread < best_spread) {
      best_spread = spread;
      best_value = e2;
      best_terms = levin.size();
    }
    if (spread <= pol.tol * kLevinRefine) break;
  }
  if (!(best_spread <= pol.tol)) return false;
  const double v = best_value.convert_to<double>();
  const double bound = best_spread + std::numeric_limits<double>::epsilon() * std::fabs(v);
  out = {{v, bound, BoundKind::heuristic, "series+levin-u"}, best_terms, Acceleration::levin};
  return true;
}

inline constexpr std::size_t kRichardsonBase = 16;

inline bool richardson_at_1(const HypParams& p, const SeriesPolicy& pol, SeriesResult& out, double& best_change) {
  using Real = long double;
  Richardson<Real> rich(p.margin());
  Real sum = 0, comp = 0, term = 1;
  std::size_t n = 0;
  for (std::size_t target = kRichardsonBase; target <= pol.max_terms; target *= 2) {
    for (; n < target; ++n) {
      const Real y = term - comp;  // Kahan summation
      const Real t = sum + y;
      comp = (t - sum) - y;
      sum = t;
      term *= hyp3f2_term_ratio<Real>(p, n);
    }
    rich.push(sum);
    if (rich.size() < 3) continue;
    const double change = static_cast<double>(rich.change());
    best_change = std::min(best_change, change);
    if (change <= pol.tol) {
      const double v = static_cast<double>(rich.best());
      const double bound = change + 4 * std::numeric_limits<double>::epsilon() * std::fabs(v);
      out = {{v, bound, BoundKind::heuristic, "series+richardson"}, n, Acceleration::richardson};
      return true;
    }
  }
  return false;
}

/// Partial sum of N terms plus the leading-order tail
/// sum_{n >= N} t_n ~ t_N N^{1+s} (N - 1/2)^{-s} / s.
inline long double tail_corrected_sum(long double partial, long double next_term, std::size_t n, double s) {
  const long double N = static_cast<long double>(n);
  return partial + next_term * std::pow(N, 1.0L + s) * std::pow(N - 0.5L, -static_cast<long double>(s)) / s;
}

inline bool direct_at_1(const HypParams& p, const SeriesPolicy& pol, SeriesResult& out, double& bound_out) {
  using Real = long double;
  const std::size_t n_max = pol.max_terms;
  if (n_max < 2) return false;
  const double s = p.margin();
  Real sum = 0, comp = 0, term = 1, half_estimate = 0;
  for (std::size_t n = 0; n < n_max; ++n) {
    if (n == n_max / 2) half_estimate = tail_corrected_sum(sum, term, n, s);
    const Real y = term - comp;
    const Real t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    term *= hyp3f2_term_ratio<Real>(p, n);
  }
  const Real estimate = tail_corrected_sum(sum, term, n_max, s);
  const double v = static_cast<double>(estimate);
  // The corrected sum errs by O(N^{-1-s}); the change from N/2 to N bounds it.
  const double bound = static_cast<double>(std::fabs(estimate - half_estimate)) +
                       4 * std::numeric_limits<double>::epsilon() * std::fabs(v);
  bound_out = bound;
  if (bound > pol.tol) return false;
  out = {{v, bound, BoundKind::heuristic, "series+tail-estimate"}, n_max, Acceleration::none};
  return true;
}

} // namespace detail

/// lim_{t -> 1-0} 3F2(a1, a2, a3; b1, b2; t), absolute error <= pol.tol.
inline SeriesResult hyp3f2_at_1(const HypParams& p, const SeriesPolicy& pol = {}) {
  if (!(pol.tol > 0)) throw std::invalid_argument("hyp3f2_at_1: tolerance must be positive");
  detail::validate(p);
  SeriesResult out;
  double best = std::numeric_limits<double>::infinity();
  switch (pol.accel) {
    case Acceleration::levin:
      if (detail::levin_at_1(p, pol, out, best)) return out;
      if (detail::richardson_at_1(p, pol, out, best)) return out;
      break;
    case Acceleration::richardson:
      if (detail::richardson_at_1(p, pol, out, best)) return out;
      break;
    case Acceleration::none:
      if (detail::direct_at_1(p, pol, out, best)) return out;
      break;
  }
  std::ostringstream os;
  os << detail::describe(p) << " with accel=" << to_string(pol.accel) << ", max_terms=" << pol.max_terms
     << ": best error estimate " << best << " > tol " << pol.tol;
  throw NoConvergence(os.str());
}

/// integral over {0 <= u <= v <= 1} of u^{a-1} (1-u)^{b-1} v^{p-1} (1-v)^{q-1} du dv.
///
/// u = v w maps the simplex onto the unit square:
///   w^{a-1} v^{a+p-1} (1 - v w)^{b-1} (1 - v)^{q-1} dw dv,
/// with 1 - v w = (1 - v) + v (1 - w) evaluated from the complements.
inline NumValue simplex_oracle(double a, double b, double p, double q, double tol = 1e-10) {
  if (!(a > 0 && b > 0 && p > 0 && q > 0)) throw std::invalid_argument("simplex_oracle: a, b, p, q must be positive");
  if (!(b < 1)) throw std::invalid_argument("simplex_oracle: b must be < 1");
  if (!(tol > 0)) throw std::invalid_argument("simplex_oracle: tolerance must be positive");
  const QuadratureOptions opt{.tol = tol};
  double prev = 0.0, diff = 0.0;
  std::vector<double> outer, inner;
  for (int level = 0; level <= opt.max_level; ++level) {
    const auto nodes = tanh_sinh_nodes(level, opt.t_max);
    outer.resize(nodes.size());
    inner.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& n = nodes[i];
      outer[i] = n.weight * std::pow(n.x, a + p - 1) * std::pow(n.xc, q - 1);
      inner[i] = n.weight * std::pow(n.x, a - 1);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (outer[i] == 0.0) continue;
      const double v = nodes[i].x, vc = nodes[i].xc;
      double row = 0.0;
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (inner[j] == 0.0) continue;
        row += inner[j] * std::pow(vc + v * nodes[j].xc, b - 1);
      }
      sum += outer[i] * row;
    }
    if (!std::isfinite(sum)) throw SingularityUnresolved("simplex_oracle: non-finite quadrature sum");
    diff = std::fabs(sum - prev);
    if (level >= opt.min_level && diff <= tol)
      return {sum, diff + 8 * std::numeric_limits<double>::epsilon() * sum, BoundKind::heuristic, "tanh-sinh-2d"};
    prev = sum;
  }
  throw SingularityUnresolved("simplex_oracle: level difference " + std::to_string(diff) + " above tolerance " +
                              std::to_string(tol));
}

} // namespace klein::specfun

#endif
