#ifndef KLEIN_SPECFUN_ITERATED_HPP
#define KLEIN_SPECFUN_ITERATED_HPP

// Iterated integrals x_{i,j} = int_{e_0} omega_i omega_j along the real lift e_0
// of [0, 1], where e_0^* omega'_i = t^{h_i - 1} (1 - t)^{h_{i+1} - 1} dt and
// omega_i = omega'_i / B(h_i, h_{i+1}).

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "klein/numeric.hpp"
#include "klein/specfun/gamma.hpp"
#include "klein/specfun/hypergeometric.hpp"

namespace klein::specfun {

/// (h_1, h_2, h_3, h_4) = (1/7, 2/7, 4/7, 1/7).
inline constexpr std::array<double, 4> kH = {1.0 / 7.0, 2.0 / 7.0, 4.0 / 7.0, 1.0 / 7.0};

inline double h(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("h index must be in 1..4");
  return kH[i - 1];
}

inline void check_form_index(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("form index must be in 1..3");
}

/// B'_i = B(h_i, h_{i+1}) = int_{e_0} omega'_i.
inline NumValue period_beta(int i) {
  check_form_index(i);
  return beta(h(i), h(i + 1));
}

/// Parameters (h_i, 1 - h_{i+1}, h_i + h_j; 1 + h_i, h_i + h_j + h_{j+1}).
inline HypParams klein_params(int i, int j) {
  check_form_index(i);
  check_form_index(j);
  return {h(i), 1.0 - h(i + 1), h(i) + h(j), 1.0 + h(i), h(i) + h(j) + h(j + 1)};
}

/// x_{i,j} = B(h_i + h_j, h_{j+1}) / (h_i B'_i B'_j) * 3F2(klein_params(i, j); 1).
inline NumValue x_ij(int i, int j, const SeriesPolicy& pol = {}) {
  check_form_index(i);
  check_form_index(j);
  if (i == j) throw std::invalid_argument("x_ij: i and j must differ (x_ii = 1/2 by the shuffle relation)");
  const NumValue num = beta(h(i) + h(j), h(j + 1));
  const NumValue bi = period_beta(i), bj = period_beta(j);
  const double pre = num.value / (h(i) * bi.value * bj.value);
  const double pre_rel = num.error_bound / num.value + bi.error_bound / bi.value + bj.error_bound / bj.value +
                         4 * std::numeric_limits<double>::epsilon();
  const SeriesResult f = hyp3f2_at_1(klein_params(i, j), pol);
  const double v = pre * f.value.value;
  const double bound = std::fabs(pre) * f.value.error_bound + pre_rel * std::fabs(v);
  return {v, bound, BoundKind::heuristic, f.value.method};
}

/// Same quantity from the simplex integral: simplex(h_i, h_{i+1}, h_j, h_{j+1}) / (B'_i B'_j).
inline NumValue x_ij_oracle(int i, int j, double tol = 1e-10) {
  check_form_index(i);
  check_form_index(j);
  const NumValue s = simplex_oracle(h(i), h(i + 1), h(j), h(j + 1), tol);
  const NumValue bi = period_beta(i), bj = period_beta(j);
  const double v = s.value / (bi.value * bj.value);
  const double rel = bi.error_bound / bi.value + bj.error_bound / bj.value + 2 * std::numeric_limits<double>::epsilon();
  return {v, s.error_bound / (bi.value * bj.value) + rel * std::fabs(v), BoundKind::heuristic, "simplex-oracle"};
}

} // namespace klein::specfun

#endif
