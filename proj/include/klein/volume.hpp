#ifndef KLEIN_VOLUME_HPP
#define KLEIN_VOLUME_HPP

// Harmonic volume of the Klein quartic on the Aut(C)-invariant tensors
// (D + conj D)/7 and (D - conj D)/sqrt(-7).
//
// Every loop integral is an exact cyclotomic coefficient times a real number
// (1, B'_i, or x_{i,j}); the coefficients are kept exact and embedded into C
// only when a numeric value is needed. The harmonic correction form eta is
// zero for these tensors (omega_i ^ omega_j = 0 for holomorphic forms), so
// only iterated-integral parts enter.

#include <array>
#include <cmath>
#include <complex>
#include <future>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <utility>

#include "klein/cyclotomic.hpp"
#include "klein/homology.hpp"
#include "klein/numeric.hpp"
#include "klein/specfun/iterated.hpp"

namespace klein {

/// x_{i,j} for i, j in 1..3; the diagonal x_{i,i} = 1/2 is exact (shuffle relation).
class XTable {
public:
  XTable() {
    for (int i = 0; i < kGenus; ++i) x_[i][i] = {0.5, 0.0, BoundKind::rigorous, "shuffle"};
  }

  const NumValue& operator()(int i, int j) const {
    specfun::check_form_index(i);
    specfun::check_form_index(j);
    return x_[i - 1][j - 1];
  }
  void set(int i, int j, NumValue v) {
    specfun::check_form_index(i);
    specfun::check_form_index(j);
    if (i == j) throw std::invalid_argument("XTable: diagonal entries are fixed at 1/2");
    x_[i - 1][j - 1] = std::move(v);
  }

private:
  std::array<std::array<NumValue, kGenus>, kGenus> x_{};
};

inline constexpr std::array<std::pair<int, int>, 6> kOffDiagonal = {
    {{1, 2}, {2, 3}, {3, 1}, {2, 1}, {3, 2}, {1, 3}}};

/// The pairs (i, j) in U = {(1,2), (2,3), (3,1)}.
inline constexpr std::array<std::pair<int, int>, 3> kCyclicPairs = {{{1, 2}, {2, 3}, {3, 1}}};

/// All six off-diagonal x_{i,j}, each from its own series; evaluated concurrently.
inline XTable compute_x_table(const specfun::SeriesPolicy& pol = {}) {
  std::array<std::future<NumValue>, 6> jobs;
  for (std::size_t n = 0; n < kOffDiagonal.size(); ++n) {
    const auto [i, j] = kOffDiagonal[n];
    jobs[n] = std::async(std::launch::async, [i, j, pol] { return specfun::x_ij(i, j, pol); });
  }
  XTable t;
  for (std::size_t n = 0; n < kOffDiagonal.size(); ++n) t.set(kOffDiagonal[n].first, kOffDiagonal[n].second, jobs[n].get());
  return t;
}

/// x_{i,j} from the simplex quadrature instead of the series.
inline XTable compute_x_table_oracle(double tol = 1e-10) {
  XTable t;
  for (const auto& [i, j] : kOffDiagonal) t.set(i, j, specfun::x_ij_oracle(i, j, tol));
  return t;
}

// ---------------------------------------------------------------------------
// Periods

inline void check_loop_index(int k) {
  if (k < 1 || k > 7) throw std::out_of_range("loop index must be in 1..7");
}

/// int_{l_k} omega_i = xi_i^{k-1} - xi_i^k (normalized form).
inline CycElem period_exact(int i, int k) {
  check_loop_index(k);
  return xi_pow(i, k - 1) - xi_pow(i, k);
}

struct Period {
  CycElem exact;            // normalized period, exact
  ComplexValue normalized;  // int_{l_k} omega_i
  ComplexValue value;       // int_{l_k} omega'_i = normalized * B'_i
};

inline Period period(int i, int k) {
  Period p;
  p.exact = period_exact(i, k);
  p.normalized = embed(p.exact);
  p.normalized.method = "closed-form";
  const NumValue b = specfun::period_beta(i);
  p.value.value = p.normalized.value * b.value;
  p.value.error_bound = std::abs(p.normalized.value) * b.error_bound + p.normalized.error_bound * b.value +
                        std::numeric_limits<double>::epsilon() * std::abs(p.value.value);
  p.value.kind = weakest(p.normalized.kind, b.kind);
  p.value.method = "closed-form*beta";
  return p;
}

// ---------------------------------------------------------------------------
// Iterated integrals along l_k: linear in x_{i,j} with exact coefficients.

struct ClosedForm {
  CycElem x_coeff;
  CycElem constant;
};

/// int_{l_k} omega_i omega_j = (xi_i xi_j)^{k-1}(1 - xi_i xi_j) x_{i,j} + (xi_i xi_j)^{k-1}(xi_i xi_j - xi_j).
inline ClosedForm iterated_integral_form(int i, int j, int k) {
  check_loop_index(k);
  const CycElem w = xi_pow(i, 1) * xi_pow(j, 1);
  const CycElem wk = xi_pow(i, k - 1) * xi_pow(j, k - 1);
  return {wk * (1 - w), wk * (w - xi_pow(j, 1))};
}

/// int_{l_k} (omega_i omega_j - omega_j omega_i)
///   = 2 (xi_i xi_j)^{k-1}(1 - xi_i xi_j) x_{i,j} + (xi_i xi_j)^{k-1}(xi_i - 1)(xi_j + 1).
inline ClosedForm antisym_integral_form(int i, int j, int k) {
  check_loop_index(k);
  const CycElem w = xi_pow(i, 1) * xi_pow(j, 1);
  const CycElem wk = xi_pow(i, k - 1) * xi_pow(j, k - 1);
  return {2 * wk * (1 - w), wk * (xi_pow(i, 1) - 1) * (xi_pow(j, 1) + 1)};
}

inline ComplexValue evaluate(const ClosedForm& f, const NumValue& x, std::string method = "closed-form") {
  const ComplexValue a = embed(f.x_coeff), c = embed(f.constant);
  ComplexValue r;
  r.value = a.value * x.value + c.value;
  r.error_bound = std::abs(a.value) * x.error_bound + a.error_bound * std::fabs(x.value) + c.error_bound +
                  2 * std::numeric_limits<double>::epsilon() * (std::abs(a.value * x.value) + std::abs(c.value));
  r.kind = weakest(x.kind, BoundKind::rigorous);
  r.method = std::move(method);
  return r;
}

inline ComplexValue iterated_integral(int i, int j, int k, const XTable& x) {
  return evaluate(iterated_integral_form(i, j, k), x(i, j));
}

inline ComplexValue antisym_integral(int i, int j, int k, const XTable& x) {
  return evaluate(antisym_integral_form(i, j, k), x(i, j));
}

// ---------------------------------------------------------------------------
// I_{1,2,3} = lambda_3 sum_k xi_3^k int_{l_k}(w1 w2 - w2 w1)
//           + lambda_1 sum_k xi_1^k int_{l_k}(w2 w3 - w3 w2)
//           + lambda_2 sum_k xi_2^k int_{l_k}(w3 w1 - w1 w3)

/// I_{1,2,3} as c_12 x_12 + c_23 x_23 + c_31 x_31 + constant, exact coefficients.
struct I123Coefficients {
  std::array<CycElem, 3> x_coeffs;  // for (1,2), (2,3), (3,1)
  CycElem constant;
};

/// The simplified closed form 14((z^2 - z^6)/(z + 1) x_12 + (z^4 - z^5)/(z^2 + 1) x_23
///                               + (z - z^3)/(z^4 + 1) x_31 - (3/2) sqrt(-7)).
inline I123Coefficients closed_form_coefficients() {
  auto z = [](int e) { return CycElem::zeta_pow(e); };
  I123Coefficients c;
  c.x_coeffs[0] = 14 * (z(2) - z(6)) / (z(1) + 1);
  c.x_coeffs[1] = 14 * (z(4) - z(5)) / (z(2) + 1);
  c.x_coeffs[2] = 14 * (z(1) - z(3)) / (z(4) + 1);
  c.constant = -21 * sqrt_minus7();
  return c;
}

/// The third index m with {i, j, m} = {1, 2, 3}; the pair (i, j) is weighted by lambda_m xi_m^k.
inline int complementary_index(int i, int j) { return 6 - i - j; }

/// Coefficients from the defining k-sum, accumulated exactly term by term.
inline I123Coefficients brute_force_coefficients() {
  I123Coefficients c;
  for (std::size_t n = 0; n < kCyclicPairs.size(); ++n) {
    const auto [i, j] = kCyclicPairs[n];
    const int m = complementary_index(i, j);
    const CycElem lambda = poincare_dual(m).lambda;
    for (int k = 1; k <= 7; ++k) {
      const ClosedForm f = antisym_integral_form(i, j, k);
      const CycElem weight = lambda * xi_pow(m, k);
      c.x_coeffs[n] += weight * f.x_coeff;
      c.constant += weight * f.constant;
    }
  }
  return c;
}

/// Route A: closed-form coefficients, embedded, times x.
inline ComplexValue I123_closed_form(const XTable& x) {
  const I123Coefficients c = closed_form_coefficients();
  ComplexValue r = embed(c.constant);
  for (std::size_t n = 0; n < kCyclicPairs.size(); ++n) {
    const auto [i, j] = kCyclicPairs[n];
    const ComplexValue a = embed(c.x_coeffs[n]);
    const NumValue& xv = x(i, j);
    r.value += a.value * xv.value;
    r.error_bound += std::abs(a.value) * xv.error_bound + a.error_bound * std::fabs(xv.value);
    r.kind = weakest(r.kind, xv.kind);
  }
  r.error_bound += 8 * std::numeric_limits<double>::epsilon() * std::abs(r.value);
  r.method = "closed-form";
  return r;
}

/// Route B: the k-sum evaluated numerically, one loop integral at a time.
inline ComplexValue I123_brute_force(const XTable& x) {
  ComplexValue r;
  r.method = "brute-force";
  double mass = 0;
  for (const auto& [i, j] : kCyclicPairs) {
    const int m = complementary_index(i, j);
    const ComplexValue lambda = embed(poincare_dual(m).lambda);
    for (int k = 1; k <= 7; ++k) {
      const ComplexValue xik = embed(xi_pow(m, k));
      const ComplexValue a = antisym_integral(i, j, k, x);
      const std::complex<double> w = lambda.value * xik.value;
      r.value += w * a.value;
      r.error_bound += std::abs(w) * a.error_bound +
                       (lambda.error_bound * std::abs(xik.value) + std::abs(lambda.value) * xik.error_bound) * std::abs(a.value);
      r.kind = weakest(r.kind, a.kind);
      mass += std::abs(w * a.value);
    }
  }
  r.error_bound += 8 * std::numeric_limits<double>::epsilon() * mass;
  return r;
}

struct I123Result {
  ComplexValue closed_form;  // route A
  ComplexValue brute_force;  // route B
  double mismatch = 0.0;     // |A - B|
  /// Route A with |A - B| folded into its bound.
  ComplexValue value() const {
    ComplexValue v = closed_form;
    v.error_bound += mismatch;
    return v;
  }
};

inline I123Result compute_I123(const XTable& x) {
  I123Result r{I123_closed_form(x), I123_brute_force(x), 0.0};
  r.mismatch = std::abs(r.closed_form.value - r.brute_force.value);
  if (r.mismatch > r.closed_form.error_bound + r.brute_force.error_bound)
    throw RouteMismatch("closed form and k-sum differ by " + std::to_string(r.mismatch));
  return r;
}

// ---------------------------------------------------------------------------
// Values mod Z

struct HarmonicValues {
  ModValue v_plus;         // I((D + conj D)/7)       = (I + conj I)/7
  ModValue v_minus;        // I((D - conj D)/sqrt(-7)) = (I - conj I)/sqrt(-7)
  ModValue twice_v_minus;  // 2 I((D - conj D)/sqrt(-7))
  double imag_residue = 0.0;  // |Im| of (I - conj I)/sqrt(-7) before taking the real part
};

inline HarmonicValues harmonic_values(const ComplexValue& I123) {
  const std::complex<double> I = I123.value;
  const ComplexValue s7 = embed(sqrt_minus7());
  const std::complex<double> plus = (I + std::conj(I)) / 7.0;
  const std::complex<double> minus = (I - std::conj(I)) / s7.value;
  const double eps = std::numeric_limits<double>::epsilon();
  const double minus_bound = 2 * I123.error_bound / std::sqrt(7.0) + 4 * eps * std::abs(minus);
  HarmonicValues h;
  h.imag_residue = std::fabs(minus.imag());
  if (h.imag_residue > minus_bound)
    throw NonRealResult("(I - conj I)/sqrt(-7) has imaginary part " + std::to_string(h.imag_residue));
  h.v_plus = reduce_mod_one(plus.real(), 2 * I123.error_bound / 7 + eps * std::abs(plus));
  h.v_minus = reduce_mod_one(minus.real(), minus_bound);
  h.twice_v_minus = reduce_mod_one(2 * minus.real(), 2 * minus_bound);
  return h;
}

/// I((D - conj D)/sqrt(-7)) in the alternative form 28/sqrt(-7) (c'_12 x_12 + c'_23 x_23 + c'_31 x_31),
/// c' = (closed-form x coefficient)/14, reduced mod Z. Differs from v_minus by the integer -42.
inline ModValue theorem_form_value(const XTable& x) {
  const I123Coefficients c = closed_form_coefficients();
  const CycElem scale = CycElem(2) / sqrt_minus7();  // 28 / (14 sqrt(-7))
  std::complex<double> v = 0;
  double bound = 0, mass = 0;
  for (std::size_t n = 0; n < kCyclicPairs.size(); ++n) {
    const auto [i, j] = kCyclicPairs[n];
    const ComplexValue d = embed(scale * c.x_coeffs[n]);
    v += d.value * x(i, j).value;
    bound += std::abs(d.value) * x(i, j).error_bound + d.error_bound * std::fabs(x(i, j).value);
    mass += std::abs(d.value * x(i, j).value);
  }
  bound += 8 * std::numeric_limits<double>::epsilon() * mass;
  if (std::fabs(v.imag()) > bound) throw NonRealResult("theorem form has imaginary part " + std::to_string(v.imag()));
  return reduce_mod_one(v.real(), bound);
}

// ---------------------------------------------------------------------------
// Full report

/// Reference value 2 I((D - conj D)/sqrt(-7)) = 0.72270 +- 1e-5 mod Z.
inline constexpr double kReferenceTwiceValue = 0.72270;
inline constexpr double kReferenceTolerance = 1e-5;

struct VolumeReport {
  specfun::SeriesPolicy policy;
  std::array<NumValue, 3> betas;                              // B'_1, B'_2, B'_3
  std::array<std::array<Period, kRank>, kGenus> periods;      // i = 1..3, k = 1..6
  XTable x;                                                   // series values
  std::array<NumValue, 3> x_values;                           // x_12, x_23, x_31
  std::array<NumValue, 3> x_oracle;                           // simplex quadrature, same pairs
  std::array<std::array<std::array<ComplexValue, 7>, kGenus>, kGenus> iterated;  // [i][j][k]
  I123Result I123;
  HarmonicValues values;
  ModValue theorem_form;
  double error_budget = 0.0;  // absolute bound on I_{1,2,3}
  std::map<std::string, std::string> provenance;
};

inline VolumeReport compute_volume_report(const specfun::SeriesPolicy& pol = {}) {
  VolumeReport r;
  r.policy = pol;
  for (int i = 1; i <= kGenus; ++i) {
    r.betas[i - 1] = specfun::period_beta(i);
    for (int k = 1; k <= kRank; ++k) r.periods[i - 1][k - 1] = period(i, k);
  }
  r.x = compute_x_table(pol);
  const double oracle_tol = std::min(1e-10, pol.tol);
  for (std::size_t n = 0; n < kCyclicPairs.size(); ++n) {
    const auto [i, j] = kCyclicPairs[n];
    r.x_values[n] = r.x(i, j);
    r.x_oracle[n] = specfun::x_ij_oracle(i, j, oracle_tol);
  }
  for (int i = 1; i <= kGenus; ++i)
    for (int j = 1; j <= kGenus; ++j)
      for (int k = 1; k <= 7; ++k) r.iterated[i - 1][j - 1][k - 1] = iterated_integral(i, j, k, r.x);
  r.I123 = compute_I123(r.x);
  const ComplexValue I = r.I123.value();
  r.error_budget = I.error_bound;
  r.values = harmonic_values(I);
  r.theorem_form = theorem_form_value(r.x);
  r.provenance = {
      {"periods", "closed-form"},
      {"betas", "gamma-ratio"},
      {"x_values", r.x_values[0].method},
      {"x_oracle", "oracle"},
      {"iterated", "closed-form"},
      {"I123.closed_form", "closed-form"},
      {"I123.brute_force", "brute-force"},
      {"values", "closed-form"},
      {"theorem_form", "closed-form"},
  };
  return r;
}

} // namespace klein

#endif
