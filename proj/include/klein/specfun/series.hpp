#ifndef KLEIN_SPECFUN_SERIES_HPP
#define KLEIN_SPECFUN_SERIES_HPP

// Convergence acceleration for slowly (logarithmically) convergent series.
//
// LevinU      - Levin's u-transform on a growing term sequence.
// Richardson  - extrapolation of partial sums S_N, N = N0 * 2^m, whose error
//               is known to expand in powers N^-s, N^-(s+1), N^-(s+2), ...

#include <cmath>
#include <cstddef>
#include <vector>

namespace klein::specfun {

template <class Real>
Real ipow(Real x, int n) {
  Real r = 1;
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

/// Levin u-transform L_k^{(0)} with remainder estimate omega_j = (beta + j) a_j.
/// Feed terms a_0, a_1, ...; after k + 1 terms `estimate()` returns L_k.
template <class Real>
class LevinU {
public:
  explicit LevinU(Real beta = Real(1)) : beta_(beta) {}

  void push(const Real& term) {
    partial_ += term;
    const Real omega = (beta_ + Real(static_cast<long>(terms_.size()))) * term;
    terms_.push_back(term);
    sums_.push_back(partial_);
    omegas_.push_back(omega);
  }

  std::size_t size() const { return terms_.size(); }
  const Real& partial_sum() const { return partial_; }

  /// L_k with k = size() - 1. Requires every pushed term to be nonzero.
  Real estimate() const {
    const int k = static_cast<int>(terms_.size()) - 1;
    if (k <= 0) return partial_;
    Real num = 0, den = 0;
    Real binom = 1;  // C(k, j)
    const Real denom_base = beta_ + Real(k);
    for (int j = 0; j <= k; ++j) {
      const Real ratio = (beta_ + Real(j)) / denom_base;
      Real c = binom * ipow(ratio, k - 1);
      if (j & 1) c = -c;
      num += c * sums_[j] / omegas_[j];
      den += c / omegas_[j];
      binom = binom * Real(k - j) / Real(j + 1);
    }
    return num / den;
  }

private:
  Real beta_;
  Real partial_ = 0;
  std::vector<Real> terms_, sums_, omegas_;
};

/// Richardson tableau for S(N) = S + sum_l c_l N^{-(s + l)}, with N doubling
/// between consecutive pushes.
template <class Real>
class Richardson {
public:
  explicit Richardson(double leading_exponent, std::size_t max_columns = 10)
      : s_(leading_exponent), max_columns_(max_columns) {}

  void push(const Real& partial_sum) {
    std::vector<Real> row{partial_sum};
    const std::size_t m = rows_.size();
    const std::size_t cols = std::min(m, max_columns_);
    for (std::size_t l = 1; l <= cols; ++l) {
      const Real f = std::pow(Real(2), Real(s_ + static_cast<double>(l - 1)));
      row.push_back((f * row[l - 1] - rows_[m - 1][l - 1]) / (f - 1));
    }
    rows_.push_back(std::move(row));
  }

  std::size_t size() const { return rows_.size(); }
  /// Most extrapolated value of the last row.
  Real best() const { return rows_.back().back(); }
  /// |best of last row - best of previous row|.
  Real change() const {
    if (rows_.size() < 2) return Real(INFINITY);
    return std::fabs(rows_.back().back() - rows_[rows_.size() - 2].back());
  }

private:
  double s_;
  std::size_t max_columns_;
  std::vector<std::vector<Real>> rows_;
};

} // namespace klein::specfun

#endif
