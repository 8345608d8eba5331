#ifndef KLEIN_CYCLOTOMIC_HPP
#define KLEIN_CYCLOTOMIC_HPP

// Exact arithmetic in Q(zeta_7), zeta_7 = exp(2*pi*i/7), its ring of
// integers Z[zeta_7], and the quadratic subfield Q(sqrt(-7)).
//
// Elements are stored in the power basis {1, z, ..., z^5}; z^6 is always
// rewritten as -(1 + z + ... + z^5), so equality is coefficient-wise.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "klein/errors.hpp"
#include "klein/numeric.hpp"

namespace klein {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Parses "num/den" or a bare integer.
inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

class CycElem {
public:
  static constexpr int kDegree = 6;
  using Coeffs = std::array<Rational, kDegree>;

  CycElem() = default;
  CycElem(long long n) { c_[0] = n; }  // NOLINT: integers embed implicitly
  explicit CycElem(Rational r) { c_[0] = std::move(r); }
  explicit CycElem(Coeffs c) : c_(std::move(c)) {}

  /// zeta_7^e for any integer exponent.
  static CycElem zeta_pow(long long e) {
    const int k = static_cast<int>(((e % 7) + 7) % 7);
    CycElem r;
    if (k == 6) {
      for (auto& x : r.c_) x = -1;
    } else {
      r.c_[k] = 1;
    }
    return r;
  }
  static CycElem zeta() { return zeta_pow(1); }

  const Rational& operator[](int k) const { return c_.at(k); }
  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool has_integer_coeffs() const {
    for (const auto& x : c_)
      if (!is_integer(x)) return false;
    return true;
  }
  /// True for elements of Q (no z^k component for k >= 1).
  bool is_rational() const {
    for (int k = 1; k < kDegree; ++k)
      if (c_[k] != 0) return false;
    return true;
  }

  CycElem& operator+=(const CycElem& o) {
    for (int k = 0; k < kDegree; ++k) c_[k] += o.c_[k];
    return *this;
  }
  CycElem& operator-=(const CycElem& o) {
    for (int k = 0; k < kDegree; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  CycElem& operator*=(const CycElem& o) { return *this = *this * o; }

  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator-(CycElem a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend CycElem operator*(const CycElem& a, const CycElem& b) {
    // Multiply modulo x^7 - 1, then fold the x^6 coefficient.
    std::array<Rational, 7> p;
    for (int i = 0; i < kDegree; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < kDegree; ++j) {
        if (b.c_[j] == 0) continue;
        p[(i + j) % 7] += a.c_[i] * b.c_[j];
      }
    }
    return from_length7(p);
  }
  friend CycElem operator/(const CycElem& a, const CycElem& b) { return a * b.inverse(); }
  friend bool operator==(const CycElem& a, const CycElem& b) { return a.c_ == b.c_; }

  /// Multiplicative inverse by solving x * y = 1 as a 6x6 linear system over Q.
  CycElem inverse() const;

  friend std::ostream& operator<<(std::ostream& os, const CycElem& x) {
    os << '[';
    for (int k = 0; k < kDegree; ++k) os << (k ? ", " : "") << to_string(x.c_[k]);
    return os << ']';
  }

  /// Reduces a coefficient vector over {1, z, ..., z^6}.
  static CycElem from_length7(const std::array<Rational, 7>& p) {
    CycElem r;
    for (int k = 0; k < kDegree; ++k) r.c_[k] = p[k] - p[6];
    return r;
  }

private:
  Coeffs c_{};
};

inline CycElem mul(const CycElem& x, const CycElem& y) { return x * y; }

inline CycElem CycElem::inverse() const {
  if (is_zero()) throw std::domain_error("CycElem::inverse: zero has no inverse");
  // Column j of M is the coefficient vector of x * z^j.
  std::array<std::array<Rational, kDegree + 1>, kDegree> m;
  for (int j = 0; j < kDegree; ++j) {
    const CycElem col = *this * zeta_pow(j);
    for (int i = 0; i < kDegree; ++i) m[i][j] = col.c_[i];
  }
  for (int i = 0; i < kDegree; ++i) m[i][kDegree] = (i == 0) ? 1 : 0;

  for (int col = 0; col < kDegree; ++col) {
    int pivot = col;
    while (pivot < kDegree && m[pivot][col] == 0) ++pivot;
    if (pivot == kDegree) throw std::logic_error("CycElem::inverse: singular multiplication map");
    std::swap(m[col], m[pivot]);
    const Rational inv = 1 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    for (int r = 0; r < kDegree; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int c = col; c <= kDegree; ++c) m[r][c] -= f * m[col][c];
    }
  }
  CycElem y;
  for (int i = 0; i < kDegree; ++i) y.c_[i] = m[i][kDegree];
  return y;
}

/// The automorphism sigma_i : z -> z^i of Q(zeta_7); i must be prime to 7.
inline CycElem galois(const CycElem& x, int i) {
  if (((i % 7) + 7) % 7 == 0) throw std::invalid_argument("galois: exponent must be prime to 7");
  std::array<Rational, 7> p;
  const int m = ((i % 7) + 7) % 7;
  for (int k = 0; k < CycElem::kDegree; ++k) p[(k * m) % 7] += x[k];
  return CycElem::from_length7(p);
}

/// Complex conjugation, i.e. sigma_6.
inline CycElem conj(const CycElem& x) { return galois(x, 6); }

/// Complex value of x under z -> exp(2 pi i / 7). The sum is taken in long
/// double and rounded once; `error_bound` covers both steps.
inline ComplexValue embed(const CycElem& x, double precision = 1e-12) {
  if (!(precision > 0)) throw std::invalid_argument("embed: precision must be positive");
  constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;
  constexpr long double kEpsLd = std::numeric_limits<long double>::epsilon();
  long double re = 0, im = 0, mass = 0;
  for (int k = 0; k < CycElem::kDegree; ++k) {
    if (x[k] == 0) continue;
    const long double c = x[k].convert_to<long double>();
    mass += std::fabs(c);
    if (k == 0) {
      re += c;
      continue;
    }
    re += c * std::cos(kTwoPi * k / 7);
    im += c * std::sin(kTwoPi * k / 7);
  }
  const std::complex<double> v(static_cast<double>(re), static_cast<double>(im));
  // Long double accumulation (<= 8 ulps per term) plus one rounding to double.
  const double bound = static_cast<double>(8 * kEpsLd * mass) +
                       std::numeric_limits<double>::epsilon() * std::abs(v);
  if (bound > precision)
    throw PrecisionUnavailable("embed: achievable bound " + std::to_string(bound) +
                               " exceeds requested precision");
  return {v, bound, BoundKind::rigorous, "exact-embed"};
}

using CycMatrix3 = std::array<std::array<CycElem, 3>, 3>;

/// Determinant by cofactor expansion along the first row.
inline CycElem det3(const CycMatrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// sqrt(-7) = 1 + 2(z + z^2 + z^4), with positive imaginary part.
inline CycElem sqrt_minus7() {
  return CycElem(CycElem::Coeffs{1, 2, 2, 0, 2, 0});
}

/// a + b * (1 + sqrt(-7))/2, an element of Q(sqrt(-7)).
struct QuadElem {
  Rational a;
  Rational b;

  bool is_integral() const { return is_integer(a) && is_integer(b); }
  friend bool operator==(const QuadElem&, const QuadElem&) = default;
  friend std::ostream& operator<<(std::ostream& os, const QuadElem& q) {
    return os << '(' << to_string(q.a) << ", " << to_string(q.b) << ')';
  }
};

/// (1 + sqrt(-7))/2 = 1 + z + z^2 + z^4.
inline CycElem quadratic_generator() { return CycElem(CycElem::Coeffs{1, 1, 1, 0, 1, 0}); }

inline CycElem from_quadratic(const QuadElem& q) {
  return CycElem(q.a) + CycElem(q.b) * quadratic_generator();
}

/// Coordinates in Q(sqrt(-7)) of a sigma_2-fixed element.
inline QuadElem to_quadratic(const CycElem& x) {
  if (!(galois(x, 2) == x)) throw NotInSubfield("element is not fixed by sigma_2");
  // Fixed elements reduce to d0 + u (z + z^2 + z^4); d3 = d5 = 0.
  const Rational& u = x[1];
  return {x[0] - u, u};
}

/// Exact quotient by sqrt(-7) inside Q(sqrt(-7)):
/// (a + b w) / sqrt(-7) = ((a + 4b) - (2a + b) w) / 7, with w = (1 + sqrt(-7))/2.
inline QuadElem divide_by_sqrt_minus7(const QuadElem& q) {
  return {(q.a + 4 * q.b) / 7, -(2 * q.a + q.b) / 7};
}

struct IdealFlags {
  bool in_zeta_minus_1 = false;  // x in (z - 1) Z[z]
  bool in_sqrt_minus7 = false;   // x in sqrt(-7) Z[(1 + sqrt(-7))/2]; false unless sigma_2-fixed
  bool in_7Z = false;            // x a rational integer divisible by 7
};

/// Exact quotient x / (z - 1); integral exactly when x lies in (z - 1).
inline CycElem divide_by_zeta_minus_1(const CycElem& x) {
  static const CycElem inv = (CycElem::zeta() - 1).inverse();
  return x * inv;
}

inline IdealFlags ideal_tests(const CycElem& x) {
  if (!x.has_integer_coeffs()) throw std::invalid_argument("ideal_tests: coefficients must be integers");
  IdealFlags f;
  f.in_zeta_minus_1 = divide_by_zeta_minus_1(x).has_integer_coeffs();
  if (galois(x, 2) == x) f.in_sqrt_minus7 = divide_by_sqrt_minus7(to_quadratic(x)).is_integral();
  if (x.is_rational()) {
    const BigInt n = boost::multiprecision::numerator(x[0]);
    f.in_7Z = (n % 7) == 0;
  }
  return f;
}

} // namespace klein

#endif
