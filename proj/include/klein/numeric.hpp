#ifndef KLEIN_NUMERIC_HPP
#define KLEIN_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <string>

namespace klein {

/// How far an error bound can be trusted.
///  - rigorous:  follows from floating-point error analysis alone.
///  - heuristic: an estimate (level differences, spread of extrapolants).
enum class BoundKind { rigorous, heuristic };

inline const char* to_string(BoundKind k) {
  return k == BoundKind::rigorous ? "rigorous" : "heuristic";
}

inline BoundKind weakest(BoundKind a, BoundKind b) {
  return (a == BoundKind::rigorous && b == BoundKind::rigorous) ? BoundKind::rigorous
                                                                : BoundKind::heuristic;
}

/// A real number with an absolute error bound and the method that produced it.
struct NumValue {
  double value = 0.0;
  double error_bound = 0.0;
  BoundKind kind = BoundKind::rigorous;
  std::string method;
};

struct ComplexValue {
  std::complex<double> value;
  double error_bound = 0.0;
  BoundKind kind = BoundKind::rigorous;
  std::string method;
};

/// A real number reduced mod Z. `representative` lies in [0,1);
/// `distance_to_integer` is min(r, 1-r), so values near 0 and near 1 read the same.
struct ModValue {
  double representative = 0.0;
  double distance_to_integer = 0.0;
  double error_bound = 0.0;
};

inline ModValue reduce_mod_one(double x, double error_bound) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;  // floor rounding for tiny negative x
  return {r, std::min(r, 1.0 - r), error_bound};
}

/// Distance between two classes in R/Z.
inline double circle_distance(double a, double b) {
  double d = std::fabs(a - b);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

} // namespace klein

#endif
