#ifndef KLEIN_HOMOLOGY_HPP
#define KLEIN_HOMOLOGY_HPP

// Combinatorial topology of the Klein quartic as the 7-sheeted cyclic cover
// y^7 = x (1 - x)^2.
//
// H_1(C; Z) has basis l_1..l_6. The seventh loop is always reduced with
// l_7 = -(l_1 + ... + l_6); the automorphism sigma : y -> zeta_7 y acts by
// l_k -> l_{k+1}. All indices in this header's public API are 1-based, matching
// l_k, omega_i and the exponents 7h_i = (1, 2, 4).

#include <array>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "klein/cyclotomic.hpp"

namespace klein {

inline constexpr int kGenus = 3;
inline constexpr int kRank = 6;  // rank of H_1

/// 7 h_i for (h_1, h_2, h_3) = (1/7, 2/7, 4/7); xi_i = zeta_7^{7 h_i}.
inline constexpr std::array<int, 3> kXiExponent = {1, 2, 4};

inline int xi_exponent(int i) {
  if (i < 1 || i > kGenus) throw std::out_of_range("form index must be in 1..3");
  return kXiExponent[i - 1];
}

/// xi_i^n as an exact cyclotomic element.
inline CycElem xi_pow(int i, long long n) { return CycElem::zeta_pow(xi_exponent(i) * n); }

/// A homology class over {l_1..l_6} with coefficients in S (integer, Rational or CycElem).
template <class S>
struct HomClass {
  std::array<S, kRank> coords{};

  /// The class of l_k for k in 1..7 (l_7 is reduced).
  static HomClass basis(int k) {
    if (k < 1 || k > 7) throw std::out_of_range("loop index must be in 1..7");
    HomClass h;
    if (k == 7) {
      for (auto& c : h.coords) c = S(-1);
    } else {
      h.coords[k - 1] = S(1);
    }
    return h;
  }

  const S& operator[](int k) const { return coords.at(k - 1); }
  S& operator[](int k) { return coords.at(k - 1); }

  friend HomClass operator+(HomClass a, const HomClass& b) {
    for (int m = 0; m < kRank; ++m) a.coords[m] = a.coords[m] + b.coords[m];
    return a;
  }
  friend HomClass operator-(HomClass a, const HomClass& b) {
    for (int m = 0; m < kRank; ++m) a.coords[m] = a.coords[m] - b.coords[m];
    return a;
  }
  friend HomClass operator*(const S& s, HomClass a) {
    for (auto& c : a.coords) c = s * c;
    return a;
  }
  friend bool operator==(const HomClass& a, const HomClass& b) { return a.coords == b.coords; }
  bool is_zero() const { return *this == HomClass{}; }
};

/// sigma_*: l_m -> l_{m+1}, with l_6 -> l_7 = -(l_1 + ... + l_6).
template <class S>
HomClass<S> shift(const HomClass<S>& u) {
  HomClass<S> v;
  for (int m = 0; m + 1 < kRank; ++m) v.coords[m + 1] = u.coords[m];
  for (auto& c : v.coords) c = c - u.coords[kRank - 1];
  return v;
}

template <class S>
HomClass<S> shift(const HomClass<S>& u, int times) {
  HomClass<S> v = u;
  for (int t = 0; t < ((times % 7) + 7) % 7; ++t) v = shift(v);
  return v;
}

/// The intersection matrix K' with (i,j) entry (l_i, l_j).
class IntersectionMatrix {
public:
  using Entries = std::array<std::array<int, kRank>, kRank>;

  explicit IntersectionMatrix(const Entries& e) : e_(e) {}

  int operator()(int i, int j) const { return e_.at(i - 1).at(j - 1); }
  const Entries& entries() const { return e_; }

  bool is_antisymmetric() const {
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j)
        if (e_[i][j] != -e_[j][i]) return false;
    return true;
  }

  /// Exact integer determinant (fraction-free Bareiss elimination).
  std::int64_t determinant() const {
    std::array<std::array<std::int64_t, kRank>, kRank> a{};
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j) a[i][j] = e_[i][j];
    std::int64_t sign = 1, prev = 1;
    for (int k = 0; k + 1 < kRank; ++k) {
      if (a[k][k] == 0) {
        int p = k + 1;
        while (p < kRank && a[p][k] == 0) ++p;
        if (p == kRank) return 0;
        std::swap(a[k], a[p]);
        sign = -sign;
      }
      for (int i = k + 1; i < kRank; ++i)
        for (int j = k + 1; j < kRank; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      prev = a[k][k];
    }
    return sign * a[kRank - 1][kRank - 1];
  }

  friend bool operator==(const IntersectionMatrix&, const IntersectionMatrix&) = default;

  /// Prints the matrix as a 6x6 table, one row per line.
  friend std::ostream& operator<<(std::ostream& os, const IntersectionMatrix& k) {
    for (const auto& row : k.e_) {
      for (int j = 0; j < kRank; ++j) os << (j ? " " : "") << std::setw(2) << row[j];
      os << '\n';
    }
    return os;
  }

private:
  Entries e_;
};

/// (l_1, l_{1+d}) for d = 0..6. The d = 6 entry is (l_1, l_7) = -sum_k (l_1, l_k) = 0.
inline constexpr std::array<int, 7> kFirstRowPairing = {0, 0, 1, -1, 1, -1, 0};

/// K' from the (l_1, l_k) values and shift invariance (l_i, l_j) = (l_{i+1}, l_{j+1}).
inline const IntersectionMatrix& intersection_matrix() {
  static const IntersectionMatrix k = [] {
    IntersectionMatrix::Entries e{};
    for (int i = 0; i < kRank; ++i)
      for (int j = 0; j < kRank; ++j) e[i][j] = kFirstRowPairing[((j - i) % 7 + 7) % 7];
    return IntersectionMatrix(e);
  }();
  return k;
}

/// u^T K' v.
template <class S>
S pairing(const HomClass<S>& u, const HomClass<S>& v, const IntersectionMatrix& k = intersection_matrix()) {
  S acc{};
  for (int i = 1; i <= kRank; ++i) {
    if (u[i] == S{}) continue;
    S row{};
    for (int j = 1; j <= kRank; ++j)
      if (k(i, j) != 0) row = row + S(k(i, j)) * v[j];
    acc = acc + u[i] * row;
  }
  return acc;
}

/// L_k = sum_{m=1}^{7} zeta_7^{mk} l_m; coordinate m is zeta_7^{mk} - 1 after reducing l_7.
inline HomClass<CycElem> L_vector(int k) {
  HomClass<CycElem> h;
  for (int m = 1; m <= kRank; ++m) h[m] = CycElem::zeta_pow(static_cast<long long>(m) * k) - CycElem::zeta_pow(7LL * k);
  return h;
}

/// Complex conjugate of L_k, i.e. L_{-k}.
inline HomClass<CycElem> conj(const HomClass<CycElem>& h) {
  HomClass<CycElem> r;
  for (int m = 1; m <= kRank; ++m) r[m] = conj(h[m]);
  return r;
}

struct PoincareDual {
  CycElem lambda;          // lambda_i = -1 / (xi_i^3 (xi_i^2 + 1))
  HomClass<CycElem> L;     // L_{7 h_i}
  HomClass<CycElem> dual;  // lambda_i L_{7 h_i}
};

/// Poincare dual of the normalized form omega_i = omega'_i / B(h_i, h_{i+1}).
inline PoincareDual poincare_dual(int i) {
  const CycElem xi = xi_pow(i, 1);
  PoincareDual pd;
  pd.lambda = -(xi * xi * xi * (xi * xi + 1)).inverse();
  pd.L = L_vector(xi_exponent(i));
  pd.dual = pd.lambda * pd.L;
  return pd;
}

/// Poincare dual of conj(omega_i): conj(lambda_i) conj(L_{7 h_i}).
inline PoincareDual conj_poincare_dual(int i) {
  PoincareDual pd = poincare_dual(i);
  pd.lambda = conj(pd.lambda);
  pd.L = conj(pd.L);
  pd.dual = conj(pd.dual);
  return pd;
}

/// Coefficients over l_p (x) l_q (x) l_r, p, q, r in 1..6.
template <class S>
struct Tensor3 {
  std::array<S, kRank * kRank * kRank> data{};

  static std::size_t index(int p, int q, int r) {
    if (p < 1 || p > kRank || q < 1 || q > kRank || r < 1 || r > kRank)
      throw std::out_of_range("tensor index must be in 1..6");
    return static_cast<std::size_t>(((p - 1) * kRank + (q - 1)) * kRank + (r - 1));
  }
  const S& operator()(int p, int q, int r) const { return data[index(p, q, r)]; }
  S& operator()(int p, int q, int r) { return data[index(p, q, r)]; }
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

  /// The pure tensor a (x) b (x) c.
  static Tensor3 outer(const HomClass<S>& a, const HomClass<S>& b, const HomClass<S>& c) {
    Tensor3 t;
    for (int p = 1; p <= kRank; ++p)
      for (int q = 1; q <= kRank; ++q)
        for (int r = 1; r <= kRank; ++r) t(p, q, r) = a[p] * b[q] * c[r];
    return t;
  }
};

enum class Conjugation { none, conjugate };

/// alpha_{p,q,r} = -det[[z^{ep}, z^{e'p}, z^{e''p}], ...] for p, q, r in 1..7,
/// with (e, e', e'') = (1, 2, 4), or (6, 5, 3) for the conjugate tensor.
/// The leading minus sign carries lambda_1 lambda_2 lambda_3 = -1.
inline CycElem alpha(int p, int q, int r, Conjugation c = Conjugation::none) {
  for (int v : {p, q, r})
    if (v < 1 || v > 7) throw std::out_of_range("alpha: index must be in 1..7");
  const std::array<int, 3> e = (c == Conjugation::none) ? std::array<int, 3>{1, 2, 4}
                                                        : std::array<int, 3>{6, 5, 3};
  CycMatrix3 m;
  const std::array<int, 3> idx = {p, q, r};
  for (int row = 0; row < 3; ++row)
    for (int col = 0; col < 3; ++col)
      m[row][col] = CycElem::zeta_pow(static_cast<long long>(e[col]) * idx[row]);
  return -det3(m);
}

/// The tensor D (or conj D) over l_1..l_6: alpha on 1..7 with every l_7 folded
/// into -(l_1 + ... + l_6). Terms with two or more l_7 slots vanish (repeated rows).
inline Tensor3<CycElem> alpha_tensor(Conjugation c = Conjugation::none) {
  Tensor3<CycElem> t;
  for (int p = 1; p <= kRank; ++p)
    for (int q = 1; q <= kRank; ++q)
      for (int r = 1; r <= kRank; ++r)
        t(p, q, r) = alpha(p, q, r, c) - alpha(7, q, r, c) - alpha(p, 7, r, c) - alpha(p, q, 7, c);
  return t;
}

inline Tensor3<CycElem> conj_alpha_tensor() { return alpha_tensor(Conjugation::conjugate); }

struct IntegerTensors {
  Tensor3<std::int64_t> plus;   // (D + conj D) / 7
  Tensor3<std::int64_t> minus;  // (D - conj D) / sqrt(-7)
};

namespace detail {
inline std::int64_t rational_integer_or_throw(const CycElem& x, const char* what) {
  if (!x.is_rational() || !is_integer(x[0]))
    throw DivisionFailure(std::string(what) + " is not a rational integer");
  return boost::multiprecision::numerator(x[0]).convert_to<std::int64_t>();
}
} // namespace detail

inline IntegerTensors build_integer_tensors() {
  const Tensor3<CycElem> a = alpha_tensor();
  const Tensor3<CycElem> ab = conj_alpha_tensor();
  const CycElem inv_sqrt = sqrt_minus7().inverse();
  IntegerTensors out;
  for (std::size_t n = 0; n < a.data.size(); ++n) {
    const CycElem sum = a.data[n] + ab.data[n];
    if (!sum.is_rational() || !is_integer(sum[0]) || boost::multiprecision::numerator(sum[0]) % 7 != 0)
      throw DivisionFailure("alpha + conj(alpha) not in 7Z");
    out.plus.data[n] = detail::rational_integer_or_throw(CycElem(sum[0] / 7), "(alpha + conj alpha)/7");
    out.minus.data[n] = detail::rational_integer_or_throw((a.data[n] - ab.data[n]) * inv_sqrt,
                                                          "(alpha - conj alpha)/sqrt(-7)");
  }
  return out;
}

/// The three components of p(a (x) b (x) c) = ((a,b)c, (b,c)a, (c,a)b), extended linearly.
template <class S>
std::array<HomClass<S>, 3> contractions(const Tensor3<S>& t, const IntersectionMatrix& k = intersection_matrix()) {
  std::array<HomClass<S>, 3> out;
  for (int p = 1; p <= kRank; ++p)
    for (int q = 1; q <= kRank; ++q)
      for (int r = 1; r <= kRank; ++r) {
        const S& v = t(p, q, r);
        if (v == S{}) continue;
        out[0][r] = out[0][r] + v * S(k(p, q));
        out[1][p] = out[1][p] + v * S(k(q, r));
        out[2][q] = out[2][q] + v * S(k(r, p));
      }
  return out;
}

/// Membership in (H^{(x)3})', the kernel of the contraction map.
template <class S>
bool check_Hprime(const Tensor3<S>& t, const IntersectionMatrix& k = intersection_matrix()) {
  for (const auto& c : contractions(t, k))
    if (!c.is_zero()) return false;
  return true;
}

} // namespace klein

#endif
