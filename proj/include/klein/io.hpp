#ifndef KLEIN_IO_HPP
#define KLEIN_IO_HPP

// JSON and CSV encodings.
//
//   CycElem   -> ["c0", ..., "c5"], each "num/den"
//   QuadElem  -> {"a": "num/den", "b": "num/den"}
//   Tensor3   -> 6 x 6 x 6 nested arrays
//   VolumeReport -> object with every intermediate quantity (keys sorted)

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "klein/cyclotomic.hpp"
#include "klein/homology.hpp"
#include "klein/volume.hpp"

namespace klein {

using json = nlohmann::json;

inline void to_json(json& j, const CycElem& x) {
  j = json::array();
  for (const auto& c : x.coeffs()) j.push_back(to_string(c));
}

inline void from_json(const json& j, CycElem& x) {
  if (!j.is_array() || j.size() != CycElem::kDegree) throw std::invalid_argument("CycElem: expected an array of 6 rationals");
  CycElem::Coeffs c;
  for (int k = 0; k < CycElem::kDegree; ++k) c[k] = parse_rational(j.at(k).get<std::string>());
  x = CycElem(c);
}

inline void to_json(json& j, const QuadElem& q) { j = json{{"a", to_string(q.a)}, {"b", to_string(q.b)}}; }

inline void from_json(const json& j, QuadElem& q) {
  q.a = parse_rational(j.at("a").get<std::string>());
  q.b = parse_rational(j.at("b").get<std::string>());
}

template <class S>
void to_json(json& j, const Tensor3<S>& t) {
  j = json::array();
  for (int p = 1; p <= kRank; ++p) {
    json plane = json::array();
    for (int q = 1; q <= kRank; ++q) {
      json row = json::array();
      for (int r = 1; r <= kRank; ++r) row.push_back(t(p, q, r));
      plane.push_back(std::move(row));
    }
    j.push_back(std::move(plane));
  }
}

template <class S>
void from_json(const json& j, Tensor3<S>& t) {
  for (int p = 1; p <= kRank; ++p)
    for (int q = 1; q <= kRank; ++q)
      for (int r = 1; r <= kRank; ++r) t(p, q, r) = j.at(p - 1).at(q - 1).at(r - 1).template get<S>();
}

inline void to_json(json& j, const IntersectionMatrix& k) { j = k.entries(); }

inline void to_json(json& j, const NumValue& v) {
  j = json{{"value", v.value}, {"error_bound", v.error_bound}, {"bound_kind", to_string(v.kind)}, {"method", v.method}};
}

inline void to_json(json& j, const ComplexValue& v) {
  j = json{{"re", v.value.real()},
           {"im", v.value.imag()},
           {"error_bound", v.error_bound},
           {"bound_kind", to_string(v.kind)},
           {"method", v.method}};
}

inline void to_json(json& j, const ModValue& v) {
  j = json{{"representative", v.representative},
           {"distance_to_integer", v.distance_to_integer},
           {"error_bound", v.error_bound}};
}

inline void to_json(json& j, const Period& p) {
  j = json{{"exact", p.exact}, {"normalized", p.normalized}, {"value", p.value}};
}

inline std::string pair_name(int i, int j) { return "x" + std::to_string(i) + std::to_string(j); }

struct HeadlineCheck {
  double value = 0;
  double mirror = 0;
  bool matches_value = false;
  bool matches_mirror = false;
  bool passed() const { return matches_value != matches_mirror; }
};

/// Compares 2 I((D - conj D)/sqrt(-7)) mod Z with the reference 0.72270, and its
/// mirror 1 - r, within `tolerance`.
inline HeadlineCheck headline_check(const ModValue& twice, double tolerance = kReferenceTolerance) {
  HeadlineCheck h;
  h.value = twice.representative;
  h.mirror = 1.0 - twice.representative;
  h.matches_value = circle_distance(h.value, kReferenceTwiceValue) <= tolerance;
  h.matches_mirror = circle_distance(h.mirror, kReferenceTwiceValue) <= tolerance;
  return h;
}

inline void to_json(json& j, const VolumeReport& r) {
  j = json::object();
  j["policy"] = {{"tol", r.policy.tol},
                 {"max_terms", r.policy.max_terms},
                 {"accel", specfun::to_string(r.policy.accel)}};
  j["betas"] = r.betas;
  json periods = json::array();
  for (const auto& row : r.periods) periods.push_back(row);
  j["periods"] = std::move(periods);
  json xs = json::object(), xo = json::object(), xsw = json::object();
  for (std::size_t n = 0; n < kCyclicPairs.size(); ++n) {
    const auto [a, b] = kCyclicPairs[n];
    xs[pair_name(a, b)] = r.x_values[n];
    xo[pair_name(a, b)] = r.x_oracle[n];
    xsw[pair_name(b, a)] = r.x(b, a);
  }
  j["x_values"] = std::move(xs);
  j["x_oracle"] = std::move(xo);
  j["x_swapped"] = std::move(xsw);
  json it = json::array();
  for (const auto& plane : r.iterated) {
    json p = json::array();
    for (const auto& row : plane) p.push_back(row);
    it.push_back(std::move(p));
  }
  j["iterated"] = std::move(it);
  j["I123"] = {{"closed_form", r.I123.closed_form}, {"brute_force", r.I123.brute_force}, {"mismatch", r.I123.mismatch}};
  j["values"] = {{"v_plus", r.values.v_plus},
                 {"v_minus", r.values.v_minus},
                 {"twice_v_minus", r.values.twice_v_minus},
                 {"imag_residue", r.values.imag_residue}};
  j["theorem_form"] = r.theorem_form;
  j["error_budget"] = r.error_budget;
  const HeadlineCheck h = headline_check(r.values.twice_v_minus);
  j["headline"] = {{"reference", kReferenceTwiceValue},
                   {"tolerance", kReferenceTolerance},
                   {"value", h.value},
                   {"mirror", h.mirror},
                   {"matches_value", h.matches_value},
                   {"matches_mirror", h.matches_mirror}};
  j["provenance"] = r.provenance;
}

/// Fixed-format number: 17 significant digits, locale independent.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// One row per intermediate quantity: quantity,method,re,im,error_bound,bound_kind.
inline void write_csv(std::ostream& os, const VolumeReport& r) {
  os << "quantity,method,re,im,error_bound,bound_kind\n";
  auto real_row = [&](const std::string& name, const NumValue& v) {
    os << name << ',' << v.method << ',' << format_number(v.value) << ",0," << format_number(v.error_bound) << ','
       << to_string(v.kind) << '\n';
  };
  auto complex_row = [&](const std::string& name, const ComplexValue& v) {
    os << name << ',' << v.method << ',' << format_number(v.value.real()) << ',' << format_number(v.value.imag()) << ','
       << format_number(v.error_bound) << ',' << to_string(v.kind) << '\n';
  };
  auto mod_row = [&](const std::string& name, const ModValue& v) {
    os << name << ",closed-form," << format_number(v.representative) << ",0," << format_number(v.error_bound)
       << ",heuristic\n";
  };
  for (int i = 1; i <= kGenus; ++i) real_row("beta_" + std::to_string(i), r.betas[i - 1]);
  for (int i = 1; i <= kGenus; ++i)
    for (int k = 1; k <= kRank; ++k)
      complex_row("period_" + std::to_string(i) + "_" + std::to_string(k), r.periods[i - 1][k - 1].normalized);
  for (std::size_t n = 0; n < kCyclicPairs.size(); ++n) {
    const auto [a, b] = kCyclicPairs[n];
    real_row(pair_name(a, b), r.x_values[n]);
    real_row(pair_name(b, a), r.x(b, a));
    real_row(pair_name(a, b) + "_oracle", r.x_oracle[n]);
  }
  for (int i = 1; i <= kGenus; ++i)
    for (int j = 1; j <= kGenus; ++j)
      for (int k = 1; k <= 7; ++k)
        complex_row("iterated_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k),
                    r.iterated[i - 1][j - 1][k - 1]);
  complex_row("I123_closed_form", r.I123.closed_form);
  complex_row("I123_brute_force", r.I123.brute_force);
  mod_row("v_plus", r.values.v_plus);
  mod_row("v_minus", r.values.v_minus);
  mod_row("twice_v_minus", r.values.twice_v_minus);
  mod_row("theorem_form", r.theorem_form);
}

} // namespace klein

#endif
