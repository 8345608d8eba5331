// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "klein/verify.hpp"

namespace {

struct Criterion {
  std::string name;
  bool passed = false;
  std::string detail;
};

bool has(const std::vector<klein::Check>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return c.status == klein::CheckStatus::pass;
  return false;
}

std::string join_details(const std::vector<klein::Check>& checks, std::initializer_list<const char*> names) {
  std::string out;
  for (const char* n : names)
    for (const auto& c : checks)
      if (c.name == n && !c.detail.empty()) out += (out.empty() ? "" : "; ") + std::string(n) + ": " + c.detail;
  return out;
}

} // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const auto exact = klein::exact_suite();
  const auto numeric = klein::numeric_suite({});
  const double seconds = std::chrono::duration<double>(clock::now() - t0).count();
  std::vector<Criterion> out;

  {
    Criterion c{"headline: 2 I((D - conj D)/sqrt(-7)) = 0.72270 +- 1e-5 mod Z, exactly one of r, 1-r matches", false, {}};
    if (numeric.report) {
      const auto& t = numeric.report->values.twice_v_minus;
      const auto h = klein::headline_check(t, klein::kReferenceTolerance);
      c.passed = t.error_bound <= klein::kReferenceTolerance && h.passed() && seconds < 60;
      char buf[200];
      std::snprintf(buf, sizeof buf, "r = %.10f +- %.1e, r matches: %s, 1-r matches: %s, %.2f s", h.value,
                    t.error_bound, h.matches_value ? "yes" : "no", h.matches_mirror ? "yes" : "no", seconds);
      c.detail = buf;
    }
    out.push_back(c);
  }
  {
    Criterion c{"vanishing: I((D + conj D)/7) = 0 mod Z within 1e-6", false, {}};
    if (numeric.report) {
      const auto& v = numeric.report->values.v_plus;
      c.passed = v.distance_to_integer <= 1e-6;
      c.detail = "distance " + klein::sci(v.distance_to_integer);
    }
    out.push_back(c);
  }
  {
    Criterion c{"exact algebra: det K' = 1, antisymmetry, first row, 343 ideal tests, integer tensors, (H^3)'", false, {}};
    c.passed = klein::all_passed(exact) && exact.size() == 9;
    for (const auto& e : exact)
      if (e.status != klein::CheckStatus::pass) c.detail += e.name + " ";
    out.push_back(c);
  }
  {
    Criterion c{"oracle equivalence: series vs simplex quadrature and x_ij + x_ji = 1, within 1e-7", false, {}};
    const auto& n = numeric.checks;
    c.passed = has(n, "oracle.x12") && has(n, "oracle.x23") && has(n, "oracle.x31") && has(n, "shuffle.x12+x21") &&
               has(n, "shuffle.x23+x32") && has(n, "shuffle.x31+x13");
    c.detail = join_details(n, {"oracle.x12", "oracle.x23", "oracle.x31"});
    out.push_back(c);
  }
  {
    Criterion c{"dual route: closed form vs k-sum within 1e-8, Re(I123) = 0 within 1e-9", false, {}};
    c.passed = has(numeric.checks, "I123.dual_route") && has(numeric.checks, "I123.real_part");
    c.detail = join_details(numeric.checks, {"I123.dual_route", "I123.real_part"});
    out.push_back(c);
  }
  {
    Criterion c{"cross-module: dual pairings vs Beta periods within 1e-9 (18 pairs), periods telescope exactly", false, {}};
    c.passed = has(numeric.checks, "periods.dual_pairing_exact_18") &&
               has(numeric.checks, "periods.dual_vs_beta_18") && has(numeric.checks, "periods.telescoping");
    c.detail = join_details(numeric.checks, {"periods.dual_vs_beta_18"});
    out.push_back(c);
  }
  {
    Criterion c{"special functions: Gamma(1/2) = sqrt(pi) to 1e-12, Gauss collapse to 1e-9 on 5 sets", false, {}};
    c.passed = has(numeric.checks, "specfun.gamma_half") && has(numeric.checks, "specfun.gauss_collapse_5");
    c.detail = join_details(numeric.checks, {"specfun.gamma_half", "specfun.gauss_collapse_5"});
    out.push_back(c);
  }

  bool all = true;
  for (const auto& c : out) {
    std::printf("%s  %s", c.passed ? "PASS" : "FAIL", c.name.c_str());
    if (!c.detail.empty()) std::printf("  [%s]", c.detail.c_str());
    std::printf("\n");
    all = all && c.passed;
  }
  if (!numeric.report)
    for (const auto& ch : numeric.checks)
      if (ch.status == klein::CheckStatus::fail) std::printf("  cause: %s: %s\n", ch.name.c_str(), ch.detail.c_str());
  return all ? 0 : 1;
}
