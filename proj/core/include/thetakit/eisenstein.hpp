#pragma once

// q-expansion coefficients of E_1^chi, E_k^chi and E_4, the special values
// L(1-k, chi) of the mod-4 character, and the Leibniz series for pi/4.

#include <vector>

#include "thetakit/exact.hpp"

namespace thetakit {

/// Truncated q-expansion sum_{n=0}^{truncation} coefficients[n] q^n.
struct QExpansion {
  std::vector<Rational> coefficients;
  long long truncation() const noexcept { return static_cast<long long>(coefficients.size()) - 1; }
  const Rational& operator[](long long n) const { return coefficients.at(static_cast<std::size_t>(n)); }
};

/// L(1-k, chi4) for odd k >= 1, passed as s_arg = 1 - k. Uses the generalized
/// Bernoulli number B_{k,chi} = 4^{k-1} sum_{a=1}^{4} chi(a) B_k(a/4).
Rational l_chi(int s_arg);

/// c_k^chi = 2 / L(1-k, chi) for odd k >= 1.
Rational eisenstein_chi_constant(int k);

/// Coefficient of q^n in E_k^chi = 1 + c_k^chi sum_n (sum_{d|n} chi(d) d^{k-1}) q^n.
Rational ek_chi_coefficient(int k, long long n);
/// Coefficient of q^n in E_1^chi: 1 at n = 0, else 4 sum_{d|n} chi(d).
Rational e1_chi_coefficient(long long n);
/// Coefficient of q^{2n} in E_4(2 tau): 1 at n = 0, else 240 sigma_3(n). The
/// index is halved so it lines up with r_{E8}(n) under Q = (x, x)/2.
Rational e4_coefficient(long long n);

QExpansion e1_chi_expansion(long long n_max);
QExpansion e4_expansion(long long n_max);

struct LeibnizResult {
  long long terms = 0;
  double partial_sum = 0.0;  // 1 - 1/3 + 1/5 - ... (terms terms)
  double error_bound = 0.0;  // 1 / (2 terms + 1), alternating-series bound
  double error = 0.0;        // |partial_sum - pi/4|
  bool within_bound() const noexcept { return error <= error_bound; }
};

LeibnizResult leibniz_check(long long terms);

}  // namespace thetakit
