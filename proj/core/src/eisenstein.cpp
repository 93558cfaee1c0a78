#include "thetakit/eisenstein.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "thetakit/errors.hpp"

namespace thetakit {

Rational l_chi(int s_arg) {
  const int k = 1 - s_arg;
  if (k < 1 || k % 2 == 0)
    throw DomainError("l_chi: need s = 1 - k with k odd and positive, got s = " + std::to_string(s_arg));
  constexpr int f = 4;
  Rational gen_bernoulli(0);
  for (int a = 1; a <= f; ++a) {
    const int chi = chi4(a);
    if (chi == 0) continue;
    Rational term = bernoulli_polynomial(k, Rational(BigInt(a), BigInt(f)));
    if (chi > 0) gen_bernoulli += term; else gen_bernoulli -= term;
  }
  gen_bernoulli *= Rational(f).pow(k - 1);
  return -gen_bernoulli / Rational(k);
}

Rational eisenstein_chi_constant(int k) { return Rational(2) / l_chi(1 - k); }

Rational ek_chi_coefficient(int k, long long n) {
  if (n < 0) throw DomainError("ek_chi_coefficient: n must be non-negative");
  if (n == 0) return Rational(1);
  return eisenstein_chi_constant(k) * Rational(divisor_sum(n, k - 1, true));
}

Rational e1_chi_coefficient(long long n) {
  if (n < 0) throw DomainError("e1_chi_coefficient: n must be non-negative");
  if (n == 0) return Rational(1);
  return Rational(4 * divisor_sum(n, 0, true));
}

Rational e4_coefficient(long long n) {
  if (n < 0) throw DomainError("e4_coefficient: n must be non-negative");
  if (n == 0) return Rational(1);
  return Rational(240 * divisor_sum(n, 3, false));
}

QExpansion e1_chi_expansion(long long n_max) {
  QExpansion e;
  for (long long n = 0; n <= n_max; ++n) e.coefficients.push_back(e1_chi_coefficient(n));
  return e;
}

QExpansion e4_expansion(long long n_max) {
  QExpansion e;
  for (long long n = 0; n <= n_max; ++n) e.coefficients.push_back(e4_coefficient(n));
  return e;
}

LeibnizResult leibniz_check(long long terms) {
  if (terms < 1) throw DomainError("leibniz_check: need at least one term");
  LeibnizResult r;
  r.terms = terms;
  // Summed from the small end to limit rounding.
  double s = 0.0;
  for (long long i = terms - 1; i >= 0; --i) {
    const double term = 1.0 / static_cast<double>(2 * i + 1);
    s += (i % 2 == 0) ? term : -term;
  }
  r.partial_sum = s;
  r.error_bound = 1.0 / static_cast<double>(2 * terms + 1);
  r.error = std::abs(s - std::numbers::pi / 4.0);
  return r;
}

}  // namespace thetakit
