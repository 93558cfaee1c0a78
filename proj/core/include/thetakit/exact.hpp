#pragma once

// Exact integer/rational arithmetic and the small number-theoretic helpers
// every other module is built on.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thetakit {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  /// Parses "n" or "n/d" (optional leading sign on n).
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }
  int sign() const noexcept { return num_.sign(); }

  Rational pow(long long e) const;
  Rational reciprocal() const;
  double to_double() const;

  /// "num/den", with "/den" omitted when den = 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

/// Dense polynomial in one indeterminate with integer coefficients. Index i of
/// the coefficient vector is the coefficient of X^i; trailing zeros are
/// trimmed on construction so degree() is canonical.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coefficients);
  IntPoly(std::initializer_list<long long> coefficients);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of X^i (zero beyond the degree).
  BigInt coefficient(std::size_t i) const;
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// Coefficients as decimal strings, index = degree.
  std::vector<std::string> coefficient_strings() const;
  /// Human-readable form such as "1 - 7X + 7X^2 - X^3".
  std::string to_string(char var = 'X') const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

Rational poly_eval(const IntPoly& p, const Rational& x);
IntPoly poly_derivative(const IntPoly& p);
/// (-X)^v * p(1/X): coefficient c_i moves to index v - i with sign (-1)^v.
/// Requires v >= degree(p).
IntPoly poly_reverse_signed(const IntPoly& p, int v);

/// Bernoulli number B_k for even k >= 0.
Rational bernoulli(int k);
/// Bernoulli number B_k for any k >= 0, with B_1 = -1/2.
Rational bernoulli_any(int k);
/// Bernoulli polynomial B_k(x) = sum_j C(k,j) B_j x^(k-j).
Rational bernoulli_polynomial(int k, const Rational& x);

/// The non-trivial Dirichlet character modulo 4.
int chi4(long long d) noexcept;

/// sum_{d|n} d^k, or sum_{d|n} chi4(d) d^k when twisted. n >= 1.
BigInt divisor_sum(long long n, int k, bool twisted);

/// Positive divisors of n >= 1 in increasing order (trial division).
std::vector<long long> divisors(long long n);

bool is_prime(long long n) noexcept;
bool is_perfect_square(long long n) noexcept;
/// floor(sqrt(n)) for n >= 0.
long long isqrt(long long n) noexcept;
/// Binomial coefficient C(n, k).
BigInt binomial(int n, int k);
/// Least non-negative residue of a modulo m > 0.
constexpr long long mod_floor(long long a, long long m) noexcept {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace thetakit
