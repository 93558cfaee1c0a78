#include "thetakit/errors.hpp"
#include "thetakit/exact.hpp"

#include <cmath>
#include <mutex>

namespace thetakit {

namespace {

// B_0..B_k from sum_{j=0}^{m} C(m+1, j) B_j = 0, extended on demand.
class BernoulliCache {
 public:
  Rational get(int k) {
    std::lock_guard lock(mu_);
    while (static_cast<int>(values_.size()) <= k) extend();
    return values_[static_cast<std::size_t>(k)];
  }

 private:
  void extend() {
    const int m = static_cast<int>(values_.size());
    if (m == 0) {
      values_.emplace_back(1);
      return;
    }
    Rational acc(0);
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * values_[static_cast<std::size_t>(j)];
    values_.push_back(-acc / Rational(BigInt(m + 1)));
  }

  std::mutex mu_;
  std::vector<Rational> values_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

Rational bernoulli_any(int k) {
  if (k < 0) throw DomainError("bernoulli: negative index " + std::to_string(k));
  return bernoulli_cache().get(k);
}

Rational bernoulli(int k) {
  if (k < 0 || k % 2 != 0) {
    throw DomainError("bernoulli: index must be even and non-negative, got " + std::to_string(k));
  }
  return bernoulli_any(k);
}

Rational bernoulli_polynomial(int k, const Rational& x) {
  if (k < 0) throw DomainError("bernoulli_polynomial: negative index");
  Rational acc(0);
  for (int j = 0; j <= k; ++j) acc += Rational(binomial(k, j)) * bernoulli_any(j) * x.pow(k - j);
  return acc;
}

int chi4(long long d) noexcept {
  switch (mod_floor(d, 4)) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
  }
}

std::vector<long long> divisors(long long n) {
  if (n <= 0) throw DomainError("divisors: n must be positive, got " + std::to_string(n));
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt divisor_sum(long long n, int k, bool twisted) {
  if (n <= 0) throw DomainError("divisor_sum: n must be positive, got " + std::to_string(n));
  if (k < 0) throw DomainError("divisor_sum: exponent must be non-negative");
  BigInt acc = 0;
  for (long long d : divisors(n)) {
    int weight = twisted ? chi4(d) : 1;
    if (weight == 0) continue;
    BigInt term = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(k));
    if (weight < 0) acc -= term; else acc += term;
  }
  return acc;
}

bool is_prime(long long n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

long long isqrt(long long n) noexcept {
  if (n <= 0) return 0;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(long long n) noexcept {
  if (n < 0) return false;
  long long r = isqrt(n);
  return r * r == n;
}

}  // namespace thetakit
