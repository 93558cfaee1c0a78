#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/exact.hpp"

using namespace thetakit;

namespace {
Rational q(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("rational normalization and parsing") {
  CHECK(q(6, -4) == q(-3, 2));
  CHECK(q(6, -4).den() == 2);
  CHECK(q(0, -7) == Rational(0));
  CHECK(q(0, -7).den() == 1);
  CHECK(Rational::parse("-10/4") == q(-5, 2));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(q(-5, 2).to_string() == "-5/2");
  CHECK(Rational(7).to_string() == "7");
  CHECK_THROWS_AS(q(1, 0), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/"), DomainError);
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
  CHECK_THROWS_AS(Rational(0).reciprocal(), DomainError);
  CHECK(q(2, 3).pow(-2) == q(9, 4));
  CHECK(q(-1, 3) < q(-1, 4));
  CHECK(q(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long long> n(-10'000, 10'000), d(1, 10'000);
  for (int i = 0; i < 500; ++i) {
    const Rational a = q(n(rng), d(rng)), b = q(n(rng), d(rng)), c = q(n(rng), d(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(boost::multiprecision::gcd(a.num(), a.den()) == 1);
    CHECK(a.den() > 0);
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(2) == q(1, 6));
  CHECK(bernoulli(4) == q(-1, 30));
  CHECK(bernoulli(6) == q(1, 42));
  CHECK(bernoulli(12) == q(-691, 2730));
  CHECK(bernoulli(30) == q(8615841276005, 14322));
  CHECK(bernoulli_any(1) == q(-1, 2));
  CHECK(bernoulli_any(7) == Rational(0));
  CHECK_THROWS_AS(bernoulli(3), DomainError);
  CHECK_THROWS_AS(bernoulli(-2), DomainError);
}

TEST_CASE("bernoulli agrees with the Akiyama-Tanigawa table") {
  const auto at = oracle::akiyama_tanigawa(40);
  for (int k = 0; k <= 40; k += 2) CHECK(bernoulli(k) == at[static_cast<std::size_t>(k)]);
  CHECK(at[1] == -bernoulli_any(1));
}

TEST_CASE("bernoulli recurrence") {
  for (int k = 1; k <= 30; ++k) {
    Rational s(0);
    for (int j = 0; j <= k; ++j) s += Rational(binomial(k + 1, j)) * bernoulli_any(j);
    CHECK(s == Rational(0));
  }
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_polynomial(1, q(1, 4)) == q(-1, 4));
  CHECK(bernoulli_polynomial(2, Rational(0)) == bernoulli(2));
  // B_k(1 - x) = (-1)^k B_k(x)
  for (int k = 0; k <= 9; ++k)
    CHECK(bernoulli_polynomial(k, q(2, 7)) == Rational(k % 2 ? -1 : 1) * bernoulli_polynomial(k, q(5, 7)));
}

TEST_CASE("chi4") {
  CHECK(chi4(1) == 1);
  CHECK(chi4(3) == -1);
  CHECK(chi4(6) == 0);
  CHECK(chi4(-1) == -1);
  CHECK(chi4(0) == 0);
  for (long long a = -201; a <= 201; a += 2)
    for (long long b = 1; b <= 201; b += 2) CHECK(chi4(a * b) == chi4(a) * chi4(b));
}

TEST_CASE("divisor sums") {
  CHECK(divisor_sum(5, 0, true) == 2);
  CHECK(divisor_sum(3, 0, true) == 0);
  CHECK(divisor_sum(6, 3, false) == 252);
  CHECK(divisor_sum(1, 5, false) == 1);
  CHECK_THROWS_AS(divisor_sum(0, 1, false), DomainError);
  for (long long n = 1; n <= 300; ++n) {
    BigInt plain = 0, twisted = 0;
    for (long long d = 1; d <= n; ++d)
      if (n % d == 0) {
        plain += BigInt(d) * d * d;
        twisted += chi4(d) * BigInt(d) * d;
      }
    CHECK(divisor_sum(n, 3, false) == plain);
    CHECK(divisor_sum(n, 2, true) == twisted);
  }
}

TEST_CASE("integer helpers") {
  for (long long n = 0; n <= 2000; ++n) {
    bool prime = n >= 2;
    for (long long d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    CHECK(is_prime(n) == prime);
    const long long r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
    CHECK(is_perfect_square(n) == (r * r == n));
  }
  CHECK(mod_floor(-7, 4) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("polynomial operations") {
  const IntPoly one_minus_x{1, -1};
  CHECK(poly_eval(one_minus_x, Rational(1)) == Rational(0));
  CHECK(poly_reverse_signed(one_minus_x, 1) == one_minus_x);
  CHECK(poly_eval(poly_derivative(IntPoly{1, -7, 7, -1}), Rational(1)) == Rational(4));
  CHECK(IntPoly{1, 2, 0, 0}.degree() == 1);
  CHECK(IntPoly{}.degree() == -1);
  CHECK(IntPoly{0, 0}.is_zero());
  CHECK(IntPoly{1, -7, 7, -1}.to_string() == "1 - 7X + 7X^2 - X^3");
  CHECK(IntPoly{0, 3}.to_string() == "3X");
  CHECK(IntPoly{}.to_string() == "0");
  CHECK((IntPoly{1, 1} * IntPoly{1, -1}) == (IntPoly{1, 0, -1}));
  CHECK((IntPoly{1, 1} - IntPoly{1, 1}).is_zero());
  CHECK(IntPoly{1, -7}.coefficient_strings() == std::vector<std::string>{"1", "-7"});
  CHECK_THROWS_AS(poly_reverse_signed(IntPoly{1, 0, 1}, 1), DomainError);
}

TEST_CASE("signed reversal is an involution on random polynomials") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const int deg = static_cast<int>(rng() % 9);
    const IntPoly p = oracle::random_poly(rng, deg);
    const int v = deg + static_cast<int>(rng() % 3);
    const IntPoly r = poly_reverse_signed(p, v);
    CHECK(poly_reverse_signed(r, v) == p);
    // (-X)^v p(1/X) at X = 2
    const Rational lhs = poly_eval(r, Rational(2));
    const Rational rhs = Rational(-2).pow(v) * poly_eval(p, q(1, 2));
    CHECK(lhs == rhs);
  }
}
