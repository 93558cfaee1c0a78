#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "oracles.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/heegner.hpp"

using namespace thetakit;

TEST_CASE("curve constants") {
  CHECK(EllipticCurve37a1::discriminant == 37);
  CHECK(EllipticCurve37a1::on_curve_mod(0, 0, 101));
  CHECK(EllipticCurve37a1::on_curve_mod(1, 0, 101));
  CHECK(EllipticCurve37a1::on_curve_mod(-1, -1, 101));
  CHECK_FALSE(EllipticCurve37a1::on_curve_mod(2, 0, 101));
}

TEST_CASE("Hecke eigenvalues") {
  const std::vector<long long> f_E{1, -2, -3, 2, -2, 6, -1, 0, 6, 4, -5, -6};
  for (long long n = 1; n <= 12; ++n) CHECK(a_n(n) == f_E[static_cast<std::size_t>(n - 1)]);
  CHECK(a_p(2) == -2);
  CHECK(a_p(5) == -2);
  CHECK(a_p(7) == -1);
  CHECK(a_p(37) == -1);
  CHECK(count_points_mod_p(37) == 39);
  CHECK(count_smooth_points_mod_p(37) == 38);
  CHECK(a_n(37 * 37) == 1);
  CHECK_THROWS_AS(a_p(4), DomainError);
  CHECK_THROWS_AS(a_n(0), DomainError);
}

TEST_CASE("point counts against a naive double loop") {
  for (long long p = 2; p < 400; ++p) {
    if (!is_prime(p)) continue;
    CHECK(count_points_mod_p(p) == oracle::naive_curve_points(p));
    if (p != 37) {
      CHECK(count_smooth_points_mod_p(p) == count_points_mod_p(p));
      CHECK(static_cast<double>(a_p(p) * a_p(p)) <= 4.0 * static_cast<double>(p));
    }
  }
}

TEST_CASE("eigenvalue table is multiplicative") {
  const HeckeEigenvalues a(600);
  for (long long n = 1; n <= 600; ++n) CHECK(a(n) == a_n(n));
  for (long long m = 1; m <= 24; ++m)
    for (long long n = 1; n <= 24; ++n)
      if (std::gcd(m, n) == 1) CHECK(a(m * n) == a(m) * a(n));
  CHECK_THROWS_AS(a(601), DomainError);
  CHECK_THROWS_AS(HeckeEigenvalues(0), DomainError);
}

TEST_CASE("period lattice") {
  const auto L = period_lattice();
  CHECK(std::abs(3.0 * real_period() / (4.0 * std::numbers::pi) - 0.7146356107) < 1e-8);
  CHECK(L.tau().imag() > 0);
  const auto inv = invariants_from_periods(L);
  CHECK(std::abs(inv.g2 - 4.0) < 1e-8);
  CHECK(std::abs(inv.g3 + 1.0) < 1e-8);
  const auto e = two_torsion_roots();
  CHECK(e[0] > e[1]);
  CHECK(e[1] > e[2]);
  CHECK(std::abs(e[0] + e[1] + e[2]) < 1e-12);
  CHECK(std::abs(weierstrass_p(L, 0.5 * L.omega1) - e[0]) < 1e-9);
  CHECK(std::abs(weierstrass_p(L, 0.5 * L.omega2) - e[2]) < 1e-9);
}

TEST_CASE("elliptic logarithm of the generator") {
  const auto L = period_lattice();
  const Complex z = elliptic_log_generator(L);
  CHECK(std::abs(weierstrass_p(L, z)) < 1e-9);
  // 2P = (1, 0), 3P = (-1, -1)
  CHECK(std::abs(weierstrass_p(L, 2.0 * z) - 1.0) < 1e-9);
  CHECK(std::abs(weierstrass_p(L, 3.0 * z) + 1.0) < 1e-8);
  // p'(z) = 2y + 1 = 1 at P
  const double h = 1e-5;
  const Complex dp = (weierstrass_p(L, z + h) - weierstrass_p(L, z - h)) / (2 * h);
  CHECK(std::abs(dp - 1.0) < 1e-5);
}

TEST_CASE("Heegner forms") {
  CHECK(heegner_forms(3).size() == 1);
  CHECK(heegner_forms(67).size() == 1);
  CHECK(heegner_forms(12).size() == 2);
  for (long long d : {3, 4, 7, 11, 12, 16, 27, 67, 40, 47}) {
    const long long beta = heegner_residue(d);
    for (const auto& f : heegner_forms(d)) {
      CHECK(f.form.a % 37 == 0);
      CHECK(f.form.discriminant() == -d);
      CHECK(mod_floor(f.form.b - beta, 74) == 0);
      CHECK(reduce(f.form) == f.class_rep);
      CHECK(f.tau().imag() > 0);
    }
  }
  CHECK_THROWS_AS(heegner_forms(20), DomainError);
  CHECK_THROWS_AS(heegner_forms(5), DomainError);
  CHECK_THROWS_AS(heegner_forms(111), DomainError);
  CHECK_THROWS_AS(heegner_forms(0), DomainError);
}

TEST_CASE("Heegner multiples") {
  HeegnerOptions opt;
  opt.sign = calibrate_sign();
  CHECK(opt.sign == 1);
  CHECK(heegner_multiple(3, opt).n_d == -1);
  CHECK(heegner_multiple(16, opt).n_d == 2);
  CHECK(heegner_multiple(67, opt).n_d == -6);
  for (long long d : {27, 7, 11}) {
    const auto c = g_coefficient_check(d, opt);
    CHECK(c.match);
    CHECK(c.n_d == g_coefficient(d));
    CHECK(c.residual < 1e-3);
  }
  HeegnerOptions strict = opt;
  strict.tolerance = 1e-30;
  CHECK_THROWS_AS(heegner_multiple(7, strict), VerificationError);
  CHECK_FALSE(compute_heegner(7, strict).accepted);
  CHECK_THROWS_AS(g_coefficient(8), DomainError);
}

TEST_CASE("L-function values") {
  const auto e1_oracle = [](double x) {
    boost::math::quadrature::exp_sinh<double> integrator;
    return integrator.integrate([x](double t) { return std::exp(-x * t) / t; }, 1.0, std::numeric_limits<double>::infinity());
  };
  for (double x : {0.1, 1.0, 2.5, 10.0}) CHECK(exponential_integral_e1(x) == doctest::Approx(e1_oracle(x)).epsilon(1e-10));
  CHECK(std::abs(l_derivative() - 0.3059997738) < 1e-8);
  CHECK(std::abs(aipf_ratio() - 8.0 * std::numbers::pi / 3.0) < 1e-6);
  // Gross-Zagier shape for this curve: L'(E, 1) = 2 omega^+ <P, P>.
  CHECK(std::abs(l_derivative() - 2.0 * real_period() * kNeronTateHeightP) < 1e-8);
  CHECK_THROWS_AS(exponential_integral_e1(0.0), DomainError);
}
