#include <doctest.h>

#include "oracles.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/finite_geometry.hpp"
#include "thetakit/local_density.hpp"

using namespace thetakit;

namespace {
Rational q(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

IntPoly alternating(int a) {
  std::vector<BigInt> c;
  for (int i = 0; i <= a; ++i) c.emplace_back(i % 2 ? -1 : 1);
  return IntPoly(std::move(c));
}
}  // namespace

TEST_CASE("closed forms") {
  CHECK(den_selfdual(0, 3) == Rational(1));
  CHECK(den_selfdual(0, 7) == Rational(1));
  CHECK(den_selfdual(1, 3) == q(4, 3));
  CHECK(den_selfdual(2, 3) == q(32, 27));
  for (int n = 0; n <= 4; ++n) CHECK(den_unimodular_vs(n, 0, 5) == den_selfdual(n, 5));
  CHECK(den_unimodular_vs(1, 1, 3) == q(8, 9));
  CHECK(den_unimodular_vs(2, 2, 3) == q(2240, 2187));
  CHECK_THROWS_AS(den_selfdual(1, 9), DomainError);
  CHECK_THROWS_AS(den_selfdual(1, 2), DomainError);
  CHECK_THROWS_AS(den_unimodular_vs(-1, 0, 3), DomainError);
}

TEST_CASE("smallest non-residue") {
  CHECK(smallest_nonresidue(3) == 2);
  CHECK(smallest_nonresidue(7) == 3);
  for (long long p : {3, 5, 7, 11, 13, 17, 19, 23, 41, 71}) CHECK(smallest_nonresidue(p) == oracle::least_nonresidue(p));
}

TEST_CASE("solution counts match naive enumeration") {
  struct Case {
    long long p;
    int N, m, a;
  };
  for (const Case c : {Case{3, 1, 1, 0}, Case{3, 2, 1, 0}, Case{3, 2, 2, 0}, Case{3, 2, 2, 1}, Case{3, 3, 1, 1},
                       Case{3, 3, 1, 2}, Case{5, 1, 2, 0}, Case{5, 2, 2, 1}, Case{7, 1, 2, 0}, Case{3, 1, 3, 1}}) {
    long long P = 1;
    for (int i = 0; i < c.N; ++i) P *= c.p;
    long long target = 1;
    for (int i = 0; i < c.a; ++i) target *= c.p;
    const auto naive = oracle::naive_hermitian_count(c.p, c.N, c.m, target % P);
    CHECK(hermitian_solution_count(HermLocalLattice(c.p, {c.a}), c.m, c.N) == naive);
  }
}

TEST_CASE("counted densities against closed forms") {
  for (int N = 1; N <= 3; ++N) {
    CHECK(den_count(HermLocalLattice(3, {0}), 1, N) == den_selfdual(1, 3));
    CHECK(den_count(HermLocalLattice(3, {0}), 2, N) == den_unimodular_vs(1, 1, 3));
  }
  CHECK(den_count(HermLocalLattice(3, {1}), 1, 3) == Rational(0));
  CHECK(den_count(HermLocalLattice(3, {1}), 1, 4) == Rational(0));
}

TEST_CASE("counting errors") {
  CHECK_THROWS_AS(den_count(HermLocalLattice(3, {0, 1}), 2, 2), UnsupportedError);
  CHECK_THROWS_AS(HermLocalLattice(9, {0}), DomainError);
  CHECK_THROWS_AS(HermLocalLattice(3, {-1}), DomainError);
  DensityBudget tiny;
  tiny.max_work = 100;
  CHECK_THROWS_AS(den_count(HermLocalLattice(3, {0}), 2, 3, tiny), ResourceError);
  CHECK_THROWS_AS(den_count(HermLocalLattice(3, {0}), 0, 3), DomainError);
  CHECK(HermLocalLattice(5, {2, 0, 1}).valuations() == std::vector<int>{0, 1, 2});
  CHECK(HermLocalLattice(5, {2, 0, 1}).val() == 3);
}

TEST_CASE("rank-1 Siegel series") {
  for (long long p : {3, 5}) {
    for (int a = 0; a <= 3; ++a) {
      const auto s = siegel_series_rank1(a, p);
      CHECK(s.v == a);
      CHECK(s.poly == alternating(a));
      CHECK(s.satisfies_functional_equation());
      CHECK(s.poly.coefficient(0) == 1);
      const auto ladder = rank1_ladder(a, p, a + 1);
      CHECK(ladder.stabilized());
      for (const auto& pt : ladder.points) CHECK(s.evaluate(pt.X) == pt.normalized);
    }
  }
  CHECK(siegel_series_rank1(0, 3).poly == IntPoly{1});
  CHECK(siegel_series_rank1(1, 3).poly == (IntPoly{1, -1}));
  CHECK(central_derivative(siegel_series_rank1(1, 3)) == Rational(1));
  CHECK_THROWS_AS(central_derivative(siegel_series_rank1(2, 3)), DomainError);
}

TEST_CASE("non-stabilized counts are reported") {
  // At N = a the unit target p^a collapses to 0 mod p^N.
  CHECK_THROWS_AS(siegel_series_rank1(2, 3, 1), ComputationError);
}

TEST_CASE("Lagrange interpolation") {
  const std::vector<Rational> xs{Rational(0), Rational(1), Rational(2)};
  const std::vector<Rational> ys{Rational(1), Rational(2), Rational(5)};
  CHECK(lagrange_interpolate(xs, ys) == std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
  const std::vector<Rational> dup{Rational(1), Rational(1)};
  CHECK_THROWS_AS(lagrange_interpolate(dup, std::vector<Rational>{Rational(0), Rational(1)}), DomainError);
}

TEST_CASE("n = 3 example") {
  CHECK(siegel_series_example_n3(3).poly == (IntPoly{1, -7, 7, -1}));
  for (long long p : {3, 5, 7, 11}) {
    const auto s = siegel_series_example_n3(p);
    const long long c = 1 - p + p * p;
    CHECK(s.poly == (IntPoly{1, -c, c, -1}));
    CHECK(s.v == 3);
    CHECK(s.satisfies_functional_equation());
    CHECK(s.evaluate(Rational(1)) == Rational(0));
    CHECK(central_derivative(s) == Rational(2 + p - p * p));
    CHECK(central_derivative(s) == Rational(euler_char(p)));
  }
  CHECK(central_derivative(siegel_series_example_n3(3)) == Rational(-4));
  CHECK_THROWS_AS(siegel_series_example_n3(4), DomainError);
}

TEST_CASE("functional equation check rejects asymmetric polynomials") {
  CHECK_FALSE((SiegelSeries{IntPoly{1, 2}, 1, 3}.satisfies_functional_equation()));
  CHECK_FALSE((SiegelSeries{IntPoly{1, 0, 0, 1}, 2, 3}.satisfies_functional_equation()));
  CHECK((SiegelSeries{IntPoly{1, 0, 1}, 2, 3}.satisfies_functional_equation()));
}
