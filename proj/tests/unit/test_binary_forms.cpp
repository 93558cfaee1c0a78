#include <doctest.h>

#include <random>
#include <set>

#include "thetakit/binary_forms.hpp"
#include "thetakit/errors.hpp"

using namespace thetakit;

namespace {
Rational q(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

// f(alpha x + beta y, gamma x + delta y)
BinaryForm act(const BinaryForm& f, long long al, long long be, long long ga, long long de) {
  return {f(al, ga), 2 * f.a * al * be + f.b * (al * de + be * ga) + 2 * f.c * ga * de, f(be, de)};
}
}  // namespace

TEST_CASE("reduced forms") {
  CHECK(reduced_forms(3) == std::vector<BinaryForm>{{1, 1, 1}});
  CHECK(reduced_forms(20) == std::vector<BinaryForm>{{1, 0, 5}, {2, 2, 3}});
  CHECK(reduced_forms(1).empty());
  CHECK(reduced_forms(6).empty());
  CHECK(reduced_forms(23).size() == 3);
  CHECK_THROWS_AS(reduced_forms(0), DomainError);
  CHECK_THROWS_AS(reduced_forms(-3), DomainError);
}

TEST_CASE("reduced forms are reduced and distinct") {
  for (long long D = 3; D <= 800; ++D) {
    const auto forms = reduced_forms(D);
    std::set<BinaryForm> seen(forms.begin(), forms.end());
    CHECK(seen.size() == forms.size());
    for (const auto& f : forms) {
      CHECK(f.is_reduced());
      CHECK(f.is_positive_definite());
      CHECK(f.discriminant() == -D);
    }
  }
}

TEST_CASE("reduction is a class invariant") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> e(-6, 6);
  for (long long D : {3, 4, 20, 23, 56, 71, 84, 143, 260}) {
    for (const auto& f : reduced_forms(D)) {
      for (int i = 0; i < 40; ++i) {
        long long al = e(rng), be = e(rng), ga = e(rng), de = e(rng);
        if (al * de - be * ga != 1) continue;
        const BinaryForm g = act(f, al, be, ga, de);
        CHECK(g.discriminant() == -D);
        CHECK(reduce(g) == f);
      }
      CHECK(reduce(act(f, 1, 5, 0, 1)) == f);
      CHECK(reduce(act(f, 0, -1, 1, 0)) == f);
    }
  }
  CHECK_THROWS_AS(reduce({-1, 0, 1}), DomainError);
}

TEST_CASE("Hurwitz class number table") {
  const std::vector<std::pair<long long, Rational>> table{
      {3, q(1, 3)}, {4, q(1, 2)}, {7, 1}, {8, 1},  {11, 1}, {12, q(4, 3)},
      {15, 2},      {16, q(3, 2)}, {19, 1}, {20, 2}, {23, 3}, {24, 2}};
  for (const auto& [D, H] : table) CHECK(hurwitz_H(D) == H);
  CHECK(hurwitz_H(5) == Rational(0));
  CHECK_THROWS_AS(hurwitz_H(0), DomainError);
}

TEST_CASE("Hurwitz weights") {
  for (long long D = 3; D <= 1000; ++D) {
    CHECK((hurwitz_H(D) * Rational(6)).is_integer());
    for (const auto& f : reduced_forms(D)) {
      const Rational w = form_weight(f);
      if (w == q(1, 2)) CHECK((D % 4 == 0 && is_perfect_square(D / 4)));
      if (w == q(1, 3)) CHECK((D % 3 == 0 && is_perfect_square(D / 3)));
    }
  }
}

TEST_CASE("Hurwitz class number relation") {
  const auto r3 = hurwitz_relation(3);
  CHECK(r3.lhs == 6);
  CHECK(r3.rhs == Rational(6));
  CHECK(r3.equal);
  const auto r5 = hurwitz_relation(5);
  CHECK(r5.lhs == 10);
  CHECK(r5.equal);
  const auto r2 = hurwitz_relation(2);
  CHECK(r2.lhs == 4);
  REQUIRE(r2.terms.size() == 5);
  CHECK(r2.terms[0].D == 4);
  CHECK(r2.terms[0].H == q(1, 2));
  CHECK(r2.terms[2].D == 8);
  CHECK(r2.equal);
  for (long long m = 1; m <= 120; ++m) {
    const auto r = hurwitz_relation(m);
    CHECK(r.perfect_square == is_perfect_square(m));
    Rational s(0);
    for (const auto& t : r.terms) s += t.H;
    CHECK(s == r.rhs);
    if (!r.perfect_square) CHECK(r.equal);
  }
  CHECK_THROWS_AS(hurwitz_relation(0), DomainError);
}

TEST_CASE("compactified degree") {
  CHECK(compactified_degree(3) == 8);
  CHECK(compactified_degree(1) == 2);
  CHECK(compactified_degree(6) == 24);
  CHECK_THROWS_AS(compactified_degree(0), DomainError);
  for (long long m = 1; m <= 200; ++m) {
    const auto id = degree_identity(m);
    CHECK(id.holds);
    CHECK(id.compactified == id.max_sum + id.min_sum);
  }
  CHECK(divisor_pair_min_sum(3) == 2);
}
