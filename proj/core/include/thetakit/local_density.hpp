#pragma once

// Local representation densities of hermitian lattices over the unramified
// quadratic extension O_F / Z_p, the normalized Siegel series Den(X, L), its
// functional equation and the central derivative at X = 1.
//
// Lattices are diagonal: L = <p^{a_1}> + ... + <p^{a_n}> with a_1 <= ... <= a_n.
// O_F / p^N is modelled as (Z/p^N)[t]/(t^2 - u), u the least quadratic
// non-residue mod p, with conjugation t -> -t, so the norm of c0 + c1 t is
// c0^2 - u c1^2.

#include <cstdint>
#include <span>
#include <vector>

#include "thetakit/exact.hpp"

namespace thetakit {

class HermLocalLattice {
 public:
  /// q must be an odd prime; valuations must be non-negative (sorted here).
  HermLocalLattice(long long q, std::vector<int> valuations);

  long long q() const noexcept { return q_; }
  const std::vector<int>& valuations() const noexcept { return vals_; }
  int rank() const noexcept { return static_cast<int>(vals_.size()); }
  /// val(det L) = sum of the valuations.
  int val() const noexcept;

 private:
  long long q_;
  std::vector<int> vals_;
};

/// Den(X, L) together with val(L) and the residue prime.
struct SiegelSeries {
  IntPoly poly;
  int v = 0;
  long long q = 0;

  Rational evaluate(const Rational& X) const { return poly_eval(poly, X); }
  /// poly == (-X)^v poly(1/X).
  bool satisfies_functional_equation() const;
};

struct DensityBudget {
  /// Bound on elementary operations of one counting run (norm table plus
  /// convolutions, m * q^{2N}).
  std::uint64_t max_work = 100'000'000;
};

/// Least positive quadratic non-residue modulo the odd prime p.
long long smallest_nonresidue(long long p);

/// Den(<1>^n, <1>^n) = prod_{i=1}^{n} (1 - (-q)^{-i}).
Rational den_selfdual(int n, long long q);

/// Den(<1>^{n+k}, <1>^n) = prod_{i=1}^{n} (1 - (-q)^{-i} X) at X = (-q)^{-k}.
Rational den_unimodular_vs(int n, int k, long long q);

/// #{x in (O_F/p^N)^m : sum_i N(x_i) = p^a mod p^N} for L = <p^a> of rank 1.
BigInt hermitian_solution_count(const HermLocalLattice& L, int m, int N, const DensityBudget& budget = {});

/// Den(<1>^m, L) at precision N: the solution count divided by q^{N(2m-1)}.
/// Only rank-1 L is supported (UnsupportedError otherwise).
Rational den_count(const HermLocalLattice& L, int m, int N, const DensityBudget& budget = {});

/// One interpolation node of the rank-1 Siegel series.
struct LadderPoint {
  int k = 0;
  Rational X;            // (-q)^{-k}
  Rational density;      // Den(<1>^{1+k}, L) at precision N
  Rational density_next; // same at precision N + 1
  Rational normalized;   // density / Den(<1>^{1+k}, <1>)
  bool stabilized = false;
};

struct Rank1Ladder {
  int a = 0;
  long long q = 0;
  int precision = 0;
  std::vector<LadderPoint> points;

  bool stabilized() const noexcept;
};

/// Counted densities for k = 0..a at precisions N and N + 1.
Rank1Ladder rank1_ladder(int a, long long q, int precision, const DensityBudget& budget = {});

/// Exact Lagrange interpolation: coefficients (index = degree) of the unique
/// polynomial of degree < xs.size() through the points.
std::vector<Rational> lagrange_interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Den(X, <p^a>) interpolated from counted densities. precision = 0 selects
/// N = a + 1. Throws ComputationError if counts do not stabilize from N to
/// N + 1, the interpolant is not integral of degree <= a, or the result
/// fails the functional equation or the constant-term check.
SiegelSeries siegel_series_rank1(int a, long long q, int precision = 0, const DensityBudget& budget = {});

/// Den(X, <p>^3) = (1-X)(1+qX)(1-q^2X) + (q^3+1)(1-X)X^2, v = 3.
SiegelSeries siegel_series_example_n3(long long q);

/// -d/dX Den(X, L) at X = 1. Requires odd v.
Rational central_derivative(const SiegelSeries& s);

}  // namespace thetakit
