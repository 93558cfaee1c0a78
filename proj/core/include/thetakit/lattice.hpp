#pragma once

// Positive-definite integral lattices: vector enumeration, representation
// numbers, the E8 root lattice and the mass of even unimodular genera.
//
// Normalization: a lattice is given by the Gram matrix G of its bilinear
// pairing (x, y) in a fixed basis, and Q(x) = (x, x) / 2. Representation
// numbers r(n) count vectors with Q(x) = n, so Z^2 with x^2 + y^2 has G = 2I
// and the 240 roots of E8 (Cartan-matrix Gram) sit at n = 1.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "thetakit/exact.hpp"

namespace thetakit {

using IntMatrix = std::vector<std::vector<long long>>;

struct EnumerationBudget {
  /// Upper bound on coordinate candidates visited by one enumeration.
  std::uint64_t max_candidates = 100'000'000;
};

class QuadLattice {
 public:
  /// Throws DomainError unless gram is square, symmetric and positive definite.
  explicit QuadLattice(IntMatrix gram);

  int rank() const noexcept { return static_cast<int>(gram_.size()); }
  long long gram(int i, int j) const { return gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const IntMatrix& gram_matrix() const noexcept { return gram_; }

  long long pairing(std::span<const long long> x, std::span<const long long> y) const;
  /// (x, x) = 2 Q(x).
  long long self_pairing(std::span<const long long> x) const { return pairing(x, x); }

 private:
  IntMatrix gram_;
};

/// The half-integral symmetric matrix T, stored as the integer matrix 2T
/// (even diagonal).
class HalfIntegralMatrix {
 public:
  /// twice = 2T; must be square, symmetric, with even diagonal.
  static HalfIntegralMatrix from_doubled(IntMatrix twice);

  int size() const noexcept { return static_cast<int>(twice_.size()); }
  long long doubled(int i, int j) const { return twice_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  Rational entry(int i, int j) const { return Rational(BigInt(doubled(i, j)), BigInt(2)); }
  bool is_positive_semidefinite() const;

 private:
  explicit HalfIntegralMatrix(IntMatrix twice) : twice_(std::move(twice)) {}
  IntMatrix twice_;
};

/// Exact determinant (fraction-free elimination).
BigInt determinant(const IntMatrix& m);

/// Visits every x with (x, x) <= max_self_pairing exactly once, passing x and
/// (x, x). Throws ResourceError when the candidate budget is exhausted.
void enumerate_short_vectors(const QuadLattice& lattice, long long max_self_pairing,
                             const std::function<void(std::span<const long long>, long long)>& visit,
                             const EnumerationBudget& budget = {});

/// #{x : (x, x) = value}. Zero when no vector has that self-pairing (for an
/// even lattice, every odd value).
std::uint64_t count_self_pairing(const QuadLattice& lattice, long long value, const EnumerationBudget& budget = {});

/// r(n) = #{x : Q(x) = n}, n >= 0.
std::uint64_t rep_number(const QuadLattice& lattice, long long n, const EnumerationBudget& budget = {});

/// r(0), ..., r(n_max) from a single enumeration.
std::vector<std::uint64_t> theta_coefficients(const QuadLattice& lattice, long long n_max,
                                              const EnumerationBudget& budget = {});

/// r(T) = #{(x1, x2) : (1/2)((xi, xj)) = T} for a 2x2 positive semi-definite T.
std::uint64_t rep_number_pair(const QuadLattice& lattice, const HalfIntegralMatrix& T,
                              const EnumerationBudget& budget = {});

/// Z^2 with Q = x^2 + y^2 (Gram 2I).
QuadLattice z2_standard();
/// E8 in the simple-root basis; the Gram matrix is the E8 Cartan matrix.
QuadLattice e8_lattice();

/// Q(x) integral for every x, i.e. even diagonal.
bool is_even(const QuadLattice& lattice);
/// det(G / g) = +-1 where g is the gcd of the Gram entries. For Z^2 with
/// Gram 2I this is the half-Gram test; for E8 the classical det G = 1.
bool is_unimodular(const QuadLattice& lattice);

/// sum over the genus of 1/#Aut for even unimodular lattices of rank m
/// (m a positive multiple of 8): B_{m/2}/m * prod_{1<=j<m/2} B_{2j}/(4j).
Rational mass_even_unimodular(int m);

}  // namespace thetakit
