#pragma once

// Deliberately naive reference computations. None of these call into the
// library's enumeration or counting kernels.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "thetakit/exact.hpp"
#include "thetakit/lattice.hpp"

namespace oracle {

using thetakit::BigInt;
using thetakit::IntMatrix;
using thetakit::Rational;
using thetakit::mod_floor;

/// Akiyama-Tanigawa table; yields B_n with B_1 = +1/2.
inline std::vector<Rational> akiyama_tanigawa(int n_max) {
  std::vector<Rational> out;
  std::vector<Rational> row(static_cast<std::size_t>(n_max) + 1);
  for (int m = 0; m <= n_max; ++m) {
    row[static_cast<std::size_t>(m)] = Rational(BigInt(1), BigInt(m + 1));
    for (int j = m; j >= 1; --j) {
      auto& a = row[static_cast<std::size_t>(j - 1)];
      a = Rational(j) * (a - row[static_cast<std::size_t>(j)]);
    }
    out.push_back(row[0]);
  }
  return out;
}

/// Gram matrix B^T B of a random nonsingular integer basis, optionally doubled
/// so the lattice is even.
inline IntMatrix random_gram(std::mt19937_64& rng, int rank) {
  std::uniform_int_distribution<int> entry(-2, 2);
  for (;;) {
    IntMatrix b(static_cast<std::size_t>(rank), std::vector<long long>(static_cast<std::size_t>(rank)));
    for (auto& row : b)
      for (auto& x : row) x = entry(rng);
    IntMatrix g(static_cast<std::size_t>(rank), std::vector<long long>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        for (int k = 0; k < rank; ++k)
          g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              b[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    if (thetakit::determinant(g) == 0) continue;
    if (rng() % 2 == 0)
      for (auto& row : g)
        for (auto& x : row) x *= 2;
    return g;
  }
}

/// Inverse of a small symmetric positive-definite matrix, Gauss-Jordan in doubles.
inline std::vector<std::vector<double>> inverse(const IntMatrix& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(2 * n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<double>(g[i][j]);
    a[i][n + i] = 1.0;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    const double d = a[c][c];
    for (auto& x : a[c]) x /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<double>> inv(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

/// counts[v] = #{x : x^T G x = v} for v <= max_value, by looping over the box
/// |x_i| <= sqrt(max_value * (G^{-1})_ii) + 1.
inline std::vector<std::uint64_t> box_counts(const IntMatrix& g, long long max_value) {
  const std::size_t n = g.size();
  const auto inv = inverse(g);
  std::vector<long long> bound(n);
  for (std::size_t i = 0; i < n; ++i)
    bound[i] = static_cast<long long>(std::sqrt(static_cast<double>(max_value) * inv[i][i])) + 1;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_value) + 1, 0);
  std::vector<long long> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  for (;;) {
    long long v = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v += x[i] * g[i][j] * x[j];
    if (v <= max_value) ++counts[static_cast<std::size_t>(v)];
    std::size_t k = 0;
    while (k < n && x[k] == bound[k]) {
      x[k] = -bound[k];
      ++k;
    }
    if (k == n) break;
    ++x[k];
  }
  return counts;
}

/// Vectors of E8 in its coordinate model {x in Z^8 u (Z + 1/2)^8 : sum x even}
/// with sum x_i^2 = 2n, for n = 0..n_max. Works with y = 2x.
inline std::vector<std::uint64_t> e8_coordinate_counts(int n_max) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_max) + 1, 0);
  const long long max_norm = 8LL * n_max;  // sum y^2 = 4 sum x^2 = 8n
  const long long r = static_cast<long long>(std::sqrt(static_cast<double>(max_norm)));
  std::vector<long long> y(8);
  auto rec = [&](auto&& self, int i, long long norm, long long sum, int parity) -> void {
    if (i == 8) {
      if (mod_floor(sum, 4) == 0 && norm % 8 == 0) ++counts[static_cast<std::size_t>(norm / 8)];
      return;
    }
    for (long long v = -r; v <= r; ++v) {
      if (mod_floor(v, 2) != parity) continue;
      const long long nn = norm + v * v;
      if (nn > max_norm) continue;
      y[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, nn, sum + v, parity);
    }
  };
  rec(rec, 0, 0, 0, 0);
  rec(rec, 0, 0, 0, 1);
  return counts;
}

/// Random integer polynomial of degree exactly deg (nonzero leading term).
inline thetakit::IntPoly random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<long long> c(-1'000'000, 1'000'000);
  std::vector<BigInt> coeffs;
  for (int i = 0; i <= deg; ++i) coeffs.emplace_back(c(rng));
  while (coeffs.back() == 0) coeffs.back() = c(rng);
  return thetakit::IntPoly(std::move(coeffs));
}

inline long long least_nonresidue(long long p) {
  for (long long u = 2; u < p; ++u) {
    bool square = false;
    for (long long y = 1; y < p && !square; ++y) square = y * y % p == u;
    if (!square) return u;
  }
  return -1;
}

/// #{x in (Z/p^N)^{2m} : sum_i (x_{2i}^2 - u x_{2i+1}^2) = target mod p^N}.
inline std::uint64_t naive_hermitian_count(long long p, int N, int m, long long target) {
  long long P = 1;
  for (int i = 0; i < N; ++i) P *= p;
  const long long u = least_nonresidue(p);
  std::vector<long long> x(static_cast<std::size_t>(2 * m), 0);
  std::uint64_t count = 0;
  for (;;) {
    long long s = 0;
    for (int i = 0; i < m; ++i) {
      const long long a = x[static_cast<std::size_t>(2 * i)], b = x[static_cast<std::size_t>(2 * i + 1)];
      s += a * a - u * b * b;
    }
    count += mod_floor(s - target, P) == 0;
    std::size_t k = 0;
    while (k < x.size() && x[k] == P - 1) x[k++] = 0;
    if (k == x.size()) break;
    ++x[k];
  }
  return count;
}

/// Projective F_{q^2}-points of x^{q+1} + y^{q+1} + z^{q+1} = 0 from the
/// fibres of the norm F_{q^2} -> F_q (0 once, every other value q + 1 times).
inline long long fermat_count_from_norms(long long q) {
  std::vector<long long> fibre(static_cast<std::size_t>(q), q + 1);
  fibre[0] = 1;
  long long affine = 0;
  for (long long a = 0; a < q; ++a)
    for (long long b = 0; b < q; ++b)
      affine += fibre[static_cast<std::size_t>(a)] * fibre[static_cast<std::size_t>(b)] *
                fibre[static_cast<std::size_t>(mod_floor(-a - b, q))];
  return (affine - 1) / (q * q - 1);
}

/// Projective points of y^2 + y = x^3 - x over F_p by a double loop.
inline long long naive_curve_points(long long p) {
  long long count = 1;
  for (long long x = 0; x < p; ++x)
    for (long long y = 0; y < p; ++y) count += mod_floor(y * y + y - x * x * x + x, p) == 0;
  return count;
}

}  // namespace oracle
