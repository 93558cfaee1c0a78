#include "thetakit/lattice.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

void require_square_symmetric(const IntMatrix& m, const char* what) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError(std::string(what) + ": empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw DomainError(std::string(what) + ": matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) throw DomainError(std::string(what) + ": matrix is not symmetric");
}

IntMatrix leading_block(const IntMatrix& m, std::size_t k) {
  IntMatrix out(k, std::vector<long long>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[i][j] = m[i][j];
  return out;
}

// Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2 for (x, x).
struct Decomposition {
  std::vector<double> diag;
  std::vector<std::vector<double>> mu;
};

Decomposition decompose(const QuadLattice& lattice) {
  const int n = lattice.rank();
  std::vector<std::vector<double>> a(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = static_cast<double>(lattice.gram(i, j));
  // Lagrange completion of squares.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) a[i][j] /= a[i][i];
    for (int k = i + 1; k < n; ++k)
      for (int l = k; l < n; ++l) a[k][l] -= a[i][k] * a[i][l] * a[i][i];
  }
  Decomposition d;
  d.diag.resize(static_cast<std::size_t>(n));
  d.mu.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    d.diag[i] = a[i][i];
    for (int j = i + 1; j < n; ++j) d.mu[i][j] = a[i][j];
  }
  return d;
}

}  // namespace

QuadLattice::QuadLattice(IntMatrix gram) : gram_(std::move(gram)) {
  require_square_symmetric(gram_, "QuadLattice");
  for (std::size_t k = 1; k <= gram_.size(); ++k) {
    if (determinant(leading_block(gram_, k)) <= 0)
      throw DomainError("QuadLattice: Gram matrix is not positive definite (leading minor " + std::to_string(k) + ")");
  }
}

long long QuadLattice::pairing(std::span<const long long> x, std::span<const long long> y) const {
  const int n = rank();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw DomainError("QuadLattice::pairing: vector length does not match rank");
  long long s = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < n; ++j) row += gram(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

HalfIntegralMatrix HalfIntegralMatrix::from_doubled(IntMatrix twice) {
  require_square_symmetric(twice, "HalfIntegralMatrix");
  for (std::size_t i = 0; i < twice.size(); ++i)
    if (twice[i][i] % 2 != 0) throw DomainError("HalfIntegralMatrix: diagonal of 2T must be even");
  return HalfIntegralMatrix(std::move(twice));
}

bool HalfIntegralMatrix::is_positive_semidefinite() const {
  // All principal minors >= 0.
  const int n = size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    IntMatrix sub;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      std::vector<long long> row;
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) row.push_back(twice_[i][j]);
      sub.push_back(std::move(row));
    }
    if (determinant(sub) < 0) return false;
  }
  return true;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  // Bareiss
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void enumerate_short_vectors(const QuadLattice& lattice, long long max_self_pairing,
                             const std::function<void(std::span<const long long>, long long)>& visit,
                             const EnumerationBudget& budget) {
  if (max_self_pairing < 0) return;
  const int n = lattice.rank();
  const Decomposition dec = decompose(lattice);
  const double bound = static_cast<double>(max_self_pairing);
  constexpr double kSlack = 1e-7;

  std::vector<long long> x(static_cast<std::size_t>(n), 0);
  std::vector<double> remaining(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<long long> upper(static_cast<std::size_t>(n), 0);
  std::vector<double> center(static_cast<std::size_t>(n), 0.0);
  std::uint64_t candidates = 0;

  auto charge = [&] {
    if (++candidates > budget.max_candidates)
      throw ResourceError("lattice enumeration exceeded the budget of " + std::to_string(budget.max_candidates) +
                          " candidates");
  };

  // Depth-first from the last coordinate to the first.
  auto set_range = [&](int i) {
    double c = 0.0;
    for (int j = i + 1; j < n; ++j) c -= dec.mu[i][j] * static_cast<double>(x[j]);
    center[i] = c;
    const double r = std::max(remaining[i + 1], 0.0);
    const double half = std::sqrt((r + kSlack * (1.0 + bound)) / dec.diag[i]) + kSlack;
    x[i] = static_cast<long long>(std::ceil(c - half));
    upper[i] = static_cast<long long>(std::floor(c + half));
  };

  remaining[n] = bound;
  int level = n - 1;
  set_range(level);
  while (level < n) {
    if (x[level] > upper[level]) {
      ++level;
      if (level < n) ++x[level];
      continue;
    }
    charge();
    const double t = static_cast<double>(x[level]) - center[level];
    remaining[level] = remaining[level + 1] - dec.diag[level] * t * t;
    if (level == 0) {
      const long long norm = lattice.self_pairing(x);
      if (norm <= max_self_pairing) visit(x, norm);
      ++x[0];
      continue;
    }
    --level;
    set_range(level);
  }
}

std::vector<std::uint64_t> theta_coefficients(const QuadLattice& lattice, long long n_max,
                                              const EnumerationBudget& budget) {
  if (n_max < 0) throw DomainError("theta_coefficients: n_max must be non-negative");
  std::vector<std::uint64_t> r(static_cast<std::size_t>(n_max) + 1, 0);
  enumerate_short_vectors(
      lattice, 2 * n_max,
      [&](std::span<const long long>, long long norm) {
        if (norm % 2 == 0) ++r[static_cast<std::size_t>(norm / 2)];
      },
      budget);
  return r;
}

std::uint64_t count_self_pairing(const QuadLattice& lattice, long long value, const EnumerationBudget& budget) {
  if (value < 0) return 0;
  std::uint64_t count = 0;
  enumerate_short_vectors(
      lattice, value, [&](std::span<const long long>, long long norm) { count += norm == value; }, budget);
  return count;
}

std::uint64_t rep_number(const QuadLattice& lattice, long long n, const EnumerationBudget& budget) {
  if (n < 0) throw DomainError("rep_number: n must be non-negative, got " + std::to_string(n));
  return count_self_pairing(lattice, 2 * n, budget);
}

std::uint64_t rep_number_pair(const QuadLattice& lattice, const HalfIntegralMatrix& T, const EnumerationBudget& budget) {
  if (T.size() != 2) throw DomainError("rep_number_pair: T must be 2x2");
  if (!T.is_positive_semidefinite()) throw DomainError("rep_number_pair: T is not positive semi-definite");
  auto vectors_of_norm = [&](long long value) {
    std::vector<std::vector<long long>> out;
    enumerate_short_vectors(
        lattice, value,
        [&](std::span<const long long> x, long long norm) {
          if (norm == value) out.emplace_back(x.begin(), x.end());
        },
        budget);
    return out;
  };
  const auto first = vectors_of_norm(T.doubled(0, 0));
  const auto second = vectors_of_norm(T.doubled(1, 1));
  const long long cross = T.doubled(0, 1);
  std::uint64_t count = 0;
  for (const auto& x1 : first)
    for (const auto& x2 : second) count += lattice.pairing(x1, x2) == cross;
  return count;
}

QuadLattice z2_standard() { return QuadLattice({{2, 0}, {0, 2}}); }

QuadLattice e8_lattice() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
  IntMatrix g(8, std::vector<long long>(8, 0));
  for (int i = 0; i < 8; ++i) g[i][i] = 2;
  const int edges[][2] = {{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
  for (const auto& e : edges) {
    g[e[0] - 1][e[1] - 1] = -1;
    g[e[1] - 1][e[0] - 1] = -1;
  }
  return QuadLattice(std::move(g));
}

bool is_even(const QuadLattice& lattice) {
  for (int i = 0; i < lattice.rank(); ++i)
    if (lattice.gram(i, i) % 2 != 0) return false;
  return true;
}

bool is_unimodular(const QuadLattice& lattice) {
  long long g = 0;
  for (const auto& row : lattice.gram_matrix())
    for (long long v : row) g = std::gcd(g, v);
  const BigInt det = determinant(lattice.gram_matrix());
  const BigInt scale = boost::multiprecision::pow(BigInt(g), static_cast<unsigned>(lattice.rank()));
  return det == scale || det == -scale;
}

Rational mass_even_unimodular(int m) {
  if (m <= 0 || m % 8 != 0)
    throw DomainError("mass_even_unimodular: rank must be a positive multiple of 8, got " + std::to_string(m));
  Rational mass = bernoulli(m / 2) / Rational(m);
  for (int j = 1; j < m / 2; ++j) mass *= bernoulli(2 * j) / Rational(4LL * j);
  return mass;
}

}  // namespace thetakit
