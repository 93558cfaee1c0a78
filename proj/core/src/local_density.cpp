#include "thetakit/local_density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

__extension__ using u128 = unsigned __int128;

void require_odd_prime(long long q, const char* where) {
  if (q <= 2 || !is_prime(q))
    throw DomainError(std::string(where) + ": q must be an odd prime, got " + std::to_string(q));
}

long long ipow(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<long long>::max() / base) throw ResourceError("integer power overflow");
    r *= base;
  }
  return r;
}

BigInt to_big(u128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  BigInt lo = static_cast<std::uint64_t>(v);
  return (hi << 64) + lo;
}

// counts[m-1][c] = #{x in (O_F/p^N)^m : sum N(x_i) = c mod p^N} for m = 1..m_max.
std::vector<std::vector<u128>> norm_sum_distributions(long long p, int N, int m_max, const DensityBudget& budget) {
  const long long P = ipow(p, N);
  const double work = static_cast<double>(m_max) * static_cast<double>(P) * static_cast<double>(P);
  if (work > static_cast<double>(budget.max_work)) {
    std::ostringstream os;
    os << "density count q=" << p << " N=" << N << " m=" << m_max << " needs " << work
       << " operations, budget is " << budget.max_work;
    throw ResourceError(os.str());
  }
  // Largest count is P^{2m}; keep it below 2^126.
  if (2.0 * m_max * N * std::log2(static_cast<double>(p)) > 126.0)
    throw ResourceError("density count would overflow the 128-bit accumulator");

  const long long u = smallest_nonresidue(p);
  std::vector<long long> sq(static_cast<std::size_t>(P));
  for (long long c = 0; c < P; ++c) sq[c] = static_cast<long long>((static_cast<u128>(c) * c) % P);

  std::vector<u128> single(static_cast<std::size_t>(P), 0);
  for (long long c0 = 0; c0 < P; ++c0)
    for (long long c1 = 0; c1 < P; ++c1) ++single[mod_floor(sq[c0] - (u % P) * sq[c1] % P, P)];

  std::vector<std::vector<u128>> out;
  out.push_back(single);
  for (int m = 2; m <= m_max; ++m) {
    const auto& prev = out.back();
    std::vector<u128> next(static_cast<std::size_t>(P), 0);
    for (long long i = 0; i < P; ++i) {
      if (prev[i] == 0) continue;
      for (long long j = 0; j < P; ++j) {
        if (single[j] == 0) continue;
        long long s = i + j;
        if (s >= P) s -= P;
        next[s] += prev[i] * single[j];
      }
    }
    out.push_back(std::move(next));
  }
  return out;
}

Rational normalize_count(const BigInt& count, long long q, int N, int m) {
  const BigInt denom = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(N * (2 * m - 1)));
  return Rational(count, denom);
}

void require_rank1(const HermLocalLattice& L) {
  if (L.rank() != 1)
    throw UnsupportedError("density counting is implemented for rank-1 lattices only, got rank " +
                           std::to_string(L.rank()));
}

}  // namespace

HermLocalLattice::HermLocalLattice(long long q, std::vector<int> valuations) : q_(q), vals_(std::move(valuations)) {
  require_odd_prime(q_, "HermLocalLattice");
  for (int a : vals_)
    if (a < 0) throw DomainError("HermLocalLattice: valuations must be non-negative");
  std::sort(vals_.begin(), vals_.end());
}

int HermLocalLattice::val() const noexcept { return std::accumulate(vals_.begin(), vals_.end(), 0); }

bool SiegelSeries::satisfies_functional_equation() const {
  if (poly.degree() > v) return false;
  return poly == poly_reverse_signed(poly, v);
}

long long smallest_nonresidue(long long p) {
  require_odd_prime(p, "smallest_nonresidue");
  for (long long u = 2; u < p; ++u) {
    // Euler's criterion
    long long r = 1, b = u, e = (p - 1) / 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    if (r == p - 1) return u;
  }
  throw ComputationError("no quadratic non-residue found");
}

Rational den_selfdual(int n, long long q) { return den_unimodular_vs(n, 0, q); }

Rational den_unimodular_vs(int n, int k, long long q) {
  require_odd_prime(q, "den_unimodular_vs");
  if (n < 0 || k < 0) throw DomainError("den_unimodular_vs: n and k must be non-negative");
  const Rational minus_q(-q);
  const Rational X = minus_q.pow(-k);
  Rational prod(1);
  for (int i = 1; i <= n; ++i) prod *= Rational(1) - minus_q.pow(-i) * X;
  return prod;
}

BigInt hermitian_solution_count(const HermLocalLattice& L, int m, int N, const DensityBudget& budget) {
  require_rank1(L);
  if (m < 1) throw DomainError("hermitian_solution_count: target rank must be positive");
  if (N < 1) throw DomainError("hermitian_solution_count: precision must be positive");
  const long long P = ipow(L.q(), N);
  const int a = L.valuations().front();
  const long long target = a >= N ? 0 : ipow(L.q(), a);
  const auto dist = norm_sum_distributions(L.q(), N, m, budget);
  return to_big(dist[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(target % P)]);
}

Rational den_count(const HermLocalLattice& L, int m, int N, const DensityBudget& budget) {
  return normalize_count(hermitian_solution_count(L, m, N, budget), L.q(), N, m);
}

bool Rank1Ladder::stabilized() const noexcept {
  return std::all_of(points.begin(), points.end(), [](const LadderPoint& p) { return p.stabilized; });
}

Rank1Ladder rank1_ladder(int a, long long q, int precision, const DensityBudget& budget) {
  require_odd_prime(q, "rank1_ladder");
  if (a < 0) throw DomainError("rank1_ladder: a must be non-negative");
  if (precision < 1) throw DomainError("rank1_ladder: precision must be positive");
  Rank1Ladder ladder;
  ladder.a = a;
  ladder.q = q;
  ladder.precision = precision;
  const int m_max = a + 1;

  auto densities_at = [&](int N) {
    const auto dist = norm_sum_distributions(q, N, m_max, budget);
    const long long P = ipow(q, N);
    const long long target = a >= N ? 0 : ipow(q, a) % P;
    std::vector<Rational> out;
    for (int m = 1; m <= m_max; ++m)
      out.push_back(normalize_count(to_big(dist[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(target)]), q, N, m));
    return out;
  };
  const auto at_n = densities_at(precision);
  const auto at_n1 = densities_at(precision + 1);

  const Rational minus_q(-q);
  for (int k = 0; k <= a; ++k) {
    LadderPoint pt;
    pt.k = k;
    pt.X = minus_q.pow(-k);
    pt.density = at_n[static_cast<std::size_t>(k)];
    pt.density_next = at_n1[static_cast<std::size_t>(k)];
    pt.normalized = pt.density / den_unimodular_vs(1, k, q);
    pt.stabilized = pt.density == pt.density_next;
    ladder.points.push_back(std::move(pt));
  }
  return ladder;
}

std::vector<Rational> lagrange_interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size() || xs.empty()) throw DomainError("lagrange_interpolate: need matching non-empty inputs");
  const std::size_t n = xs.size();
  std::vector<Rational> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Basis polynomial prod_{j != i} (X - x_j) / (x_i - x_j).
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw DomainError("lagrange_interpolate: repeated node");
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= xs[j] * basis[t];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    const Rational scale = ys[i] / denom;
    for (std::size_t t = 0; t < n; ++t) coeffs[t] += scale * basis[t];
  }
  return coeffs;
}

SiegelSeries siegel_series_rank1(int a, long long q, int precision, const DensityBudget& budget) {
  if (precision == 0) precision = a + 1;
  const Rank1Ladder ladder = rank1_ladder(a, q, precision, budget);
  if (!ladder.stabilized()) {
    std::ostringstream os;
    os << "siegel_series_rank1(a=" << a << ", q=" << q << "): densities differ between N=" << precision
       << " and N=" << precision + 1 << " at k =";
    for (const auto& p : ladder.points)
      if (!p.stabilized) os << ' ' << p.k << " (" << p.density << " vs " << p.density_next << ')';
    throw ComputationError(os.str());
  }
  std::vector<Rational> xs, ys;
  for (const auto& p : ladder.points) {
    xs.push_back(p.X);
    ys.push_back(p.normalized);
  }
  const auto coeffs = lagrange_interpolate(xs, ys);
  std::vector<BigInt> ints;
  for (const auto& c : coeffs) {
    if (!c.is_integer())
      throw ComputationError("siegel_series_rank1: non-integral coefficient " + c.to_string());
    ints.push_back(c.num());
  }
  SiegelSeries s{IntPoly(std::move(ints)), a, q};
  if (s.poly.degree() > a)
    throw ComputationError("siegel_series_rank1: interpolant degree exceeds val(L)");
  if (s.poly.coefficient(0) != 1)
    throw ComputationError("siegel_series_rank1: constant term is " + s.poly.coefficient(0).str() + ", expected 1");
  if (!s.satisfies_functional_equation())
    throw ComputationError("siegel_series_rank1: functional equation fails for " + s.poly.to_string());
  return s;
}

SiegelSeries siegel_series_example_n3(long long q) {
  require_odd_prime(q, "siegel_series_example_n3");
  const IntPoly one_minus_x{1, -1};
  const IntPoly poly = one_minus_x * IntPoly{1, q} * IntPoly{1, -q * q} +
                       IntPoly{q * q * q + 1} * one_minus_x * IntPoly{0, 0, 1};
  return SiegelSeries{poly, 3, q};
}

Rational central_derivative(const SiegelSeries& s) {
  if (s.v % 2 == 0)
    throw DomainError("central derivative undefined for even val(L) = " + std::to_string(s.v) +
                      "; Den(1, L) need not vanish");
  return -poly_eval(poly_derivative(s.poly), Rational(1));
}

}  // namespace thetakit
