#include "thetakit/finite_geometry.hpp"

#include <string>

#include "thetakit/errors.hpp"
#include "thetakit/exact.hpp"
#include "thetakit/local_density.hpp"

namespace thetakit {

namespace {

void require_positive(long long q, const char* where) {
  if (q < 1) throw DomainError(std::string(where) + ": q must be positive, got " + std::to_string(q));
}

}  // namespace

Fq2Field::Fq2Field(long long p) : p_(p), u_(0) {
  if (p <= 2 || !is_prime(p)) throw DomainError("Fq2Field: characteristic must be an odd prime, got " + std::to_string(p));
  if (p > 46'000) throw DomainError("Fq2Field: characteristic too large for 32-bit components");
  u_ = smallest_nonresidue(p);
}

Fq2Element Fq2Field::add(Fq2Element x, Fq2Element y) const noexcept {
  return {static_cast<std::uint32_t>((x.c0 + y.c0) % p_), static_cast<std::uint32_t>((x.c1 + y.c1) % p_)};
}

Fq2Element Fq2Field::mul(Fq2Element x, Fq2Element y) const noexcept {
  const long long a = x.c0, b = x.c1, c = y.c0, d = y.c1;
  // (a + bt)(c + dt) = (ac + u bd) + (ad + bc) t
  const long long r0 = (a * c + u_ * (b * d % p_)) % p_;
  const long long r1 = (a * d + b * c) % p_;
  return {static_cast<std::uint32_t>(r0), static_cast<std::uint32_t>(r1)};
}

Fq2Element Fq2Field::pow(Fq2Element x, unsigned long long e) const noexcept {
  Fq2Element r{1, 0};
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Fq2Element Fq2Field::element(std::size_t index) const noexcept {
  return {static_cast<std::uint32_t>(index % static_cast<std::size_t>(p_)),
          static_cast<std::uint32_t>(index / static_cast<std::size_t>(p_))};
}

long long fermat_point_count(long long q, const GeometryBudget& budget) {
  const Fq2Field field(q);
  const std::size_t n = field.order();
  const double candidates = static_cast<double>(n) * n + n + 1;
  if (candidates > static_cast<double>(budget.max_candidates))
    throw ResourceError("fermat_point_count: " + std::to_string(static_cast<long long>(candidates)) +
                        " candidates exceed the budget");

  std::vector<Fq2Element> power(n);
  for (std::size_t i = 0; i < n; ++i) power[i] = field.pow(field.element(i), static_cast<unsigned long long>(q) + 1);

  const Fq2Element zero{0, 0};
  const Fq2Element one_power = power[field.index({1, 0})];
  long long count = 0;
  // [1 : y : z]
  for (std::size_t y = 0; y < n; ++y) {
    const Fq2Element partial = field.add(one_power, power[y]);
    for (std::size_t z = 0; z < n; ++z) count += field.add(partial, power[z]) == zero;
  }
  // [0 : 1 : z]
  for (std::size_t z = 0; z < n; ++z) count += field.add(one_power, power[z]) == zero;
  // [0 : 0 : 1] never lies on the curve, but count it honestly.
  count += one_power == zero;
  return count;
}

long long fermat_genus(long long q) {
  require_positive(q, "fermat_genus");
  return q * (q - 1) / 2;
}

long long euler_char(long long q) {
  require_positive(q, "euler_char");
  return 2 + q - q * q;
}

std::pair<long long, long long> bt_incidence(long long q) {
  require_positive(q, "bt_incidence");
  return {q + 1, q * q * q + 1};
}

std::pair<long long, long long> hasse_weil_window(long long q) {
  const long long g = fermat_genus(q);
  return {q * q + 1 - 2 * g * q, q * q + 1 + 2 * g * q};
}

}  // namespace thetakit
