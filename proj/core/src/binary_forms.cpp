#include "thetakit/binary_forms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "thetakit/errors.hpp"

namespace thetakit {

bool BinaryForm::is_reduced() const noexcept {
  const long long ab = b < 0 ? -b : b;
  if (!(ab <= a && a <= c)) return false;
  if ((ab == a || a == c) && b < 0) return false;
  return true;
}

long long BinaryForm::content() const noexcept {
  return std::gcd(std::gcd(a, b), c);
}

std::string BinaryForm::to_string() const {
  std::ostringstream os;
  os << '(' << a << ',' << b << ',' << c << ')';
  return os.str();
}

BinaryForm reduce(BinaryForm f) {
  if (!f.is_positive_definite()) throw DomainError("reduce: form " + f.to_string() + " is not positive definite");
  for (;;) {
    // Translate b into (-a, a].
    if (f.b > f.a || f.b <= -f.a) {
      long long k = (f.a - f.b) / (2 * f.a);
      if ((f.a - f.b) % (2 * f.a) != 0 && (f.a - f.b) < 0) --k;
      // f(x + k y, y)
      f.c = f.a * k * k + f.b * k + f.c;
      f.b = f.b + 2 * f.a * k;
    }
    if (f.a > f.c) {
      // f(-y, x)
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    break;
  }
  if (f.a == f.c && f.b < 0) f.b = -f.b;
  return f;
}

std::vector<BinaryForm> reduced_forms(long long D) {
  if (D <= 0) throw DomainError("reduced_forms: D must be positive, got " + std::to_string(D));
  std::vector<BinaryForm> out;
  if (mod_floor(D, 4) == 1 || mod_floor(D, 4) == 2) return out;
  // |b| <= a <= c forces 3b^2 <= D.
  for (long long b = D % 2; 3 * b * b <= D; b += 2) {
    const long long ac = (b * b + D) / 4;
    for (long long a = b == 0 ? 1 : b; a * a <= ac; ++a) {
      if (ac % a != 0) continue;
      const long long c = ac / a;
      out.push_back({a, b, c});
      if (b != 0 && b != a && a != c) out.push_back({a, -b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational form_weight(const BinaryForm& f) {
  if (f.b == 0 && f.a == f.c) return Rational(1, 2);
  if (f.a == f.b && f.b == f.c) return Rational(1, 3);
  return Rational(1);
}

Rational hurwitz_H(long long D) {
  if (D <= 0) throw DomainError("hurwitz_H: D must be positive, got " + std::to_string(D));
  Rational h(0);
  for (const auto& f : reduced_forms(D)) h += form_weight(f);
  return h;
}

BigInt divisor_pair_max_sum(long long m) {
  BigInt s = 0;
  for (long long d : divisors(m)) s += std::max(d, m / d);
  return s;
}

BigInt divisor_pair_min_sum(long long m) {
  BigInt s = 0;
  for (long long d : divisors(m)) s += std::min(d, m / d);
  return s;
}

HurwitzRelationReport hurwitz_relation(long long m) {
  if (m <= 0) throw DomainError("hurwitz_relation: m must be positive, got " + std::to_string(m));
  HurwitzRelationReport r;
  r.m = m;
  r.lhs = divisor_pair_max_sum(m);
  r.perfect_square = is_perfect_square(m);
  const long long tmax = isqrt(4 * m - 1);
  for (long long t = -tmax; t <= tmax; ++t) {
    HurwitzTerm term{t, 4 * m - t * t, hurwitz_H(4 * m - t * t)};
    r.rhs += term.H;
    r.terms.push_back(std::move(term));
  }
  r.equal = Rational(r.lhs) == r.rhs;
  return r;
}

BigInt compactified_degree(long long m) {
  if (m <= 0) throw DomainError("compactified_degree: m must be positive, got " + std::to_string(m));
  return 2 * divisor_sum(m, 1, false);
}

DegreeIdentity degree_identity(long long m) {
  DegreeIdentity id;
  id.m = m;
  id.compactified = compactified_degree(m);
  id.max_sum = divisor_pair_max_sum(m);
  id.min_sum = divisor_pair_min_sum(m);
  id.holds = id.compactified - id.max_sum == id.min_sum;
  return id;
}

}  // namespace thetakit
