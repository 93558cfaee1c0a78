#pragma once

// Positive-definite binary quadratic forms, Hurwitz class numbers and the
// Hurwitz class number relation.

#include <compare>
#include <string>
#include <vector>

#include "thetakit/exact.hpp"

namespace thetakit {

/// The form a x^2 + b xy + c y^2.
struct BinaryForm {
  long long a = 0;
  long long b = 0;
  long long c = 0;

  long long discriminant() const noexcept { return b * b - 4 * a * c; }
  bool is_positive_definite() const noexcept { return a > 0 && discriminant() < 0; }
  /// |b| <= a <= c, with b >= 0 when |b| = a or a = c.
  bool is_reduced() const noexcept;
  long long content() const noexcept;
  /// Value at (x, y).
  long long operator()(long long x, long long y) const noexcept { return a * x * x + b * x * y + c * y * y; }

  std::string to_string() const;

  friend auto operator<=>(const BinaryForm&, const BinaryForm&) = default;
};

/// The unique reduced form SL2(Z)-equivalent to a positive-definite form.
BinaryForm reduce(BinaryForm f);

/// One reduced representative per SL2(Z)-class of positive-definite forms of
/// discriminant -D, primitive or not. Empty when D = 1, 2 (mod 4).
std::vector<BinaryForm> reduced_forms(long long D);

/// Class weight of a reduced form: 1/2 for a(x^2 + y^2), 1/3 for
/// a(x^2 + xy + y^2), 1 otherwise.
Rational form_weight(const BinaryForm& reduced);

/// Hurwitz class number H(D), D > 0.
Rational hurwitz_H(long long D);

struct HurwitzTerm {
  long long t = 0;
  long long D = 0;  // 4m - t^2
  Rational H;
};

struct HurwitzRelationReport {
  long long m = 0;
  BigInt lhs;  // sum_{dd'=m} max(d, d')
  Rational rhs;  // sum_t H(4m - t^2)
  std::vector<HurwitzTerm> terms;
  bool equal = false;
  /// The relation is only asserted for non-squares; squares are reported as-is.
  bool perfect_square = false;
};

HurwitzRelationReport hurwitz_relation(long long m);

/// sum_{dd'=m} max(d, d').
BigInt divisor_pair_max_sum(long long m);
/// sum_{dd'=m} min(d, d').
BigInt divisor_pair_min_sum(long long m);

/// 2 sigma_1(m): the degree of the compactified Hecke correspondence.
BigInt compactified_degree(long long m);

struct DegreeIdentity {
  long long m = 0;
  BigInt compactified;  // 2 sigma_1(m)
  BigInt max_sum;
  BigInt min_sum;
  bool holds = false;  // compactified - max_sum == min_sum
};

DegreeIdentity degree_identity(long long m);

}  // namespace thetakit
