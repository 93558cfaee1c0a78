#pragma once

// Point counts and numerical invariants of the Fermat curve
// x^{q+1} + y^{q+1} + z^{q+1} = 0 over F_{q^2}, and the incidence numbers of
// the n = 3 Bruhat-Tits stratification.

#include <cstdint>
#include <utility>
#include <vector>

namespace thetakit {

/// c0 + c1 t in F_p[t]/(t^2 - u), components reduced mod p.
struct Fq2Element {
  std::uint32_t c0 = 0;
  std::uint32_t c1 = 0;
  friend bool operator==(const Fq2Element&, const Fq2Element&) = default;
};

/// F_{p^2} realized as F_p[t]/(t^2 - u), u the least non-residue mod p.
class Fq2Field {
 public:
  explicit Fq2Field(long long p);

  long long characteristic() const noexcept { return p_; }
  long long nonresidue() const noexcept { return u_; }
  std::size_t order() const noexcept { return static_cast<std::size_t>(p_ * p_); }

  Fq2Element add(Fq2Element x, Fq2Element y) const noexcept;
  Fq2Element mul(Fq2Element x, Fq2Element y) const noexcept;
  Fq2Element pow(Fq2Element x, unsigned long long e) const noexcept;

  /// Elements in the fixed order c0 + p * c1.
  Fq2Element element(std::size_t index) const noexcept;
  std::size_t index(Fq2Element x) const noexcept { return x.c0 + static_cast<std::size_t>(p_) * x.c1; }

 private:
  long long p_;
  long long u_;
};

struct GeometryBudget {
  std::uint64_t max_candidates = 100'000'000;
};

/// Projective F_{q^2}-points of x^{q+1} + y^{q+1} + z^{q+1} = 0 by exhaustive
/// enumeration over normalized triples (first nonzero coordinate 1).
long long fermat_point_count(long long q, const GeometryBudget& budget = {});

/// g = q(q-1)/2.
long long fermat_genus(long long q);

/// 2 - 2g = 2 + q - q^2.
long long euler_char(long long q);

/// (#DL_1 through a DL_0, #DL_0 on a DL_1) = (q + 1, q^3 + 1).
std::pair<long long, long long> bt_incidence(long long q);

/// Hasse-Weil window [q^2 + 1 - 2 g q, q^2 + 1 + 2 g q] for a curve over F_{q^2}.
std::pair<long long, long long> hasse_weil_window(long long q);

}  // namespace thetakit
