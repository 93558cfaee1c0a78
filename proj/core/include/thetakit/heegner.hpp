#pragma once

// Floating-point reproduction of the Heegner-point example on E = 37a1,
// y^2 + y = x^3 - x: Hecke eigenvalues by point counting, the period lattice,
// the modular parametrization, Heegner multiples n_d, and L'(E, 1).
//
// Everything here is double precision; error budgets are reported alongside
// each value.

#include <complex>
#include <cstdint>
#include <vector>

#include "thetakit/binary_forms.hpp"
#include "thetakit/exact.hpp"

namespace thetakit {

using Complex = std::complex<double>;

/// The curve 37a1 with Weierstrass coefficients [0, 0, 1, -1, 0].
struct EllipticCurve37a1 {
  static constexpr long long a1 = 0, a2 = 0, a3 = 1, a4 = -1, a6 = 0;
  static constexpr long long conductor = 37;

  static constexpr long long b2 = a1 * a1 + 4 * a2;
  static constexpr long long b4 = 2 * a4 + a1 * a3;
  static constexpr long long b6 = a3 * a3 + 4 * a6;
  static constexpr long long b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  static constexpr long long discriminant = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;

  /// Whether (x, y) satisfies the equation mod p.
  static bool on_curve_mod(long long x, long long y, long long p) noexcept;
};

/// Projective points of the reduction mod p, the singular point included.
long long count_points_mod_p(long long p);
/// Non-singular projective points of the reduction mod p.
long long count_smooth_points_mod_p(long long p);

/// a_p = p + 1 - #E(F_p), counting every point of the reduced curve. At the
/// bad prime 37 this gives the multiplicative-reduction sign.
long long a_p(long long p);

/// a_1, ..., a_{n_max} of the newform attached to 37a1.
class HeckeEigenvalues {
 public:
  explicit HeckeEigenvalues(long long n_max);
  long long n_max() const noexcept { return static_cast<long long>(a_.size()) - 1; }
  long long operator()(long long n) const;

 private:
  std::vector<long long> a_;
};

/// a_n via multiplicativity and a_{p^r} = a_p a_{p^{r-1}} - p a_{p^{r-2}}
/// (a_{37^r} = a_37^r).
long long a_n(long long n);

struct PeriodLattice {
  Complex omega1;  // least positive real period
  Complex omega2;  // purely imaginary period (the discriminant is positive)
  double real_period() const noexcept { return omega1.real(); }
  Complex tau() const noexcept { return omega2 / omega1; }
};

/// Periods of dx / (2y + 1) by the arithmetic-geometric mean.
PeriodLattice period_lattice();
double real_period();

/// Roots e1 > e2 > e3 of 4x^3 + b2 x^2 + 2 b4 x + b6.
std::vector<double> two_torsion_roots();

struct LatticeInvariants {
  double g2 = 0.0;
  double g3 = 0.0;
};

/// g2, g3 of the lattice from the q-expansions of E4 and E6.
LatticeInvariants invariants_from_periods(const PeriodLattice& lattice, int terms = 60);

/// Weierstrass p-function of the lattice at z (q-series).
Complex weierstrass_p(const PeriodLattice& lattice, Complex z, int terms = 80);

/// Elliptic logarithm of the generator P = (0, 0): the z with
/// p(z) = x(P) and p'(z) = 2y(P) + 1, chosen in the fundamental box.
Complex elliptic_log_generator(const PeriodLattice& lattice);

/// phi_E(tau) = sum_{n <= terms} a_n q^n / n, q = exp(2 pi i tau).
Complex modular_parametrization(Complex tau, const HeckeEigenvalues& a, long long terms);

/// A Heegner form [A, B, C] with 37 | A and B = beta mod 74, representing the
/// SL2(Z)-class of class_rep.
struct HeegnerForm {
  BinaryForm class_rep;
  BinaryForm form;
  Rational weight;  // form_weight(class_rep)
  Complex tau() const;
};

/// Least beta in [0, 74) with beta^2 = -d (mod 148). Throws DomainError naming
/// the failed condition.
long long heegner_residue(long long d);

/// One Heegner form per class of (possibly imprimitive) forms of discriminant
/// -d, chosen with the smallest A.
std::vector<HeegnerForm> heegner_forms(long long d);

struct HeegnerOptions {
  long long terms = 2000;
  double tolerance = 1e-3;
  /// Global sign applied to every n_d; see calibrate_sign.
  int sign = 1;
  /// Multiples of z_P searched on each side of zero.
  long long search_range = 200;
};

struct HeegnerFormResult {
  HeegnerForm form;
  Complex phi;        // phi_E(tau) before reduction
  long long multiple = 0;  // phi = multiple * z_P mod lattice
  double residual = 0.0;
  double tail_bound = 0.0;
};

struct HeegnerReport {
  long long d = 0;
  std::vector<HeegnerFormResult> forms;
  Complex z_d;          // sum of weight * phi
  Rational weighted_multiple;  // sign * sum of weight * multiple
  long long n_d = 0;
  double residual = 0.0;   // worst per-form distance from the lattice
  double tail_bound = 0.0; // worst per-form series tail bound
  int sign = 1;
  bool accepted = false;   // integral n_d and residual < tolerance
};

/// Computes the report without throwing on a failed acceptance check.
HeegnerReport compute_heegner(long long d, const HeegnerOptions& options = {});

/// compute_heegner, throwing VerificationError (carrying the residual) when
/// the report is not accepted.
HeegnerReport heegner_multiple(long long d, const HeegnerOptions& options = {});

/// The sign eps with eps * n_3 = -1, from an uncalibrated d = 3 run.
int calibrate_sign(const HeegnerOptions& options = {});

/// The d with a tabulated coefficient c_d of g_E.
std::vector<long long> tabulated_discriminants();
/// c_d of g_E = -q^3 - q^4 + q^7 - q^11 + q^12 + 2q^16 + 3q^27 + ... - 6q^67.
long long g_coefficient(long long d);

struct GCoefficientCheck {
  long long d = 0;
  long long n_d = 0;
  long long c_d = 0;
  double residual = 0.0;
  bool match = false;
};

GCoefficientCheck g_coefficient_check(long long d, const HeegnerOptions& options = {});

/// E_1(x) = int_x^infinity e^{-t}/t dt, x > 0.
double exponential_integral_e1(double x);

/// L'(E, 1) = 2 sum_n (a_n / n) E_1(2 pi n / sqrt(37)).
double l_derivative();

/// 3 omega^+ / (4 pi).
double petersson_norm_g();

/// Neron-Tate height of P = (0, 0), taken as a fixed constant.
inline constexpr double kNeronTateHeightP = 0.0511114082;

/// L'(E, 1) / (<g, g> <P, P>).
double aipf_ratio();

}  // namespace thetakit
