#include "thetakit/heegner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

using E = EllipticCurve37a1;

constexpr double kPi = std::numbers::pi;
constexpr long long kMaxHeckeTerms = 1'000'000;

void require_prime(long long p, const char* where) {
  if (p < 2 || !is_prime(p)) throw DomainError(std::string(where) + ": p must be prime, got " + std::to_string(p));
}

double agm(double a, double b) {
  for (int i = 0; i < 100; ++i) {
    if (std::abs(a - b) <= 1e-16 * std::abs(a)) return a;
    const double m = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = m;
  }
  throw ComputationError("agm: no convergence");
}

// Distance from z to the nearest lattice point.
double lattice_distance(Complex z, const PeriodLattice& L) {
  const double det = L.omega1.real() * L.omega2.imag() - L.omega1.imag() * L.omega2.real();
  const double x = (z.real() * L.omega2.imag() - z.imag() * L.omega2.real()) / det;
  const double y = (L.omega1.real() * z.imag() - L.omega1.imag() * z.real()) / det;
  const double rx = std::round(x), ry = std::round(y);
  double best = std::abs(z);
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j)
      best = std::min(best, std::abs(z - (rx + i) * L.omega1 - (ry + j) * L.omega2));
  return best;
}

Complex q_of(Complex tau) { return std::exp(Complex(0.0, 2.0 * kPi) * tau); }

}  // namespace

bool EllipticCurve37a1::on_curve_mod(long long x, long long y, long long p) noexcept {
  const long long lhs = y * y + a1 * x * y + a3 * y;
  const long long rhs = x * x * x + a2 * x * x + a4 * x + a6;
  return mod_floor(lhs - rhs, p) == 0;
}

long long count_points_mod_p(long long p) {
  require_prime(p, "count_points_mod_p");
  long long count = 1;  // point at infinity
  if (p == 2) {
    for (long long x = 0; x < p; ++x)
      for (long long y = 0; y < p; ++y) count += E::on_curve_mod(x, y, p);
    return count;
  }
  // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  std::vector<long long> roots(static_cast<std::size_t>(p), 0);
  for (long long Y = 0; Y < p; ++Y) ++roots[static_cast<std::size_t>(Y * Y % p)];
  for (long long x = 0; x < p; ++x) {
    const long long f = mod_floor(((4 * x + E::b2) % p * x % p + 2 * E::b4) % p * x + E::b6, p);
    count += roots[static_cast<std::size_t>(f)];
  }
  return count;
}

long long count_smooth_points_mod_p(long long p) {
  const long long total = count_points_mod_p(p);
  if (E::discriminant % p != 0) return total;
  long long singular = 0;
  for (long long x = 0; x < p; ++x)
    for (long long y = 0; y < p; ++y) {
      if (!E::on_curve_mod(x, y, p)) continue;
      const long long fx = E::a1 * y - 3 * x * x - 2 * E::a2 * x - E::a4;
      const long long fy = 2 * y + E::a1 * x + E::a3;
      singular += mod_floor(fx, p) == 0 && mod_floor(fy, p) == 0;
    }
  return total - singular;
}

long long a_p(long long p) { return p + 1 - count_points_mod_p(p); }

HeckeEigenvalues::HeckeEigenvalues(long long n_max) {
  if (n_max < 1) throw DomainError("HeckeEigenvalues: n_max must be positive");
  if (n_max > kMaxHeckeTerms)
    throw ResourceError("HeckeEigenvalues: " + std::to_string(n_max) + " terms exceed the limit of " +
                        std::to_string(kMaxHeckeTerms));
  const auto N = static_cast<std::size_t>(n_max);
  std::vector<long long> spf(N + 1, 0);
  for (std::size_t i = 2; i <= N; ++i)
    if (spf[i] == 0)
      for (std::size_t j = i; j <= N; j += i)
        if (spf[j] == 0) spf[j] = static_cast<long long>(i);

  a_.assign(N + 1, 0);
  a_[1] = 1;
  std::map<long long, long long> ap;
  for (std::size_t n = 2; n <= N; ++n) {
    const long long p = spf[n];
    long long m = static_cast<long long>(n);
    int r = 0;
    while (m % p == 0) {
      m /= p;
      ++r;
    }
    auto it = ap.find(p);
    if (it == ap.end()) it = ap.emplace(p, a_p(p)).first;
    const long long apv = it->second;
    long long prev = 1, cur = apv;
    for (int i = 1; i < r; ++i) {
      const long long next = E::conductor % p == 0 ? apv * cur : apv * cur - p * prev;
      prev = cur;
      cur = next;
    }
    a_[n] = a_[static_cast<std::size_t>(m)] * cur;
  }
}

long long HeckeEigenvalues::operator()(long long n) const {
  if (n < 1 || n > n_max()) throw DomainError("HeckeEigenvalues: index " + std::to_string(n) + " out of range");
  return a_[static_cast<std::size_t>(n)];
}

long long a_n(long long n) {
  if (n < 1) throw DomainError("a_n: n must be positive");
  long long result = 1;
  long long m = n;
  for (long long p = 2; p * p <= m || m > 1; ++p) {
    if (p * p > m) p = m;
    if (m % p != 0) continue;
    int r = 0;
    while (m % p == 0) {
      m /= p;
      ++r;
    }
    const long long apv = a_p(p);
    long long prev = 1, cur = apv;
    for (int i = 1; i < r; ++i) {
      const long long next = E::conductor % p == 0 ? apv * cur : apv * cur - p * prev;
      prev = cur;
      cur = next;
    }
    result *= cur;
  }
  return result;
}

std::vector<double> two_torsion_roots() {
  // Depressed form of x^3 + (b2/4) x^2 + (b4/2) x + b6/4 via x = t - b2/12.
  const double b = E::b2 / 4.0, c = E::b4 / 2.0, d = E::b6 / 4.0;
  const double p = c - b * b / 3.0;
  const double q = (2 * b * b * b - 9 * b * c + 27 * d) / 27.0;
  if (!(p < 0) || 4 * p * p * p + 27 * q * q >= 0)
    throw ComputationError("two_torsion_roots: cubic does not have three real roots");
  const double r = 2.0 * std::sqrt(-p / 3.0);
  const double theta = std::acos(3.0 * q / (p * r)) / 3.0;
  std::vector<double> roots;
  for (int k = 0; k < 3; ++k) {
    double x = r * std::cos(theta - 2.0 * kPi * k / 3.0) - b / 3.0;
    for (int i = 0; i < 3; ++i) {
      const double f = ((4 * x + E::b2) * x + 2 * E::b4) * x + E::b6;
      const double fp = (12 * x + 2 * E::b2) * x + 2 * E::b4;
      x -= f / fp;
    }
    roots.push_back(x);
  }
  std::sort(roots.rbegin(), roots.rend());
  return roots;
}

PeriodLattice period_lattice() {
  const auto e = two_torsion_roots();
  const double w1 = kPi / agm(std::sqrt(e[0] - e[2]), std::sqrt(e[0] - e[1]));
  const double w2 = kPi / agm(std::sqrt(e[0] - e[2]), std::sqrt(e[1] - e[2]));
  return {Complex(w1, 0.0), Complex(0.0, w2)};
}

double real_period() { return period_lattice().real_period(); }

LatticeInvariants invariants_from_periods(const PeriodLattice& lattice, int terms) {
  const Complex q = q_of(lattice.tau());
  Complex e4 = 1.0, e6 = 1.0, qn = 1.0;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    double s3 = 0, s5 = 0;
    for (int k = 1; k <= n; ++k)
      if (n % k == 0) {
        s3 += std::pow(k, 3);
        s5 += std::pow(k, 5);
      }
    e4 += 240.0 * s3 * qn;
    e6 -= 504.0 * s5 * qn;
  }
  const Complex scale = 2.0 * kPi / lattice.omega1;
  return {(std::pow(scale, 4) * e4 / 12.0).real(), (std::pow(scale, 6) * e6 / 216.0).real()};
}

Complex weierstrass_p(const PeriodLattice& lattice, Complex z, int terms) {
  const Complex twopii(0.0, 2.0 * kPi);
  const Complex q = q_of(lattice.tau());
  const Complex u = std::exp(twopii * z / lattice.omega1);
  const Complex ui = 1.0 / u;
  Complex sum = 1.0 / 12.0 + u / ((1.0 - u) * (1.0 - u));
  Complex qn = 1.0;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    const Complex a = qn * u, b = qn * ui;
    sum += a / ((1.0 - a) * (1.0 - a)) + b / ((1.0 - b) * (1.0 - b)) - 2.0 * qn / ((1.0 - qn) * (1.0 - qn));
  }
  const Complex scale = twopii / lattice.omega1;
  return scale * scale * sum;
}

Complex elliptic_log_generator(const PeriodLattice& lattice) {
  // P = (0, 0) lies on the bounded real component x in [e3, e2]; with
  // x = e3 + s^2 the integral of dx / sqrt(4x^3 + ...) from e3 to x(P) is smooth.
  const auto e = two_torsion_roots();
  const double xP = 0.0;
  const double upper = std::sqrt(xP - e[2]);
  auto integrand = [&](double s) {
    const double x = e[2] + s * s;
    return 1.0 / std::sqrt((e[0] - x) * (e[1] - x));
  };
  const double t = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, upper, 15, 1e-15);
  return 0.5 * lattice.omega2 + t;
}

Complex modular_parametrization(Complex tau, const HeckeEigenvalues& a, long long terms) {
  if (terms > a.n_max()) throw DomainError("modular_parametrization: more terms than tabulated eigenvalues");
  const Complex q = q_of(tau);
  Complex sum = 0.0, qn = 1.0;
  for (long long n = 1; n <= terms; ++n) {
    qn *= q;
    sum += static_cast<double>(a(n)) / static_cast<double>(n) * qn;
  }
  return sum;
}

Complex HeegnerForm::tau() const {
  const double d = static_cast<double>(-form.discriminant());
  return Complex(-static_cast<double>(form.b), std::sqrt(d)) / (2.0 * static_cast<double>(form.a));
}

long long heegner_residue(long long d) {
  if (d < 1) throw DomainError("heegner: d must be positive, got " + std::to_string(d));
  if (d % 4 != 0 && d % 4 != 3) throw DomainError("heegner: -d must be 0 or 1 mod 4, got d = " + std::to_string(d));
  if (d % E::conductor == 0) throw DomainError("heegner: 37 must not divide d = " + std::to_string(d));
  const long long M = 4 * E::conductor;
  for (long long b = 0; b < 2 * E::conductor; ++b)
    if (mod_floor(b * b + d, M) == 0) return b;
  throw DomainError("heegner: -d = " + std::to_string(-d) + " is not a square mod 148 (37 must split)");
}

std::vector<HeegnerForm> heegner_forms(long long d) {
  const long long beta = heegner_residue(d);
  const auto classes = reduced_forms(d);
  std::map<BinaryForm, BinaryForm> found;
  const long long step = 2 * E::conductor;
  const long long max_k = 100 * d + 1000;
  for (long long k = 1; found.size() < classes.size(); ++k) {
    if (k > max_k) throw ComputationError("heegner_forms: representatives not found for d = " + std::to_string(d));
    const long long A = E::conductor * k;
    // B = beta + 74 j in (-A, A]
    long long j = -((A + beta) / step);
    for (long long B = beta + step * j; B <= A; B += step) {
      if (B <= -A) continue;
      if ((B * B + d) % (4 * A) != 0) continue;
      const BinaryForm f{A, B, (B * B + d) / (4 * A)};
      found.emplace(reduce(f), f);
    }
  }
  std::vector<HeegnerForm> out;
  for (const auto& c : classes) out.push_back({c, found.at(c), form_weight(c)});
  return out;
}

HeegnerReport compute_heegner(long long d, const HeegnerOptions& options) {
  if (options.terms < 1) throw DomainError("heegner: terms must be positive");
  if (!(options.tolerance > 0)) throw DomainError("heegner: tolerance must be positive");
  if (options.sign != 1 && options.sign != -1) throw DomainError("heegner: sign must be +1 or -1");
  const auto forms = heegner_forms(d);
  const PeriodLattice lattice = period_lattice();
  const Complex zP = elliptic_log_generator(lattice);
  const HeckeEigenvalues a(options.terms);

  HeegnerReport report;
  report.d = d;
  report.sign = options.sign;
  Rational total(0);
  for (const auto& f : forms) {
    HeegnerFormResult r;
    r.form = f;
    const Complex tau = f.tau();
    r.phi = modular_parametrization(tau, a, options.terms);
    const double aq = std::abs(q_of(tau));
    r.tail_bound = 2.0 * std::pow(aq, static_cast<double>(options.terms + 1)) / (1.0 - aq);
    r.residual = lattice_distance(r.phi, lattice);
    r.multiple = 0;
    for (long long n = -options.search_range; n <= options.search_range; ++n) {
      const double dist = lattice_distance(r.phi - static_cast<double>(n) * zP, lattice);
      if (dist < r.residual) {
        r.residual = dist;
        r.multiple = n;
      }
    }
    report.z_d += f.weight.to_double() * r.phi;
    total += f.weight * Rational(r.multiple);
    report.residual = std::max(report.residual, r.residual);
    report.tail_bound = std::max(report.tail_bound, r.tail_bound);
    report.forms.push_back(std::move(r));
  }
  report.weighted_multiple = Rational(options.sign) * total;
  if (report.weighted_multiple.is_integer())
    report.n_d = static_cast<long long>(report.weighted_multiple.num());
  report.accepted = report.weighted_multiple.is_integer() && report.residual < options.tolerance;
  return report;
}

HeegnerReport heegner_multiple(long long d, const HeegnerOptions& options) {
  HeegnerReport report = compute_heegner(d, options);
  if (!report.accepted) {
    std::ostringstream os;
    os << "heegner d=" << d << ": ";
    if (!report.weighted_multiple.is_integer())
      os << "weighted multiple " << report.weighted_multiple << " is not an integer";
    else
      os << "residual " << report.residual << " exceeds tolerance " << options.tolerance;
    throw VerificationError(os.str(), report.residual);
  }
  return report;
}

int calibrate_sign(const HeegnerOptions& options) {
  HeegnerOptions raw = options;
  raw.sign = 1;
  const HeegnerReport r = heegner_multiple(3, raw);
  if (r.n_d != 1 && r.n_d != -1)
    throw ComputationError("calibrate_sign: d = 3 gives n = " + std::to_string(r.n_d) + ", expected +-1");
  return static_cast<int>(-r.n_d);
}

namespace {
const std::map<long long, long long>& g_table() {
  static const std::map<long long, long long> table{{3, -1}, {4, -1}, {7, 1},   {11, -1},
                                                    {12, 1}, {16, 2}, {27, 3}, {67, -6}};
  return table;
}
}  // namespace

std::vector<long long> tabulated_discriminants() {
  std::vector<long long> out;
  for (const auto& [d, c] : g_table()) out.push_back(d);
  return out;
}

long long g_coefficient(long long d) {
  const auto it = g_table().find(d);
  if (it == g_table().end()) throw DomainError("g_coefficient: no tabulated coefficient for d = " + std::to_string(d));
  return it->second;
}

GCoefficientCheck g_coefficient_check(long long d, const HeegnerOptions& options) {
  GCoefficientCheck check;
  check.d = d;
  check.c_d = g_coefficient(d);
  const HeegnerReport r = compute_heegner(d, options);
  check.n_d = r.n_d;
  check.residual = r.residual;
  check.match = r.accepted && r.n_d == check.c_d;
  return check;
}

double exponential_integral_e1(double x) {
  if (!(x > 0)) throw DomainError("exponential_integral_e1: x must be positive");
  return -std::expint(-x);
}

double l_derivative() {
  const double scale = 2.0 * kPi / std::sqrt(static_cast<double>(E::conductor));
  const long long terms = 200;
  const HeckeEigenvalues a(terms);
  double sum = 0.0;
  for (long long n = 1; n <= terms; ++n) {
    const double x = scale * static_cast<double>(n);
    if (x > 700.0) break;
    sum += static_cast<double>(a(n)) / static_cast<double>(n) * exponential_integral_e1(x);
  }
  return 2.0 * sum;
}

double petersson_norm_g() { return 3.0 * real_period() / (4.0 * kPi); }

double aipf_ratio() { return l_derivative() / (petersson_norm_g() * kNeronTateHeightP); }

}  // namespace thetakit
