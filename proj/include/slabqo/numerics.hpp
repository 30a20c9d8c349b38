#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace slabqo::numerics {

using complex = std::complex<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Integration interval; `upper` may be +infinity, in which case the domain is
/// mapped onto [0, 1) by x = lower + t / (1 - t).
struct Interval {
  double lower = 0.0;
  double upper = 1.0;
};

struct QuadratureSpec {
  double absolute_tolerance = 1e-12;
  double relative_tolerance = 1e-10;
  int max_subdivisions = 2000;
  Interval domain{};
  /// Each breakpoint-delimited piece is split into this many equal panels
  /// before adaptive refinement starts (used for oscillatory integrands).
  int initial_panels = 1;
  /// Interior points where the integrand has structure (peaks, kinks).
  std::vector<double> breakpoints{};

  /// Throws InvalidArgument when tolerances, limits or the domain are unusable.
  void validate() const;
};

struct QuadratureResult {
  complex value{};
  double error_estimate = 0.0;
  bool converged = false;
  int evaluations = 0;
  int subdivisions = 0;
};

using Integrand = std::function<complex(double)>;
using RealIntegrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature. The error estimate
/// is the summed |K15 - G7| over panels, which bounds the true error for
/// smooth integrands. Non-convergence is reported via `converged == false`.
QuadratureResult integrate(const Integrand& f, const QuadratureSpec& spec);

QuadratureResult integrate_real(const RealIntegrand& f, const QuadratureSpec& spec);

/// Like integrate(), but throws ConvergenceError if the tolerance is not met.
complex integrate_or_throw(const Integrand& f, const QuadratureSpec& spec, const char* what);

/// Sum over m >= 1 of 1 / (s + m beta)^2, i.e. trigamma(1 + s/beta) / beta^2.
/// Requires Re(s) >= 0 and beta > 0.
struct SeriesPolicy {
  /// Terms summed directly before the Euler-Maclaurin tail takes over.
  int direct_terms = 48;
};
complex trigamma_sum(complex s, double beta, SeriesPolicy policy = {});

/// ln C(N, n) for 0 <= n <= N.
double log_binomial(long N, long n);

/// ln(sum exp(x_i)); -inf entries are allowed and ignored.
double log_sum_exp(std::span<const double> values);

}  // namespace slabqo::numerics
