#include "slabqo/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>

#include "slabqo/errors.hpp"

namespace slabqo::numerics {

namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd Kronrod nodes 1, 3, 5 and the centre.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  complex value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

// f is already expressed in the integration variable (mapping applied).
Panel gauss_kronrod(const Integrand& f, double a, double b, int& evaluations) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const complex fc = f(centre);
  complex kronrod = fc * kKronrodWeights[7];
  complex gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const complex sum = f(centre - dx) + f(centre + dx);
    kronrod += kKronrodWeights[j] * sum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
  }
  evaluations += 15;

  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod.real()) || !std::isfinite(kronrod.imag())) {
    throw InvalidArgument("integrand returned a non-finite value on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
  }
  return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(absolute_tolerance > 0.0) || !(relative_tolerance > 0.0)) {
    throw InvalidArgument("quadrature tolerances must be positive");
  }
  if (max_subdivisions < 1) throw InvalidArgument("max_subdivisions must be >= 1");
  if (initial_panels < 1) throw InvalidArgument("initial_panels must be >= 1");
  if (!std::isfinite(domain.lower) || std::isnan(domain.upper) || !(domain.upper > domain.lower)) {
    throw InvalidArgument("quadrature domain must satisfy finite lower < upper");
  }
}

QuadratureResult integrate(const Integrand& f, const QuadratureSpec& spec) {
  spec.validate();

  const double lower = spec.domain.lower;
  const bool semi_infinite = std::isinf(spec.domain.upper);

  Integrand mapped = f;
  double t_lower = lower;
  double t_upper = spec.domain.upper;
  std::vector<double> cuts;
  if (semi_infinite) {
    mapped = [&f, lower](double t) {
      const double one_minus = 1.0 - t;
      return f(lower + t / one_minus) / (one_minus * one_minus);
    };
    t_lower = 0.0;
    t_upper = 1.0;
    for (double x : spec.breakpoints) {
      if (x > lower) cuts.push_back((x - lower) / (1.0 + x - lower));
    }
  } else {
    for (double x : spec.breakpoints) {
      if (x > t_lower && x < t_upper) cuts.push_back(x);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.insert(cuts.begin(), t_lower);
  cuts.push_back(t_upper);

  QuadratureResult result;
  std::priority_queue<Panel> panels;
  complex total{};
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double width = (cuts[i + 1] - cuts[i]) / spec.initial_panels;
    for (int k = 0; k < spec.initial_panels; ++k) {
      const double a = cuts[i] + k * width;
      const double b = (k + 1 == spec.initial_panels) ? cuts[i + 1] : a + width;
      Panel p = gauss_kronrod(mapped, a, b, result.evaluations);
      total += p.value;
      total_error += p.error;
      panels.push(p);
    }
  }

  auto tolerance = [&] {
    return std::max(spec.absolute_tolerance, spec.relative_tolerance * std::abs(total));
  };

  int subdivisions = 0;
  while (total_error > tolerance() && subdivisions < spec.max_subdivisions) {
    Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // panel at floating-point resolution
    panels.pop();
    Panel left = gauss_kronrod(mapped, worst.a, mid, result.evaluations);
    Panel right = gauss_kronrod(mapped, mid, worst.b, result.evaluations);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++subdivisions;
  }

  // Re-sum to shed the drift accumulated by incremental updates.
  total = {};
  total_error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    total_error += panels.top().error;
    panels.pop();
  }

  result.value = total;
  result.error_estimate = total_error;
  result.converged = total_error <= tolerance();
  result.subdivisions = subdivisions;
  return result;
}

QuadratureResult integrate_real(const RealIntegrand& f, const QuadratureSpec& spec) {
  return integrate([&f](double x) { return complex(f(x), 0.0); }, spec);
}

complex integrate_or_throw(const Integrand& f, const QuadratureSpec& spec, const char* what) {
  const QuadratureResult r = integrate(f, spec);
  if (!r.converged) {
    throw ConvergenceError(std::string(what) + ": quadrature did not converge (error estimate " +
                               std::to_string(r.error_estimate) + ")",
                           r.value, r.error_estimate);
  }
  return r.value;
}

complex trigamma_sum(complex s, double beta, SeriesPolicy policy) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("trigamma_sum: beta must be positive and finite");
  }
  if (!(s.real() >= 0.0) || !std::isfinite(s.imag())) {
    throw InvalidArgument("trigamma_sum: series diverges for Re(s) < 0");
  }
  const int K = std::max(policy.direct_terms, 8);

  complex sum{};
  for (int m = K - 1; m >= 1; --m) {  // small terms first
    const complex d = s + static_cast<double>(m) * beta;
    sum += 1.0 / (d * d);
  }

  // Euler-Maclaurin tail from m = K; the next omitted term is O((beta/|u|)^10).
  const complex u = s + static_cast<double>(K) * beta;
  const complex inv = 1.0 / u;
  const complex inv2 = inv * inv;
  const double b2 = beta * beta;
  complex tail = inv / beta + 0.5 * inv2;
  complex power = inv2 * inv;  // u^-3
  tail += beta * power / 6.0;
  power *= inv2;
  tail -= beta * b2 * power / 30.0;
  power *= inv2;
  tail += beta * b2 * b2 * power / 42.0;
  power *= inv2;
  tail -= beta * b2 * b2 * b2 * power / 30.0;

  return sum + tail;
}

double log_binomial(long N, long n) {
  if (N < 0 || n < 0 || n > N) {
    throw InvalidArgument("log_binomial: need 0 <= n <= N");
  }
  const long k = std::min(n, N - n);
  const double rest = static_cast<double>(N - k);
  // Sum of positive terms: no cancellation, unlike differences of lgamma.
  double acc = 0.0;
  for (long j = 1; j <= k; ++j) {
    acc += std::log1p(rest / static_cast<double>(j));
  }
  return acc;
}

double log_sum_exp(std::span<const double> values) {
  double peak = -kInfinity;
  for (double v : values) peak = std::max(peak, v);
  if (std::isinf(peak)) return peak;
  double acc = 0.0;
  for (double v : values) {
    if (!std::isinf(v)) acc += std::exp(v - peak);
  }
  return peak + std::log(acc);
}

}  // namespace slabqo::numerics
