#include "alphaspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace alphaspec {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    fail(Errc::AlphaRange, "alpha must lie in [0, 1), got " + std::to_string(alpha));
  }
}

void check_length(const Hypergraph& h, const VertexVector& x) {
  if (static_cast<int>(x.size()) != h.num_vertices()) {
    fail(Errc::DimensionMismatch, "vector has " + std::to_string(x.size()) + " entries for " +
                                      std::to_string(h.num_vertices()) + " vertices");
  }
}

double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

VertexVector apply_alpha(const Hypergraph& h, double alpha, const VertexVector& x) {
  check_alpha(alpha);
  check_length(h, x);
  const int k = h.uniformity();
  VertexVector y(x.size());
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    y[v] = alpha * h.degree(v) * ipow(x[v], k - 1);
  }
  // Prefix/suffix products give each member the product of the others
  // without dividing, so zero entries are handled exactly.
  std::vector<double> prefix(k + 1), suffix(k + 1);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto members = h.edge(e);
    prefix[0] = 1.0;
    for (int i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * x[members[i]];
    suffix[k] = 1.0;
    for (int i = k - 1; i >= 0; --i) suffix[i] = suffix[i + 1] * x[members[i]];
    for (int i = 0; i < k; ++i) y[members[i]] += (1.0 - alpha) * prefix[i] * suffix[i + 1];
  }
  return y;
}

double rayleigh(const Hypergraph& h, double alpha, const VertexVector& x) {
  check_alpha(alpha);
  check_length(h, x);
  const int k = h.uniformity();
  double denom = 0.0, diag = 0.0;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (x[v] < 0.0) fail(Errc::ZeroVector, "vector must be nonnegative");
    const double p = ipow(x[v], k);
    denom += p;
    diag += h.degree(v) * p;
  }
  if (denom == 0.0) fail(Errc::ZeroVector, "Rayleigh quotient of the zero vector");
  double off = 0.0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    double p = 1.0;
    for (VertexId v : h.edge(e)) p *= x[v];
    off += p;
  }
  return (alpha * diag + (1.0 - alpha) * k * off) / denom;
}

double residual(const Hypergraph& h, double alpha, double rho, const VertexVector& x) {
  check_length(h, x);
  if (std::none_of(x.begin(), x.end(), [](double v) { return v != 0.0; })) {
    fail(Errc::ZeroVector, "residual of the zero vector");
  }
  auto y = apply_alpha(h, alpha, x);
  const int k = h.uniformity();
  double worst = 0.0;
  for (std::size_t v = 0; v < x.size(); ++v) {
    worst = std::max(worst, std::abs(rho * ipow(x[v], k - 1) - y[v]));
  }
  return worst;
}

SpectralResult alpha_spectral_radius(const Hypergraph& h, double alpha, const PowerOptions& opts) {
  check_alpha(alpha);
  if (!(opts.tolerance > 0.0)) fail(Errc::BadParams, "tolerance must be positive");
  if (!(opts.shift >= 0.0)) fail(Errc::BadParams, "shift must be nonnegative");
  if (!is_connected(h)) fail(Errc::NotConnected, "power iteration needs a connected hypergraph");

  const int n = h.num_vertices();
  const int k = h.uniformity();
  const double sigma = opts.shift;
  const double root = 1.0 / (k - 1);

  VertexVector x(n, 1.0);
  auto normalize = [&](VertexVector& v) {
    double s = 0.0;
    for (double t : v) s += ipow(t, k);
    const double scale = 1.0 / std::pow(s, 1.0 / k);
    for (double& t : v) t *= scale;
  };
  normalize(x);

  SpectralResult result;
  double prev_low = -std::numeric_limits<double>::infinity();
  double prev_high = std::numeric_limits<double>::infinity();
  for (int it = 0;; ++it) {
    auto y = apply_alpha(h, alpha, x);
    double low = std::numeric_limits<double>::infinity();
    double high = -low;
    for (int v = 0; v < n; ++v) {
      y[v] += sigma * ipow(x[v], k - 1);
      const double ratio = y[v] / ipow(x[v], k - 1);
      low = std::min(low, ratio);
      high = std::max(high, ratio);
    }
    const double slack = 1e-12 * std::max(1.0, std::abs(high));
    if (low < prev_low - slack || high > prev_high + slack) result.monotone_enclosure = false;
    prev_low = low;
    prev_high = high;

    result.lower_bound = low - sigma;
    result.upper_bound = high - sigma;
    result.rho = 0.5 * (low + high) - sigma;
    result.iterations = it;
    if (high - low <= opts.tolerance || it >= opts.max_iterations) {
      result.eigenvector = x;
      result.residual = residual(h, alpha, result.rho, x);
      if (high - low > opts.tolerance) {
        throw ConvergenceError(result, "enclosure [" + std::to_string(result.lower_bound) + ", " +
                                           std::to_string(result.upper_bound) + "] after " +
                                           std::to_string(it) + " iterations");
      }
      return result;
    }
    for (int v = 0; v < n; ++v) x[v] = std::pow(y[v], root);
    normalize(x);
  }
}

}  // namespace alphaspec
