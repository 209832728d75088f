#pragma once

#include <vector>

#include "alphaspec/error.hpp"
#include "alphaspec/hypergraph.hpp"

namespace alphaspec {

/// One nonnegative weight per vertex.
using VertexVector = std::vector<double>;

struct PowerOptions {
  double tolerance = 1e-10;  // width of the final eigenvalue enclosure
  int max_iterations = 100000;
  double shift = 1.0;
};

struct SpectralResult {
  double rho = 0.0;
  VertexVector eigenvector;  // sum of x_v^k equals 1
  double residual = 0.0;
  int iterations = 0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  // False if an iteration ever widened the enclosure beyond rounding noise.
  bool monotone_enclosure = true;
};

/// Raised by alpha_spectral_radius when the iteration budget runs out. The
/// last iterate and enclosure are kept.
class ConvergenceError : public Error {
 public:
  ConvergenceError(SpectralResult last, const std::string& what)
      : Error(Errc::NoConvergence, what), last_(std::move(last)) {}

  const SpectralResult& last() const noexcept { return last_; }

 private:
  SpectralResult last_;
};

/// y_v = alpha d_v x_v^{k-1} + (1 - alpha) sum over edges e containing v of
/// the product of x_u for u in e other than v.
VertexVector apply_alpha(const Hypergraph& h, double alpha, const VertexVector& x);

/// x^T(A_alpha x) / sum x_v^k. Scale invariant and a lower bound for the
/// alpha-spectral radius for every nonzero nonnegative x.
double rayleigh(const Hypergraph& h, double alpha, const VertexVector& x);

/// max_v |rho x_v^{k-1} - (A_alpha x)_v|.
double residual(const Hypergraph& h, double alpha, double rho, const VertexVector& x);

/// Shifted higher-order power iteration with a two-sided Collatz-Wielandt
/// enclosure. Starts from the all-ones vector, so vertices related by an
/// automorphism keep equal weights throughout.
SpectralResult alpha_spectral_radius(const Hypergraph& h, double alpha, const PowerOptions& opts = {});

}  // namespace alphaspec
