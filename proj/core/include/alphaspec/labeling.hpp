#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphaspec/families.hpp"
#include "alphaspec/hypergraph.hpp"
#include "alphaspec/spectral.hpp"

namespace alphaspec {

/// Weight B(v, e) for every incident (vertex, edge) pair.
///
/// Slots are laid out edge by edge, aligned with the sorted members of each
/// edge, so the structure can only describe incident pairs. A freshly
/// constructed table has every slot unset.
class WeightedIncidence {
 public:
  explicit WeightedIncidence(const Hypergraph& h);

  int num_edges() const noexcept { return m_; }
  int uniformity() const noexcept { return k_; }

  /// Weight of the member at `pos` of edge e (pos indexes h.edge(e)).
  double slot(EdgeId e, int pos) const { return w_[static_cast<std::size_t>(e) * k_ + pos]; }
  double& slot(EdgeId e, int pos) { return w_[static_cast<std::size_t>(e) * k_ + pos]; }

  /// Throws BadParams when v is not in e.
  double get(const Hypergraph& h, VertexId v, EdgeId e) const;
  void set(const Hypergraph& h, VertexId v, EdgeId e, double weight);

  bool is_set(EdgeId e, int pos) const;
  bool complete() const;
  bool matches(const Hypergraph& h) const {
    return h.num_edges() == m_ && h.uniformity() == k_;
  }

 private:
  int m_ = 0;
  int k_ = 0;
  std::vector<double> w_;
};

enum class Classification {
  Normal,
  StrictlySubnormal,
  StrictlySupernormal,
  SubnormalNonstrict,
  SupernormalNonstrict,
  None,
};

std::string_view to_string(Classification c);

enum class CertificateMode { Normal, Subnormal, Supernormal };

std::string_view to_string(CertificateMode mode);
std::optional<CertificateMode> parse_mode(std::string_view text);

struct CertificateTolerance {
  double sum = 1e-8;          // absolute, on vertex sums
  double product = 1e-10;     // relative, on edge products
  double consistency = 1e-9;  // on log weight ratios around cycles

  /// For certificates built from closed forms rather than a computed
  /// eigenvector, where only rounding error separates tight from strict.
  static CertificateTolerance analytic() { return {1e-12, 1e-12, 1e-12}; }
};

struct CertificateReport {
  CertificateMode mode = CertificateMode::Normal;
  Classification classification = Classification::None;
  std::vector<double> vertex_sums;    // sum over e containing v of B(v,e) + alpha
  std::vector<double> edge_products;  // product over v in e of B(v,e)
  double target_rho = 0.0;
  double target_product = 0.0;  // (1 - alpha)^k
  double max_sum_violation = 0.0;
  double max_product_violation = 0.0;  // relative
  bool consistent = true;
};

/// Vertices whose sum differs from the target by more than `tol`.
std::vector<VertexId> non_tight_vertices(const CertificateReport& report, double tol);

/// B(v, e) = (1 - alpha) x^e / x_v^k for a strictly positive x, together with
/// the Rayleigh quotient of x.
struct Labeling {
  double rho;
  WeightedIncidence weights;
};

Labeling labeling_from_eigenvector(const Hypergraph& h, double alpha, const VertexVector& x);

CertificateReport check_certificate(const Hypergraph& h, double alpha, double rho, const WeightedIncidence& b,
                                    CertificateMode mode, const CertificateTolerance& tol = {});

inline CertificateReport check_normal(const Hypergraph& h, double alpha, double rho, const WeightedIncidence& b,
                                      const CertificateTolerance& tol = {}) {
  return check_certificate(h, alpha, rho, b, CertificateMode::Normal, tol);
}
inline CertificateReport check_subnormal(const Hypergraph& h, double alpha, double rho,
                                         const WeightedIncidence& b, const CertificateTolerance& tol = {}) {
  return check_certificate(h, alpha, rho, b, CertificateMode::Subnormal, tol);
}
inline CertificateReport check_supernormal(const Hypergraph& h, double alpha, double rho,
                                           const WeightedIncidence& b, const CertificateTolerance& tol = {}) {
  return check_certificate(h, alpha, rho, b, CertificateMode::Supernormal, tol);
}

/// Whether every cycle of the incidence structure has weight-ratio product 1.
/// Always true for supertrees. Throws IncompleteLabeling on unset weights.
bool check_consistent(const Hypergraph& h, const WeightedIncidence& b, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Scalar fixed-point equations for the families S_{m+1}, S_{1,m-4,1},
// S_{3,m-4} and S_{4,m-5}.

enum class Family { Star, S1m41, S3m4, S4m5 };

std::string_view to_string(Family f);
int family_min_m(Family f);

/// The supertree whose alpha-spectral radius the family equation describes.
LabeledSupertree family_graph(Family f, int m, int k);

struct FamilyConstants {
  Family family = Family::Star;
  double rho = 0.0;
  // S_{1,m-4,1}
  double A0 = 0, A1 = 0, B0 = 0, B1 = 0, C1 = 0;
  // S_{3,m-4}
  double A2 = 0, B2 = 0, C2 = 0;
  // S_{4,m-5}
  double A3 = 0, B3 = 0;
};

/// Constants of the family evaluated at an arbitrary rho > alpha.
FamilyConstants family_constants(Family f, int k, double alpha, double rho);

/// Left minus right side of the family equation; zero at the spectral radius.
double family_equation(Family f, int m, int k, double alpha, double rho);

/// Whether rho lies in the region where the family's reduction is valid.
bool family_admissible(Family f, int m, int k, double alpha, double rho);

/// First admissible root of the family equation, by scan and bisection.
/// Throws NoRoot or ConstraintViolated.
FamilyConstants solve_family_rho(Family f, int m, int k, double alpha);

// ---------------------------------------------------------------------------
// Explicit certificates comparing neighbouring members of the ordering.

enum class LemmaCase {
  L41_T11m3_super,  // T(1,1,m-3) against rho(S_{1,m-4,1})
  L41_Sm301_sub,    // S_{m-3,0,1} against rho(S_{1,m-4,1})
  L42_Sm301_super,  // S_{m-3,0,1} against rho(S_{3,m-4})
  L42_T12m4_sub,    // T(1,2,m-4) against rho(S_{3,m-4})
  L43_T12m4_super,  // T(1,2,m-4) against rho(S_{4,m-5})
};

inline constexpr LemmaCase kAllLemmaCases[] = {
    LemmaCase::L41_T11m3_super, LemmaCase::L41_Sm301_sub, LemmaCase::L42_Sm301_super,
    LemmaCase::L42_T12m4_sub, LemmaCase::L43_T12m4_super,
};

std::string_view to_string(LemmaCase c);
std::optional<LemmaCase> parse_lemma_case(std::string_view tag);

/// Smallest m for which the certificate can be built at all.
int lemma_min_m(LemmaCase c);
/// Smallest m for which the strict classification is guaranteed.
int lemma_threshold_m(LemmaCase c);
Family lemma_reference_family(LemmaCase c);
CertificateMode lemma_mode(LemmaCase c);

struct LemmaCertificate {
  LemmaCase lemma;
  LabeledSupertree graph;
  double rho_ref;
  WeightedIncidence weights;
  // None below the lemma's m threshold.
  Classification expected;
  VertexId exceptional;
  FamilyConstants constants;
};

LemmaCertificate build_lemma_certificate(LemmaCase c, int m, int k, double alpha);

// ---------------------------------------------------------------------------
// Text form: "rho <value>" followed by "v e weight" lines.

std::string write_certificate(const Hypergraph& h, double rho, const WeightedIncidence& b);

struct ParsedCertificate {
  std::optional<double> rho;
  WeightedIncidence weights;
};

/// Throws ParseError on malformed lines or pairs that are not incident.
/// Missing pairs are left unset (checkers report IncompleteLabeling).
ParsedCertificate read_certificate(const Hypergraph& h, std::string_view text);

}  // namespace alphaspec
