#include "alphaspec/labeling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <limits>

#include "alphaspec/error.hpp"
#include "alphaspec/format.hpp"

namespace alphaspec {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    fail(Errc::AlphaRange, "alpha must lie in [0, 1), got " + std::to_string(alpha));
  }
}

void require_complete(const Hypergraph& h, const WeightedIncidence& b) {
  if (!b.matches(h)) fail(Errc::DimensionMismatch, "weight table does not match the hypergraph");
  if (!b.complete()) fail(Errc::IncompleteLabeling, "some incident (vertex, edge) pair has no weight");
}

}  // namespace

// ---------------------------------------------------------------------------

WeightedIncidence::WeightedIncidence(const Hypergraph& h)
    : m_(h.num_edges()), k_(h.uniformity()), w_(static_cast<std::size_t>(m_) * k_, kUnset) {}

double WeightedIncidence::get(const Hypergraph& h, VertexId v, EdgeId e) const {
  int pos = h.position_in_edge(v, e);
  if (pos < 0) fail(Errc::BadParams, "vertex " + std::to_string(v) + " is not in edge " + std::to_string(e));
  return slot(e, pos);
}

void WeightedIncidence::set(const Hypergraph& h, VertexId v, EdgeId e, double weight) {
  if (e < 0 || e >= m_) fail(Errc::BadParams, "edge index " + std::to_string(e) + " out of range");
  int pos = h.position_in_edge(v, e);
  if (pos < 0) fail(Errc::BadParams, "vertex " + std::to_string(v) + " is not in edge " + std::to_string(e));
  slot(e, pos) = weight;
}

bool WeightedIncidence::is_set(EdgeId e, int pos) const { return !std::isnan(slot(e, pos)); }

bool WeightedIncidence::complete() const {
  return std::none_of(w_.begin(), w_.end(), [](double w) { return std::isnan(w); });
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Normal: return "normal";
    case Classification::StrictlySubnormal: return "strictly-subnormal";
    case Classification::StrictlySupernormal: return "strictly-supernormal";
    case Classification::SubnormalNonstrict: return "subnormal-nonstrict";
    case Classification::SupernormalNonstrict: return "supernormal-nonstrict";
    case Classification::None: return "none";
  }
  return "none";
}

std::string_view to_string(CertificateMode mode) {
  switch (mode) {
    case CertificateMode::Normal: return "normal";
    case CertificateMode::Subnormal: return "subnormal";
    case CertificateMode::Supernormal: return "supernormal";
  }
  return "normal";
}

std::optional<CertificateMode> parse_mode(std::string_view text) {
  if (text == "normal") return CertificateMode::Normal;
  if (text == "subnormal") return CertificateMode::Subnormal;
  if (text == "supernormal") return CertificateMode::Supernormal;
  return std::nullopt;
}

std::vector<VertexId> non_tight_vertices(const CertificateReport& report, double tol) {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < report.vertex_sums.size(); ++v) {
    if (std::abs(report.vertex_sums[v] - report.target_rho) > tol) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

Labeling labeling_from_eigenvector(const Hypergraph& h, double alpha, const VertexVector& x) {
  check_alpha(alpha);
  if (static_cast<int>(x.size()) != h.num_vertices()) {
    fail(Errc::DimensionMismatch, "vector length does not match the hypergraph");
  }
  if (std::any_of(x.begin(), x.end(), [](double v) { return !(v > 0.0); })) {
    fail(Errc::NonPositiveVector, "labeling needs a strictly positive vector");
  }
  const int k = h.uniformity();
  WeightedIncidence b(h);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto members = h.edge(e);
    double xe = 1.0;
    for (VertexId v : members) xe *= x[v];
    for (int pos = 0; pos < k; ++pos) b.slot(e, pos) = (1.0 - alpha) * xe / ipow(x[members[pos]], k);
  }
  return {rayleigh(h, alpha, x), std::move(b)};
}

CertificateReport check_certificate(const Hypergraph& h, double alpha, double rho, const WeightedIncidence& b,
                                    CertificateMode mode, const CertificateTolerance& tol) {
  check_alpha(alpha);
  require_complete(h, b);
  const int k = h.uniformity();

  CertificateReport r;
  r.mode = mode;
  r.target_rho = rho;
  r.target_product = ipow(1.0 - alpha, k);
  r.vertex_sums.assign(h.num_vertices(), 0.0);
  r.edge_products.assign(h.num_edges(), 1.0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto members = h.edge(e);
    for (int pos = 0; pos < k; ++pos) {
      r.vertex_sums[members[pos]] += b.slot(e, pos) + alpha;
      r.edge_products[e] *= b.slot(e, pos);
    }
  }
  r.consistent = check_consistent(h, b, tol.consistency);

  // Signed deviations: positive sum_dev means the vertex sum exceeds rho,
  // positive prod_dev means the edge product exceeds (1 - alpha)^k.
  double sum_hi = -std::numeric_limits<double>::infinity(), sum_lo = -sum_hi;
  for (double s : r.vertex_sums) {
    sum_hi = std::max(sum_hi, s - rho);
    sum_lo = std::min(sum_lo, s - rho);
  }
  double prod_hi = -std::numeric_limits<double>::infinity(), prod_lo = -prod_hi;
  for (double p : r.edge_products) {
    const double dev = (p - r.target_product) / r.target_product;
    prod_hi = std::max(prod_hi, dev);
    prod_lo = std::min(prod_lo, dev);
  }

  const bool sums_le = sum_hi <= tol.sum, sums_ge = sum_lo >= -tol.sum;
  const bool prods_le = prod_hi <= tol.product, prods_ge = prod_lo >= -tol.product;

  switch (mode) {
    case CertificateMode::Normal:
      r.max_sum_violation = std::max(std::abs(sum_hi), std::abs(sum_lo));
      r.max_product_violation = std::max(std::abs(prod_hi), std::abs(prod_lo));
      if (sums_le && sums_ge && prods_le && prods_ge && r.consistent) r.classification = Classification::Normal;
      break;
    case CertificateMode::Subnormal:
      r.max_sum_violation = std::max(0.0, sum_hi);
      r.max_product_violation = std::max(0.0, -prod_lo);
      if (sums_le && prods_ge) {
        const bool strict = sum_lo < -tol.sum || prod_hi > tol.product;
        r.classification = strict ? Classification::StrictlySubnormal : Classification::SubnormalNonstrict;
      }
      break;
    case CertificateMode::Supernormal:
      r.max_sum_violation = std::max(0.0, -sum_lo);
      r.max_product_violation = std::max(0.0, prod_hi);
      if (sums_ge && prods_le && r.consistent) {
        const bool strict = sum_hi > tol.sum || prod_lo < -tol.product;
        r.classification = strict ? Classification::StrictlySupernormal : Classification::SupernormalNonstrict;
      }
      break;
  }
  return r;
}

bool check_consistent(const Hypergraph& h, const WeightedIncidence& b, double tol) {
  require_complete(h, b);
  if (is_supertree(h)) return true;

  // Consistency holds iff log B(v,e) = c_e + phi_v for some vertex potential
  // phi. Fix phi along a spanning forest, then test every edge.
  const int n = h.num_vertices(), k = h.uniformity();
  std::vector<double> phi(n, 0.0);
  std::vector<char> seen(n, 0);
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : h.incident(v)) {
        auto members = h.edge(e);
        const double lv = std::log(b.slot(e, h.position_in_edge(v, e)));
        for (int pos = 0; pos < k; ++pos) {
          VertexId u = members[pos];
          if (seen[u]) continue;
          seen[u] = 1;
          phi[u] = phi[v] + std::log(b.slot(e, pos)) - lv;
          queue.push_back(u);
        }
      }
    }
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto members = h.edge(e);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int pos = 0; pos < k; ++pos) {
      const double c = std::log(b.slot(e, pos)) - phi[members[pos]];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (!(hi - lo <= tol)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Star: return "Star";
    case Family::S1m41: return "S1m41";
    case Family::S3m4: return "S3m4";
    case Family::S4m5: return "S4m5";
  }
  return "Star";
}

int family_min_m(Family f) {
  switch (f) {
    case Family::Star: return 1;
    case Family::S1m41: return 5;
    case Family::S3m4: return 5;
    case Family::S4m5: return 6;
  }
  return 1;
}

LabeledSupertree family_graph(Family f, int m, int k) {
  if (m < family_min_m(f)) {
    fail(Errc::BadParams, std::string(to_string(f)) + " needs m >= " + std::to_string(family_min_m(f)));
  }
  switch (f) {
    case Family::Star: return star(m, k);
    case Family::S1m41: return triple_star(1, m - 4, 1, k);
    case Family::S3m4: return double_star(3, m - 4, k);
    case Family::S4m5: return double_star(4, m - 5, k);
  }
  fail(Errc::BadParams, "unknown family");
}

FamilyConstants family_constants(Family f, int k, double alpha, double rho) {
  FamilyConstants c;
  c.family = f;
  c.rho = rho;
  const double q = 1.0 - alpha;
  c.A0 = q / (rho - alpha);
  switch (f) {
    case Family::Star:
      break;
    case Family::S1m41:
      c.A1 = ipow(c.A0, k);
      c.B0 = q * ipow(c.A0, k - 1);
      c.B1 = rho - 2 * alpha - c.B0;
      c.C1 = (rho - alpha) * c.B0 / c.B1;
      break;
    case Family::S3m4:
      c.A2 = ipow(q, k) / ipow(rho - alpha, k - 1);
      c.B2 = rho - 2 * alpha - c.A2;
      c.C2 = (rho - alpha) * c.A2 / c.B2;
      break;
    case Family::S4m5:
      c.A3 = ipow(q, k) / ipow(rho - alpha, k - 1);
      c.B3 = rho - 2 * alpha - c.A3;
      break;
  }
  return c;
}

bool family_admissible(Family f, int /*m*/, int k, double alpha, double rho) {
  if (!(rho > alpha)) return false;
  auto c = family_constants(f, k, alpha, rho);
  switch (f) {
    case Family::Star: return true;
    case Family::S1m41: return c.B1 > 0.0;
    case Family::S3m4: return rho - 4 * alpha - 3 * c.A2 > 0.0;
    case Family::S4m5: return rho - 5 * alpha - 4 * c.A3 > 0.0;
  }
  return false;
}

double family_equation(Family f, int m, int k, double alpha, double rho) {
  auto c = family_constants(f, k, alpha, rho);
  switch (f) {
    case Family::Star:
      return (rho - m * alpha) * ipow(rho - alpha, k - 1) - m * ipow(1.0 - alpha, k);
    case Family::S1m41:
      return rho - (m - 2) * alpha - (m - 4) * c.B0 - 2 * c.C1;
    case Family::S3m4:
      return rho - (m - 3) * alpha - (m - 4) * c.A2 - (rho - alpha) * c.A2 / (rho - 4 * alpha - 3 * c.A2);
    case Family::S4m5:
      return rho - (m - 4) * alpha - (m - 5) * c.A3 - (rho - alpha) * c.A3 / (rho - 5 * alpha - 4 * c.A3);
  }
  return 0.0;
}

namespace {

void validate_constants(const FamilyConstants& c, double alpha) {
  auto require = [&](bool ok, const char* what) {
    if (!ok) {
      fail(Errc::ConstraintViolated, std::string(to_string(c.family)) + ": " + what + " fails at rho = " +
                                         format_sig(c.rho));
    }
  };
  const double rho = c.rho;
  require(rho > alpha, "rho > alpha");
  require(c.A0 > 0, "A0 > 0");
  switch (c.family) {
    case Family::Star:
      break;
    case Family::S1m41:
      require(c.B0 > 0 && c.B1 > 0 && c.C1 > 0, "A0, B0, B1, C1 > 0");
      require(rho > 2 * alpha + c.B0, "rho > 2 alpha + B0");
      require(rho - 2 * alpha - c.C1 > 0, "rho - 2 alpha - C1 > 0");
      break;
    case Family::S3m4:
      require(c.A2 > 0 && c.B2 > 0 && c.C2 > 0, "A2, B2, C2 > 0");
      require(rho > 4 * alpha + 3 * c.A2, "rho > 4 alpha + 3 A2");
      require(rho - 2 * alpha - c.C2 > 0, "rho - 2 alpha - C2 > 0");
      break;
    case Family::S4m5:
      require(c.A3 > 0 && c.B3 > 0, "A3, B3 > 0");
      require(rho > 5 * alpha + 4 * c.A3, "rho > 5 alpha + 4 A3");
      break;
  }
}

}  // namespace

FamilyConstants solve_family_rho(Family f, int m, int k, double alpha) {
  check_alpha(alpha);
  if (k < 3) fail(Errc::BadParams, "family equations need k >= 3");
  if (m < family_min_m(f)) {
    fail(Errc::BadParams, std::string(to_string(f)) + " needs m >= " + std::to_string(family_min_m(f)));
  }

  constexpr double kStep = 1e-2;
  constexpr double kWidth = 1e-12;
  const double start = alpha + 1e-6;
  const double stop = m + 1.0;
  auto g = [&](double rho) { return family_equation(f, m, k, alpha, rho); };
  auto ok = [&](double rho) { return family_admissible(f, m, k, alpha, rho); };

  // Smallest admissible point of (bad, good], to bisection precision.
  auto boundary = [&](double bad, double good) {
    while (good - bad > 1e-15 * good) {
      const double mid = 0.5 * (bad + good);
      if (mid <= bad || mid >= good) break;
      (ok(mid) ? good : bad) = mid;
    }
    return good;
  };

  bool have_prev = false, have_bad = false;
  double prev = 0.0, g_prev = 0.0, bad = 0.0;
  for (long i = 0;; ++i) {
    const double rho = start + static_cast<double>(i) * kStep;
    if (rho > stop) break;
    if (!ok(rho)) {
      have_prev = false;
      have_bad = true;
      bad = rho;
      continue;
    }
    if (!have_prev && have_bad) {
      const double edge = boundary(bad, rho);
      const double g_edge = g(edge);
      if (edge < rho && std::isfinite(g_edge)) {
        have_prev = true;
        prev = edge;
        g_prev = g_edge;
      }
    }
    const double val = g(rho);
    if (val == 0.0) {
      auto c = family_constants(f, k, alpha, rho);
      validate_constants(c, alpha);
      return c;
    }
    if (have_prev && (g_prev < 0.0) != (val < 0.0)) {
      double lo = prev, hi = rho, g_lo = g_prev;
      while (hi - lo > kWidth) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double g_mid = g(mid);
        if (g_mid == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((g_mid < 0.0) == (g_lo < 0.0)) {
          lo = mid;
          g_lo = g_mid;
        } else {
          hi = mid;
        }
      }
      auto c = family_constants(f, k, alpha, 0.5 * (lo + hi));
      validate_constants(c, alpha);
      return c;
    }
    have_prev = true;
    prev = rho;
    g_prev = val;
  }
  fail(Errc::NoRoot, std::string(to_string(f)) + ": no admissible sign change in (" + format_sig(start) + ", " +
                         format_sig(stop) + "]");
}

// ---------------------------------------------------------------------------

std::string_view to_string(LemmaCase c) {
  switch (c) {
    case LemmaCase::L41_T11m3_super: return "L41-T11m3-super";
    case LemmaCase::L41_Sm301_sub: return "L41-Sm301-sub";
    case LemmaCase::L42_Sm301_super: return "L42-Sm301-super";
    case LemmaCase::L42_T12m4_sub: return "L42-T12m4-sub";
    case LemmaCase::L43_T12m4_super: return "L43-T12m4-super";
  }
  return "";
}

std::optional<LemmaCase> parse_lemma_case(std::string_view tag) {
  for (LemmaCase c : kAllLemmaCases) {
    if (to_string(c) == tag) return c;
  }
  return std::nullopt;
}

Family lemma_reference_family(LemmaCase c) {
  switch (c) {
    case LemmaCase::L41_T11m3_super:
    case LemmaCase::L41_Sm301_sub: return Family::S1m41;
    case LemmaCase::L42_Sm301_super:
    case LemmaCase::L42_T12m4_sub: return Family::S3m4;
    case LemmaCase::L43_T12m4_super: return Family::S4m5;
  }
  return Family::Star;
}

int lemma_min_m(LemmaCase c) { return family_min_m(lemma_reference_family(c)); }

int lemma_threshold_m(LemmaCase c) {
  switch (c) {
    case LemmaCase::L41_T11m3_super:
    case LemmaCase::L41_Sm301_sub: return 7;
    case LemmaCase::L42_Sm301_super:
    case LemmaCase::L42_T12m4_sub: return 10;
    case LemmaCase::L43_T12m4_super: return 13;
  }
  return 0;
}

CertificateMode lemma_mode(LemmaCase c) {
  switch (c) {
    case LemmaCase::L41_Sm301_sub:
    case LemmaCase::L42_T12m4_sub: return CertificateMode::Subnormal;
    default: return CertificateMode::Supernormal;
  }
}

namespace {

// Every degree-one vertex gets rho - alpha; the caller then lays down the
// named weights.
WeightedIncidence leaf_weights(const Hypergraph& h, double rho, double alpha) {
  WeightedIncidence b(h);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto members = h.edge(e);
    for (int pos = 0; pos < h.uniformity(); ++pos) {
      if (h.degree(members[pos]) == 1) b.slot(e, pos) = rho - alpha;
    }
  }
  return b;
}

}  // namespace

LemmaCertificate build_lemma_certificate(LemmaCase lemma, int m, int k, double alpha) {
  check_alpha(alpha);
  if (k < 3) fail(Errc::BadParams, "lemma certificates need k >= 3");
  if (m < lemma_min_m(lemma)) {
    fail(Errc::BadParams, std::string(to_string(lemma)) + " needs m >= " + std::to_string(lemma_min_m(lemma)));
  }
  const auto c = solve_family_rho(lemma_reference_family(lemma), m, k, alpha);
  const double rho = c.rho;
  const double q = 1.0 - alpha;

  std::optional<LabeledSupertree> graph;
  VertexId exceptional = -1;
  switch (lemma) {
    case LemmaCase::L41_T11m3_super:
    case LemmaCase::L42_T12m4_sub:
    case LemmaCase::L43_T12m4_super:
      graph = lemma == LemmaCase::L41_T11m3_super ? t_supertree(1, 1, m - 3, k) : t_supertree(1, 2, m - 4, k);
      exceptional = graph->roles.u[2];
      break;
    case LemmaCase::L41_Sm301_sub:
    case LemmaCase::L42_Sm301_super:
      graph = triple_star(m - 3, 0, 1, k);
      exceptional = graph->roles.u[0];
      break;
  }
  const Hypergraph& h = graph->graph;
  const auto& u = graph->roles.u;
  auto e = [&](int label) { return graph->roles.e[label - 1]; };
  WeightedIncidence b = leaf_weights(h, rho, alpha);
  auto put = [&](VertexId v, EdgeId edge, double w) { b.set(h, v, edge, w); };

  switch (lemma) {
    case LemmaCase::L41_T11m3_super:
      put(u[0], e(1), c.B1);
      put(u[1], e(1), c.B1);
      put(u[2], e(1), ipow(q, 3) * ipow(c.A0, k - 3) / (c.B1 * c.B1));
      put(u[0], e(2), c.B0);
      put(u[1], e(3), c.B0);
      for (int i = 4; i <= m; ++i) put(u[2], e(i), c.B0);
      break;
    case LemmaCase::L41_Sm301_sub: {
      const double hub = rho - 2 * alpha - c.C1;
      put(u[0], e(1), q * q * ipow(c.A0, k - 2) / hub);
      for (int i = 3; i <= m - 1; ++i) put(u[0], e(i), c.B0);
      put(u[1], e(1), hub);
      put(u[1], e(2), c.C1);
      put(u[2], e(2), c.B1);
      put(u[2], e(m), c.B0);
      break;
    }
    case LemmaCase::L42_Sm301_super: {
      const double hub = rho - 2 * alpha - c.C2;
      put(u[0], e(1), (rho - alpha) * c.A2 / hub);
      for (int i = 3; i <= m - 1; ++i) put(u[0], e(i), c.A2);
      put(u[1], e(1), hub);
      put(u[1], e(2), c.C2);
      put(u[2], e(2), c.B2);
      put(u[2], e(m), c.A2);
      break;
    }
    case LemmaCase::L42_T12m4_sub:
    case LemmaCase::L43_T12m4_super: {
      const bool l42 = lemma == LemmaCase::L42_T12m4_sub;
      const double a = l42 ? c.A2 : c.A3;
      const double bb = l42 ? c.B2 : c.B3;
      const double mid = rho - 3 * alpha - 2 * a;
      put(u[0], e(1), bb);
      put(u[0], e(2), a);
      put(u[1], e(1), mid);
      put(u[1], e(3), a);
      put(u[1], e(4), a);
      put(u[2], e(1), (rho - alpha) * (rho - alpha) * a / (mid * bb));
      for (int i = 5; i <= m; ++i) put(u[2], e(i), a);
      break;
    }
  }
  if (!b.complete()) fail(Errc::IncompleteLabeling, "lemma certificate left a pair unset");

  Classification expected = Classification::None;
  if (m >= lemma_threshold_m(lemma)) {
    expected = lemma_mode(lemma) == CertificateMode::Subnormal ? Classification::StrictlySubnormal
                                                               : Classification::StrictlySupernormal;
  }
  return {lemma, std::move(*graph), rho, std::move(b), expected, exceptional, c};
}

// ---------------------------------------------------------------------------

std::string write_certificate(const Hypergraph& h, double rho, const WeightedIncidence& b) {
  require_complete(h, b);
  std::string out = "rho " + format_sig(rho) + "\n";
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto members = h.edge(e);
    for (int pos = 0; pos < h.uniformity(); ++pos) {
      out += std::to_string(members[pos]) + ' ' + std::to_string(e) + ' ' + format_sig(b.slot(e, pos)) + '\n';
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

ParsedCertificate read_certificate(const Hypergraph& h, std::string_view text) {
  ParsedCertificate cert{std::nullopt, WeightedIncidence(h)};
  int line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto fields = split_ws(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    if (fields[0] == "rho") {
      double rho = 0;
      if (fields.size() != 2 || !parse_number(fields[1], rho)) fail(Errc::ParseError, where + "expected \"rho <value>\"");
      cert.rho = rho;
      continue;
    }
    int v = 0, e = 0;
    double w = 0;
    if (fields.size() != 3 || !parse_number(fields[0], v) || !parse_number(fields[1], e) ||
        !parse_number(fields[2], w)) {
      fail(Errc::ParseError, where + "expected \"v e weight\"");
    }
    if (e < 0 || e >= h.num_edges() || v < 0 || v >= h.num_vertices() || h.position_in_edge(v, e) < 0) {
      fail(Errc::ParseError, where + "vertex " + std::to_string(v) + " is not in edge " + std::to_string(e));
    }
    cert.weights.set(h, v, e, w);
  }
  return cert;
}

}  // namespace alphaspec
