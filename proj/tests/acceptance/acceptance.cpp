// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. argv[1] is the path of the alphaspec executable.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "alphaspec/families.hpp"
#include "alphaspec/labeling.hpp"
#include "alphaspec/ordering.hpp"
#include "alphaspec/spectral.hpp"
#include "oracles.hpp"

using namespace alphaspec;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << what << "; ";
      pass = false;
    }
  }
};

bool is_super(Classification c) {
  return c == Classification::StrictlySupernormal || c == Classification::SupernormalNonstrict;
}

Outcome normality_round_trip() {
  Outcome o;
  std::vector<std::pair<std::string, Hypergraph>> graphs;
  for (int k : {3, 4}) {
    for (auto& t : top_eight(13, k)) graphs.emplace_back(t.name + "/k" + std::to_string(k), t.graph);
  }
  graphs.emplace_back("S(8)", star(7, 3).graph);
  for (int m = 1; m <= 4; ++m) {
    int i = 0;
    for (auto& h : enumerate_supertrees(m, 3)) graphs.emplace_back("m" + std::to_string(m) + "#" + std::to_string(i++), h);
  }
  CertificateTolerance tol;
  tol.sum = 1e-8;
  for (const auto& [name, h] : graphs) {
    for (double a : {0.0, 0.3, 0.6, 0.9}) {
      auto r = alpha_spectral_radius(h, a);
      auto l = labeling_from_eigenvector(h, a, r.eigenvector);
      auto report = check_normal(h, a, l.rho, l.weights, tol);
      o.require(report.classification == Classification::Normal, name + " alpha=" + std::to_string(a));
    }
  }
  o.detail << graphs.size() << " graphs x 4 alphas";
  return o;
}

Outcome solver_agreement() {
  Outcome o;
  double worst = 0, worst_closed = 0;
  for (Family f : {Family::Star, Family::S1m41, Family::S3m4, Family::S4m5}) {
    for (int k : {3, 4, 5}) {
      for (int m : {7, 10, 13}) {
        for (double a : {0.0, 0.3, 0.6, 0.9}) {
          auto solved = solve_family_rho(f, m, k, a);
          auto power = alpha_spectral_radius(family_graph(f, m, k).graph, a);
          worst = std::max(worst, std::fabs(solved.rho - power.rho));
          o.require(std::fabs(solved.rho - power.rho) <= 1e-7, std::string(to_string(f)) + " disagrees");
          if (f == Family::Star) {
            const double closed = static_cast<double>(oracle::star_closed_form(m, k, a));
            worst_closed = std::max(worst_closed, std::fabs(solved.rho - closed));
            o.require(std::fabs(solved.rho - closed) <= 1e-10, "star closed form");
          }
        }
      }
    }
  }
  o.detail << "max |solver-power|=" << worst << " max |star-closed|=" << worst_closed;
  return o;
}

// Visits every certificate instance of criteria 3 and 4.
void each_certificate(const std::function<void(const LemmaCertificate&, LemmaCase, int, int, double)>& fn) {
  for (LemmaCase c : kAllLemmaCases) {
    std::vector<int> ms{lemma_threshold_m(c)};
    if (ms[0] != 13) ms.push_back(13);
    for (int m : ms) {
      for (int k : {3, 4, 5}) {
        for (double a : {0.0, 0.25, 0.5, 0.75}) fn(build_lemma_certificate(c, m, k, a), c, m, k, a);
      }
    }
  }
}

std::string tag(LemmaCase c, int m, int k, double a) {
  std::ostringstream s;
  s << to_string(c) << " m=" << m << " k=" << k << " a=" << a;
  return s.str();
}

Outcome lemma_certificates() {
  Outcome o;
  int count = 0;
  each_certificate([&](const LemmaCertificate& cert, LemmaCase c, int m, int k, double a) {
    ++count;
    const auto& h = cert.graph.graph;
    auto report = check_certificate(h, a, cert.rho_ref, cert.weights, lemma_mode(c),
                                     CertificateTolerance::analytic());
    const auto want = lemma_mode(c) == CertificateMode::Supernormal ? Classification::StrictlySupernormal
                                                                     : Classification::StrictlySubnormal;
    o.require(cert.expected == want && report.classification == want, tag(c, m, k, a) + " classification");
    const double target = std::pow(1 - a, k);
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      double p = 1;
      for (int pos = 0; pos < k; ++pos) p *= cert.weights.slot(e, pos);
      o.require(std::fabs(p - target) <= 1e-10 * target, tag(c, m, k, a) + " product");
    }
    auto loose = non_tight_vertices(report, CertificateTolerance::analytic().sum);
    o.require(loose.size() == 1 && loose[0] == cert.exceptional, tag(c, m, k, a) + " non-tight set");
  });
  o.detail << count << " certificates";
  return o;
}

Outcome certificate_signs() {
  Outcome o;
  double margin = INFINITY;
  each_certificate([&](const LemmaCertificate& cert, LemmaCase c, int m, int k, double a) {
    const double rho = alpha_spectral_radius(cert.graph.graph, a).rho;
    const double diff = rho - cert.rho_ref;
    const double signed_diff = is_super(cert.expected) ? diff : -diff;
    margin = std::min(margin, signed_diff);
    o.require(signed_diff > 1e-9, tag(c, m, k, a) + " sign");
  });
  o.detail << "min signed margin=" << margin;
  return o;
}

Outcome chain() {
  Outcome o;
  double margin = INFINITY;
  for (int k : {3, 4}) {
    for (double a : {0.0, 0.25, 0.5, 0.75, 0.95}) {
      auto r = verify_chain(13, k, a, 1e-9);
      margin = std::min(margin, r.min_margin);
      o.require(r.verdict, "k=" + std::to_string(k) + " a=" + std::to_string(a));
      o.require(r.entries.size() == 9 && r.entries[7].rho > r.entries[8].rho + 1e-9, "T(1,2,9) > S(4:8)");
    }
  }
  o.detail << "min margin=" << margin;
  return o;
}

Outcome maximizer_bound() {
  Outcome o;
  for (double a : {0.0, 0.5}) {
    auto r = verify_maximizer_bound(13, 3, a, 1e-9);
    o.require(r.verdict && r.classes == 77 && r.exceptional == 6 && r.bounded == 71,
              "alpha=" + std::to_string(a) + " counts " + std::to_string(r.classes) + "/" +
                  std::to_string(r.exceptional) + "/" + std::to_string(r.bounded));
    if (a == 0.5) o.detail << r.classes << " classes, " << r.exceptional << " exceptional, " << r.bounded << " bounded";
  }
  return o;
}

Outcome majorization() {
  Outcome o;
  auto r = verify_majorization_monotonicity(13, 3, 0.5, 1e-9);
  o.require(r.verdict, "verdict false");
  o.detail << r.comparisons << " comparable pairs, min margin=" << r.min_margin;
  return o;
}

Outcome bruteforce() {
  Outcome o;
  for (int m : {3, 4, 5}) {
    for (double a : {0.0, 0.5}) {
      o.require(verify_class_maximizer_bruteforce(m, 3, a, 1e-9).verdict,
                "m=" + std::to_string(m) + " a=" + std::to_string(a));
    }
  }
  o.detail << "m in {3,4,5}";
  return o;
}

Outcome double_stars() {
  Outcome o;
  double margin = INFINITY;
  for (double a : {0.0, 0.5}) {
    std::vector<double> rho;
    for (int s = 0; s <= 6; ++s) rho.push_back(alpha_spectral_radius(double_star(s, 12 - s, 3).graph, a).rho);
    for (std::size_t i = 0; i + 1 < rho.size(); ++i) {
      margin = std::min(margin, rho[i] - rho[i + 1]);
      o.require(rho[i] - rho[i + 1] > 1e-9, "a=" + std::to_string(a) + " s=" + std::to_string(i));
    }
  }
  o.detail << "min margin=" << margin;
  return o;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome deterministic_csv(const std::string& exe) {
  Outcome o;
  const std::string cmd = "'" + exe + "' order --m 13 --k 3 --alpha 0.5 --csv -";
  int s1 = 0, s2 = 0;
  auto first = capture(cmd, s1);
  auto second = capture(cmd, s2);
  o.require(s1 == 0 && s2 == 0, "non-zero exit");
  o.require(!first.empty() && first == second, "outputs differ");
  o.detail << first.size() << " bytes";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: alphaspec_acceptance <path-to-alphaspec>\n";
    return 2;
  }
  const std::string exe = argv[1];
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"normality round-trip", normality_round_trip},
      {"family solver vs power method", solver_agreement},
      {"lemma certificates", lemma_certificates},
      {"certificate sign vs radius", certificate_signs},
      {"top-eight chain", chain},
      {"maximizer bound", maximizer_bound},
      {"majorization monotonicity", majorization},
      {"class maximizer brute force", bruteforce},
      {"double-star chain", double_stars},
      {"deterministic order CSV", [&] { return deterministic_csv(exe); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << o.detail.str() << "; " << secs << " s)\n";
  }
  return failures == 0 ? 0 : 1;
}
