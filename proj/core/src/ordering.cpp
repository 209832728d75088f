#include "alphaspec/ordering.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>

#include "alphaspec/error.hpp"
#include "alphaspec/format.hpp"
#include "alphaspec/labeling.hpp"

namespace alphaspec {

bool is_majorized_by(const DegreeSequence& pi, const DegreeSequence& pi_prime) {
  const auto& a = pi.values;
  const auto& b = pi_prime.values;
  if (a.size() != b.size()) fail(Errc::LengthMismatch, "degree sequences differ in length");
  if (!std::is_sorted(a.begin(), a.end(), std::greater<>()) || !std::is_sorted(b.begin(), b.end(), std::greater<>())) {
    fail(Errc::NotSorted, "degree sequences must be non-increasing");
  }
  long long sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return sa == sb;
}

std::string class_label(const DegreeClass& c) {
  std::string out = "T*[";
  for (std::size_t i = 0; i < c.nonleaf.size(); ++i) {
    if (i) out += ':';
    out += std::to_string(c.nonleaf[i]);
  }
  return out + "]";
}

namespace {

ChainEntry power_entry(std::string name, const Hypergraph& h, double alpha, const PowerOptions& opts) {
  auto r = alpha_spectral_radius(h, alpha, opts);
  return {std::move(name), r.rho, "power", r.lower_bound, r.upper_bound, std::nullopt};
}

void cross_check(ChainEntry& entry, Family f, int m, int k, double alpha, std::vector<std::string>& failures) {
  const double solved = solve_family_rho(f, m, k, alpha).rho;
  entry.solver_rho = solved;
  entry.method = "both";
  if (std::abs(solved - entry.rho) > kSolverAgreement) {
    failures.push_back(entry.name + ": power " + format_sig(entry.rho) + " vs solver " + format_sig(solved));
  }
}

// Asserts entries[i] > entries[i + 1] + tol for every consecutive pair.
void strict_chain(OrderingReport& report, const std::vector<ChainEntry>& entries) {
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    const double margin = entries[i].rho - entries[i + 1].rho;
    report.min_margin = std::min(report.min_margin, margin);
    ++report.comparisons;
    if (!(margin > report.tolerance)) {
      report.failures.push_back("InsufficientSeparation: " + entries[i].name + " > " + entries[i + 1].name +
                                " margin " + format_sig(margin));
    }
  }
}

OrderingReport make_report(std::string check, int m, int k, double alpha, double tol) {
  OrderingReport r;
  r.check = std::move(check);
  r.m = m;
  r.k = k;
  r.alpha = alpha;
  r.tolerance = tol;
  r.min_margin = std::numeric_limits<double>::infinity();
  return r;
}

// Enclosures far narrower than the separation being tested.
PowerOptions comparison_options(PowerOptions opts, double tol) {
  opts.tolerance = std::min(opts.tolerance, std::max(tol / 1000.0, 1e-12));
  return opts;
}

void finish(OrderingReport& r) { r.verdict = r.failures.empty() && r.min_margin > r.tolerance; }

}  // namespace

OrderingReport verify_chain(int m, int k, double alpha, double tol, bool include_double_stars,
                            const PowerOptions& base_opts) {
  const auto opts = comparison_options(base_opts, tol);
  auto report = make_report("chain", m, k, alpha, tol);
  auto top = top_eight(m, k);
  top.push_back(double_star(4, m - 5, k));
  for (const auto& t : top) report.entries.push_back(power_entry(t.name, t.graph, alpha, opts));

  cross_check(report.entries[0], Family::Star, m, k, alpha, report.failures);
  cross_check(report.entries[4], Family::S1m41, m, k, alpha, report.failures);
  cross_check(report.entries[6], Family::S3m4, m, k, alpha, report.failures);
  cross_check(report.entries[8], Family::S4m5, m, k, alpha, report.failures);
  strict_chain(report, report.entries);

  if (include_double_stars) {
    for (int a = 0; a <= (m - 1) / 2; ++a) {
      auto ds = double_star(a, m - 1 - a, k);
      report.double_star_entries.push_back(power_entry(ds.name, ds.graph, alpha, opts));
    }
    strict_chain(report, report.double_star_entries);
  }
  finish(report);
  return report;
}

OrderingReport verify_maximizer_bound(int m, int k, double alpha, double tol, const PowerOptions& base_opts) {
  const auto opts = comparison_options(base_opts, tol);
  if (m < 7) fail(Errc::BadParams, "maximizer bound needs m >= 7");
  if (m > 20) fail(Errc::TooLarge, "maximizer bound is limited to m <= 20");
  auto report = make_report("bound", m, k, alpha, tol);

  const std::vector<std::vector<int>> exceptional_sets = {
      {m}, {m - 1, 2}, {m - 2, 3}, {m - 2, 2, 2}, {m - 3, 4}, {m - 3, 3, 2},
  };
  auto is_exceptional = [&](const DegreeClass& c) {
    auto sorted = c.nonleaf;
    for (auto s : exceptional_sets) {
      std::sort(s.begin(), s.end(), std::greater<>());
      if (s == sorted) return true;
    }
    return false;
  };

  const auto reference = t_supertree(1, 2, m - 4, k);
  const auto ref_entry = power_entry(reference.name, reference.graph, alpha, opts);
  report.entries.push_back(ref_entry);

  std::map<std::vector<int>, ChainEntry> exceptional_entries;
  std::map<std::vector<int>, Hypergraph> exceptional_trees;
  std::optional<ChainEntry> worst;
  for (const auto& c : enumerate_degree_classes(m)) {
    ++report.classes;
    const auto tree = bfs_supertree(c, k);
    auto entry = power_entry(class_label(c), tree, alpha, opts);
    if (is_exceptional(c)) {
      ++report.exceptional;
      exceptional_entries.emplace(c.nonleaf, entry);
      exceptional_trees.emplace(c.nonleaf, tree);
      continue;
    }
    const double margin = ref_entry.rho - entry.rho;
    report.min_margin = std::min(report.min_margin, margin);
    ++report.comparisons;
    if (margin > tol) {
      ++report.bounded;
    } else {
      report.failures.push_back("InsufficientSeparation: " + ref_entry.name + " > " + entry.name + " margin " +
                                format_sig(margin));
    }
    if (!worst || entry.rho > worst->rho) worst = entry;
  }

  // The class maximizers of the exceptional classes must reproduce the head of
  // the ordering.
  std::vector<ChainEntry> head;
  for (const auto& key : {std::vector<int>{m}, {m - 1, 2}, {m - 2, 3}, {m - 2, 2, 2}, {m - 3, 3, 2}}) {
    if (auto it = exceptional_entries.find(key); it != exceptional_entries.end()) head.push_back(it->second);
  }
  const double saved = report.min_margin;
  const int saved_comparisons = report.comparisons;
  strict_chain(report, head);
  report.min_margin = saved;  // min_margin reports the bound itself
  report.comparisons = saved_comparisons;

  if (auto it = exceptional_trees.find({m - 2, 2, 2}); it != exceptional_trees.end()) {
    if (!isomorphic_supertrees(it->second, t_supertree(1, 1, m - 3, k).graph)) {
      report.failures.push_back("T* of {m-2,2,2} is not T(1,1,m-3)");
    }
  }
  if (auto it = exceptional_trees.find({m - 3, 3, 2}); it != exceptional_trees.end()) {
    if (!isomorphic_supertrees(it->second, reference.graph)) {
      report.failures.push_back("T* of {m-3,3,2} is not T(1,2,m-4)");
    }
  }

  for (auto& e : head) report.entries.push_back(e);
  if (worst) report.entries.push_back(*worst);
  finish(report);
  return report;
}

OrderingReport verify_majorization_monotonicity(int m, int k, double alpha, double tol, const PowerOptions& base_opts) {
  const auto opts = comparison_options(base_opts, tol);
  if (m > 14) fail(Errc::TooLarge, "majorization check is limited to m <= 14");
  auto report = make_report("majorization", m, k, alpha, tol);
  const auto classes = enumerate_degree_classes(m);
  report.classes = static_cast<int>(classes.size());

  std::vector<ChainEntry> radii;
  std::vector<DegreeSequence> sequences;
  for (const auto& c : classes) {
    radii.push_back(power_entry(class_label(c), bfs_supertree(c, k), alpha, opts));
    sequences.push_back(c.full_sequence(k));
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (i == j || !is_majorized_by(sequences[i], sequences[j])) continue;
      const double margin = radii[j].rho - radii[i].rho;
      report.min_margin = std::min(report.min_margin, margin);
      ++report.comparisons;
      if (!(margin > tol)) {
        report.failures.push_back("InsufficientSeparation: " + radii[j].name + " > " + radii[i].name + " margin " +
                                  format_sig(margin));
      }
    }
  }
  // The star class majorizes everything, so its radius must be the maximum.
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[0].rho > radii[i].rho)) report.failures.push_back("star class is not the global maximum");
  }
  report.entries = std::move(radii);
  finish(report);
  return report;
}

OrderingReport verify_class_maximizer_bruteforce(int m, int k, double alpha, double tol, const PowerOptions& base_opts) {
  const auto opts = comparison_options(base_opts, tol);
  if (m > 5) fail(Errc::TooLarge, "brute-force class check is limited to m <= 5");
  auto report = make_report("bruteforce", m, k, alpha, tol);

  struct Member {
    std::string canon;
    double rho;
  };
  std::map<std::vector<int>, std::vector<Member>, std::greater<>> groups;
  for (const auto& t : enumerate_supertrees(m, k)) {
    groups[degree_class_of(t).nonleaf].push_back({canonical_form(t), alpha_spectral_radius(t, alpha, opts).rho});
  }
  report.classes = static_cast<int>(groups.size());
  for (auto& [nonleaf, members] : groups) {
    DegreeClass c{m, nonleaf};
    std::sort(members.begin(), members.end(), [](const Member& a, const Member& b) { return a.rho > b.rho; });
    const auto best = canonical_form(bfs_supertree(c, k));
    report.entries.push_back({class_label(c), members[0].rho, "power", members[0].rho, members[0].rho, std::nullopt});
    if (members[0].canon != best) report.failures.push_back(class_label(c) + ": maximizer is not T*");
    if (members.size() > 1) {
      const double margin = members[0].rho - members[1].rho;
      report.min_margin = std::min(report.min_margin, margin);
      ++report.comparisons;
      if (!(margin > tol)) {
        report.failures.push_back("InsufficientSeparation: " + class_label(c) + " runner-up margin " +
                                  format_sig(margin));
      }
    }
  }
  finish(report);
  return report;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Check c) {
  switch (c) {
    case Check::Chain: return "chain";
    case Check::Bound: return "bound";
    case Check::Majorization: return "majorization";
    case Check::BruteForce: return "bruteforce";
  }
  return "chain";
}

std::optional<Check> parse_check(std::string_view text) {
  for (Check c : {Check::Chain, Check::Bound, Check::Majorization, Check::BruteForce}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

OrderingReport run_check(Check check, int m, int k, double alpha, const SweepOptions& opts) {
  switch (check) {
    case Check::Chain: return verify_chain(m, k, alpha, opts.tol, opts.double_stars, opts.power);
    case Check::Bound: return verify_maximizer_bound(m, k, alpha, opts.tol, opts.power);
    case Check::Majorization: return verify_majorization_monotonicity(m, k, alpha, opts.tol, opts.power);
    case Check::BruteForce: return verify_class_maximizer_bruteforce(m, k, alpha, opts.tol, opts.power);
  }
  fail(Errc::BadParams, "unknown check");
}

std::string entries_field(const OrderingReport& report) {
  std::string out;
  for (const auto* list : {&report.entries, &report.double_star_entries}) {
    for (const auto& e : *list) {
      if (!out.empty()) out += ';';
      out += e.name + '=' + format_sig(e.rho);
    }
  }
  return out;
}

SweepRow to_row(const OrderingReport& report, Check check) {
  return {report.m, report.k, report.alpha, check, report.verdict, report.min_margin, entries_field(report), 0.0};
}

std::vector<SweepRow> sweep(const std::vector<int>& m_list, const std::vector<int>& k_list,
                            const std::vector<double>& alpha_list, const std::vector<Check>& checks,
                            const SweepOptions& opts) {
  std::vector<SweepRow> rows;
  for (int m : m_list) {
    for (int k : k_list) {
      for (double alpha : alpha_list) {
        for (Check check : checks) {
          const auto started = std::chrono::steady_clock::now();
          SweepRow row{m, k, alpha, check, false, std::numeric_limits<double>::quiet_NaN(), "", 0.0};
          try {
            row = to_row(run_check(check, m, k, alpha, opts), check);
          } catch (const Error& e) {
            row.entries = "error=" + std::string(to_string(e.code()));
          }
          row.runtime_ms =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

std::string csv_line(const SweepRow& row, bool timing) {
  std::string out = std::to_string(row.m) + ',' + std::to_string(row.k) + ',' + format_sig(row.alpha) + ',' +
                    std::string(to_string(row.check)) + ',' + (row.verdict ? "true" : "false") + ',' +
                    format_sig(row.min_margin) + ',' + row.entries + ',';
  if (timing) out += format_sig(row.runtime_ms, 6);
  return out;
}

}  // namespace alphaspec
