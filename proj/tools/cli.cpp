#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "alphaspec/error.hpp"
#include "alphaspec/families.hpp"
#include "alphaspec/format.hpp"
#include "alphaspec/hypergraph.hpp"
#include "alphaspec/labeling.hpp"
#include "alphaspec/ordering.hpp"
#include "alphaspec/spectral.hpp"
#include "emit.hpp"

namespace alphaspec::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_to(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      T value{};
      if constexpr (std::is_same_v<T, int>) {
        value = std::stoi(item, &used);
      } else {
        value = std::stod(item, &used);
      }
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("bad value '") + item + "' in " + flag);
    }
  }
  return out;
}

bool mode_accepts(CertificateMode mode, Classification c) {
  switch (mode) {
    case CertificateMode::Normal: return c == Classification::Normal;
    case CertificateMode::Subnormal:
      return c == Classification::StrictlySubnormal || c == Classification::SubnormalNonstrict;
    case CertificateMode::Supernormal:
      return c == Classification::StrictlySupernormal || c == Classification::SupernormalNonstrict;
  }
  return false;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NoConvergence:
    case Errc::NoRoot:
    case Errc::ConstraintViolated:
      return kExitNumerical;
    default:
      return kExitUsage;
  }
}

struct Common {
  double alpha = 0.0;
  double tol = 1e-9;
  int max_iter = 100000;
  bool json = false;
  std::string csv;
  bool timing = false;
};

PowerOptions power_options(const Common& c) {
  PowerOptions o;
  o.max_iterations = c.max_iter;
  return o;
}

Format format_of(const Common& c) { return c.json ? Format::Json : Format::Table; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"alpha-spectral radii of uniform supertrees and labeling certificates", "alphaspec"};
  app.require_subcommand(1);

  Common c;
  std::string graph_path, cert_path, write_cert, case_tag, mode_text = "normal";
  std::string m_text, k_text, alpha_text, checks_text = "chain";
  int m = 0, k = 3;
  std::optional<double> rho;
  bool double_stars = false, supertrees = false;
  std::string family_name;
  std::vector<int> family_params;

  auto* radius = app.add_subcommand("radius", "alpha-spectral radius of a hypergraph file");
  radius->add_option("--graph", graph_path, "hypergraph text file")->required();
  radius->add_option("--alpha", c.alpha)->required();
  double radius_tol = 1e-10;
  radius->add_option("--tol", radius_tol, "enclosure width");
  radius->add_option("--max-iter", c.max_iter);
  radius->add_flag("--json", c.json);

  auto* family = app.add_subcommand("family", "write a named supertree in hypergraph text format");
  family->add_option("name", family_name, "star | dstar | tstar | tsup | bfs | power")->required();
  family->add_option("params", family_params, "integer parameters");
  family->add_option("--k", k);

  auto* certify = app.add_subcommand("certify", "classify a weighted incidence certificate");
  certify->add_option("--graph", graph_path)->required();
  certify->add_option("--cert", cert_path, "certificate file; omitted = derive from the Perron vector");
  certify->add_option("--alpha", c.alpha)->required();
  certify->add_option("--rho", rho);
  certify->add_option("--mode", mode_text);
  double cert_tol = CertificateTolerance{}.sum;
  certify->add_option("--tol", cert_tol, "absolute tolerance on vertex sums");
  certify->add_option("--max-iter", c.max_iter);
  certify->add_option("--write-cert", write_cert, "write the certificate used (PATH or -)");
  certify->add_flag("--json", c.json);

  auto* lemma = app.add_subcommand("lemma-cert", "build and classify one of the explicit certificates");
  lemma->add_option("--case", case_tag)->required();
  lemma->add_option("--m", m)->required();
  lemma->add_option("--k", k);
  lemma->add_option("--alpha", c.alpha)->required();
  lemma->add_option("--write-cert", write_cert);
  lemma->add_flag("--json", c.json);

  auto* order = app.add_subcommand("order", "verify the strict ordering of the eight largest radii");
  order->add_option("--m", m)->required();
  order->add_option("--k", k);
  order->add_option("--alpha", c.alpha)->required();
  order->add_option("--tol", c.tol);
  order->add_option("--max-iter", c.max_iter);
  order->add_flag("--double-stars", double_stars);
  order->add_option("--csv", c.csv, "PATH or -");
  order->add_flag("--json", c.json);
  order->add_flag("--timing", c.timing, "fill runtime_ms in CSV output");

  auto* bound = app.add_subcommand("bound", "bound every other degree class below T(1,2,m-4)");
  bound->add_option("--m", m)->required();
  bound->add_option("--k", k);
  bound->add_option("--alpha", c.alpha)->required();
  bound->add_option("--tol", c.tol);
  bound->add_option("--max-iter", c.max_iter);
  bound->add_option("--csv", c.csv);
  bound->add_flag("--json", c.json);
  bound->add_flag("--timing", c.timing);

  auto* sweep_cmd = app.add_subcommand("sweep", "grid of checks over m, k and alpha");
  sweep_cmd->add_option("--m", m_text, "comma-separated list")->required();
  sweep_cmd->add_option("--k", k_text, "comma-separated list")->required();
  sweep_cmd->add_option("--alpha", alpha_text, "comma-separated list")->required();
  sweep_cmd->add_option("--checks", checks_text, "chain,bound,majorization,bruteforce");
  sweep_cmd->add_option("--tol", c.tol);
  sweep_cmd->add_option("--max-iter", c.max_iter);
  sweep_cmd->add_flag("--double-stars", double_stars);
  sweep_cmd->add_option("--csv", c.csv);
  sweep_cmd->add_flag("--json", c.json);
  sweep_cmd->add_flag("--timing", c.timing);

  auto* enumerate = app.add_subcommand("enum", "list degree classes or supertrees");
  enumerate->add_option("--m", m)->required();
  enumerate->add_option("--k", k);
  enumerate->add_flag("--supertrees", supertrees, "list supertrees instead of degree classes");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*radius) {
      auto h = read_text(read_file(graph_path));
      auto opts = power_options(c);
      opts.tolerance = radius_tol;
      out << emit(alpha_spectral_radius(h, c.alpha, opts), format_of(c));
      return kExitOk;
    }

    if (*family) {
      auto need = [&](std::size_t count) {
        if (family_params.size() != count) {
          throw UsageError("family " + family_name + " takes " + std::to_string(count) + " parameters");
        }
      };
      const auto& p = family_params;
      if (family_name == "star") {
        need(1);
        out << write_text(star(p[0], k).graph);
      } else if (family_name == "dstar") {
        need(2);
        out << write_text(double_star(p[0], p[1], k).graph);
      } else if (family_name == "tstar") {
        need(3);
        out << write_text(triple_star(p[0], p[1], p[2], k).graph);
      } else if (family_name == "tsup") {
        need(3);
        out << write_text(t_supertree(p[0], p[1], p[2], k).graph);
      } else if (family_name == "bfs") {
        DegreeClass pi{1, p};
        for (int d : p) pi.m += d - 1;
        out << write_text(bfs_supertree(pi, k));
      } else if (family_name == "power") {
        if (p.size() % 2 != 0) throw UsageError("power takes tree edges as pairs of vertex ids");
        TreeEdgeList tree;
        for (std::size_t i = 0; i < p.size(); i += 2) tree.emplace_back(p[i], p[i + 1]);
        out << write_text(power_of_tree(tree, k));
      } else {
        throw UsageError("unknown family " + family_name);
      }
      return kExitOk;
    }

    if (*certify) {
      auto mode = parse_mode(mode_text);
      if (!mode) throw UsageError("--mode must be normal, subnormal or supernormal");
      auto h = read_text(read_file(graph_path));
      std::optional<WeightedIncidence> weights;
      if (!cert_path.empty()) {
        auto parsed = read_certificate(h, read_file(cert_path));
        if (!rho) rho = parsed.rho;
        weights = std::move(parsed.weights);
      } else {
        auto spectral = alpha_spectral_radius(h, c.alpha, power_options(c));
        auto labeling = labeling_from_eigenvector(h, c.alpha, spectral.eigenvector);
        if (!rho) rho = labeling.rho;
        weights = std::move(labeling.weights);
      }
      if (!rho) throw UsageError("no rho: pass --rho or put a \"rho\" line in the certificate");
      if (!write_cert.empty()) write_to(write_cert, write_certificate(h, *rho, *weights), out);
      CertificateTolerance tol;
      tol.sum = cert_tol;
      auto report = check_certificate(h, c.alpha, *rho, *weights, *mode, tol);
      out << emit(report, format_of(c));
      return mode_accepts(*mode, report.classification) ? kExitOk : kExitVerdictFalse;
    }

    if (*lemma) {
      auto which = parse_lemma_case(case_tag);
      if (!which) throw UsageError("unknown --case " + case_tag);
      auto cert = build_lemma_certificate(*which, m, k, c.alpha);
      const auto& h = cert.graph.graph;
      auto report = check_certificate(h, c.alpha, cert.rho_ref, cert.weights, lemma_mode(*which),
                                      CertificateTolerance::analytic());
      if (!write_cert.empty()) write_to(write_cert, write_certificate(h, cert.rho_ref, cert.weights), out);
      const bool ok = cert.expected == Classification::None || report.classification == cert.expected;
      if (c.json) {
        out << "{\"case\": \"" << to_string(*which) << "\", \"graph\": \"" << cert.graph.name
            << "\", \"rho_ref\": " << format_sig(cert.rho_ref) << ", \"expected\": \"" << to_string(cert.expected)
            << "\", \"exceptional_vertex\": " << cert.exceptional << ", \"report\": " << emit(report, Format::Json)
            << "}\n";
        return ok ? kExitOk : kExitVerdictFalse;
      }
      out << "case = " << to_string(*which) << "\n";
      out << "graph = " << cert.graph.name << "  n=" << h.num_vertices() << " m=" << h.num_edges()
          << " k=" << h.uniformity() << "\n";
      out << "rho_ref = " << format_fixed(cert.rho_ref) << "  (" << to_string(lemma_reference_family(*which))
          << ")\n";
      out << "exceptional vertex = " << cert.exceptional << "\n";
      out << "v e B(v,e) vertex_sum\n";
      for (EdgeId e = 0; e < h.num_edges(); ++e) {
        auto members = h.edge(e);
        for (int pos = 0; pos < h.uniformity(); ++pos) {
          out << members[pos] << ' ' << e << ' ' << format_sig(cert.weights.slot(e, pos)) << ' '
              << format_sig(report.vertex_sums[members[pos]]) << "\n";
        }
      }
      out << emit(report, Format::Table);
      out << "expected = " << to_string(cert.expected) << "\n";
      return ok ? kExitOk : kExitVerdictFalse;
    }

    if (*order || *bound) {
      const auto started = std::chrono::steady_clock::now();
      auto report = *order ? verify_chain(m, k, c.alpha, c.tol, double_stars, power_options(c))
                           : verify_maximizer_bound(m, k, c.alpha, c.tol, power_options(c));
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
      if (!c.csv.empty()) write_to(c.csv, emit(report, Format::Csv, c.timing, ms), out);
      if (c.csv != "-") out << emit(report, format_of(c));
      return report.verdict ? kExitOk : kExitVerdictFalse;
    }

    if (*sweep_cmd) {
      std::vector<Check> checks;
      for (const auto& name : CLI::detail::split(checks_text, ',')) {
        if (name.empty()) continue;
        auto check = parse_check(name);
        if (!check) throw UsageError("unknown check " + name);
        checks.push_back(*check);
      }
      SweepOptions opts;
      opts.tol = c.tol;
      opts.double_stars = double_stars;
      opts.power = power_options(c);
      auto rows = sweep(parse_list<int>(m_text, "--m"), parse_list<int>(k_text, "--k"),
                        parse_list<double>(alpha_text, "--alpha"), checks, opts);
      if (!c.csv.empty()) write_to(c.csv, emit(rows, Format::Csv, c.timing), out);
      if (c.csv.empty() || (c.json && c.csv != "-")) out << emit(rows, c.json ? Format::Json : Format::Csv, c.timing);
      const bool all = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.verdict; });
      return all ? kExitOk : kExitVerdictFalse;
    }

    if (*enumerate) {
      if (supertrees) {
        auto list = enumerate_supertrees(m, k);
        out << "# " << list.size() << " supertrees with m=" << m << " k=" << k << "\n";
        for (const auto& t : list) out << write_text(t);
      } else {
        auto classes = enumerate_degree_classes(m);
        out << "# " << classes.size() << " degree classes with m=" << m << "\n";
        for (const auto& cls : classes) out << class_label(cls) << "\n";
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace alphaspec::cli
