#include "emit.hpp"

#include <cmath>
#include <json.hpp>

#include "alphaspec/format.hpp"

namespace alphaspec::cli {

namespace {

using nlohmann::ordered_json;

// Rounds to 12 significant digits so the JSON text is as stable as the CSV.
ordered_json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::stod(format_sig(value));
}

ordered_json numbers(const std::vector<double>& values) {
  auto out = ordered_json::array();
  for (double v : values) out.push_back(number(v));
  return out;
}

ordered_json entries_json(const std::vector<ChainEntry>& entries) {
  auto out = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json j;
    j["name"] = e.name;
    j["rho"] = number(e.rho);
    j["method"] = e.method;
    j["lower"] = number(e.lower);
    j["upper"] = number(e.upper);
    j["solver_rho"] = e.solver_rho ? number(*e.solver_rho) : ordered_json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string emit(const OrderingReport& r, Format format, bool timing, double runtime_ms) {
  switch (format) {
    case Format::Csv: {
      auto check = parse_check(r.check).value_or(Check::Chain);
      auto row = to_row(r, check);
      row.runtime_ms = runtime_ms;
      return std::string(kCsvHeader) + "\n" + csv_line(row, timing) + "\n";
    }
    case Format::Json: {
      ordered_json j;
      j["check"] = r.check;
      j["m"] = r.m;
      j["k"] = r.k;
      j["alpha"] = number(r.alpha);
      j["tolerance"] = number(r.tolerance);
      j["verdict"] = r.verdict;
      j["min_margin"] = number(r.min_margin);
      j["comparisons"] = r.comparisons;
      j["classes"] = r.classes;
      j["exceptional"] = r.exceptional;
      j["bounded"] = r.bounded;
      j["entries"] = entries_json(r.entries);
      j["double_star_entries"] = entries_json(r.double_star_entries);
      j["failures"] = r.failures;
      return j.dump(2) + "\n";
    }
    case Format::Table: {
      std::string out = "check " + r.check + "  m=" + std::to_string(r.m) + " k=" + std::to_string(r.k) +
                        " alpha=" + format_sig(r.alpha) + " tol=" + format_sig(r.tolerance) + "\n";
      std::size_t width = 8;
      for (const auto* list : {&r.entries, &r.double_star_entries}) {
        for (const auto& e : *list) width = std::max(width, e.name.size() + 2);
      }
      auto rows = [&](const std::vector<ChainEntry>& list) {
        for (const auto& e : list) {
          out += "  " + pad(e.name, width) + format_fixed(e.rho) + "  " + e.method;
          if (e.solver_rho) out += "  solver=" + format_fixed(*e.solver_rho);
          out += "\n";
        }
      };
      rows(r.entries);
      if (!r.double_star_entries.empty()) {
        out += "double stars:\n";
        rows(r.double_star_entries);
      }
      if (r.classes > 0) {
        out += "classes=" + std::to_string(r.classes) + " exceptional=" + std::to_string(r.exceptional) +
               " bounded=" + std::to_string(r.bounded) + "\n";
      }
      out += "comparisons=" + std::to_string(r.comparisons) + " min_margin=" + format_sig(r.min_margin) + "\n";
      for (const auto& f : r.failures) out += "FAIL " + f + "\n";
      out += std::string("verdict ") + (r.verdict ? "true" : "false") + "\n";
      return out;
    }
  }
  return {};
}

std::string emit(const CertificateReport& r, Format format) {
  if (format == Format::Json) {
    ordered_json j;
    j["mode"] = std::string(to_string(r.mode));
    j["classification"] = std::string(to_string(r.classification));
    j["target_rho"] = number(r.target_rho);
    j["target_product"] = number(r.target_product);
    j["max_sum_violation"] = number(r.max_sum_violation);
    j["max_product_violation"] = number(r.max_product_violation);
    j["consistent"] = r.consistent;
    j["vertex_sums"] = numbers(r.vertex_sums);
    j["edge_products"] = numbers(r.edge_products);
    return j.dump(2) + "\n";
  }
  if (format == Format::Csv) {
    std::string out = "kind,index,value\n";
    for (std::size_t v = 0; v < r.vertex_sums.size(); ++v) {
      out += "vertex_sum," + std::to_string(v) + "," + format_sig(r.vertex_sums[v]) + "\n";
    }
    for (std::size_t e = 0; e < r.edge_products.size(); ++e) {
      out += "edge_product," + std::to_string(e) + "," + format_sig(r.edge_products[e]) + "\n";
    }
    return out;
  }
  std::string out;
  out += "mode = " + std::string(to_string(r.mode)) + "\n";
  out += "target rho = " + format_fixed(r.target_rho) + "\n";
  out += "target product = " + format_fixed(r.target_product) + "\n";
  out += "max sum violation = " + format_sig(r.max_sum_violation) + "\n";
  out += "max product violation = " + format_sig(r.max_product_violation) + "\n";
  out += std::string("consistent = ") + (r.consistent ? "true" : "false") + "\n";
  out += "classification = " + std::string(to_string(r.classification)) + "\n";
  return out;
}

std::string emit(const SpectralResult& r, Format format) {
  if (format == Format::Json) {
    ordered_json j;
    j["rho"] = number(r.rho);
    j["lower_bound"] = number(r.lower_bound);
    j["upper_bound"] = number(r.upper_bound);
    j["residual"] = number(r.residual);
    j["iterations"] = r.iterations;
    j["eigenvector"] = numbers(r.eigenvector);
    return j.dump(2) + "\n";
  }
  if (format == Format::Csv) {
    std::string out = "rho,lower_bound,upper_bound,residual,iterations\n";
    out += format_sig(r.rho) + "," + format_sig(r.lower_bound) + "," + format_sig(r.upper_bound) + "," +
           format_sig(r.residual) + "," + std::to_string(r.iterations) + "\n";
    return out;
  }
  std::string out = "rho = " + format_fixed(r.rho) + "\n";
  out += "enclosure = [" + format_fixed(r.lower_bound) + ", " + format_fixed(r.upper_bound) + "]\n";
  out += "residual = " + format_sig(r.residual) + "\n";
  out += "iterations = " + std::to_string(r.iterations) + "\n";
  return out;
}

std::string emit(const std::vector<SweepRow>& rows, Format format, bool timing) {
  if (format == Format::Json) {
    auto j = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json o;
      o["m"] = row.m;
      o["k"] = row.k;
      o["alpha"] = number(row.alpha);
      o["check"] = std::string(to_string(row.check));
      o["verdict"] = row.verdict;
      o["min_margin"] = number(row.min_margin);
      o["entries"] = row.entries;
      if (timing) o["runtime_ms"] = number(row.runtime_ms);
      j.push_back(std::move(o));
    }
    return j.dump(2) + "\n";
  }
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& row : rows) out += csv_line(row, timing) + "\n";
  return out;
}

}  // namespace alphaspec::cli
