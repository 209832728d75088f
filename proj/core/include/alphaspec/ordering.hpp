#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alphaspec/families.hpp"
#include "alphaspec/hypergraph.hpp"
#include "alphaspec/spectral.hpp"

namespace alphaspec {

/// pi is majorized by pi_prime: equal totals and every prefix sum of pi is at
/// most the matching prefix sum of pi_prime. Reflexive.
///
/// Throws LengthMismatch or NotSorted.
bool is_majorized_by(const DegreeSequence& pi, const DegreeSequence& pi_prime);

struct ChainEntry {
  std::string name;
  double rho = 0.0;
  std::string method = "power";  // power, solver or both
  double lower = 0.0;            // power-method enclosure
  double upper = 0.0;
  std::optional<double> solver_rho;
};

/// Outcome of one ordering check. `entries` lists the radii in the order the
/// check asserts them (largest first for chains).
struct OrderingReport {
  std::string check;
  int m = 0;
  int k = 0;
  double alpha = 0.0;
  double tolerance = 0.0;
  std::vector<ChainEntry> entries;
  std::vector<ChainEntry> double_star_entries;  // only when requested
  bool verdict = false;
  double min_margin = 0.0;
  int comparisons = 0;
  std::vector<std::string> failures;

  // Degree-class checks.
  int classes = 0;
  int exceptional = 0;
  int bounded = 0;
};

inline constexpr double kSolverAgreement = 1e-7;

/// The strict chain S_{m+1} > S_{1,m-2} > ... > T(1,2,m-4) > S_{4,m-5}, with
/// solver cross-checks for the star, S_{1,m-4,1}, S_{3,m-4} and S_{4,m-5}.
/// With `include_double_stars`, also S_{a,m-1-a} strictly decreasing for
/// a = 0 .. floor((m-1)/2).
OrderingReport verify_chain(int m, int k, double alpha, double tol = 1e-9, bool include_double_stars = false,
                            const PowerOptions& opts = {});

/// Every degree class outside the six realized by the top eight has a T*
/// strictly below T(1,2,m-4).
OrderingReport verify_maximizer_bound(int m, int k, double alpha, double tol = 1e-9, const PowerOptions& opts = {});

/// rho(T*(pi')) > rho(T*(pi)) + tol for every comparable pair pi < pi'.
/// Limited to m <= 14.
OrderingReport verify_majorization_monotonicity(int m, int k, double alpha, double tol = 1e-9,
                                                const PowerOptions& opts = {});

/// Within each degree class, the unique maximizer over all supertrees is T*.
/// Limited to m <= 5.
OrderingReport verify_class_maximizer_bruteforce(int m, int k, double alpha, double tol = 1e-9,
                                                 const PowerOptions& opts = {});

/// Label used for degree classes in reports, e.g. "T*[10:3:2]".
std::string class_label(const DegreeClass& c);

// ---------------------------------------------------------------------------

enum class Check { Chain, Bound, Majorization, BruteForce };

std::string_view to_string(Check c);
std::optional<Check> parse_check(std::string_view text);

struct SweepRow {
  int m = 0;
  int k = 0;
  double alpha = 0.0;
  Check check = Check::Chain;
  bool verdict = false;
  double min_margin = 0.0;
  std::string entries;  // "name=rho;..." or "error=<message>"
  double runtime_ms = 0.0;
};

struct SweepOptions {
  double tol = 1e-9;
  bool double_stars = false;
  PowerOptions power;
};

OrderingReport run_check(Check check, int m, int k, double alpha, const SweepOptions& opts = {});

/// One row per (m, k, alpha, check), in that nesting order. Failures inside a
/// cell are recorded in the row and the sweep continues.
std::vector<SweepRow> sweep(const std::vector<int>& m_list, const std::vector<int>& k_list,
                            const std::vector<double>& alpha_list, const std::vector<Check>& checks,
                            const SweepOptions& opts = {});

SweepRow to_row(const OrderingReport& report, Check check);

inline constexpr const char* kCsvHeader = "m,k,alpha,check,verdict,min_margin,entries,runtime_ms";

/// One CSV line (no newline). runtime_ms is left empty unless `timing` is set
/// so that repeated runs are byte-identical.
std::string csv_line(const SweepRow& row, bool timing = false);

/// "name=rho;name=rho" with 12 significant digits.
std::string entries_field(const OrderingReport& report);

}  // namespace alphaspec
