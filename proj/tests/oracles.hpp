#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library except for reading a hypergraph's structure.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "alphaspec/hypergraph.hpp"

namespace oracle {

// Number of integer partitions of n, by the classic coin-change recurrence.
inline long partition_count(int n) {
  std::vector<long> ways(n + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int total = part; total <= n; ++total) ways[total] += ways[total - part];
  }
  return ways[n];
}

// Every partition of n as a non-increasing list, generated recursively.
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

// Isomorphism by trying every vertex permutation. Only for tiny graphs.
inline bool isomorphic_bruteforce(const alphaspec::Hypergraph& a, const alphaspec::Hypergraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.uniformity() != b.uniformity()) {
    return false;
  }
  const int n = a.num_vertices();
  std::set<std::vector<int>> target;
  for (const auto& e : b.edge_list()) target.insert(e);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edge_list()) {
      std::vector<int> image;
      for (int v : e) image.push_back(perm[v]);
      std::sort(image.begin(), image.end());
      if (!target.count(image)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Star closed form (rho - m a)(rho - a)^(k-1) = m (1-a)^k solved by Newton
// from above in long double.
inline long double star_closed_form(int m, int k, long double a) {
  auto f = [&](long double r) { return (r - m * a) * std::pow(r - a, k - 1) - m * std::pow(1 - a, k); };
  auto df = [&](long double r) {
    return std::pow(r - a, k - 1) + (k - 1) * (r - m * a) * std::pow(r - a, k - 2);
  };
  long double r = m + 1.0L;
  for (int i = 0; i < 200; ++i) {
    long double step = f(r) / df(r);
    r -= step;
    if (std::fabs(step) < 1e-18L) break;
  }
  return r;
}

// Damped power iteration x -> (x + (A_alpha x)^{1/(k-1)}) / 2 with max
// normalisation, evaluated directly from the edge list in long double.
// Returns the Collatz-Wielandt midpoint once the bounds are within tol.
struct Eigen {
  long double rho;
  std::vector<long double> x;
};

inline Eigen perron(const alphaspec::Hypergraph& h, long double a, long double tol = 1e-13L, int max_iter = 2000000) {
  const int n = h.num_vertices();
  const int k = h.uniformity();
  std::vector<long double> x(n, 1.0L), y(n);
  std::vector<int> deg(n, 0);
  for (const auto& e : h.edge_list()) {
    for (int v : e) ++deg[v];
  }
  long double lo = 0, hi = 0;
  for (int it = 0; it < max_iter; ++it) {
    for (int v = 0; v < n; ++v) y[v] = a * deg[v] * std::pow(x[v], k - 1);
    for (const auto& e : h.edge_list()) {
      for (int v : e) {
        long double p = 1 - a;
        for (int u : e) {
          if (u != v) p *= x[u];
        }
        y[v] += p;
      }
    }
    lo = INFINITY;
    hi = 0;
    for (int v = 0; v < n; ++v) {
      long double q = y[v] / std::pow(x[v], k - 1);
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    if (hi - lo < tol) break;
    long double mx = 0;
    for (int v = 0; v < n; ++v) {
      y[v] = 0.5L * (x[v] + std::pow(y[v], 1.0L / (k - 1)));
      mx = std::max(mx, y[v]);
    }
    for (int v = 0; v < n; ++v) x[v] = y[v] / mx;
  }
  return {(lo + hi) / 2, x};
}

}  // namespace oracle
