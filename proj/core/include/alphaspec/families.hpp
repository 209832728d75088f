#pragma once

#include <string>
#include <utility>
#include <vector>

#include "alphaspec/hypergraph.hpp"

namespace alphaspec {

/// Named vertices and edges of a constructed supertree.
///
/// `u[i]` is the vertex called u_{i+1} in the usual drawings of the double
/// star, triple star and T(t1,t2,t3) families. `e[i]` is the canonical edge
/// index of edge e_{i+1}: e_1 is the central edge, the path edge u2-u3 (for
/// triple stars) is e_2, and pendent edges follow grouped by attachment
/// vertex in u1, u2, u3 order.
struct Roles {
  std::vector<VertexId> u;
  std::vector<EdgeId> e;
};

struct LabeledSupertree {
  std::string name;
  Hypergraph graph;
  Roles roles;
};

/// Ordinary tree on vertices 0..t as a list of t edges.
using TreeEdgeList = std::vector<std::pair<int, int>>;

/// Non-leaf degrees of a supertree with m edges. Every degree is at least 2
/// and sum(d - 1) = m - 1.
struct DegreeClass {
  int m = 1;
  std::vector<int> nonleaf;  // non-increasing

  /// Full non-increasing degree sequence for uniformity k, padded with ones
  /// to n = m(k-1) + 1 entries.
  DegreeSequence full_sequence(int k) const;

  friend bool operator==(const DegreeClass&, const DegreeClass&) = default;
};

/// Non-leaf degree multiset of a supertree.
DegreeClass degree_class_of(const Hypergraph& h);

Hypergraph power_of_tree(const TreeEdgeList& tree, int k);

LabeledSupertree star(int m, int k);
LabeledSupertree double_star(int a, int b, int k);
LabeledSupertree triple_star(int s1, int s2, int s3, int k);
LabeledSupertree t_supertree(int t1, int t2, int t3, int k);

/// The supertree T* of a degree class: greedy breadth-first layout where the
/// vertex ids 0, 1, 2, ... form a BFS-ordering rooted at 0.
Hypergraph bfs_supertree(const DegreeClass& pi, int k);

/// Checks conditions (i)-(iv) of a BFS-ordering for the given vertex order
/// (order[0] is the root).
bool is_bfs_ordering(const Hypergraph& h, const std::vector<VertexId>& order);

/// The eight supertrees with the largest alpha-spectral radii, in decreasing
/// order: S_{m+1}, S_{1,m-2}, S_{2,m-3}, T(1,1,m-3), S_{1,m-4,1}, S_{m-3,0,1},
/// S_{3,m-4}, T(1,2,m-4). Requires m >= 7.
std::vector<LabeledSupertree> top_eight(int m, int k);

/// Integer partitions of m-1 shifted by one, in lexicographically decreasing
/// order. The first class is always the star class {m}.
std::vector<DegreeClass> enumerate_degree_classes(int m);

/// One representative per isomorphism class of k-uniform supertrees with m
/// edges. Limited to m <= 6.
std::vector<Hypergraph> enumerate_supertrees(int m, int k);

/// Canonical string of a supertree; equal strings iff isomorphic.
std::string canonical_form(const Hypergraph& supertree);

bool isomorphic_supertrees(const Hypergraph& a, const Hypergraph& b);

}  // namespace alphaspec
