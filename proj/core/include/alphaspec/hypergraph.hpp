#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alphaspec {

using VertexId = int;
using EdgeId = int;

/// A simple k-uniform hypergraph on vertices 0..n-1.
///
/// Instances are immutable once built. Members of each edge are stored in
/// strictly increasing order and the edge list is sorted lexicographically,
/// so two hypergraphs with the same edge set compare equal and serialize to
/// identical text.
class Hypergraph {
 public:
  /// Validates and canonicalizes the edge list.
  ///
  /// Throws Error with EdgeArity (wrong size or repeated vertex), VertexRange,
  /// DuplicateEdge, or BadParams (n < k, k < 2, no edges).
  static Hypergraph build(int n, int k, std::vector<std::vector<VertexId>> edges);

  int num_vertices() const noexcept { return n_; }
  int uniformity() const noexcept { return k_; }
  int num_edges() const noexcept { return static_cast<int>(members_.size()) / k_; }

  std::span<const VertexId> edge(EdgeId e) const {
    return {members_.data() + static_cast<std::size_t>(e) * k_, static_cast<std::size_t>(k_)};
  }

  /// Edges containing v, in increasing edge order.
  std::span<const EdgeId> incident(VertexId v) const {
    return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  int degree(VertexId v) const noexcept {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }

  /// Position of v inside edge e, or -1 when v is not a member.
  int position_in_edge(VertexId v, EdgeId e) const;

  /// Index of the edge whose member set equals `members`, or -1.
  EdgeId find_edge(std::vector<VertexId> members) const;

  std::vector<std::vector<VertexId>> edge_list() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  Hypergraph() = default;

  int n_ = 0;
  int k_ = 0;
  std::vector<VertexId> members_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeId> incidence_;
};

/// Non-increasing degree list; every value is at least 1.
struct DegreeSequence {
  std::vector<int> values;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

struct Degrees {
  std::vector<int> per_vertex;
  DegreeSequence sorted;
};

Degrees degrees(const Hypergraph& h);

/// True iff the bipartite vertex-edge incidence graph is connected, which
/// is the same as weak irreducibility of the alpha-tensor.
bool is_connected(const Hypergraph& h);

/// Connected and n = m(k-1) + 1.
bool is_supertree(const Hypergraph& h);

/// Text format: a header line "n k m", then one edge per line. Lines starting
/// with '#' are comments.
Hypergraph read_text(std::string_view text);
std::string write_text(const Hypergraph& h);

}  // namespace alphaspec
