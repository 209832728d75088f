#include "alphaspec/families.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "alphaspec/error.hpp"

namespace alphaspec {

namespace {

// Lays down edges in the order the family definitions name them, then maps
// each named edge to its canonical index once the hypergraph is built.
class SupertreeBuilder {
 public:
  explicit SupertreeBuilder(int k) : k_(k) {}

  VertexId add_vertex() { return next_++; }

  // New edge through the given vertices, filled up with fresh vertices.
  void add_edge(std::vector<VertexId> fixed) {
    while (static_cast<int>(fixed.size()) < k_) fixed.push_back(add_vertex());
    edges_.push_back(std::move(fixed));
  }

  void add_pendent(VertexId at, int count) {
    for (int i = 0; i < count; ++i) add_edge({at});
  }

  LabeledSupertree finish(std::string name, std::vector<VertexId> named) {
    auto graph = Hypergraph::build(next_, k_, edges_);
    Roles roles{std::move(named), {}};
    roles.e.reserve(edges_.size());
    for (const auto& e : edges_) roles.e.push_back(graph.find_edge(e));
    return {std::move(name), std::move(graph), std::move(roles)};
  }

 private:
  int k_;
  int next_ = 0;
  std::vector<std::vector<VertexId>> edges_;
};

void require_k(int k) {
  if (k < 3) fail(Errc::BadParams, "supertree families need k >= 3, got " + std::to_string(k));
}

std::string join(std::initializer_list<int> parts) {
  std::string out;
  for (int p : parts) {
    if (!out.empty()) out += ':';
    out += std::to_string(p);
  }
  return out;
}

}  // namespace

DegreeSequence DegreeClass::full_sequence(int k) const {
  const int n = m * (k - 1) + 1;
  DegreeSequence seq{nonleaf};
  std::sort(seq.values.begin(), seq.values.end(), std::greater<>());
  seq.values.resize(std::max<std::size_t>(n, seq.values.size()), 1);
  return seq;
}

DegreeClass degree_class_of(const Hypergraph& h) {
  DegreeClass c{h.num_edges(), {}};
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (h.degree(v) > 1) c.nonleaf.push_back(h.degree(v));
  }
  std::sort(c.nonleaf.begin(), c.nonleaf.end(), std::greater<>());
  return c;
}

Hypergraph power_of_tree(const TreeEdgeList& tree, int k) {
  require_k(k);
  if (tree.empty()) fail(Errc::NotATree, "tree has no edges");
  const int order = static_cast<int>(tree.size()) + 1;
  std::vector<int> parent(order);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : tree) {
    if (a < 0 || b < 0 || a >= order || b >= order || a == b) {
      fail(Errc::NotATree, "tree edge (" + std::to_string(a) + "," + std::to_string(b) +
                               ") is not on vertices 0.." + std::to_string(order - 1));
    }
    int ra = find(a), rb = find(b);
    if (ra == rb) fail(Errc::NotATree, "tree edges contain a cycle or a repeated pair");
    parent[ra] = rb;
  }

  std::vector<std::vector<VertexId>> edges;
  int next = order;
  for (auto [a, b] : tree) {
    std::vector<VertexId> e{a, b};
    while (static_cast<int>(e.size()) < k) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(next, k, std::move(edges));
}

LabeledSupertree star(int m, int k) {
  require_k(k);
  if (m < 1) fail(Errc::BadParams, "star needs m >= 1");
  SupertreeBuilder b(k);
  VertexId center = b.add_vertex();
  b.add_pendent(center, m);
  return b.finish("S(" + std::to_string(m + 1) + ")", {center});
}

LabeledSupertree double_star(int a, int b, int k) {
  require_k(k);
  if (a < 0 || b < 1) fail(Errc::BadParams, "double star needs a >= 0 and b >= 1");
  SupertreeBuilder sb(k);
  VertexId u1 = sb.add_vertex(), u2 = sb.add_vertex();
  sb.add_edge({u1, u2});
  sb.add_pendent(u1, a);
  sb.add_pendent(u2, b);
  return sb.finish("S(" + join({a, b}) + ")", {u1, u2});
}

LabeledSupertree triple_star(int s1, int s2, int s3, int k) {
  require_k(k);
  if (s1 < 1 || s2 < 0 || s3 < 1) fail(Errc::BadParams, "triple star needs s1, s3 >= 1 and s2 >= 0");
  SupertreeBuilder b(k);
  VertexId u1 = b.add_vertex(), u2 = b.add_vertex(), u3 = b.add_vertex();
  b.add_edge({u1, u2});
  b.add_edge({u2, u3});
  b.add_pendent(u1, s1);
  b.add_pendent(u2, s2);
  b.add_pendent(u3, s3);
  return b.finish("S(" + join({s1, s2, s3}) + ")", {u1, u2, u3});
}

LabeledSupertree t_supertree(int t1, int t2, int t3, int k) {
  require_k(k);
  if (t1 < 1 || t2 < 1 || t3 < 1) fail(Errc::BadParams, "T(t1,t2,t3) needs every t_i >= 1");
  SupertreeBuilder b(k);
  VertexId u1 = b.add_vertex(), u2 = b.add_vertex(), u3 = b.add_vertex();
  b.add_edge({u1, u2, u3});
  b.add_pendent(u1, t1);
  b.add_pendent(u2, t2);
  b.add_pendent(u3, t3);
  return b.finish("T(" + join({t1, t2, t3}) + ")", {u1, u2, u3});
}

Hypergraph bfs_supertree(const DegreeClass& pi, int k) {
  if (k < 2) fail(Errc::BadParams, "k must be at least 2");
  if (pi.m < 1) fail(Errc::InfeasibleSequence, "degree class needs m >= 1");
  long long excess = 0;
  for (int d : pi.nonleaf) {
    if (d < 2) fail(Errc::InfeasibleSequence, "non-leaf degrees must be >= 2");
    excess += d - 1;
  }
  if (excess != pi.m - 1) {
    fail(Errc::InfeasibleSequence, "sum(d - 1) = " + std::to_string(excess) + " but m - 1 = " +
                                       std::to_string(pi.m - 1));
  }
  std::vector<int> degs = pi.nonleaf;
  std::sort(degs.begin(), degs.end(), std::greater<>());

  // The root takes the largest degree (or 1 when every vertex is a leaf of a
  // single edge); then vertices take the remaining degrees in creation order.
  std::size_t next_degree = 0;
  auto take_degree = [&] { return next_degree < degs.size() ? degs[next_degree++] : 1; };

  std::vector<std::vector<VertexId>> edges;
  int next_vertex = 1;
  std::deque<VertexId> queue;
  auto grow = [&](VertexId v, int children) {
    for (int c = 0; c < children; ++c) {
      std::vector<VertexId> e{v};
      for (int i = 1; i < k; ++i) {
        e.push_back(next_vertex);
        queue.push_back(next_vertex++);
      }
      edges.push_back(std::move(e));
    }
  };
  grow(0, std::max(take_degree(), 1));
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    grow(v, take_degree() - 1);
  }
  return Hypergraph::build(next_vertex, k, std::move(edges));
}

bool is_bfs_ordering(const Hypergraph& h, const std::vector<VertexId>& order) {
  const int n = h.num_vertices();
  if (static_cast<int>(order.size()) != n || !is_supertree(h)) return false;
  std::vector<int> rank(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || rank[order[i]] != -1) return false;
    rank[order[i]] = i;
  }

  // Heights and parent vertices from the root.
  std::vector<int> height(n, -1), parent(n, -1);
  std::vector<EdgeId> parent_edge(n, -1);
  std::deque<VertexId> queue{order[0]};
  height[order[0]] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : h.incident(v)) {
      for (VertexId u : h.edge(e)) {
        if (height[u] != -1) continue;
        height[u] = height[v] + 1;
        parent[u] = v;
        parent_edge[u] = e;
        queue.push_back(u);
      }
    }
  }

  for (int i = 0; i + 1 < n; ++i) {
    VertexId a = order[i], b = order[i + 1];
    if (height[a] > height[b]) return false;          // (i)
    if (h.degree(a) < h.degree(b)) return false;      // (ii)
  }
  // (iii): parents appear in the same relative order as their children.
  for (int i = 1; i + 1 < n; ++i) {
    VertexId a = order[i], b = order[i + 1];
    if (rank[parent[a]] > rank[parent[b]]) return false;
  }
  // (iv): the non-parent members of every edge are consecutive.
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::vector<int> ranks;
    for (VertexId u : h.edge(e)) ranks.push_back(rank[u]);
    std::sort(ranks.begin(), ranks.end());
    if (ranks.back() - ranks[1] != static_cast<int>(ranks.size()) - 2) return false;
  }
  return true;
}

std::vector<LabeledSupertree> top_eight(int m, int k) {
  if (m < 7) fail(Errc::BadParams, "the eight-supertree list needs m >= 7, got " + std::to_string(m));
  require_k(k);
  std::vector<LabeledSupertree> out;
  out.push_back(star(m, k));
  out.push_back(double_star(1, m - 2, k));
  out.push_back(double_star(2, m - 3, k));
  out.push_back(t_supertree(1, 1, m - 3, k));
  out.push_back(triple_star(1, m - 4, 1, k));
  out.push_back(triple_star(m - 3, 0, 1, k));
  out.push_back(double_star(3, m - 4, k));
  out.push_back(t_supertree(1, 2, m - 4, k));
  return out;
}

std::vector<DegreeClass> enumerate_degree_classes(int m) {
  if (m < 2) fail(Errc::BadParams, "degree classes need m >= 2");
  std::vector<DegreeClass> out;
  std::vector<int> parts;
  // Partitions of `rest` into parts no larger than `cap`, largest first.
  std::function<void(int, int)> visit = [&](int rest, int cap) {
    if (rest == 0) {
      DegreeClass c{m, {}};
      for (int p : parts) c.nonleaf.push_back(p + 1);
      out.push_back(std::move(c));
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      parts.push_back(p);
      visit(rest - p, p);
      parts.pop_back();
    }
  };
  visit(m - 1, m - 1);
  return out;
}

namespace {

// AHU encoding of the vertex-edge incidence tree rooted at `root`. Vertex
// nodes are 0..n-1, edge nodes n..n+m-1.
std::string encode(const std::vector<std::vector<int>>& adj, int n, int root) {
  std::vector<int> parent(adj.size(), -1), order;
  order.reserve(adj.size());
  std::vector<int> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (int y : adj[x]) {
      if (parent[y] == -1) {
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  std::vector<std::string> code(adj.size());
  std::vector<std::vector<std::string>> kids(adj.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    auto& ch = kids[x];
    std::sort(ch.begin(), ch.end());
    std::string s(1, x < n ? 'v' : 'e');
    s += '(';
    for (auto& c : ch) s += c;
    s += ')';
    code[x] = std::move(s);
    if (x != root) kids[parent[x]].push_back(std::move(code[x]));
  }
  return code[root];
}

}  // namespace

std::string canonical_form(const Hypergraph& h) {
  if (!is_supertree(h)) fail(Errc::BadParams, "canonical form is defined for supertrees only");
  const int n = h.num_vertices(), m = h.num_edges();
  std::vector<std::vector<int>> adj(n + m);
  for (EdgeId e = 0; e < m; ++e) {
    for (VertexId v : h.edge(e)) {
      adj[v].push_back(n + e);
      adj[n + e].push_back(v);
    }
  }
  // Peel leaves to find the one or two centers of the incidence tree.
  const int total = n + m;
  std::vector<int> deg(total);
  std::vector<int> layer;
  for (int x = 0; x < total; ++x) {
    deg[x] = static_cast<int>(adj[x].size());
    if (deg[x] <= 1) layer.push_back(x);
  }
  int remaining = total;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int x : layer) {
      for (int y : adj[x]) {
        if (--deg[y] == 1) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    auto code = encode(adj, n, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return "k" + std::to_string(h.uniformity()) + ":" + best;
}

bool isomorphic_supertrees(const Hypergraph& a, const Hypergraph& b) {
  return a.uniformity() == b.uniformity() && a.num_vertices() == b.num_vertices() &&
         a.num_edges() == b.num_edges() && canonical_form(a) == canonical_form(b);
}

std::vector<Hypergraph> enumerate_supertrees(int m, int k) {
  if (m > 6) fail(Errc::TooLarge, "supertree enumeration is limited to m <= 6");
  if (m < 1) fail(Errc::BadParams, "m must be at least 1");
  if (k < 2) fail(Errc::BadParams, "k must be at least 2");

  std::vector<std::vector<VertexId>> seed{{}};
  for (int i = 0; i < k; ++i) seed[0].push_back(i);
  std::vector<Hypergraph> level{Hypergraph::build(k, k, seed)};
  for (int edges = 2; edges <= m; ++edges) {
    std::set<std::string> seen;
    std::vector<Hypergraph> next;
    for (const auto& t : level) {
      for (VertexId v = 0; v < t.num_vertices(); ++v) {
        auto list = t.edge_list();
        std::vector<VertexId> e{v};
        for (int i = 1; i < k; ++i) e.push_back(t.num_vertices() + i - 1);
        list.push_back(std::move(e));
        auto grown = Hypergraph::build(t.num_vertices() + k - 1, k, std::move(list));
        if (seen.insert(canonical_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace alphaspec
