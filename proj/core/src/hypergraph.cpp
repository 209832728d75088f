#include "alphaspec/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "alphaspec/error.hpp"

namespace alphaspec {

Hypergraph Hypergraph::build(int n, int k, std::vector<std::vector<VertexId>> edges) {
  if (k < 2) fail(Errc::BadParams, "uniformity k must be at least 2, got " + std::to_string(k));
  if (n < k) fail(Errc::BadParams, "need n >= k, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  if (edges.empty()) fail(Errc::BadParams, "hypergraph needs at least one edge");

  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& e = edges[i];
    if (static_cast<int>(e.size()) != k) {
      fail(Errc::EdgeArity, "edge " + std::to_string(i) + " has " + std::to_string(e.size()) +
                                " members, expected " + std::to_string(k));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      fail(Errc::EdgeArity, "edge " + std::to_string(i) + " repeats a vertex");
    }
    if (e.front() < 0 || e.back() >= n) {
      fail(Errc::VertexRange, "edge " + std::to_string(i) + " has a vertex outside [0, " +
                                  std::to_string(n) + ")");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    fail(Errc::DuplicateEdge, "edge listed twice");
  }

  Hypergraph h;
  h.n_ = n;
  h.k_ = k;
  h.members_.reserve(edges.size() * k);
  for (const auto& e : edges) h.members_.insert(h.members_.end(), e.begin(), e.end());

  std::vector<std::size_t> count(n + 1, 0);
  for (VertexId v : h.members_) ++count[v + 1];
  std::partial_sum(count.begin(), count.end(), count.begin());
  h.offsets_ = count;
  h.incidence_.resize(h.members_.size());
  std::vector<std::size_t> cursor(count.begin(), count.end() - 1);
  const int m = static_cast<int>(edges.size());
  for (EdgeId e = 0; e < m; ++e) {
    for (VertexId v : h.edge(e)) h.incidence_[cursor[v]++] = e;
  }
  return h;
}

int Hypergraph::position_in_edge(VertexId v, EdgeId e) const {
  auto members = edge(e);
  auto it = std::lower_bound(members.begin(), members.end(), v);
  if (it == members.end() || *it != v) return -1;
  return static_cast<int>(it - members.begin());
}

EdgeId Hypergraph::find_edge(std::vector<VertexId> members) const {
  std::sort(members.begin(), members.end());
  if (static_cast<int>(members.size()) != k_ || members.front() < 0 || members.back() >= n_) {
    return -1;
  }
  for (EdgeId e : incident(members.front())) {
    auto cand = edge(e);
    if (std::equal(cand.begin(), cand.end(), members.begin())) return e;
  }
  return -1;
}

std::vector<std::vector<VertexId>> Hypergraph::edge_list() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    auto members = edge(e);
    out.emplace_back(members.begin(), members.end());
  }
  return out;
}

Degrees degrees(const Hypergraph& h) {
  Degrees d;
  d.per_vertex.resize(h.num_vertices());
  for (VertexId v = 0; v < h.num_vertices(); ++v) d.per_vertex[v] = h.degree(v);
  d.sorted.values = d.per_vertex;
  std::sort(d.sorted.values.begin(), d.sorted.values.end(), std::greater<>());
  return d;
}

bool is_connected(const Hypergraph& h) {
  const int n = h.num_vertices();
  std::vector<char> seen_vertex(n, 0);
  std::vector<char> seen_edge(h.num_edges(), 0);
  std::vector<VertexId> stack{0};
  seen_vertex[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : h.incident(v)) {
      if (seen_edge[e]) continue;
      seen_edge[e] = 1;
      for (VertexId u : h.edge(e)) {
        if (!seen_vertex[u]) {
          seen_vertex[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
  }
  return reached == n;
}

bool is_supertree(const Hypergraph& h) {
  return h.num_vertices() == h.num_edges() * (h.uniformity() - 1) + 1 && is_connected(h);
}

namespace {

struct LineReader {
  std::string_view text;
  int line_no = 0;

  // Next non-comment, non-blank line; false at end of input.
  bool next(std::string_view& line) {
    while (!text.empty()) {
      auto nl = text.find('\n');
      line = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      auto first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }
};

std::vector<long long> parse_ints(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
      fail(Errc::ParseError, "line " + std::to_string(line_no) + ": expected integers");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Hypergraph read_text(std::string_view text) {
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) fail(Errc::ParseError, "line 1: missing header \"n k m\"");
  auto header = parse_ints(line, reader.line_no);
  if (header.size() != 3) {
    fail(Errc::ParseError, "line " + std::to_string(reader.line_no) + ": header must be \"n k m\"");
  }
  const auto n = header[0], k = header[1], m = header[2];
  if (n <= 0 || k <= 0 || m <= 0 || n > 1'000'000 || k > 1'000 || m > 1'000'000) {
    fail(Errc::ParseError, "line " + std::to_string(reader.line_no) + ": header values out of range");
  }
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(m);
  while (static_cast<long long>(edges.size()) < m) {
    if (!reader.next(line)) {
      fail(Errc::ParseError, "line " + std::to_string(reader.line_no + 1) + ": expected " +
                                 std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    auto values = parse_ints(line, reader.line_no);
    if (static_cast<long long>(values.size()) != k) {
      fail(Errc::ParseError, "line " + std::to_string(reader.line_no) + ": edge has " +
                                 std::to_string(values.size()) + " vertices, expected " + std::to_string(k));
    }
    std::vector<VertexId> edge;
    for (auto v : values) {
      if (v < 0 || v >= n) {
        fail(Errc::VertexRange, "line " + std::to_string(reader.line_no) + ": vertex " +
                                    std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
      }
      edge.push_back(static_cast<VertexId>(v));
    }
    edges.push_back(std::move(edge));
  }
  if (reader.next(line)) {
    fail(Errc::ParseError, "line " + std::to_string(reader.line_no) + ": trailing data after edges");
  }
  return Hypergraph::build(static_cast<int>(n), static_cast<int>(k), std::move(edges));
}

std::string write_text(const Hypergraph& h) {
  std::string out = std::to_string(h.num_vertices()) + ' ' + std::to_string(h.uniformity()) + ' ' +
                    std::to_string(h.num_edges()) + '\n';
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    bool first = true;
    for (VertexId v : h.edge(e)) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace alphaspec
