#include "domval/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

namespace domval {

Graph::Graph(int num_vertices, const std::vector<std::pair<int, int>>& edges)
    : n_(num_vertices) {
  if (n_ < 1) throw DomainError("graph needs at least one vertex");
  adj_.assign(static_cast<size_t>(n_), {});
  for (auto [u, v] : edges) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loops are not allowed");
    adj_[static_cast<size_t>(u - 1)].push_back(v);
    adj_[static_cast<size_t>(v - 1)].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw DomainError("duplicate edge");
  }
  num_edges_ = static_cast<int>(edges.size());
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) throw DomainError("vertex id out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<size_t>(v - 1)];
}

bool Graph::adjacent(int u, int v) const {
  const auto& nbrs = neighbors(u);
  check_vertex(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(num_edges_));
  for (int u = 1; u <= n_; ++u)
    for (int v : adj_[static_cast<size_t>(u - 1)])
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

VertexSet::VertexSet(std::vector<int> ids) : members(std::move(ids)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

int VertexRef::flatten(int n) const {
  if (index < 1 || index > n) throw DomainError("vertex index out of range");
  if (kind == Kind::plain) return index;
  return row == Row::x ? index : n + index;
}

std::string VertexRef::label() const {
  if (kind == Kind::plain) return std::to_string(index);
  return (row == Row::x ? "x" : "y") + std::to_string(index);
}

VertexRef VertexRef::parse(std::string_view text, Family family) {
  const bool strip = family == Family::ladder || family == Family::prism;
  VertexRef ref;
  std::string_view digits = text;
  if (strip) {
    if (text.empty() || (text[0] != 'x' && text[0] != 'y'))
      throw DomainError("strip vertex must look like x3 or y7");
    ref.kind = family == Family::ladder ? Kind::ladder : Kind::prism;
    ref.row = text[0] == 'x' ? Row::x : Row::y;
    digits = text.substr(1);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 1)
    throw DomainError("bad vertex spec: " + std::string(text));
  ref.index = value;
  return ref;
}

Graph make_path(int n) {
  if (n < 1) throw DomainError("path order must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw DomainError("cycle order must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return Graph(n, edges);
}

Graph make_ladder(int n) {
  if (n < 1) throw DomainError("ladder order must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(i, i + 1);          // x-path
    edges.emplace_back(n + i, n + i + 1);  // y-path
  }
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + i);  // rungs
  return Graph(2 * n, edges);
}

Graph make_prism(int n) {
  if (n < 3) throw DomainError("prism order must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(n + i, n + i + 1);
  }
  edges.emplace_back(1, n);          // close the x-cycle
  edges.emplace_back(n + 1, 2 * n);  // close the y-cycle
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + i);
  return Graph(2 * n, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.num_vertices();
  const int nh = h.num_vertices();
  auto id = [nh](int u, int v) { return (u - 1) * nh + v; };
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= ng; ++u)
    for (auto [a, b] : h.edge_list()) edges.emplace_back(id(u, a), id(u, b));
  for (int v = 1; v <= nh; ++v)
    for (auto [a, b] : g.edge_list()) edges.emplace_back(id(a, v), id(b, v));
  return Graph(ng * nh, edges);
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  std::vector<int> ids = g.neighbors(v);
  ids.push_back(v);
  return VertexSet(std::move(ids));
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  const int n = g.num_vertices();
  std::vector<char> covered(static_cast<size_t>(n) + 1, 0);
  for (int m : s.members) {
    if (m < 1 || m > n) throw DomainError("set member out of range");
    covered[static_cast<size_t>(m)] = 1;
    for (int u : g.neighbors(m)) covered[static_cast<size_t>(u)] = 1;
  }
  for (int v = 1; v <= n; ++v)
    if (!covered[static_cast<size_t>(v)]) return false;
  return true;
}

Graph read_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw DomainError("expected header line \"n m\"");
  if (n < 1) throw DomainError("vertex count must be >= 1");
  if (m < 0) throw DomainError("edge count must be >= 0");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw DomainError("truncated edge list");
    if (u >= v) throw DomainError("edges must be written as \"u v\" with u < v");
    if (u < 1 || v > n) throw DomainError("edge endpoint out of range");
    edges.emplace_back(u, v);
  }
  std::string trailing;
  if (in >> trailing) throw DomainError("trailing content after edge list");
  return Graph(n, edges);  // rejects duplicates
}

}  // namespace domval
