#ifndef DOMVAL_GRAPH_HPP
#define DOMVAL_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domval/errors.hpp"
#include "domval/family.hpp"

namespace domval {

// Simple undirected graph over vertex ids 1..n. Instances are immutable
// after construction; adjacency lists are kept sorted so every engine sees
// the same deterministic vertex order.
class Graph {
public:
  Graph(int num_vertices, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return num_edges_; }
  const std::vector<int>& neighbors(int v) const;
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;

  // Edges as (u, v) pairs with u < v, sorted.
  std::vector<std::pair<int, int>> edge_list() const;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  int num_edges_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Sorted, duplicate-free set of vertex ids.
struct VertexSet {
  std::vector<int> members;

  VertexSet() = default;
  explicit VertexSet(std::vector<int> ids);

  bool contains(int v) const;
  int size() const { return static_cast<int>(members.size()); }
};

enum class Row : int { x = 0, y = 1 };

// Family-aware vertex address. Strip vertices flatten to graph ids as
// x_i -> i and y_i -> n + i; that layout is part of the public contract so
// reports are comparable across engines.
struct VertexRef {
  enum class Kind { plain, ladder, prism };

  Kind kind = Kind::plain;
  Row row = Row::x;  // meaningful for ladder/prism only
  int index = 0;     // column for strips, vertex id otherwise

  int flatten(int n) const;
  std::string label() const;

  static VertexRef parse(std::string_view text, Family family);
};

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_ladder(int n);
Graph make_prism(int n);

// (u,v) ~ (u',v') iff u = u' and v ~ v', or v = v' and u ~ u'.
// Vertex pairs flatten row-major: (u, v) -> (u - 1) * |V(h)| + v.
Graph cartesian_product(const Graph& g, const Graph& h);

VertexSet closed_neighborhood(const Graph& g, int v);
bool is_dominating(const Graph& g, const VertexSet& s);

// Edge-list ingestion: first line "n m", then m lines "u v" with
// 1 <= u < v <= n. Duplicate edges and self-loops are rejected.
Graph read_edge_list(std::istream& in);

}  // namespace domval

#endif
