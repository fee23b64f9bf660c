#pragma once

#include <utility>
#include <vector>

namespace gallai {

/// Finite undirected graph without loops. Vertices are 0..n-1; edges are
/// kept as pairs (u,v) with u < v in lexicographic order.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<int> degree_sequence() const;  // sorted ascending

  bool operator==(const SimpleGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<char> adj_;
};

/// Path with k edges on vertices 0..k.
SimpleGraph path_graph(int k);

/// Cycle on vertices 0..k-1, k >= 3.
SimpleGraph cycle_graph(int k);

/// The 6-vertex graph with edges 01, 12, 14, 23, 34, 45: a four-cycle
/// (1,2,3,4) with pendant edges at the adjacent cycle vertices 1 and 4.
SimpleGraph graph_a();

SimpleGraph complement(const SimpleGraph& g);

/// Subgraph induced by `verts`, relabeled to 0..|verts|-1 in the sorted
/// order of `verts`.
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& verts);

bool is_connected(const SimpleGraph& g);

/// Vertex sets of the connected components, each sorted, ordered by least
/// vertex.
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

}  // namespace gallai
