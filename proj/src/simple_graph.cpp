#include "gallai/simple_graph.hpp"

#include <algorithm>
#include <numeric>

#include "gallai/errors.hpp"

namespace gallai {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw validation_error("vertex count must be nonnegative");
  for (auto& [u, v] : edges) {
    if (u == v) throw validation_error("loop edge " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw validation_error("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw validation_error("duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(static_cast<size_t>(n_) * n_, 0);
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<size_t>(u) * n_ + v] = 1;
    adj_[static_cast<size_t>(v) * n_ + u] = 1;
  }
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return adj_[static_cast<size_t>(u) * n_ + v] != 0;
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u)
    if (adj_[static_cast<size_t>(v) * n_ + u]) ++d;
  return d;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adj_[static_cast<size_t>(v) * n_ + u]) out.push_back(u);
  return out;
}

std::vector<int> SimpleGraph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

SimpleGraph path_graph(int k) {
  if (k < 1) throw validation_error("path must have at least one edge");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
  return SimpleGraph(k + 1, std::move(edges));
}

SimpleGraph cycle_graph(int k) {
  if (k < 3) throw validation_error("cycle must have at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, k - 1);
  return SimpleGraph(k, std::move(edges));
}

SimpleGraph graph_a() {
  return SimpleGraph(6, {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {4, 5}});
}

SimpleGraph complement(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> edges;
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& verts) {
  std::vector<int> s(verts);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw validation_error("duplicate vertex in induced subgraph");
  std::vector<std::pair<int, int>> edges;
  const int m = static_cast<int>(s.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.has_edge(s[i], s[j])) edges.emplace_back(i, j);
  return SimpleGraph(m, std::move(edges));
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> stack{s}, members;
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int u : g.neighbors(v)) {
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() <= 1) return true;
  return connected_components(g).size() == 1;
}

}  // namespace gallai
