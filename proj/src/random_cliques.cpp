#include "gallai/random_cliques.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gallai/constructions.hpp"
#include "gallai/gallai.hpp"

namespace gallai {

namespace {

// Splits n into `parts` positive summands, uniformly over compositions.
std::vector<int> random_composition(int n, int parts, std::mt19937& rng) {
  std::vector<int> cuts{0, n};
  std::vector<int> candidates;
  for (int i = 1; i < n; ++i) candidates.push_back(i);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  cuts.insert(cuts.end(), candidates.begin(), candidates.begin() + (parts - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> sizes;
  for (size_t i = 1; i < cuts.size(); ++i) sizes.push_back(cuts[i] - cuts[i - 1]);
  return sizes;
}

int make_leaf(GallaiTree& tree, int parent, int vertex) {
  const int id = tree.node_count();
  tree.nodes.emplace_back();
  tree.nodes[id].parent = parent;
  tree.nodes[id].leaf_vertex = vertex;
  if (parent >= 0) tree.nodes[parent].children.push_back(id);
  return id;
}

int make_internal(GallaiTree& tree, int parent) {
  const int id = tree.node_count();
  tree.nodes.emplace_back();
  tree.nodes[id].parent = parent;
  if (parent >= 0) tree.nodes[parent].children.push_back(id);
  return id;
}

void build_two_clique(GallaiTree& tree, int parent, int n, int& next_vertex, int color_pool,
                      std::mt19937& rng) {
  if (n == 1) {
    make_leaf(tree, parent, next_vertex++);
    return;
  }
  const int id = make_internal(tree, parent);
  const int max_parts = std::min(n, 6);
  const int parts = 2 + static_cast<int>(rng() % (max_parts - 1));
  const std::vector<int> sizes = random_composition(n, parts, rng);
  for (int size : sizes) build_two_clique(tree, id, size, next_vertex, color_pool, rng);
  const auto& kids = tree.nodes[id].children;
  int palette[2];
  palette[0] = static_cast<int>(rng() % color_pool);
  palette[1] = rng() % 2 ? palette[0] : static_cast<int>(rng() % color_pool);
  for (size_t i = 0; i < kids.size(); ++i)
    for (size_t j = i + 1; j < kids.size(); ++j)
      tree.sibling_colors[{kids[i], kids[j]}] = palette[rng() % 2];
}

// Sibling colorings of the two nontrivial simple patterns, on children
// listed in order: color index 0 or 1 per pair.
int simple_pattern_color(int size, int i, int j) {
  if (size == 4) {
    // class 0 is the path 1-0-3-2
    const bool zero = (i == 0 && j == 1) || (i == 0 && j == 3) || (i == 2 && j == 3);
    return zero ? 0 : 1;
  }
  // size 5: class 0 is the cycle 0-1-2-3-4
  const bool zero = j == i + 1 || (i == 0 && j == 4);
  return zero ? 0 : 1;
}

void build_exact(GallaiTree& tree, int parent, int n, int& next_vertex, int& next_color,
                 std::mt19937& rng) {
  if (n == 1) {
    make_leaf(tree, parent, next_vertex++);
    return;
  }
  std::vector<int> feasible{2};
  if (n >= 4) feasible.push_back(4);
  if (n >= 5) feasible.push_back(5);
  const int parts = feasible[rng() % feasible.size()];
  const int id = make_internal(tree, parent);
  const std::vector<int> sizes = random_composition(n, parts, rng);
  for (int size : sizes) build_exact(tree, id, size, next_vertex, next_color, rng);
  const auto& kids = tree.nodes[id].children;
  if (parts == 2) {
    tree.sibling_colors[{kids[0], kids[1]}] = next_color++;
  } else {
    const int base = next_color;
    next_color += 2;
    for (int i = 0; i < parts; ++i)
      for (int j = i + 1; j < parts; ++j)
        tree.sibling_colors[{kids[i], kids[j]}] = base + simple_pattern_color(parts, i, j);
  }
}

}  // namespace

ColoredClique random_coloring(int n, int max_colors, std::uint32_t seed) {
  if (n < 1 || max_colors < 1) throw std::invalid_argument("bad random coloring parameters");
  std::mt19937 rng(seed);
  std::vector<std::vector<int>> color(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      color[u][v] = color[v][u] = static_cast<int>(rng() % max_colors);
  return ColoredClique::from_matrix(n, color);
}

GallaiTree random_two_clique_tree(int n, std::uint32_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs at least one leaf");
  std::mt19937 rng(seed);
  GallaiTree tree;
  int next_vertex = 0;
  const int pool = std::max(2, n / 2 + 1);
  build_two_clique(tree, -1, n, next_vertex, pool, rng);
  tree.root = 0;
  validate_tree(tree);
  return tree;
}

ColoredClique random_gallai_clique(int n, std::uint32_t seed) {
  return recompose(random_two_clique_tree(n, seed));
}

GallaiTree random_exact_tree(int n, std::uint32_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs at least one leaf");
  std::mt19937 rng(seed);
  GallaiTree tree;
  int next_vertex = 0, next_color = 0;
  build_exact(tree, -1, n, next_vertex, next_color, rng);
  tree.root = 0;
  if (n >= 2) validate_exact_tree(tree);
  return tree;
}

ColoredClique random_exact_gallai_clique(int n, std::uint32_t seed) {
  return recompose(random_exact_tree(n, seed));
}

SimpleGraph random_connected_graph(int n, double extra_edge_prob, std::uint32_t seed) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::mt19937 rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<char> adj(static_cast<size_t>(n) * n, 0);
  auto add = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    if (adj[static_cast<size_t>(u) * n + v]) return;
    adj[static_cast<size_t>(u) * n + v] = 1;
    edges.emplace_back(u, v);
  };
  // Random recursive tree keeps the graph connected.
  for (int v = 1; v < n; ++v) add(static_cast<int>(rng() % v), v);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < extra_edge_prob) add(u, v);
  return SimpleGraph(n, std::move(edges));
}

}  // namespace gallai
