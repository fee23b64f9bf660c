#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gallai/errors.hpp"

namespace gallai {

/// Rooted tree whose leaves stand for the vertices of a colored clique
/// and whose sibling edges carry colors. Every internal node has at least
/// two children, and the sibling edges under one parent use at most two
/// distinct colors. The children of an internal node, together with their
/// sibling coloring, form that node's factor.
struct GallaiTree {
  struct Node {
    int parent = -1;            // -1 for the root
    std::vector<int> children;  // ascending node ids
    int leaf_vertex = -1;       // clique vertex for leaves, -1 otherwise

    bool is_leaf() const { return children.empty(); }
  };

  std::vector<Node> nodes;
  int root = 0;
  std::map<std::pair<int, int>, int> sibling_colors;  // keyed by (min id, max id)

  int node_count() const { return static_cast<int>(nodes.size()); }
  int leaf_count() const;
  int height() const;
  int factor_count() const;

  int sibling_color(int a, int b) const;
};

/// Checks structure (single root, consistent parent/child links, internal
/// nodes with >= 2 children, leaf vertices a bijection onto 0..L-1, one
/// color per sibling pair) and the at-most-two-colors-per-factor rule.
void validate_tree(const GallaiTree& t);

/// Additionally checks that every factor matches one of the three simple
/// patterns (sizes 2, 4, 5) and that no color repeats between a factor
/// and any of its ancestor factors.
void validate_exact_tree(const GallaiTree& t);

}  // namespace gallai
