#include "gallai/gallai_tree.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gallai {

int GallaiTree::leaf_count() const {
  int count = 0;
  for (const auto& node : nodes)
    if (node.is_leaf()) ++count;
  return count;
}

int GallaiTree::height() const {
  int best = 0;
  std::vector<std::pair<int, int>> stack{{root, 0}};
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    best = std::max(best, depth);
    for (int c : nodes[id].children) stack.emplace_back(c, depth + 1);
  }
  return best;
}

int GallaiTree::factor_count() const {
  int count = 0;
  for (const auto& node : nodes)
    if (!node.is_leaf()) ++count;
  return count;
}

int GallaiTree::sibling_color(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = sibling_colors.find({a, b});
  if (it == sibling_colors.end())
    throw validation_error("no sibling color for nodes " + std::to_string(a) + "," +
                           std::to_string(b));
  return it->second;
}

void validate_tree(const GallaiTree& t) {
  const int n = t.node_count();
  if (n == 0) throw validation_error("tree has no nodes");
  int roots = 0;
  for (int id = 0; id < n; ++id) {
    const auto& node = t.nodes[id];
    if (node.parent == -1) {
      ++roots;
      if (t.root != id) throw validation_error("root field does not match parentless node");
    } else if (node.parent < 0 || node.parent >= n) {
      throw validation_error("parent id out of range");
    }
  }
  if (roots != 1) throw validation_error("tree must have exactly one root");

  // Child lists must mirror parent links, and parent chains must reach
  // the root (no cycles).
  std::vector<int> child_count(n, 0);
  for (int id = 0; id < n; ++id) {
    const auto& node = t.nodes[id];
    for (int c : node.children) {
      if (c < 0 || c >= n || t.nodes[c].parent != id)
        throw validation_error("child list inconsistent with parent links");
    }
    if (!std::is_sorted(node.children.begin(), node.children.end()))
      throw validation_error("children must be listed in ascending order");
    if (node.parent >= 0) ++child_count[node.parent];
  }
  for (int id = 0; id < n; ++id)
    if (child_count[id] != static_cast<int>(t.nodes[id].children.size()))
      throw validation_error("child list inconsistent with parent links");
  for (int id = 0; id < n; ++id) {
    int steps = 0, cur = id;
    while (t.nodes[cur].parent != -1) {
      cur = t.nodes[cur].parent;
      if (++steps > n) throw validation_error("parent links contain a cycle");
    }
  }

  std::set<int> leaf_vertices;
  for (int id = 0; id < n; ++id) {
    const auto& node = t.nodes[id];
    if (node.is_leaf()) {
      if (node.leaf_vertex < 0) throw validation_error("leaf without a clique vertex");
      if (!leaf_vertices.insert(node.leaf_vertex).second)
        throw validation_error("duplicate leaf vertex");
    } else {
      if (node.leaf_vertex != -1)
        throw validation_error("internal node carries a leaf vertex");
      if (node.children.size() < 2)
        throw validation_error("internal node needs at least two children");
    }
  }
  const int leaves = static_cast<int>(leaf_vertices.size());
  if (leaves == 0) throw validation_error("tree has no leaves");
  if (*leaf_vertices.begin() != 0 || *leaf_vertices.rbegin() != leaves - 1)
    throw validation_error("leaf vertices must form 0..L-1");

  // Exactly one color per sibling pair, at most two colors per factor.
  std::set<std::pair<int, int>> expected;
  for (int id = 0; id < n; ++id) {
    const auto& kids = t.nodes[id].children;
    std::set<int> factor_colors;
    for (size_t i = 0; i < kids.size(); ++i) {
      for (size_t j = i + 1; j < kids.size(); ++j) {
        expected.emplace(kids[i], kids[j]);
        factor_colors.insert(t.sibling_color(kids[i], kids[j]));
      }
    }
    if (factor_colors.size() > 2)
      throw validation_error("factor uses more than two colors");
  }
  for (const auto& [pair, color] : t.sibling_colors) {
    if (color < 0) throw validation_error("negative sibling color");
    if (!expected.count(pair)) throw validation_error("sibling color for a non-sibling pair");
  }
  if (expected.size() != t.sibling_colors.size())
    throw validation_error("missing sibling color");
}

namespace {

// True iff the factor under `id` looks like one of the three irreducible
// building blocks: one pair; four children whose two color classes are
// 3-edge paths; five children whose two color classes are 5-cycles.
bool factor_is_simple(const GallaiTree& t, int id) {
  const auto& kids = t.nodes[id].children;
  const int b = static_cast<int>(kids.size());
  std::set<int> colors;
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j) colors.insert(t.sibling_color(kids[i], kids[j]));
  if (b == 2) return true;
  if (b != 4 && b != 5) return false;
  if (colors.size() != 2) return false;
  for (int color : colors) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j)
        if (t.sibling_color(kids[i], kids[j]) == color) edges.emplace_back(i, j);
    std::vector<int> deg(b, 0);
    for (auto [i, j] : edges) {
      ++deg[i];
      ++deg[j];
    }
    if (b == 4) {
      // 3-edge path on all four children: degrees 1,1,2,2.
      if (edges.size() != 3) return false;
      std::vector<int> sorted(deg);
      std::sort(sorted.begin(), sorted.end());
      if (sorted != std::vector<int>{1, 1, 2, 2}) return false;
    } else {
      // 5-cycle: 2-regular and connected.
      if (edges.size() != 5) return false;
      for (int d : deg)
        if (d != 2) return false;
      std::vector<int> seen(b, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int reached = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [i, j] : edges) {
          int other = i == v ? j : (j == v ? i : -1);
          if (other >= 0 && !seen[other]) {
            seen[other] = 1;
            ++reached;
            stack.push_back(other);
          }
        }
      }
      if (reached != b) return false;
    }
  }
  return true;
}

void check_chain_colors(const GallaiTree& t, int id, std::set<int>& ancestors) {
  const auto& kids = t.nodes[id].children;
  std::set<int> here;
  for (size_t i = 0; i < kids.size(); ++i)
    for (size_t j = i + 1; j < kids.size(); ++j)
      here.insert(t.sibling_color(kids[i], kids[j]));
  for (int c : here)
    if (ancestors.count(c))
      throw validation_error("color " + std::to_string(c) +
                             " repeats between a factor and an ancestor factor");
  for (int c : here) ancestors.insert(c);
  for (int child : kids)
    if (!t.nodes[child].is_leaf()) check_chain_colors(t, child, ancestors);
  for (int c : here) ancestors.erase(c);
}

}  // namespace

void validate_exact_tree(const GallaiTree& t) {
  validate_tree(t);
  for (int id = 0; id < t.node_count(); ++id) {
    if (t.nodes[id].is_leaf()) continue;
    if (!factor_is_simple(t, id))
      throw validation_error("factor at node " + std::to_string(id) +
                             " is not a simple pattern");
  }
  std::set<int> ancestors;
  if (!t.nodes[t.root].is_leaf()) check_chain_colors(t, t.root, ancestors);
}

}  // namespace gallai
