#include "gallai/colored_clique.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace gallai {

namespace {

std::vector<int> flatten_checked(int n, const std::vector<std::vector<int>>& color) {
  if (n < 1) throw validation_error("clique needs at least one vertex");
  if (static_cast<int>(color.size()) != n)
    throw validation_error("color matrix has wrong row count");
  for (const auto& row : color)
    if (static_cast<int>(row.size()) != n)
      throw validation_error("color matrix has wrong column count");
  std::vector<int> flat(static_cast<size_t>(n) * n, -1);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (color[u][v] != color[v][u])
        throw validation_error("asymmetric color between " + std::to_string(u) + " and " +
                               std::to_string(v));
      if (color[u][v] < 0)
        throw validation_error("missing edge color between " + std::to_string(u) + " and " +
                               std::to_string(v));
      flat[static_cast<size_t>(u) * n + v] = color[u][v];
      flat[static_cast<size_t>(v) * n + u] = color[u][v];
    }
  }
  return flat;
}

}  // namespace

ColoredClique ColoredClique::from_matrix(int n, const std::vector<std::vector<int>>& color) {
  std::vector<int> flat = flatten_checked(n, color);
  std::map<int, int> remap;  // old id -> dense id, order-preserving
  for (int c : flat)
    if (c >= 0) remap.emplace(c, 0);
  int next = 0;
  for (auto& [old_id, new_id] : remap) new_id = next++;
  for (int& c : flat)
    if (c >= 0) c = remap[c];
  return ColoredClique(n, next, std::move(flat));
}

ColoredClique ColoredClique::from_matrix_exact(int n, int palette,
                                               const std::vector<std::vector<int>>& color) {
  if (palette < 0) throw validation_error("palette size must be nonnegative");
  std::vector<int> flat = flatten_checked(n, color);
  std::vector<char> used(palette, 0);
  for (int c : flat) {
    if (c < 0) continue;
    if (c >= palette) throw validation_error("color id out of range: " + std::to_string(c));
    used[c] = 1;
  }
  for (int c = 0; c < palette; ++c)
    if (!used[c]) throw validation_error("unused color " + std::to_string(c));
  return ColoredClique(n, palette, std::move(flat));
}

void validate(const ColoredClique& k) {
  const int n = k.vertex_count();
  if (n < 1) throw validation_error("clique needs at least one vertex");
  std::vector<char> used(k.palette_size(), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (k.color(u, v) != k.color(v, u))
        throw validation_error("asymmetric color between " + std::to_string(u) + " and " +
                               std::to_string(v));
      const int c = k.color(u, v);
      if (c < 0)
        throw validation_error("missing edge color between " + std::to_string(u) + " and " +
                               std::to_string(v));
      if (c >= k.palette_size())
        throw validation_error("color id out of range: " + std::to_string(c));
      used[c] = 1;
    }
  }
  for (int c = 0; c < k.palette_size(); ++c)
    if (!used[c]) throw validation_error("unused color " + std::to_string(c));
}

Cycle::Cycle(std::vector<int> vertices) {
  const int len = static_cast<int>(vertices.size());
  if (len < 3) throw std::invalid_argument("a cycle needs at least three vertices");
  {
    std::vector<int> sorted(vertices);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("cycle vertices must be distinct");
    if (sorted.front() < 0) throw std::invalid_argument("negative vertex id in cycle");
  }
  // Least representative over all rotations of both orientations.
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (int start = 0; start < len; ++start) {
      std::vector<int> cand(len);
      for (int i = 0; i < len; ++i) {
        const int idx = dir == 0 ? (start + i) % len : (start - i % len + len) % len;
        cand[i] = vertices[idx];
      }
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  vertices_ = std::move(best);
}

std::set<int> colors_between(const ColoredClique& k, const std::vector<int>& a,
                             const std::vector<int>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("colors_between needs nonempty sets");
  const int n = k.vertex_count();
  std::set<int> out;
  for (int u : a) {
    if (u < 0 || u >= n) throw std::invalid_argument("vertex out of range");
    for (int v : b) {
      if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
      if (u != v) out.insert(k.color(u, v));
    }
  }
  return out;
}

bool is_colorful(const ColoredClique& k, const Cycle& c) {
  const auto& vs = c.vertices();
  const int len = c.length();
  for (int v : vs)
    if (v >= k.vertex_count()) throw std::invalid_argument("cycle vertex outside clique");
  std::set<int> seen;
  for (int i = 0; i < len; ++i) {
    const int col = k.color(vs[i], vs[(i + 1) % len]);
    if (!seen.insert(col).second) return false;
  }
  return true;
}

InducedSubclique induced_subclique(const ColoredClique& k, const std::vector<int>& s) {
  if (s.empty()) throw std::invalid_argument("induced subclique needs a nonempty vertex set");
  std::vector<int> verts(s);
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw std::invalid_argument("duplicate vertex in induced subclique");
  if (verts.front() < 0 || verts.back() >= k.vertex_count())
    throw std::invalid_argument("vertex out of range");

  const int m = static_cast<int>(verts.size());
  std::map<int, int> color_remap;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) color_remap.emplace(k.color(verts[i], verts[j]), 0);
  int next = 0;
  for (auto& [old_id, new_id] : color_remap) new_id = next++;

  std::vector<std::vector<int>> matrix(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      matrix[i][j] = matrix[j][i] = color_remap[k.color(verts[i], verts[j])];

  std::vector<int> color_map(next);
  for (const auto& [old_id, new_id] : color_remap) color_map[new_id] = old_id;

  return InducedSubclique{ColoredClique::from_matrix_exact(m, next, matrix), std::move(verts),
                          std::move(color_map)};
}

void validate_partition(const ColoredClique& k, const Partition& p) {
  const int n = k.vertex_count();
  std::vector<char> seen(n, 0);
  for (const auto& block : p.blocks) {
    if (block.empty()) throw validation_error("empty block");
    for (int v : block) {
      if (v < 0 || v >= n) throw validation_error("block vertex out of range");
      if (seen[v]) throw validation_error("blocks are not disjoint");
      seen[v] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw validation_error("blocks do not cover all vertices");
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    for (size_t j = i + 1; j < p.blocks.size(); ++j) {
      for (int u : p.blocks[i])
        for (int v : p.blocks[j])
          if (!p.delta.count(k.color(u, v)))
            throw validation_error("cross-block edge color outside delta");
    }
  }
}

}  // namespace gallai
