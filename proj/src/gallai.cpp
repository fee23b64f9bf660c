#include "gallai/gallai.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace gallai {

std::optional<std::array<int, 3>> find_colorful_triangle(const ColoredClique& k) {
  const int n = k.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        const int a = k.color(u, v), b = k.color(u, w), c = k.color(v, w);
        if (a != b && a != c && b != c) return std::array<int, 3>{u, v, w};
      }
  return std::nullopt;
}

bool is_gallai(const ColoredClique& k) { return !find_colorful_triangle(k).has_value(); }

std::optional<std::array<int, 3>> find_non_exact_triangle(const ColoredClique& k) {
  const int n = k.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        const int a = k.color(u, v), b = k.color(u, w), c = k.color(v, w);
        const bool mono = a == b && b == c;
        const bool colorful = a != b && a != c && b != c;
        if (mono || colorful) return std::array<int, 3>{u, v, w};
      }
  return std::nullopt;
}

bool is_exact_gallai(const ColoredClique& k) { return !find_non_exact_triangle(k).has_value(); }

std::vector<int> smallest_module(const ColoredClique& k, int u, int v) {
  if (u == v) throw std::invalid_argument("smallest_module needs two distinct vertices");
  const int n = k.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
  std::vector<char> in(n, 0);
  in[u] = in[v] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int w = 0; w < n; ++w) {
      if (in[w]) continue;
      int first = -1;
      for (int x = 0; x < n; ++x) {
        if (!in[x]) continue;
        const int c = k.color(w, x);
        if (first < 0) {
          first = c;
        } else if (c != first) {
          in[w] = 1;
          grew = true;
          break;
        }
      }
    }
  }
  std::vector<int> out;
  for (int w = 0; w < n; ++w)
    if (in[w]) out.push_back(w);
  return out;
}

bool is_irreducible(const ColoredClique& k) {
  const int n = k.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(smallest_module(k, u, v).size()) < n) return false;
  return true;
}

namespace {

struct Dsu {
  std::vector<int> parent, size;

  explicit Dsu(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

std::vector<std::vector<int>> dsu_blocks(Dsu& dsu, int n) {
  std::vector<std::vector<int>> by_root(n);
  for (int v = 0; v < n; ++v) by_root[dsu.find(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& members : by_root)
    if (!members.empty()) blocks.push_back(std::move(members));
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace

Partition homogeneous_2_partition(const ColoredClique& k) {
  const int n = k.vertex_count();
  if (n < 2) throw std::invalid_argument("homogeneous_2_partition needs at least two vertices");
  if (auto t = find_colorful_triangle(k))
    throw not_gallai_error("not a Gallai clique", *t);

  Dsu dsu(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (dsu.find(u) == dsu.find(v)) continue;
      std::vector<int> module = smallest_module(k, u, v);
      if (static_cast<int>(module.size()) == n) continue;
      // Merging a proper module with every block it meets stays proper:
      // overlapping modules union to a module.
      std::set<int> roots;
      int merged_size = 0;
      for (int w : module) {
        const int r = dsu.find(w);
        if (roots.insert(r).second) merged_size += dsu.size[r];
      }
      if (merged_size == n) continue;
      for (int w : module) dsu.merge(u, w);
    }
  }

  Partition p;
  p.blocks = dsu_blocks(dsu, n);
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    for (size_t j = i + 1; j < p.blocks.size(); ++j) {
      const int c = k.color(p.blocks[i].front(), p.blocks[j].front());
      for (int x : p.blocks[i])
        for (int y : p.blocks[j])
          if (k.color(x, y) != c)
            throw std::logic_error("internal: blocks are not joined monochromatically");
      p.delta.insert(c);
    }
  }
  if (p.blocks.size() < 2 || p.delta.size() > 2)
    throw std::logic_error("internal: Gallai clique without a homogeneous 2-partition");
  return p;
}

namespace {

// Recursively decomposes the subclique induced by `verts`, appending
// nodes in preorder. Colors on sibling edges are the original ids of `k`.
int build_tree(const ColoredClique& k, const std::vector<int>& verts, int parent,
               GallaiTree& tree) {
  const int id = tree.node_count();
  tree.nodes.emplace_back();
  tree.nodes[id].parent = parent;
  if (verts.size() == 1) {
    tree.nodes[id].leaf_vertex = verts[0];
    return id;
  }
  const InducedSubclique sub = induced_subclique(k, verts);
  const Partition part = homogeneous_2_partition(sub.clique);
  std::vector<int> child_ids;
  std::vector<int> child_rep;  // an original-vertex representative per child
  for (const auto& block : part.blocks) {
    std::vector<int> orig;
    for (int local : block) orig.push_back(sub.vertex_map[local]);
    const int child = build_tree(k, orig, id, tree);
    child_ids.push_back(child);
    child_rep.push_back(orig.front());
  }
  tree.nodes[id].children = child_ids;
  for (size_t i = 0; i < child_ids.size(); ++i)
    for (size_t j = i + 1; j < child_ids.size(); ++j)
      tree.sibling_colors[{child_ids[i], child_ids[j]}] = k.color(child_rep[i], child_rep[j]);
  return id;
}

}  // namespace

GallaiTree decompose(const ColoredClique& k) {
  if (auto t = find_colorful_triangle(k)) throw not_gallai_error("not a Gallai clique", *t);
  GallaiTree tree;
  std::vector<int> all(k.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  build_tree(k, all, -1, tree);
  tree.root = 0;
  return tree;
}

ColoredClique recompose(const GallaiTree& t) {
  validate_tree(t);
  const int node_count = t.node_count();
  std::vector<int> depth(node_count, 0);
  for (int id = 0; id < node_count; ++id) {
    int cur = id;
    while (t.nodes[cur].parent != -1) {
      cur = t.nodes[cur].parent;
      ++depth[id];
    }
  }
  std::vector<int> leaves;
  for (int id = 0; id < node_count; ++id)
    if (t.nodes[id].is_leaf()) leaves.push_back(id);

  const int n = static_cast<int>(leaves.size());
  std::vector<std::vector<int>> color(n, std::vector<int>(n, -1));
  for (size_t a = 0; a < leaves.size(); ++a) {
    for (size_t b = a + 1; b < leaves.size(); ++b) {
      int x = leaves[a], y = leaves[b];
      while (depth[x] > depth[y]) x = t.nodes[x].parent;
      while (depth[y] > depth[x]) y = t.nodes[y].parent;
      while (t.nodes[x].parent != t.nodes[y].parent) {
        x = t.nodes[x].parent;
        y = t.nodes[y].parent;
      }
      const int c = t.sibling_color(x, y);
      const int u = t.nodes[leaves[a]].leaf_vertex, v = t.nodes[leaves[b]].leaf_vertex;
      color[u][v] = color[v][u] = c;
    }
  }
  if (n == 1) return ColoredClique::from_matrix_exact(1, 0, {{-1}});
  return ColoredClique::from_matrix(n, color);
}

namespace {

// Two-word color mask; palettes stay below 128 colors whenever the
// exhaustive subset scan runs (n <= 15 edges bound the palette by 105).
struct Mask2 {
  std::uint64_t lo = 0, hi = 0;

  void set(int c) { (c < 64 ? lo : hi) |= std::uint64_t{1} << (c & 63); }
  int count() const { return std::popcount(lo) + std::popcount(hi); }
  Mask2 operator|(const Mask2& o) const { return {lo | o.lo, hi | o.hi}; }
  Mask2 minus(const Mask2& o) const { return {lo & ~o.lo, hi & ~o.hi}; }
};

std::vector<int> mask_to_vertices(unsigned mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

Theorem4Report theorem4_exhaustive(const ColoredClique& k) {
  const int n = k.vertex_count();
  Theorem4Report report;
  report.exhaustive = true;

  // colors_to[v][S]: colors on edges from v into the vertex set S.
  std::vector<std::vector<Mask2>> colors_to(n, std::vector<Mask2>(1u << n));
  for (int v = 0; v < n; ++v) {
    for (unsigned s = 1; s < (1u << n); ++s) {
      const int low = std::countr_zero(s);
      Mask2 m = colors_to[v][s & (s - 1)];
      if (low != v) m.set(k.color(v, low));
      colors_to[v][s] = m;
    }
  }

  std::vector<Mask2> internal(1u << n);
  for (unsigned b = 1; b < (1u << n); ++b) {
    const int high = 31 - std::countl_zero(b);
    const unsigned rest = b & ~(1u << high);
    internal[b] = internal[rest] | colors_to[high][rest];
    const int size = std::popcount(b);
    if (size >= 2 && internal[b].count() > size - 1 && !report.internal_witness) {
      report.internal_bound_holds = false;
      report.internal_witness = mask_to_vertices(b);
    }
  }

  std::vector<Mask2> cross(1u << (n - 1));
  for (unsigned b = 1; b < (1u << n); ++b) {
    const unsigned comp = ((1u << n) - 1) & ~b;
    std::vector<int> comp_verts = mask_to_vertices(comp);
    const int q = static_cast<int>(comp_verts.size());
    if (q == 0) continue;
    std::vector<Mask2> fresh(q);
    for (int i = 0; i < q; ++i)
      fresh[i] = colors_to[comp_verts[i]][b].minus(internal[b]);
    for (unsigned c = 1; c < (1u << q); ++c) {
      const int low = std::countr_zero(c);
      cross[c] = cross[c & (c - 1)] | fresh[low];
      if (cross[c].count() > std::popcount(c)) {
        if (!report.cross_witness) {
          report.cross_bound_holds = false;
          unsigned cmask = 0;
          for (int i = 0; i < q; ++i)
            if (c & (1u << i)) cmask |= 1u << comp_verts[i];
          report.cross_witness = {mask_to_vertices(b), mask_to_vertices(cmask)};
        }
      }
    }
    if (report.cross_witness && report.internal_witness) break;
  }
  return report;
}

int fresh_cross_colors(const ColoredClique& k, const std::vector<int>& b,
                       const std::vector<int>& c) {
  std::set<int> bb;
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j) bb.insert(k.color(b[i], b[j]));
  std::set<int> seen;
  for (int u : b)
    for (int v : c) {
      const int col = k.color(u, v);
      if (!bb.count(col)) seen.insert(col);
    }
  return static_cast<int>(seen.size());
}

void check_pair_sampled(const ColoredClique& k, const std::vector<int>& b,
                        const std::vector<int>& c, Theorem4Report& report) {
  if (b.empty() || c.empty() || report.cross_witness) return;
  if (fresh_cross_colors(k, b, c) > static_cast<int>(c.size())) {
    report.cross_bound_holds = false;
    report.cross_witness = {b, c};
  }
}

void check_subset_sampled(const ColoredClique& k, const std::vector<int>& b,
                          Theorem4Report& report) {
  if (b.size() < 2 || report.internal_witness) return;
  std::set<int> bb;
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j) bb.insert(k.color(b[i], b[j]));
  if (static_cast<int>(bb.size()) > static_cast<int>(b.size()) - 1) {
    report.internal_bound_holds = false;
    report.internal_witness = b;
  }
}

// Documented sample used above the exhaustive cutoff: both bounds over
// every subset/pair with at most 5 vertices in play, plus 10000 random
// draws from a fixed seed.
Theorem4Report theorem4_sampled(const ColoredClique& k) {
  const int n = k.vertex_count();
  const int palette = k.palette_size();
  Theorem4Report report;
  report.exhaustive = false;

  std::vector<int> chosen;
  auto subsets = [&](auto&& self, int start, int remaining, auto&& visit) -> void {
    visit(chosen);
    if (remaining == 0) return;
    for (int v = start; v < n; ++v) {
      chosen.push_back(v);
      self(self, v + 1, remaining - 1, visit);
      chosen.pop_back();
    }
  };
  subsets(subsets, 0, 5, [&](const std::vector<int>& b) { check_subset_sampled(k, b, report); });

  // Cross bound over all disjoint pairs with |b|+|c| <= 5. Stamp arrays
  // give O(|b|) work per extension of c.
  std::vector<int> in_bb(palette, 0), cross_seen(palette, 0);
  int epoch = 0;
  subsets(subsets, 0, 4, [&](const std::vector<int>& b) {
    if (b.empty() || report.cross_witness) return;
    ++epoch;
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) in_bb[k.color(b[i], b[j])] = epoch;
    std::vector<int> c;
    std::vector<int> marked;
    auto extend = [&](auto&& self, int start, int fresh) -> void {
      if (report.cross_witness) return;
      if (!c.empty() && fresh > static_cast<int>(c.size())) {
        report.cross_bound_holds = false;
        report.cross_witness = {b, c};
        return;
      }
      if (static_cast<int>(b.size() + c.size()) >= 5) return;
      for (int v = start; v < n; ++v) {
        if (std::binary_search(b.begin(), b.end(), v)) continue;
        int added = 0;
        for (int u : b) {
          const int col = k.color(u, v);
          if (in_bb[col] != epoch && cross_seen[col] != epoch) {
            cross_seen[col] = epoch;
            marked.push_back(col);
            ++added;
          }
        }
        c.push_back(v);
        self(self, v + 1, fresh + added);
        c.pop_back();
        for (int i = 0; i < added; ++i) {
          cross_seen[marked.back()] = 0;
          marked.pop_back();
        }
      }
    };
    extend(extend, 0, 0);
  });

  std::mt19937 rng(0);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<int> b, c;
    for (int v = 0; v < n; ++v) {
      switch (rng() % 3) {
        case 0: b.push_back(v); break;
        case 1: c.push_back(v); break;
        default: break;
      }
    }
    check_subset_sampled(k, b, report);
    check_pair_sampled(k, b, c, report);
  }
  return report;
}

}  // namespace

Theorem4Report check_theorem4(const ColoredClique& k, int exhaustive_limit) {
  if (k.vertex_count() <= exhaustive_limit && k.vertex_count() <= 30)
    return theorem4_exhaustive(k);
  return theorem4_sampled(k);
}

bool verify_exact_structure(const ColoredClique& k) {
  GallaiTree tree;
  try {
    tree = decompose(k);
  } catch (const not_gallai_error&) {
    return false;
  }
  try {
    validate_exact_tree(tree);
  } catch (const validation_error&) {
    return false;
  }
  return true;
}

long long max_exact_gallai_order(int k) {
  if (k < 1) throw std::invalid_argument("max_exact_gallai_order needs k >= 1");
  long long result = k % 2 == 0 ? 1 : 2;
  for (int i = 0; i < k / 2; ++i) result *= 5;
  return result;
}

}  // namespace gallai
