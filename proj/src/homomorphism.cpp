#include "gallai/homomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gallai {

bool is_full_hom(const FullHom& f) {
  const int n = f.domain.vertex_count();
  if (static_cast<int>(f.map.size()) != n) return false;
  for (int v : f.map)
    if (v < 0 || v >= f.codomain.vertex_count()) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (f.domain.has_edge(u, v) != f.codomain.has_edge(f.map[u], f.map[v])) return false;
  return true;
}

ReducedForm reduced_form(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> klass(n, -1);
  std::vector<int> representative;
  for (int v = 0; v < n; ++v) {
    for (int r = 0; r < static_cast<int>(representative.size()); ++r) {
      const int u = representative[r];
      bool same = true;
      for (int w = 0; w < n && same; ++w)
        if (g.has_edge(v, w) != g.has_edge(u, w)) same = false;
      // Equal neighborhoods force non-adjacency (no loops), so the
      // direct row comparison is enough.
      if (same) {
        klass[v] = r;
        break;
      }
    }
    if (klass[v] < 0) {
      klass[v] = static_cast<int>(representative.size());
      representative.push_back(v);
    }
  }
  std::vector<std::pair<int, int>> edges;
  const int m = static_cast<int>(representative.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (g.has_edge(representative[a], representative[b])) edges.emplace_back(a, b);
  return ReducedForm{SimpleGraph(m, std::move(edges)), std::move(klass)};
}

SimpleGraph canonical_form(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n > 10) throw validation_error("canonical_form is capped at 10 vertices");
  if (n <= 1) return g;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_perm;
  do {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) key = (key << 1) | (g.has_edge(perm[i], perm[j]) ? 1 : 0);
    if (key < best) {
      best = key;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(best_perm[i], best_perm[j])) edges.emplace_back(i, j);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph graph_type(const SimpleGraph& g) { return canonical_form(reduced_form(g).graph); }

namespace {

// Least injective map of `pattern` onto an induced subgraph of `host`,
// in image order.
std::optional<std::vector<int>> find_induced_embedding(const SimpleGraph& pattern,
                                                       const SimpleGraph& host) {
  const int p = pattern.vertex_count(), n = host.vertex_count();
  if (p > n) return std::nullopt;
  std::vector<int> image(p, -1);
  std::vector<char> used(n, 0);
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == p) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (pattern.has_edge(j, i) != host.has_edge(image[j], v)) ok = false;
      if (!ok) continue;
      image[i] = v;
      used[v] = 1;
      if (self(self, i + 1)) return true;
      used[v] = 0;
      image[i] = -1;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return image;
}

}  // namespace

std::optional<FullHom> find_full_hom(const SimpleGraph& g, const SimpleGraph& h) {
  const ReducedForm rg = reduced_form(g);
  const ReducedForm rh = reduced_form(h);
  auto embedding = find_induced_embedding(rg.graph, rh.graph);
  if (!embedding) return std::nullopt;
  // Section of the collapse of h: each class goes to its least member.
  std::vector<int> section(rh.graph.vertex_count(), -1);
  for (int v = 0; v < h.vertex_count(); ++v)
    if (section[rh.vertex_map[v]] < 0) section[rh.vertex_map[v]] = v;
  std::vector<int> map(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) map[v] = section[(*embedding)[rg.vertex_map[v]]];
  FullHom f{g, h, std::move(map)};
  if (!is_full_hom(f)) throw std::logic_error("internal: assembled map is not full");
  return f;
}

bool exists_full_hom(const SimpleGraph& g, const SimpleGraph& h) {
  return find_full_hom(g, h).has_value();
}

std::vector<Monochrome> monochromes(const ColoredClique& k) {
  const int n = k.vertex_count();
  std::vector<Monochrome> out;
  for (int color = 0; color < k.palette_size(); ++color) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (k.color(u, v) == color) edges.emplace_back(u, v);
    SimpleGraph layer(n, edges);
    for (const auto& comp : connected_components(layer)) {
      if (comp.size() < 2) continue;  // vertices without an edge of this color
      out.push_back(Monochrome{color, comp, induced_subgraph(layer, comp)});
    }
  }
  return out;
}

SimpleGraph spanning_monochrome(const ColoredClique& k) {
  const int n = k.vertex_count();
  if (n < 2) throw std::invalid_argument("spanning_monochrome needs at least two vertices");
  {
    // Without the Gallai hypothesis a spanning monochrome may not exist.
    auto triangle = [&]() -> std::optional<std::array<int, 3>> {
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          for (int w = v + 1; w < n; ++w) {
            const int a = k.color(u, v), b = k.color(u, w), c = k.color(v, w);
            if (a != b && a != c && b != c) return std::array<int, 3>{u, v, w};
          }
      return std::nullopt;
    }();
    if (triangle) throw not_gallai_error("not a Gallai clique", *triangle);
  }
  const std::vector<Monochrome> all = monochromes(k);
  const Monochrome* best = nullptr;
  for (const auto& m : all)
    if (!best || m.vertices.size() > best->vertices.size()) best = &m;
  if (!best || static_cast<int>(best->vertices.size()) != n)
    throw std::logic_error("internal: largest monochrome of a Gallai clique must span");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (k.color(u, v) == best->color && best->graph.has_edge(u, v)) edges.emplace_back(u, v);
  // The component spans, so original ids and relabeled ids coincide.
  return SimpleGraph(n, std::move(edges));
}

std::string obstruction_name(Obstruction o) {
  switch (o) {
    case Obstruction::C3: return "C3";
    case Obstruction::P4: return "P4";
    case Obstruction::A: return "A";
  }
  return "?";
}

SimpleGraph obstruction_graph(Obstruction o) {
  switch (o) {
    case Obstruction::C3: return cycle_graph(3);
    case Obstruction::P4: return path_graph(4);
    default: return graph_a();
  }
}

std::optional<std::vector<int>> find_induced_copy(const SimpleGraph& pattern,
                                                  const SimpleGraph& host) {
  const int p = pattern.vertex_count(), n = host.vertex_count();
  if (p > n) return std::nullopt;
  const SimpleGraph pattern_canon = canonical_form(pattern);
  const std::vector<int> pattern_degrees = pattern.degree_sequence();
  const int pattern_edges = pattern.edge_count();
  std::vector<int> subset;
  auto dfs = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(subset.size()) == p) {
      int edges = 0;
      std::vector<int> deg(p, 0);
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
          if (host.has_edge(subset[i], subset[j])) {
            ++edges;
            ++deg[i];
            ++deg[j];
          }
      if (edges != pattern_edges) return false;
      std::sort(deg.begin(), deg.end());
      if (deg != pattern_degrees) return false;
      return canonical_form(induced_subgraph(host, subset)) == pattern_canon;
    }
    for (int v = start; v < n; ++v) {
      subset.push_back(v);
      if (self(self, v + 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return subset;
}

namespace {

// Walks an induced cycle given as a vertex set: starts at the least
// vertex and follows neighbors within the set.
std::vector<int> cycle_order(const SimpleGraph& g, const std::vector<int>& verts) {
  std::vector<int> order{verts.front()};
  int prev = -1;
  while (order.size() < verts.size()) {
    const int cur = order.back();
    for (int v : verts) {
      if (v != prev && v != cur && g.has_edge(cur, v)) {
        prev = cur;
        order.push_back(v);
        break;
      }
    }
  }
  return order;
}

// Walks an induced path given as a vertex set, starting from its least
// endpoint (degree 1 within the set).
std::vector<int> path_order(const SimpleGraph& g, const std::vector<int>& verts) {
  auto degree_in = [&](int v) {
    int d = 0;
    for (int u : verts)
      if (u != v && g.has_edge(u, v)) ++d;
    return d;
  };
  int start = -1;
  for (int v : verts)
    if (degree_in(v) == 1) {
      start = v;
      break;
    }
  std::vector<int> order{start};
  int prev = -1;
  while (order.size() < verts.size()) {
    const int cur = order.back();
    for (int v : verts) {
      if (v != prev && v != cur && g.has_edge(cur, v)) {
        prev = cur;
        order.push_back(v);
        break;
      }
    }
  }
  return order;
}

FullHom checked(FullHom f) {
  if (!is_full_hom(f)) throw std::logic_error("internal: constructed map is not full");
  return f;
}

// Full homomorphism onto the 5-cycle built around an induced 5-cycle:
// every vertex is adjacent to exactly one consecutive pair of the cycle.
FullHom hom_via_pentagon(const SimpleGraph& g, const std::vector<int>& cycle_verts) {
  const std::vector<int> ring = cycle_order(g, cycle_verts);
  const int n = g.vertex_count();
  std::vector<int> map(n, -1);
  for (int v = 0; v < n; ++v) {
    int hits = 0;
    for (int i = 0; i < 5; ++i) {
      if (g.has_edge(v, ring[(i + 4) % 5]) && g.has_edge(v, ring[(i + 1) % 5])) {
        map[v] = i;
        ++hits;
      }
    }
    if (hits != 1)
      throw std::logic_error("internal: pentagon window rule must pick exactly one slot");
  }
  return checked(FullHom{g, cycle_graph(5), std::move(map)});
}

// Full homomorphism onto the 5-cycle when no induced 5-cycle exists: the
// longest induced path has at most 3 edges and its windows classify every
// vertex; path position j lands on cycle vertex j.
FullHom hom_via_path(const SimpleGraph& g) {
  const int n = g.vertex_count();
  const SimpleGraph c5 = cycle_graph(5);
  if (n == 1) return checked(FullHom{g, c5, {0}});

  std::optional<std::vector<int>> p3 = find_induced_copy(path_graph(3), g);
  if (p3) {
    const std::vector<int> path = path_order(g, *p3);
    std::vector<int> map(n, -1);
    for (int v = 0; v < n; ++v) {
      const bool e0 = g.has_edge(v, path[0]), e1 = g.has_edge(v, path[1]);
      const bool e2 = g.has_edge(v, path[2]), e3 = g.has_edge(v, path[3]);
      int hits = 0;
      if (e1 && !e3) { map[v] = 0; ++hits; }
      if (e0 && e2) { map[v] = 1; ++hits; }
      if (e1 && e3) { map[v] = 2; ++hits; }
      if (e2 && !e0) { map[v] = 3; ++hits; }
      if (hits != 1)
        throw std::logic_error("internal: path window rule must pick exactly one slot");
    }
    return checked(FullHom{g, c5, std::move(map)});
  }

  std::optional<std::vector<int>> p2 = find_induced_copy(path_graph(2), g);
  if (p2) {
    const std::vector<int> path = path_order(g, *p2);
    std::vector<int> map(n, -1);
    for (int v = 0; v < n; ++v) {
      const bool mid = g.has_edge(v, path[1]);
      const bool ends = g.has_edge(v, path[0]) && g.has_edge(v, path[2]);
      if (mid == ends)
        throw std::logic_error("internal: short path rule must pick exactly one slot");
      map[v] = mid ? 0 : 1;
    }
    return checked(FullHom{g, c5, std::move(map)});
  }

  // No induced 2-edge path, no triangle, connected: a single edge.
  if (n != 2 || g.edge_count() != 1)
    throw std::logic_error("internal: expected a single edge at the base case");
  return checked(FullHom{g, c5, {0, 1}});
}

}  // namespace

DualityResult classify_monochrome(const SimpleGraph& g) {
  if (!is_connected(g))
    throw validation_error("classify_monochrome requires a connected graph");
  for (Obstruction o : {Obstruction::C3, Obstruction::P4, Obstruction::A}) {
    if (auto copy = find_induced_copy(obstruction_graph(o), g))
      return DualityResult{std::nullopt, std::make_pair(o, *copy)};
  }
  if (auto pentagon = find_induced_copy(cycle_graph(5), g))
    return DualityResult{hom_via_pentagon(g, *pentagon), std::nullopt};
  return DualityResult{hom_via_path(g), std::nullopt};
}

bool is_exact_gallai_monochrome(const SimpleGraph& g) {
  if (!is_connected(g))
    throw validation_error("is_exact_gallai_monochrome requires a connected graph");
  const SimpleGraph type = graph_type(g);
  const bool by_type = type == canonical_form(path_graph(1)) ||
                       type == canonical_form(path_graph(3)) ||
                       type == canonical_form(cycle_graph(5));
  if (g.vertex_count() == 1) return false;  // maps vacuously but is no monochrome
  const bool by_duality = classify_monochrome(g).hom.has_value();
  if (by_type != by_duality)
    throw std::logic_error("internal: type route and duality route disagree");
  return by_type;
}

std::optional<std::vector<int>> brute_force_full_hom(const SimpleGraph& g,
                                                     const SimpleGraph& h) {
  if (g.vertex_count() > 8 || h.vertex_count() > 8)
    throw validation_error("brute_force_full_hom is capped at 8 vertices");
  const int n = g.vertex_count(), m = h.vertex_count();
  if (m == 0) return std::nullopt;
  std::vector<int> map(n, -1);
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int v = 0; v < m; ++v) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (g.has_edge(j, i) != h.has_edge(map[j], v)) ok = false;
      if (!ok) continue;
      map[i] = v;
      if (self(self, i + 1)) return true;
      map[i] = -1;
    }
    return false;
  };
  if (n == 0) return std::vector<int>{};
  if (!dfs(dfs, 0)) return std::nullopt;
  return map;
}

}  // namespace gallai
