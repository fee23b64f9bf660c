#include "gallai/constructions.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gallai {

ColoredClique odd_gon_no_squares(int m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("odd_gon_no_squares needs an odd m >= 3");
  const int k = (m - 1) / 2;
  // Color ids: 0 for the same-parity color, then the per-position colors
  // for positions -k..-1 (ids 1..k) and 1..k (ids k+1..2k).
  auto beta = [&](int pos) { return pos < 0 ? pos + k + 1 : pos + k; };
  std::vector<std::vector<int>> color(m, std::vector<int>(m, -1));
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const int i = a - k, j = b - k;
      int c;
      if (((i % 2) + 2) % 2 == ((j % 2) + 2) % 2) {
        c = 0;
      } else {
        c = std::abs(i) > std::abs(j) ? beta(i) : beta(j);
      }
      color[a][b] = color[b][a] = c;
    }
  }
  return ColoredClique::from_matrix_exact(m, m, color);
}

ColoredClique even_gon_no_preceding(int m) {
  if (m < 3) throw std::invalid_argument("even_gon_no_preceding needs m >= 3");
  const int n = 2 * m;
  std::vector<std::vector<int>> color(n, std::vector<int>(n, -1));
  auto set = [&](int u, int v, int c) { color[u][v] = color[v][u] = c; };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) set(u, v, 1);  // default inner color
  for (int i = 0; i < n; ++i) set(i, (i + 1) % n, i);
  set(0, 2, 2);
  set(1, 3, 0);
  return ColoredClique::from_matrix_exact(n, n, color);
}

ColoredClique simple_clique(int size) {
  switch (size) {
    case 2:
      return ColoredClique::from_matrix_exact(2, 1, {{-1, 0}, {0, -1}});
    case 4: {
      // Color 0 induces the path 1-0-3-2, color 1 the path 0-2-1-3.
      std::vector<std::vector<int>> color(4, std::vector<int>(4, 1));
      for (int v = 0; v < 4; ++v) color[v][v] = -1;
      auto set = [&](int u, int v, int c) { color[u][v] = color[v][u] = c; };
      set(0, 1, 0);
      set(0, 3, 0);
      set(2, 3, 0);
      return ColoredClique::from_matrix_exact(4, 2, color);
    }
    case 5: {
      // Color 0 induces the cycle 0-1-2-3-4, color 1 its complement cycle.
      std::vector<std::vector<int>> color(5, std::vector<int>(5, 1));
      for (int v = 0; v < 5; ++v) color[v][v] = -1;
      auto set = [&](int u, int v, int c) { color[u][v] = color[v][u] = c; };
      for (int i = 0; i < 5; ++i) set(i, (i + 1) % 5, 0);
      return ColoredClique::from_matrix_exact(5, 2, color);
    }
    default:
      throw std::invalid_argument("simple cliques have size 2, 4, or 5");
  }
}

namespace {

// Clique obtained by replacing every vertex of `outer` with a copy of
// `inner`; cross-copy edges take the outer color shifted past the inner
// palette, within-copy edges keep the inner color.
ColoredClique blow_up(const ColoredClique& outer, const ColoredClique& inner) {
  const int b = outer.vertex_count(), s = inner.vertex_count();
  const int n = b * s;
  const int shift = inner.palette_size();
  std::vector<std::vector<int>> color(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int bu = u / s, bv = v / s;
      const int c = bu == bv ? inner.color(u % s, v % s) : outer.color(bu, bv) + shift;
      color[u][v] = color[v][u] = c;
    }
  }
  return ColoredClique::from_matrix_exact(n, shift + outer.palette_size(), color);
}

}  // namespace

ColoredClique extremal_exact_gallai(int k) {
  if (k < 1) throw std::invalid_argument("extremal_exact_gallai needs k >= 1");
  ColoredClique result = (k % 2 == 1) ? simple_clique(2) : simple_clique(5);
  for (int level = (k % 2 == 1) ? 1 : 2; level < k; level += 2)
    result = blow_up(simple_clique(5), result);
  return result;
}

ColoredClique gallai_host(const SimpleGraph& h) {
  const int n = h.vertex_count();
  if (n < 2) throw std::invalid_argument("gallai_host needs at least two vertices");
  if (!is_connected(h)) throw std::invalid_argument("gallai_host needs a connected graph");
  std::vector<std::vector<int>> color(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) color[u][v] = color[v][u] = h.has_edge(u, v) ? 0 : 1;
  return ColoredClique::from_matrix(n, color);
}

}  // namespace gallai
