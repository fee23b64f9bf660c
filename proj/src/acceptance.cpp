#include "gallai/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "gallai/constructions.hpp"
#include "gallai/gallai.hpp"
#include "gallai/homomorphism.hpp"
#include "gallai/io.hpp"
#include "gallai/random_cliques.hpp"
#include "gallai/runtime.hpp"
#include "gallai/search.hpp"
#include "gallai/spectrum.hpp"

namespace gallai {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }

  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

// ---------------------------------------------------------------------
// Independent oracles (exhaustive, no shared code with the library paths
// they check).

// All-permutations colorful cycle detector.
bool naive_has_colorful_cycle(const ColoredClique& k, int len) {
  const int n = k.vertex_count();
  if (len > n) return false;
  std::vector<int> verts;
  auto subsets = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(verts.size()) == len) {
      std::vector<int> perm(verts);
      std::sort(perm.begin(), perm.end());
      do {
        std::set<int> colors;
        bool ok = true;
        for (int i = 0; i < len && ok; ++i)
          ok = colors.insert(k.color(perm[i], perm[(i + 1) % len])).second;
        if (ok) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    }
    for (int v = start; v < n; ++v) {
      verts.push_back(v);
      if (self(self, v + 1)) return true;
      verts.pop_back();
    }
    return false;
  };
  return subsets(subsets, 0);
}

std::vector<int> naive_spectrum_exceptions(const ColoredClique& k) {
  std::vector<int> out;
  for (int len = 3; len <= k.vertex_count(); ++len)
    if (naive_has_colorful_cycle(k, len)) out.push_back(len);
  return out;
}

// All-maps full homomorphism enumerator (visitor form).
void all_full_homs(const SimpleGraph& g, const SimpleGraph& h,
                   const std::function<void(const std::vector<int>&)>& visit) {
  const int n = g.vertex_count(), m = h.vertex_count();
  std::vector<int> map(n, -1);
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == n) {
      visit(map);
      return;
    }
    for (int v = 0; v < m; ++v) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (g.has_edge(j, i) != h.has_edge(map[j], v)) ok = false;
      if (!ok) continue;
      map[i] = v;
      self(self, i + 1);
      map[i] = -1;
    }
  };
  if (n > 0 && m == 0) return;
  dfs(dfs, 0);
}

// ---------------------------------------------------------------------
// Small-graph enumeration.

int pair_count(int n) { return n * (n - 1) / 2; }

SimpleGraph graph_from_mask(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask & (std::uint32_t{1} << bit)) edges.emplace_back(i, j);
  return SimpleGraph(n, std::move(edges));
}

bool mask_connected(int n, std::uint32_t mask) {
  std::array<std::uint32_t, 8> adj{};
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask & (std::uint32_t{1} << bit)) {
        adj[i] |= std::uint32_t{1} << j;
        adj[j] |= std::uint32_t{1} << i;
      }
  std::uint32_t reached = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier & (std::uint32_t{1} << v)) next |= adj[v];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (std::uint32_t{1} << n) - 1;
}

// Non-isomorphic connected graphs on exactly n vertices, as the labeled
// graphs whose edge mask is minimal in their isomorphism orbit.
std::vector<std::uint32_t> connected_class_masks(int n) {
  const int bits = pair_count(n);
  std::vector<std::array<int, 8>> perms;
  {
    std::array<int, 8> p{};
    std::iota(p.begin(), p.begin() + n, 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));
  }
  std::vector<int> pair_index(64, -1);
  auto pidx = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return pair_index[i * 8 + j];
  };
  {
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit) pair_index[i * 8 + j] = bit;
  }
  // bit_map[p][b] = image of edge bit b under permutation p
  std::vector<std::vector<int>> bit_map(perms.size(), std::vector<int>(bits));
  for (size_t pi = 0; pi < perms.size(); ++pi) {
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        bit_map[pi][bit] = pidx(perms[pi][i], perms[pi][j]);
  }

  const std::uint32_t total = std::uint32_t{1} << bits;
  const int workers = std::min<int>(thread_cap(), 8);
  std::vector<std::vector<std::uint32_t>> found(workers);
  auto scan = [&](int w) {
    const std::uint64_t lo = static_cast<std::uint64_t>(total) * w / workers;
    const std::uint64_t hi = static_cast<std::uint64_t>(total) * (w + 1) / workers;
    for (std::uint64_t m64 = lo; m64 < hi; ++m64) {
      const std::uint32_t mask = static_cast<std::uint32_t>(m64);
      if (!mask_connected(n, mask)) continue;
      bool minimal = true;
      for (size_t pi = 1; pi < perms.size() && minimal; ++pi) {
        std::uint32_t image = 0;
        for (int b = 0; b < bits; ++b)
          if (mask & (std::uint32_t{1} << b)) image |= std::uint32_t{1} << bit_map[pi][b];
        if (image < mask) minimal = false;
      }
      if (minimal) found[w].push_back(mask);
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint32_t> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

// ---------------------------------------------------------------------
// Criteria.

Outcome criterion_odd_gons() {
  Outcome outcome;
  for (int m : {3, 5, 7, 9}) {
    const ColoredClique k = odd_gon_no_squares(m);
    if (!has_colorful_cycle(k, m))
      outcome.fail("m=" + std::to_string(m) + ": expected a colorful " + std::to_string(m) +
                   "-cycle");
    if (has_colorful_cycle(k, 4))
      outcome.fail("m=" + std::to_string(m) + ": found a colorful square");
    if (m <= 7) {
      std::vector<int> expected;
      for (int len = 3; len <= m; len += 2) expected.push_back(len);
      const std::vector<int> brute = naive_spectrum_exceptions(k);
      if (brute != expected) outcome.fail("m=" + std::to_string(m) + ": brute-force spectrum");
      if (spectrum_of(k).exceptions != expected)
        outcome.fail("m=" + std::to_string(m) + ": spectrum mismatch");
    }
  }
  outcome.note("m in {3,5,7,9}");
  return outcome;
}

Outcome criterion_even_gons() {
  Outcome outcome;
  for (int m : {3, 4, 5}) {
    const ColoredClique k = even_gon_no_preceding(m);
    if (!has_colorful_cycle(k, 2 * m))
      outcome.fail("m=" + std::to_string(m) + ": expected a colorful 2m-cycle");
    if (has_colorful_cycle(k, 2 * m - 1))
      outcome.fail("m=" + std::to_string(m) + ": found a colorful (2m-1)-cycle");
  }
  outcome.note("m in {3,4,5}");
  return outcome;
}

int size_from_seed(std::uint32_t seed, int lo, int hi, std::uint32_t salt) {
  std::mt19937 rng(seed ^ salt);
  return lo + static_cast<int>(rng() % (hi - lo + 1));
}

Outcome criterion_tree_cliques() {
  Outcome outcome;
  for (std::uint32_t seed = 0; seed < 500 && outcome.pass; ++seed) {
    const int n = size_from_seed(seed, 2, 12, 0x7ee5u);
    const ColoredClique k = random_gallai_clique(n, seed);
    if (!spectrum_of(k).exceptions.empty()) {
      outcome.fail("seed " + std::to_string(seed) + ": colorful cycle in a tree clique");
      break;
    }
    const Theorem4Report report = check_theorem4(k);
    if (!report.exhaustive || !report.passed()) {
      outcome.fail("seed " + std::to_string(seed) + ": subset color bounds");
      break;
    }
    if (!(recompose(decompose(k)) == k)) {
      outcome.fail("seed " + std::to_string(seed) + ": decompose/recompose roundtrip");
      break;
    }
  }
  outcome.note("500 tree cliques, n<=12");
  return outcome;
}

Outcome criterion_decagon() {
  Outcome outcome;
  const auto t0 = Clock::now();
  const SearchResult small_unsat = search_coloring(4, {3}, 4, 1u << 22);
  const double small_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (small_unsat.status != SearchStatus::unsat) outcome.fail("search 4 !3 =4 must be UNSAT");
  if (small_seconds >= 1.0) outcome.fail("search 4 !3 =4 exceeded 1s");

  const auto t1 = Clock::now();
  const SearchResult hexagon = search_coloring(6, {5}, 6, 1u << 28);
  const double hex_seconds = std::chrono::duration<double>(Clock::now() - t1).count();
  if (hexagon.status != SearchStatus::sat) outcome.fail("search 6 !5 =6 must be SAT");
  if (hex_seconds >= 10.0) outcome.fail("search 6 !5 =6 exceeded 10s");
  if (hexagon.witness) {
    if (!has_colorful_cycle(*hexagon.witness, 6) || has_colorful_cycle(*hexagon.witness, 5))
      outcome.fail("hexagon witness fails its own constraints");
  }

  std::uint64_t budget = 600'000'000;
  if (const char* env = std::getenv("GALLAI_DECAGON_BUDGET")) {
    const long long parsed = std::atoll(env);
    if (parsed > 0) budget = static_cast<std::uint64_t>(parsed);
  }
  const SearchResult decagon = search_coloring(10, {5}, 10, budget);
  switch (decagon.status) {
    case SearchStatus::unsat:
      outcome.note("decagon UNSAT after " + std::to_string(decagon.nodes) + " nodes");
      break;
    case SearchStatus::timeout:
      outcome.note("decagon TIMEOUT at budget " + std::to_string(budget) +
                   " nodes (not refuted)");
      break;
    case SearchStatus::sat:
      outcome.fail("decagon search returned SAT");
      break;
  }
  return outcome;
}

Outcome criterion_extremal() {
  Outcome outcome;
  const long long expected[] = {2, 5, 10, 25, 50};
  for (int k = 1; k <= 5; ++k) {
    const ColoredClique clique = extremal_exact_gallai(k);
    if (clique.vertex_count() != expected[k - 1])
      outcome.fail("k=" + std::to_string(k) + ": wrong order");
    if (clique.palette_size() != k) outcome.fail("k=" + std::to_string(k) + ": wrong palette");
    if (!is_exact_gallai(clique)) outcome.fail("k=" + std::to_string(k) + ": not exact");
    if (max_exact_gallai_order(k) != expected[k - 1])
      outcome.fail("k=" + std::to_string(k) + ": wrong bound");
  }
  // Every two-coloring of the 6-clique has a monochromatic triangle, so
  // no exact Gallai clique on two colors reaches six vertices.
  int exact_found = 0;
  for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
    std::vector<std::vector<int>> color(6, std::vector<int>(6, -1));
    int bit = 0;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v, ++bit)
        color[u][v] = color[v][u] = (mask >> bit) & 1;
    if (is_exact_gallai(ColoredClique::from_matrix(6, color))) ++exact_found;
  }
  if (exact_found != 0) outcome.fail("exact Gallai two-coloring of a 6-clique found");
  outcome.note("orders 2,5,10,25,50; 2^15 colorings of the 6-clique scanned");
  return outcome;
}

Outcome criterion_duality() {
  Outcome outcome;
  const SimpleGraph c5 = cycle_graph(5);
  const std::set<std::string> expected_types = {to_ug_string(canonical_form(path_graph(1))),
                                                to_ug_string(canonical_form(path_graph(3))),
                                                to_ug_string(canonical_form(c5))};
  const int expected_counts[] = {0, 0, 1, 2, 6, 21, 112, 853};
  std::set<std::string> seen_types;
  long long checked = 0;
  const auto t0 = Clock::now();
  double six_seconds = 0;
  for (int n = 2; n <= 7 && outcome.pass; ++n) {
    const std::vector<std::uint32_t> masks = connected_class_masks(n);
    if (static_cast<int>(masks.size()) != expected_counts[n]) {
      outcome.fail("n=" + std::to_string(n) + ": expected " +
                   std::to_string(expected_counts[n]) + " classes, enumerated " +
                   std::to_string(masks.size()));
      break;
    }
    for (std::uint32_t mask : masks) {
      const SimpleGraph g = graph_from_mask(n, mask);
      const DualityResult result = classify_monochrome(g);
      const bool hom_branch = result.hom.has_value();
      if (hom_branch == result.witness.has_value()) {
        outcome.fail("classification must take exactly one branch");
        break;
      }
      const bool oracle = brute_force_full_hom(g, c5).has_value();
      if (hom_branch != oracle) {
        outcome.fail("n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                     ": branch disagrees with the exhaustive oracle");
        break;
      }
      if (hom_branch) {
        if (!is_full_hom(*result.hom)) {
          outcome.fail("returned homomorphism fails verification");
          break;
        }
        seen_types.insert(to_ug_string(graph_type(g)));
      } else {
        const auto& [obstruction, copy] = *result.witness;
        const SimpleGraph induced = induced_subgraph(g, copy);
        if (!(canonical_form(induced) == canonical_form(obstruction_graph(obstruction)))) {
          outcome.fail("witness vertices do not induce the named obstruction");
          break;
        }
      }
      ++checked;
    }
    if (n == 6) six_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  }
  if (outcome.pass) {
    for (const auto& type : seen_types)
      if (!expected_types.count(type)) outcome.fail("unexpected type among mapped graphs");
    if (seen_types.size() != expected_types.size())
      outcome.fail("some expected type never appeared");
    if (six_seconds >= 30.0) outcome.fail("portion up to 6 vertices exceeded 30s");
  }
  outcome.note(std::to_string(checked) + " connected classes on 2..7 vertices");
  return outcome;
}

Outcome criterion_monochrome_types() {
  Outcome outcome;
  const std::set<std::string> allowed = {to_ug_string(canonical_form(path_graph(1))),
                                         to_ug_string(canonical_form(path_graph(3))),
                                         to_ug_string(canonical_form(cycle_graph(5)))};
  long long monochrome_count = 0;
  for (std::uint32_t seed = 0; seed < 200 && outcome.pass; ++seed) {
    const int n = size_from_seed(seed, 2, 50, 0xeac7u);
    const ColoredClique k = random_exact_gallai_clique(n, seed);
    if (!is_exact_gallai(k)) {
      outcome.fail("seed " + std::to_string(seed) + ": generator output not exact");
      break;
    }
    for (const Monochrome& m : monochromes(k)) {
      ++monochrome_count;
      if (!allowed.count(to_ug_string(graph_type(m.graph)))) {
        outcome.fail("seed " + std::to_string(seed) + ": monochrome of unexpected type");
        break;
      }
    }
  }
  outcome.note(std::to_string(monochrome_count) + " monochromes over 200 cliques, n<=50");
  return outcome;
}

Outcome criterion_spanning() {
  Outcome outcome;
  for (std::uint32_t seed = 0; seed < 500 && outcome.pass; ++seed) {
    const int n = size_from_seed(seed, 2, 12, 0x7ee5u);
    const SimpleGraph span = spanning_monochrome(random_gallai_clique(n, seed));
    if (span.vertex_count() != n) outcome.fail("tree-clique spanning monochrome too small");
  }
  for (std::uint32_t seed = 0; seed < 200 && outcome.pass; ++seed) {
    const int n = size_from_seed(seed, 2, 50, 0xeac7u);
    const SimpleGraph span = spanning_monochrome(random_exact_gallai_clique(n, seed));
    if (span.vertex_count() != n) outcome.fail("exact-clique spanning monochrome too small");
  }
  for (std::uint32_t seed = 0; seed < 100 && outcome.pass; ++seed) {
    const int n = size_from_seed(seed, 2, 20, 0x805eu);
    const SimpleGraph h = random_connected_graph(n, 0.3, seed);
    const ColoredClique host = gallai_host(h);
    if (!is_gallai(host)) {
      outcome.fail("seed " + std::to_string(seed) + ": host clique not Gallai");
      break;
    }
    bool embedded = false;
    for (const Monochrome& m : monochromes(host)) {
      if (m.color != 0) continue;
      if (static_cast<int>(m.vertices.size()) == n && m.graph == h) embedded = true;
    }
    if (!embedded) {
      outcome.fail("seed " + std::to_string(seed) + ": graph not a spanning monochrome");
      break;
    }
  }
  outcome.note("700 Gallai cliques spanned; 100 graphs embedded as monochromes");
  return outcome;
}

Outcome criterion_reduced_forms() {
  Outcome outcome;
  long long graphs = 0;
  for (int n = 1; n <= 5 && outcome.pass; ++n) {
    const int bits = pair_count(n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits) && outcome.pass; ++mask) {
      const SimpleGraph g = graph_from_mask(n, mask);
      ++graphs;
      const ReducedForm reduced = reduced_form(g);

      for (int a = 0; a < reduced.graph.vertex_count() && outcome.pass; ++a)
        for (int b = a + 1; b < reduced.graph.vertex_count(); ++b) {
          bool same = true;
          for (int w = 0; w < reduced.graph.vertex_count() && same; ++w)
            if (reduced.graph.has_edge(a, w) != reduced.graph.has_edge(b, w)) same = false;
          if (same) {
            outcome.fail("reduced form is not reduced");
            break;
          }
        }

      const FullHom collapse{g, reduced.graph, reduced.vertex_map};
      std::vector<char> hit(reduced.graph.vertex_count(), 0);
      for (int image : reduced.vertex_map) hit[image] = 1;
      if (!is_full_hom(collapse) ||
          std::count(hit.begin(), hit.end(), 1) != reduced.graph.vertex_count()) {
        outcome.fail("collapse map is not a full surjection");
        break;
      }

      // Full surjections out of g are exactly the partitions into
      // independent blocks with homogeneous cross relations; none may
      // have fewer blocks than the reduced form.
      std::vector<int> assignment(n, -1);
      int smallest = n + 1;
      auto partitions = [&](auto&& self, int v, int blocks) -> void {
        if (v == n) {
          for (int b1 = 0; b1 < blocks; ++b1)
            for (int b2 = b1; b2 < blocks; ++b2) {
              int edges = 0, pairs = 0;
              for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                  if (assignment[x] == b1 && assignment[y] == b2)
                    ;
                  else if (assignment[x] == b2 && assignment[y] == b1)
                    ;
                  else
                    continue;
                  ++pairs;
                  if (g.has_edge(x, y)) ++edges;
                }
              if (b1 == b2 && edges > 0) return;              // block not independent
              if (b1 != b2 && edges != 0 && edges != pairs) return;  // not homogeneous
            }
          smallest = std::min(smallest, blocks);
          return;
        }
        for (int b = 0; b <= blocks && b < n; ++b) {
          assignment[v] = b;
          self(self, v + 1, std::max(blocks, b + 1));
          assignment[v] = -1;
        }
      };
      partitions(partitions, 0, 0);
      if (smallest != reduced.graph.vertex_count()) {
        outcome.fail("a smaller full-surjection image exists");
        break;
      }
    }
  }

  // Full homomorphisms out of reduced graphs are injective.
  long long homs_checked = 0;
  for (int n = 1; n <= 5 && outcome.pass; ++n) {
    const int bits = pair_count(n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits) && outcome.pass; ++mask) {
      const SimpleGraph g = graph_from_mask(n, mask);
      if (reduced_form(g).graph.vertex_count() != n) continue;  // not reduced
      for (int hn = 1; hn <= 5 && outcome.pass; ++hn) {
        const int hbits = pair_count(hn);
        for (std::uint32_t hmask = 0; hmask < (std::uint32_t{1} << hbits); ++hmask) {
          const SimpleGraph h = graph_from_mask(hn, hmask);
          bool violated = false;
          all_full_homs(g, h, [&](const std::vector<int>& map) {
            ++homs_checked;
            std::set<int> image(map.begin(), map.end());
            if (static_cast<int>(image.size()) != n) violated = true;
          });
          if (violated) {
            outcome.fail("non-injective full homomorphism out of a reduced graph");
            break;
          }
        }
      }
    }
  }
  outcome.note(std::to_string(graphs) + " graphs; " + std::to_string(homs_checked) +
               " oracle homomorphisms");
  return outcome;
}

struct Suite {
  int index;
  std::string name;
  double time_limit_seconds;  // 0 = no limit
  Outcome (*run)();
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {1, "odd-gons", 10.0, criterion_odd_gons},
      {2, "even-gons", 60.0, criterion_even_gons},
      {3, "tree-cliques", 120.0, criterion_tree_cliques},
      {4, "decagon", 0.0, criterion_decagon},
      {5, "extremal", 40.0, criterion_extremal},
      {6, "duality", 600.0, criterion_duality},
      {7, "monochrome-types", 60.0, criterion_monochrome_types},
      {8, "spanning", 30.0, criterion_spanning},
      {9, "reduced-forms", 60.0, criterion_reduced_forms},
  };
  return all;
}

bool run_suite(const Suite& suite, std::ostream& out) {
  const auto t0 = Clock::now();
  Outcome outcome = suite.run();
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (suite.time_limit_seconds > 0 && seconds >= suite.time_limit_seconds)
    outcome.fail("exceeded " + std::to_string(suite.time_limit_seconds) + "s");
  std::ostringstream line;
  line << "criterion " << suite.index << ' ' << (outcome.pass ? "PASS" : "FAIL") << ' '
       << suite.name;
  if (!outcome.detail.empty()) line << ": " << outcome.detail;
  line.precision(2);
  line << std::fixed << " (" << seconds << "s)";
  out << line.str() << '\n';
  return outcome.pass;
}

}  // namespace

std::vector<std::string> acceptance_suite_names() {
  std::vector<std::string> names;
  for (const Suite& s : suites()) names.push_back(s.name);
  return names;
}

bool run_acceptance_suite(const std::string& name, std::ostream& out) {
  for (const Suite& s : suites())
    if (s.name == name) return run_suite(s, out);
  throw validation_error("unknown suite '" + name + "'");
}

int run_all_acceptance_suites(std::ostream& out) {
  int failures = 0;
  for (const Suite& s : suites())
    if (!run_suite(s, out)) ++failures;
  return failures;
}

}  // namespace gallai
