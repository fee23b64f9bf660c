#include <random>

#include "doctest.h"
#include "gallai/constructions.hpp"
#include "gallai/homomorphism.hpp"
#include "gallai/random_cliques.hpp"
#include "oracles.hpp"

using namespace gallai;

namespace {

ColoredClique mono_clique(int n) {
  std::vector<std::vector<int>> color(n, std::vector<int>(n, 0));
  for (int v = 0; v < n; ++v) color[v][v] = -1;
  return ColoredClique::from_matrix_exact(n, 1, color);
}

ColoredClique block_k4() {
  return ColoredClique::from_matrix_exact(
      4, 3, {{-1, 0, 2, 2}, {0, -1, 2, 2}, {2, 2, -1, 1}, {2, 2, 1, -1}});
}

SimpleGraph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return SimpleGraph(a + b, std::move(edges));
}

}  // namespace

TEST_CASE("is_full_hom") {
  const SimpleGraph p1 = path_graph(1);
  std::vector<int> identity{0, 1};
  CHECK(is_full_hom(FullHom{p1, p1, identity}));
  CHECK_FALSE(is_full_hom(FullHom{p1, SimpleGraph(1, {}), {0, 0}}));
  CHECK_FALSE(is_full_hom(FullHom{p1, p1, {0}}));  // partial map
  // Adjacency must be reflected, not just preserved.
  CHECK_FALSE(is_full_hom(FullHom{SimpleGraph(2, {}), p1, {0, 1}}));
}

TEST_CASE("composition of collapse maps stays full") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const SimpleGraph g = oracle::graph_from_mask(5, rng() % 1024);
    const ReducedForm first = reduced_form(g);
    const ReducedForm second = reduced_form(first.graph);
    std::vector<int> composed(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
      composed[v] = second.vertex_map[first.vertex_map[v]];
    CHECK(is_full_hom(FullHom{g, second.graph, composed}));
  }
}

TEST_CASE("reduced_form") {
  SUBCASE("path with two edges collapses to one edge") {
    const ReducedForm r = reduced_form(path_graph(2));
    CHECK(r.graph.vertex_count() == 2);
    CHECK(r.graph.edge_count() == 1);
    CHECK(r.vertex_map == std::vector<int>{0, 1, 0});
  }
  SUBCASE("five-cycle is already reduced") {
    const ReducedForm r = reduced_form(cycle_graph(5));
    CHECK(r.graph.vertex_count() == 5);
    CHECK(r.graph.edge_count() == 5);
  }
  SUBCASE("complete bipartite graphs collapse to one edge") {
    const ReducedForm r = reduced_form(complete_bipartite(2, 3));
    CHECK(r.graph == path_graph(1));
  }
  SUBCASE("output is reduced and the map is a full surjection") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 7);
      const SimpleGraph g = random_connected_graph(n, 0.4, rng());
      const ReducedForm r = reduced_form(g);
      CHECK(is_full_hom(FullHom{g, r.graph, r.vertex_map}));
      CHECK(reduced_form(r.graph).graph.vertex_count() == r.graph.vertex_count());
      std::vector<char> hit(r.graph.vertex_count(), 0);
      for (int image : r.vertex_map) hit[image] = 1;
      CHECK(std::count(hit.begin(), hit.end(), 1) == r.graph.vertex_count());
    }
  }
}

TEST_CASE("graph_type") {
  const SimpleGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(graph_type(star) == canonical_form(path_graph(1)));
  CHECK(graph_type(path_graph(3)) == canonical_form(path_graph(3)));
  CHECK(graph_type(cycle_graph(5)) == canonical_form(cycle_graph(5)));
  // Canonical labeling is exhaustive and capped.
  CHECK_THROWS_AS(graph_type(path_graph(10)), validation_error);
}

TEST_CASE("connected graphs have connected types") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const SimpleGraph g = random_connected_graph(2 + rng() % 7, 0.3, rng());
    CHECK(is_connected(graph_type(g)));
  }
}

TEST_CASE("exists_full_hom") {
  const SimpleGraph c5 = cycle_graph(5);
  CHECK(exists_full_hom(path_graph(2), c5));
  CHECK_FALSE(exists_full_hom(cycle_graph(3), c5));
  CHECK_FALSE(exists_full_hom(path_graph(4), c5));
  const auto hom = find_full_hom(path_graph(2), c5);
  REQUIRE(hom.has_value());
  CHECK(is_full_hom(*hom));
}

TEST_CASE("exists_full_hom agrees with the oracle on small connected graphs") {
  const std::vector<SimpleGraph> targets = {path_graph(1), path_graph(3), cycle_graph(5),
                                            cycle_graph(3), path_graph(4), graph_a()};
  for (int n = 2; n <= 6; ++n) {
    const int bits = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
      const SimpleGraph g = oracle::graph_from_mask(n, mask);
      if (!is_connected(g)) continue;
      for (const SimpleGraph& h : targets) {
        CAPTURE(n);
        CAPTURE(mask);
        CHECK(exists_full_hom(g, h) == oracle::exists_full_hom(g, h));
      }
    }
  }
}

TEST_CASE("monochromes") {
  SUBCASE("two-colored five-clique") {
    const std::vector<Monochrome> parts = monochromes(simple_clique(5));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].color == 0);
    CHECK(parts[1].color == 1);
    for (const auto& m : parts) CHECK(graph_type(m.graph) == canonical_form(cycle_graph(5)));
  }
  SUBCASE("host of a star splits into the star and a triangle") {
    const SimpleGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    const std::vector<Monochrome> parts = monochromes(gallai_host(star));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(parts[1].vertices == std::vector<int>{1, 2, 3});
    CHECK(parts[1].graph == cycle_graph(3));
  }
  SUBCASE("isolated vertices of a color layer are not monochromes") {
    // Color 1 appears on exactly one edge of the majority triangle.
    const ColoredClique majority =
        ColoredClique::from_matrix_exact(3, 2, {{-1, 0, 0}, {0, -1, 1}, {0, 1, -1}});
    const std::vector<Monochrome> parts = monochromes(majority);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].vertices.size() == 3);  // the path of color 0
    CHECK(parts[1].vertices == std::vector<int>{1, 2});
  }
}

TEST_CASE("spanning_monochrome") {
  CHECK(spanning_monochrome(mono_clique(4)).edge_count() == 6);
  const SimpleGraph pentagon = spanning_monochrome(simple_clique(5));
  CHECK(pentagon.vertex_count() == 5);
  CHECK(pentagon.degree_sequence() == std::vector<int>{2, 2, 2, 2, 2});
  const SimpleGraph cross = spanning_monochrome(block_k4());
  CHECK(cross.vertex_count() == 4);
  CHECK(cross == complete_bipartite(2, 2));

  const ColoredClique rainbow =
      ColoredClique::from_matrix_exact(3, 3, {{-1, 0, 1}, {0, -1, 2}, {1, 2, -1}});
  CHECK_THROWS_AS(spanning_monochrome(rainbow), not_gallai_error);
}

TEST_CASE("classify_monochrome") {
  SUBCASE("triangle witness") {
    const DualityResult r = classify_monochrome(cycle_graph(3));
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->first == Obstruction::C3);
    CHECK(r.witness->second == std::vector<int>{0, 1, 2});
  }
  SUBCASE("five-cycle maps onto itself") {
    const DualityResult r = classify_monochrome(cycle_graph(5));
    REQUIRE(r.hom.has_value());
    CHECK(is_full_hom(*r.hom));
  }
  SUBCASE("obstruction graph witnesses itself") {
    const DualityResult r = classify_monochrome(graph_a());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->first == Obstruction::A);
    CHECK(r.witness->second == std::vector<int>{0, 1, 2, 3, 4, 5});
  }
  SUBCASE("long path witness") {
    const DualityResult r = classify_monochrome(path_graph(4));
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->first == Obstruction::P4);
  }
  SUBCASE("single edge and single vertex take the hom branch") {
    CHECK(classify_monochrome(path_graph(1)).hom.has_value());
    CHECK(classify_monochrome(SimpleGraph(1, {})).hom.has_value());
  }
  CHECK_THROWS_AS(classify_monochrome(SimpleGraph(4, {{0, 1}, {2, 3}})), validation_error);
}

TEST_CASE("duality branch matches the oracle on small connected graphs") {
  const SimpleGraph c5 = cycle_graph(5);
  for (int n = 2; n <= 5; ++n) {
    const int bits = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
      const SimpleGraph g = oracle::graph_from_mask(n, mask);
      if (!is_connected(g)) continue;
      const DualityResult r = classify_monochrome(g);
      CAPTURE(n);
      CAPTURE(mask);
      CHECK(r.hom.has_value() == oracle::exists_full_hom(g, c5));
      CHECK(r.hom.has_value() != r.witness.has_value());
    }
  }
}

TEST_CASE("is_exact_gallai_monochrome") {
  CHECK(is_exact_gallai_monochrome(path_graph(3)));
  CHECK_FALSE(is_exact_gallai_monochrome(path_graph(4)));
  CHECK(is_exact_gallai_monochrome(complete_bipartite(2, 2)));
  CHECK(is_exact_gallai_monochrome(cycle_graph(5)));
  // Opposite vertices of a 4-cycle share neighborhoods, so its type is a
  // single edge and it does occur as a monochrome.
  CHECK(is_exact_gallai_monochrome(cycle_graph(4)));
  CHECK_FALSE(is_exact_gallai_monochrome(cycle_graph(6)));
  CHECK_FALSE(is_exact_gallai_monochrome(SimpleGraph(1, {})));  // degenerate case
  CHECK_THROWS_AS(is_exact_gallai_monochrome(SimpleGraph(4, {{0, 1}, {2, 3}})),
                  validation_error);
}

TEST_CASE("brute_force_full_hom") {
  CHECK(brute_force_full_hom(path_graph(2), path_graph(1)).has_value());
  CHECK_FALSE(brute_force_full_hom(cycle_graph(3), cycle_graph(5)).has_value());
  CHECK_FALSE(brute_force_full_hom(graph_a(), cycle_graph(5)).has_value());
  const auto map = brute_force_full_hom(cycle_graph(5), cycle_graph(5));
  REQUIRE(map.has_value());
  CHECK(is_full_hom(FullHom{cycle_graph(5), cycle_graph(5), *map}));
  CHECK_THROWS_AS(brute_force_full_hom(path_graph(8), path_graph(1)), validation_error);
}

TEST_CASE("full homomorphisms out of reduced graphs are injective (smoke)") {
  const auto map = brute_force_full_hom(cycle_graph(5), complete_bipartite(3, 3));
  CHECK_FALSE(map.has_value());  // triangle-free target without a 5-cycle
  const auto self = brute_force_full_hom(graph_a(), graph_a());
  REQUIRE(self.has_value());
  std::set<int> image(self->begin(), self->end());
  CHECK(image.size() == 6);
}

TEST_CASE("reduced form is the smallest full-surjection image, up to 6 vertices") {
  // Full surjections out of g correspond to partitions into independent
  // blocks joined homogeneously; the reduced form must have the fewest
  // blocks among them.
  for (int n = 1; n <= 6; ++n) {
    const int bits = n * (n - 1) / 2;
    const unsigned step = n < 6 ? 1 : 7;  // sampled stride at the top size
    for (unsigned mask = 0; mask < (1u << bits); mask += step) {
      const SimpleGraph g = oracle::graph_from_mask(n, mask);
      const int reduced_size = reduced_form(g).graph.vertex_count();
      std::vector<int> assignment(n, -1);
      int smallest = n + 1;
      auto partitions = [&](auto&& self, int v, int blocks) -> void {
        if (blocks >= smallest) return;
        if (v == n) {
          for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
              if (assignment[x] == assignment[y] && g.has_edge(x, y)) return;
              if (assignment[x] != assignment[y]) {
                // homogeneity against every other pair of the same blocks
                for (int x2 = 0; x2 < n; ++x2)
                  for (int y2 = 0; y2 < n; ++y2) {
                    if (assignment[x2] == assignment[x] && assignment[y2] == assignment[y] &&
                        g.has_edge(x, y) != g.has_edge(x2, y2) && x2 != y2)
                      return;
                  }
              }
            }
          smallest = blocks;
          return;
        }
        for (int b = 0; b <= blocks && b < n; ++b) {
          assignment[v] = b;
          self(self, v + 1, std::max(blocks, b + 1));
          assignment[v] = -1;
        }
      };
      partitions(partitions, 0, 0);
      CAPTURE(n);
      CAPTURE(mask);
      CHECK(smallest == reduced_size);
    }
  }
}

TEST_CASE("monochromes of tree-built exact cliques have the three types") {
  const std::vector<SimpleGraph> allowed = {canonical_form(path_graph(1)),
                                            canonical_form(path_graph(3)),
                                            canonical_form(cycle_graph(5))};
  std::mt19937 rng(71);
  for (int trial = 0; trial < 25; ++trial) {
    const ColoredClique k = random_exact_gallai_clique(2 + rng() % 29, rng());
    for (const Monochrome& m : monochromes(k)) {
      const SimpleGraph type = graph_type(m.graph);
      CHECK(std::count(allowed.begin(), allowed.end(), type) == 1);
    }
  }
}
