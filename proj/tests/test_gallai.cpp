#include <random>

#include "doctest.h"
#include "gallai/constructions.hpp"
#include "gallai/gallai.hpp"
#include "gallai/random_cliques.hpp"
#include "gallai/spectrum.hpp"
#include "oracles.hpp"

using namespace gallai;

namespace {

ColoredClique mono_clique(int n) {
  std::vector<std::vector<int>> color(n, std::vector<int>(n, 0));
  for (int v = 0; v < n; ++v) color[v][v] = -1;
  return ColoredClique::from_matrix_exact(n, 1, color);
}

ColoredClique rainbow_k3() {
  return ColoredClique::from_matrix_exact(3, 3, {{-1, 0, 1}, {0, -1, 2}, {1, 2, -1}});
}

// Blocks {0,1} and {2,3} with inner colors 0 and 1, cross color 2.
ColoredClique block_k4() {
  return ColoredClique::from_matrix_exact(
      4, 3, {{-1, 0, 2, 2}, {0, -1, 2, 2}, {2, 2, -1, 1}, {2, 2, 1, -1}});
}

// Builds the factor clique of an internal tree node from sibling colors.
ColoredClique factor_clique(const GallaiTree& t, int id) {
  const auto& kids = t.nodes[id].children;
  const int b = static_cast<int>(kids.size());
  std::vector<std::vector<int>> color(b, std::vector<int>(b, -1));
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j)
      color[i][j] = color[j][i] = t.sibling_color(kids[i], kids[j]);
  return ColoredClique::from_matrix(b, color);
}

}  // namespace

TEST_CASE("colorful triangle detection") {
  CHECK(is_gallai(mono_clique(3)));
  const auto witness = find_colorful_triangle(rainbow_k3());
  REQUIRE(witness.has_value());
  CHECK(*witness == std::array<int, 3>{0, 1, 2});
  CHECK_FALSE(is_gallai(odd_gon_no_squares(5)));
}

TEST_CASE("exactness detection") {
  CHECK(is_exact_gallai(simple_clique(5)));
  CHECK_FALSE(is_exact_gallai(mono_clique(3)));
  CHECK(find_non_exact_triangle(mono_clique(3)) == std::array<int, 3>{0, 1, 2});
  CHECK(is_exact_gallai(extremal_exact_gallai(3)));
  CHECK(is_exact_gallai(mono_clique(2)));  // vacuous below three vertices
}

TEST_CASE("smallest_module") {
  CHECK(smallest_module(mono_clique(4), 0, 1) == std::vector<int>{0, 1});
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      CHECK(smallest_module(simple_clique(4), u, v) == std::vector<int>{0, 1, 2, 3});
  CHECK(smallest_module(block_k4(), 0, 1) == std::vector<int>{0, 1});
  CHECK(smallest_module(block_k4(), 0, 2).size() == 4);
  CHECK_THROWS_AS(smallest_module(mono_clique(3), 1, 1), std::invalid_argument);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(simple_clique(4)));
  CHECK(is_irreducible(simple_clique(5)));
  const ColoredClique majority =
      ColoredClique::from_matrix_exact(3, 2, {{-1, 0, 0}, {0, -1, 1}, {0, 1, -1}});
  CHECK_FALSE(is_irreducible(majority));
  CHECK(is_irreducible(simple_clique(2)));
  CHECK_FALSE(is_irreducible(mono_clique(4)));
}

TEST_CASE("homogeneous_2_partition") {
  SUBCASE("block-structured clique") {
    const Partition p = homogeneous_2_partition(block_k4());
    CHECK(p.blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(p.delta == std::set<int>{2});
  }
  SUBCASE("irreducible cliques split into singletons") {
    const Partition p = homogeneous_2_partition(simple_clique(4));
    CHECK(p.blocks.size() == 4);
    CHECK(p.delta == std::set<int>{0, 1});
  }
  SUBCASE("monochromatic clique: greedy pair merging keeps one vertex out") {
    const Partition p = homogeneous_2_partition(mono_clique(3));
    CHECK(p.blocks == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(p.delta == std::set<int>{0});
  }
  SUBCASE("output contract on random Gallai cliques") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 11);
      const ColoredClique k = random_gallai_clique(n, rng());
      const Partition p = homogeneous_2_partition(k);
      CHECK(p.blocks.size() >= 2);
      CHECK(p.delta.size() <= 2);
      CHECK_NOTHROW(validate_partition(k, p));
      // Every pair of blocks is joined monochromatically.
      for (size_t i = 0; i < p.blocks.size(); ++i)
        for (size_t j = i + 1; j < p.blocks.size(); ++j)
          CHECK(colors_between(k, p.blocks[i], p.blocks[j]).size() == 1);
    }
  }
  CHECK_THROWS_AS(homogeneous_2_partition(rainbow_k3()), not_gallai_error);
  CHECK_THROWS_AS(homogeneous_2_partition(ColoredClique::from_matrix_exact(1, 0, {{-1}})),
                  std::invalid_argument);
}

TEST_CASE("decompose") {
  SUBCASE("an edge yields a root with two leaves") {
    const GallaiTree t = decompose(simple_clique(2));
    CHECK(t.node_count() == 3);
    CHECK(t.factor_count() == 1);
    CHECK(t.sibling_colors.size() == 1);
  }
  SUBCASE("block clique decomposes to height two") {
    const GallaiTree t = decompose(block_k4());
    CHECK(t.height() == 2);
    CHECK(t.nodes[t.root].children.size() == 2);
    CHECK(recompose(t) == block_k4());
  }
  SUBCASE("extremal clique on four colors uses only size-5 factors") {
    const GallaiTree t = decompose(extremal_exact_gallai(4));
    CHECK(t.height() == 2);
    for (int id = 0; id < t.node_count(); ++id)
      if (!t.nodes[id].is_leaf()) CHECK(t.nodes[id].children.size() == 5);
  }
  SUBCASE("single vertex decomposes to a single leaf") {
    const GallaiTree t = decompose(ColoredClique::from_matrix_exact(1, 0, {{-1}}));
    CHECK(t.node_count() == 1);
    CHECK(t.leaf_count() == 1);
  }
  CHECK_THROWS_AS(decompose(rainbow_k3()), not_gallai_error);
}

TEST_CASE("decompose/recompose roundtrip with irreducible factors") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 19);
    const ColoredClique k = random_gallai_clique(n, rng());
    CAPTURE(trial);
    const GallaiTree t = decompose(k);
    CHECK_NOTHROW(validate_tree(t));
    CHECK(recompose(t) == k);
    for (int id = 0; id < t.node_count(); ++id)
      if (!t.nodes[id].is_leaf()) CHECK(is_irreducible(factor_clique(t, id)));
  }
}

TEST_CASE("recompose") {
  SUBCASE("hand-built block tree") {
    GallaiTree t;
    t.nodes.resize(7);
    t.root = 0;
    t.nodes[0].children = {1, 4};
    for (int inner : {1, 4}) t.nodes[inner].parent = 0;
    t.nodes[1].children = {2, 3};
    t.nodes[4].children = {5, 6};
    for (int leaf : {2, 3}) t.nodes[leaf].parent = 1;
    for (int leaf : {5, 6}) t.nodes[leaf].parent = 4;
    t.nodes[2].leaf_vertex = 0;
    t.nodes[3].leaf_vertex = 1;
    t.nodes[5].leaf_vertex = 2;
    t.nodes[6].leaf_vertex = 3;
    t.sibling_colors[{1, 4}] = 2;
    t.sibling_colors[{2, 3}] = 0;
    t.sibling_colors[{5, 6}] = 1;
    CHECK(recompose(t) == block_k4());
  }
  SUBCASE("invariant violations are rejected") {
    GallaiTree t;
    t.nodes.resize(2);
    t.root = 0;
    t.nodes[0].children = {1};
    t.nodes[1].parent = 0;
    t.nodes[1].leaf_vertex = 0;
    CHECK_THROWS_AS(recompose(t), validation_error);  // one child
  }
}

TEST_CASE("subset color bounds") {
  SUBCASE("rainbow triangle breaks the internal bound") {
    const Theorem4Report report = check_theorem4(rainbow_k3());
    CHECK(report.exhaustive);
    CHECK_FALSE(report.internal_bound_holds);
    REQUIRE(report.internal_witness.has_value());
    CHECK(*report.internal_witness == std::vector<int>{0, 1, 2});
  }
  SUBCASE("monochromatic cliques pass") {
    const Theorem4Report report = check_theorem4(mono_clique(6));
    CHECK(report.passed());
  }
  SUBCASE("simple cliques pass") {
    CHECK(check_theorem4(simple_clique(5)).passed());
    CHECK(check_theorem4(simple_clique(4)).passed());
  }
  SUBCASE("bounds hold exactly for Gallai cliques at small sizes") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 6);
      const ColoredClique k = random_coloring(n, 1 + static_cast<int>(rng() % 6), rng());
      CAPTURE(trial);
      CHECK(check_theorem4(k).passed() == is_gallai(k));
    }
  }
  SUBCASE("sampled mode flags its own reports") {
    const ColoredClique k = random_gallai_clique(18, 5);
    const Theorem4Report report = check_theorem4(k);
    CHECK_FALSE(report.exhaustive);
    CHECK(report.passed());
  }
}

TEST_CASE("verify_exact_structure matches is_exact_gallai") {
  SUBCASE("named cliques") {
    CHECK(verify_exact_structure(simple_clique(4)));
    CHECK(verify_exact_structure(extremal_exact_gallai(3)));
    CHECK_FALSE(verify_exact_structure(mono_clique(3)));
    CHECK_FALSE(verify_exact_structure(rainbow_k3()));
    CHECK(verify_exact_structure(ColoredClique::from_matrix_exact(1, 0, {{-1}})));
  }
  SUBCASE("exhaustively on all two-colorings of the 4- and 5-clique") {
    for (int n : {4, 5}) {
      const int bits = n * (n - 1) / 2;
      for (unsigned long long word = 0; word < (1ull << bits); ++word) {
        const ColoredClique k = oracle::clique_from_digits(n, word, 2);
        CAPTURE(n);
        CAPTURE(word);
        CHECK(verify_exact_structure(k) == is_exact_gallai(k));
      }
    }
  }
  SUBCASE("on random tree-built cliques") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
      const ColoredClique exact = random_exact_gallai_clique(2 + rng() % 23, rng());
      CHECK(verify_exact_structure(exact));
      CHECK(is_exact_gallai(exact));
      const ColoredClique loose = random_gallai_clique(2 + rng() % 11, rng());
      CHECK(verify_exact_structure(loose) == is_exact_gallai(loose));
    }
  }
}

TEST_CASE("max_exact_gallai_order") {
  CHECK(max_exact_gallai_order(1) == 2);
  CHECK(max_exact_gallai_order(2) == 5);
  CHECK(max_exact_gallai_order(3) == 10);
  CHECK(max_exact_gallai_order(4) == 25);
  CHECK(max_exact_gallai_order(5) == 50);
  CHECK(max_exact_gallai_order(6) == 125);
  CHECK_THROWS_AS(max_exact_gallai_order(0), std::invalid_argument);
}
