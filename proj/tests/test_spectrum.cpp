#include <random>

#include "doctest.h"
#include "gallai/constructions.hpp"
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

}  // namespace

TEST_CASE("monoid_closure") {
  CHECK(monoid_closure({4}, 12) == std::vector<int>{2, 4, 6, 8, 10, 12});
  CHECK(monoid_closure({3}, 6) == std::vector<int>{2, 3, 4, 5, 6});
  CHECK(monoid_closure({}, 5) == std::vector<int>{2});
  CHECK(monoid_closure({2}, 5) == std::vector<int>{2});
  CHECK(monoid_closure({5, 6}, 12) == std::vector<int>{2, 5, 6, 8, 9, 10, 11, 12});
  CHECK_THROWS_AS(monoid_closure({1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(monoid_closure({3}, 1), std::invalid_argument);
}

TEST_CASE("find_colorful_cycle on the named colorings") {
  const auto witness = find_colorful_cycle(rainbow_k3(), 3);
  REQUIRE(witness.has_value());
  CHECK(witness->vertices() == std::vector<int>{0, 1, 2});
  CHECK(is_colorful(rainbow_k3(), *witness));

  CHECK_FALSE(has_colorful_cycle(odd_gon_no_squares(5), 4));
  CHECK(has_colorful_cycle(odd_gon_no_squares(5), 5));

  const ColoredClique hexagon = even_gon_no_preceding(3);
  CHECK_FALSE(has_colorful_cycle(hexagon, 5));
  CHECK(has_colorful_cycle(hexagon, 6));

  CHECK_THROWS_AS(has_colorful_cycle(rainbow_k3(), 2), std::invalid_argument);
  CHECK_FALSE(has_colorful_cycle(rainbow_k3(), 4));
}

TEST_CASE("spectrum of the named colorings") {
  const Spectrum mono = spectrum_of(mono_clique(4));
  CHECK(mono.exceptions.empty());
  CHECK(mono.solid_from == 2);
  CHECK(mono.contains(2));
  CHECK(mono.contains(17));

  const Spectrum rainbow = spectrum_of(rainbow_k3());
  CHECK(rainbow.exceptions == std::vector<int>{3});
  CHECK(rainbow.solid_from == 4);
  CHECK_FALSE(rainbow.contains(3));
  CHECK(rainbow.contains(4));

  const Spectrum pentagon = spectrum_of(odd_gon_no_squares(5));
  CHECK(pentagon.exceptions == std::vector<int>{3, 5});
  CHECK(pentagon.solid_from == 6);

  CHECK(to_string(pentagon) == "spectrum exceptions=[3,5] solid_from=6");
}

TEST_CASE("spectrum agrees with the all-permutations oracle") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);  // up to 8 vertices
    const int colors = 1 + static_cast<int>(rng() % 7);
    const ColoredClique k = random_coloring(n, colors, rng());
    CAPTURE(trial);
    CHECK(spectrum_of(k).exceptions == oracle::spectrum_exceptions(k));
    for (int len = 3; len <= n; ++len)
      CHECK(has_colorful_cycle(k, len) == oracle::has_colorful_cycle(k, len));
  }
}

TEST_CASE("membership matches negated cycle existence") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const ColoredClique k = random_coloring(n, 4, rng());
    const Spectrum s = spectrum_of(k);
    for (int len = 3; len <= n; ++len) CHECK(s.contains(len) == !has_colorful_cycle(k, len));
  }
}

TEST_CASE("check_spectrum_laws") {
  CHECK(check_spectrum_laws(Spectrum{{3}, 4}));
  CHECK(check_spectrum_laws(Spectrum{{}, 2}));
  CHECK(check_spectrum_laws(Spectrum{{3, 5}, 6}));
  // 3 present while 4 is missing: 3*3 = 4 breaks closure.
  CHECK_FALSE(check_spectrum_laws(Spectrum{{4}, 5}));
  // 4 present with a non-odd exception pattern.
  CHECK_FALSE(check_spectrum_laws(Spectrum{{5}, 6}));
  CHECK_FALSE(check_spectrum_laws(Spectrum{{3, 7}, 8}));
}

TEST_CASE("computed spectra satisfy the monoid laws") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const ColoredClique k = random_coloring(n, 1 + static_cast<int>(rng() % 8), rng());
    CAPTURE(trial);
    CHECK(check_spectrum_laws(spectrum_of(k)));
  }
}

TEST_CASE("no colorful triangle forces an empty exception list") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const ColoredClique k = random_gallai_clique(n, rng());
    CHECK(spectrum_of(k).exceptions.empty());
  }
}
