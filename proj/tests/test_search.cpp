#include "doctest.h"
#include "gallai/search.hpp"
#include "gallai/spectrum.hpp"

using namespace gallai;

TEST_CASE("forbidding triangles forbids everything") {
  const SearchResult result = search_coloring(4, {3}, 4, 1u << 20);
  CHECK(result.status == SearchStatus::unsat);
}

TEST_CASE("hexagon without colorful pentagons exists") {
  const SearchResult result = search_coloring(6, {5}, 6, 1u << 26);
  REQUIRE(result.status == SearchStatus::sat);
  REQUIRE(result.witness.has_value());
  CHECK_NOTHROW(validate(*result.witness));
  CHECK(has_colorful_cycle(*result.witness, 6));
  CHECK_FALSE(has_colorful_cycle(*result.witness, 5));
}

TEST_CASE("square-free colorings exist for odd lengths only") {
  CHECK(search_coloring(5, {4}, 5, 1u << 26).status == SearchStatus::sat);
  CHECK(search_coloring(7, {4}, 7, 1u << 26).status == SearchStatus::sat);
  CHECK(search_coloring(6, {4}, 6, 1u << 26).status == SearchStatus::unsat);
}

TEST_CASE("witnesses satisfy both sides of the query") {
  for (int required = 3; required <= 6; ++required) {
    const SearchResult result = search_coloring(6, {}, required, 1u << 24);
    REQUIRE(result.status == SearchStatus::sat);
    CHECK(has_colorful_cycle(*result.witness, required));
  }
  const SearchResult mixed = search_coloring(7, {3, 4}, 5, 1u << 26);
  if (mixed.status == SearchStatus::sat) {
    CHECK(has_colorful_cycle(*mixed.witness, 5));
    CHECK_FALSE(has_colorful_cycle(*mixed.witness, 3));
    CHECK_FALSE(has_colorful_cycle(*mixed.witness, 4));
  }
}

TEST_CASE("budget exhaustion reports timeout") {
  const SearchResult result = search_coloring(10, {5}, 10, 100);
  CHECK(result.status == SearchStatus::timeout);
  CHECK(result.nodes >= 100);
  CHECK_FALSE(result.witness.has_value());
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(search_coloring(4, {4}, 4, 100), std::invalid_argument);
  CHECK_THROWS_AS(search_coloring(4, {2}, 4, 100), std::invalid_argument);
  CHECK_THROWS_AS(search_coloring(4, {}, 5, 100), std::invalid_argument);
  CHECK_THROWS_AS(search_coloring(4, {}, 2, 100), std::invalid_argument);
  CHECK_THROWS_AS(search_coloring(2, {}, 3, 100), std::invalid_argument);
}

TEST_CASE("results are deterministic") {
  const SearchResult a = search_coloring(6, {5}, 6, 1u << 26);
  const SearchResult b = search_coloring(6, {5}, 6, 1u << 26);
  REQUIRE(a.status == SearchStatus::sat);
  REQUIRE(b.status == SearchStatus::sat);
  CHECK(a.nodes == b.nodes);
  CHECK(*a.witness == *b.witness);
}
