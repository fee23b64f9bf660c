#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gallai/colored_clique.hpp"

namespace gallai {

enum class SearchStatus { sat, unsat, timeout };

struct SearchResult {
  SearchStatus status = SearchStatus::unsat;
  std::optional<ColoredClique> witness;  // populated for sat
  std::uint64_t nodes = 0;               // color assignments attempted
};

/// Looks for a coloring of the complete graph on n vertices with a
/// colorful cycle of length `required` and no colorful cycle of any
/// length in `forbidden`. Backtracks over edge colors in a fixed edge
/// order under a restricted-growth canonical form (a new color id enters
/// only as 1 + the largest id used so far), with the required cycle
/// pinned to vertices 0..required-1 in order; this removes palette
/// relabeling symmetry, so an exhausted search certifies unsat. A
/// returned witness is re-validated against both constraints. The node
/// budget caps assignments attempted; exceeding it yields timeout.
SearchResult search_coloring(int n, const std::vector<int>& forbidden, int required,
                             std::uint64_t node_budget);

}  // namespace gallai
