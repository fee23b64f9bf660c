#pragma once

#include <cstdint>

#include "gallai/colored_clique.hpp"
#include "gallai/gallai_tree.hpp"
#include "gallai/simple_graph.hpp"

namespace gallai {

/// Uniform random coloring on n vertices drawing from at most max_colors
/// colors; the palette tightens to the colors actually drawn.
ColoredClique random_coloring(int n, int max_colors, std::uint32_t seed);

/// Random decomposition tree on n leaves whose factors each use at most
/// two colors (colors may repeat across factors); its recomposition is
/// Gallai by construction.
GallaiTree random_two_clique_tree(int n, std::uint32_t seed);

ColoredClique random_gallai_clique(int n, std::uint32_t seed);

/// Random tree built from the three simple factor patterns with globally
/// fresh colors per factor; its recomposition is exact Gallai.
GallaiTree random_exact_tree(int n, std::uint32_t seed);

ColoredClique random_exact_gallai_clique(int n, std::uint32_t seed);

/// Random connected graph: a uniform random labeled tree plus each
/// remaining pair independently with probability extra_edge_prob.
SimpleGraph random_connected_graph(int n, double extra_edge_prob, std::uint32_t seed);

}  // namespace gallai
