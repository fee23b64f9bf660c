#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gallai/colored_clique.hpp"
#include "gallai/gallai_tree.hpp"

namespace gallai {

/// Lexicographically least triangle with three distinct edge colors.
std::optional<std::array<int, 3>> find_colorful_triangle(const ColoredClique& k);

/// No colorful triangle (and hence no colorful cycle of any length).
bool is_gallai(const ColoredClique& k);

/// Lexicographically least triangle whose edges do not use exactly two
/// colors (monochromatic or colorful).
std::optional<std::array<int, 3>> find_non_exact_triangle(const ColoredClique& k);

/// Every triangle uses exactly two colors. Vacuously true for n <= 2.
bool is_exact_gallai(const ColoredClique& k);

/// Inclusion-minimal vertex set containing {u,v} that every outside
/// vertex sees in one color, computed by closure.
std::vector<int> smallest_module(const ColoredClique& k, int u, int v);

/// No module of size between 2 and n-1 exists; equivalently the closure
/// of every pair is the whole vertex set.
bool is_irreducible(const ColoredClique& k);

/// Coarsest partition of a Gallai clique (n >= 2) into at least two
/// blocks with every pair of blocks joined monochromatically. Blocks are
/// grown by merging pair closures in increasing (u,v) order, skipping any
/// merge that would collapse everything into one block; the resulting
/// quotient is irreducible and uses at most two colors.
Partition homogeneous_2_partition(const ColoredClique& k);

/// Tree whose recomposition is exactly `k` (same vertex ids, same color
/// matrix) with every factor irreducible. Throws not_gallai_error when a
/// colorful triangle exists. A single vertex yields a single-leaf tree.
GallaiTree decompose(const ColoredClique& k);

/// Clique generated by a valid tree: the color of a leaf pair is the
/// sibling color of their ancestors directly below the least common
/// ancestor. Sibling color ids are compacted order-preservingly so the
/// palette is tight.
ColoredClique recompose(const GallaiTree& t);

struct Theorem4Report {
  bool exhaustive = false;  // every subset scanned (vs. documented sample)
  bool cross_bound_holds = true;    // |colors(b,c) \ colors(b,b)| <= |c|
  bool internal_bound_holds = true; // |colors(b,b)| <= |b| - 1
  std::optional<std::pair<std::vector<int>, std::vector<int>>> cross_witness;
  std::optional<std::vector<int>> internal_witness;

  bool passed() const { return cross_bound_holds && internal_bound_holds; }
};

/// Evaluates the two subset color-count bounds that hold exactly for
/// Gallai cliques. Exhaustive when n <= exhaustive_limit; otherwise all
/// subsets of size <= 5 plus 10000 seeded random draws (seed 0).
Theorem4Report check_theorem4(const ColoredClique& k, int exhaustive_limit = 15);

/// True iff `k` decomposes with every factor one of the three simple
/// patterns and no color shared between a factor and its ancestors.
/// Agrees with is_exact_gallai on every input.
bool verify_exact_structure(const ColoredClique& k);

/// Largest vertex count of an exact Gallai clique on exactly k colors:
/// 5^(k/2) for even k, 2*5^((k-1)/2) for odd k.
long long max_exact_gallai_order(int k);

}  // namespace gallai
