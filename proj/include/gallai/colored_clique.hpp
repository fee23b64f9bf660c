#pragma once

#include <optional>
#include <set>
#include <vector>

#include "gallai/errors.hpp"

namespace gallai {

/// Complete graph on n >= 1 vertices with a total symmetric edge coloring
/// over the palette {0,...,palette_size-1}. The palette is tight: every
/// color occurs on at least one edge (so palette_size is 0 exactly when
/// n = 1). Immutable after construction.
class ColoredClique {
 public:
  /// Builds from a symmetric color matrix; unused color ids are stripped
  /// and the remaining ids compacted order-preservingly.
  static ColoredClique from_matrix(int n, const std::vector<std::vector<int>>& color);

  /// Builds from a matrix against a declared palette size; rejects any
  /// violation (asymmetric entry, missing edge color, color id out of
  /// range, unused color) instead of repairing it.
  static ColoredClique from_matrix_exact(int n, int palette,
                                         const std::vector<std::vector<int>>& color);

  int vertex_count() const { return n_; }
  int palette_size() const { return palette_; }

  int color(int u, int v) const { return color_[static_cast<size_t>(u) * n_ + v]; }

  bool operator==(const ColoredClique& other) const {
    return n_ == other.n_ && palette_ == other.palette_ && color_ == other.color_;
  }

 private:
  ColoredClique(int n, int palette, std::vector<int> color)
      : n_(n), palette_(palette), color_(std::move(color)) {}

  int n_ = 1;
  int palette_ = 0;
  std::vector<int> color_;  // n*n, diagonal entries are -1
};

/// Cycle on at least 3 distinct vertices. Construction canonicalizes the
/// vertex sequence to the lexicographically least among all rotations of
/// both orientations, so equal cycles compare equal.
class Cycle {
 public:
  explicit Cycle(std::vector<int> vertices);

  const std::vector<int>& vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()); }

  bool operator==(const Cycle& other) const { return vertices_ == other.vertices_; }

 private:
  std::vector<int> vertices_;
};

/// Partition of a clique's vertex set together with the set of colors
/// allowed on edges between distinct blocks.
struct Partition {
  std::vector<std::vector<int>> blocks;  // each sorted, ordered by least element
  std::set<int> delta;
};

/// Rechecks every ColoredClique invariant; throws validation_error naming
/// the first violation.
void validate(const ColoredClique& k);

/// Set of colors on edges with one endpoint in `a` and the other in `b`
/// (endpoints distinct, sets may overlap). Empty for a = b a singleton.
std::set<int> colors_between(const ColoredClique& k, const std::vector<int>& a,
                             const std::vector<int>& b);

/// True iff the consecutive-edge colors of the cycle are pairwise distinct.
bool is_colorful(const ColoredClique& k, const Cycle& c);

struct InducedSubclique {
  ColoredClique clique;
  std::vector<int> vertex_map;  // new vertex id -> original vertex id
  std::vector<int> color_map;   // new color id -> original color id
};

/// Clique induced by the nonempty vertex set `s`, with the palette
/// re-tightened to the colors actually present.
InducedSubclique induced_subclique(const ColoredClique& k, const std::vector<int>& s);

/// Checks that `p` is a partition of k's vertices and that every edge
/// between distinct blocks has its color in p.delta.
void validate_partition(const ColoredClique& k, const Partition& p);

}  // namespace gallai
