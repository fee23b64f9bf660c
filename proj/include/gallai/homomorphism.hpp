#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gallai/colored_clique.hpp"
#include "gallai/simple_graph.hpp"

namespace gallai {

/// Vertex map between uncolored graphs that preserves and reflects
/// adjacency: uv is an edge iff f(u)f(v) is an edge.
struct FullHom {
  SimpleGraph domain;
  SimpleGraph codomain;
  std::vector<int> map;  // domain vertex -> codomain vertex
};

/// Checks totality, range, and the adjacency biconditional.
bool is_full_hom(const FullHom& f);

struct ReducedForm {
  SimpleGraph graph;            // one vertex per distinct neighborhood
  std::vector<int> vertex_map;  // original vertex -> class vertex
};

/// Collapses vertices with identical neighborhoods. The returned map is a
/// full surjection onto a reduced graph, and it is the smallest full
/// surjection out of the input.
ReducedForm reduced_form(const SimpleGraph& g);

/// Canonical representative of the isomorphism class: the relabeling
/// minimizing the adjacency bit string. Capped at 10 vertices.
SimpleGraph canonical_form(const SimpleGraph& g);

/// Canonical form of the reduced form. Two graphs have equal types iff
/// their reduced forms are isomorphic; a connected graph has a connected
/// type.
SimpleGraph graph_type(const SimpleGraph& g);

/// Finds a full homomorphism g -> h by embedding the reduced form of g
/// into the reduced form of h, or reports that none exists.
std::optional<FullHom> find_full_hom(const SimpleGraph& g, const SimpleGraph& h);

bool exists_full_hom(const SimpleGraph& g, const SimpleGraph& h);

/// Connected component of the subgraph formed by the edges of one color,
/// having at least one edge. `graph` is the component relabeled to
/// 0..|vertices|-1 in sorted vertex order.
struct Monochrome {
  int color;
  std::vector<int> vertices;  // original clique vertices, ascending
  SimpleGraph graph;
};

/// All monochromes, ordered by color then least vertex. Vertices with no
/// edge of a color are not reported for that color.
std::vector<Monochrome> monochromes(const ColoredClique& k);

/// Monochrome covering all vertices of a Gallai clique (n >= 2), as a
/// graph on the clique's own vertex ids. The monochrome with the most
/// vertices always spans; ties break toward the smaller color. Throws
/// not_gallai_error when a colorful triangle exists.
SimpleGraph spanning_monochrome(const ColoredClique& k);

enum class Obstruction { C3, P4, A };

std::string obstruction_name(Obstruction o);
SimpleGraph obstruction_graph(Obstruction o);

/// Exactly one branch is populated: either a verified full homomorphism
/// into the 5-cycle, or an induced copy of one of the three obstructions.
struct DualityResult {
  std::optional<FullHom> hom;
  std::optional<std::pair<Obstruction, std::vector<int>>> witness;
};

/// Decides, for a connected graph, which side of the duality it lies on.
/// Obstruction copies are searched first (C3, then the 4-edge path on 5
/// vertices, then the A graph, each as the least induced copy); when none
/// embeds, the homomorphism into the 5-cycle is built from an induced
/// 5-cycle if present and otherwise from a longest induced path, and
/// verified before being returned.
DualityResult classify_monochrome(const SimpleGraph& g);

/// Type in {P1, P3, C5}; equivalent to classify_monochrome taking the
/// homomorphism branch. Both routes are computed and cross-checked. The
/// single-vertex graph is the one degenerate case: it maps into the
/// 5-cycle vacuously but its type is a lone vertex, and this returns false.
bool is_exact_gallai_monochrome(const SimpleGraph& g);

/// Exhaustive-search oracle over all vertex maps; both graphs capped at 8
/// vertices. Returns the least full homomorphism found, if any.
std::optional<std::vector<int>> brute_force_full_hom(const SimpleGraph& g, const SimpleGraph& h);

/// Least vertex set (ascending) inducing a subgraph isomorphic to
/// `pattern`, if any.
std::optional<std::vector<int>> find_induced_copy(const SimpleGraph& pattern,
                                                  const SimpleGraph& host);

}  // namespace gallai
