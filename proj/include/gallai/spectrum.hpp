#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gallai/colored_clique.hpp"

namespace gallai {

/// Set of cycle lengths for which a clique has no colorful cycle: finite
/// exception data plus a solid tail. 2 is always a member; every length
/// >= solid_from is a member; a length below solid_from is a member iff
/// it is not listed in `exceptions`.
struct Spectrum {
  std::vector<int> exceptions;  // sorted ascending, all >= 3
  int solid_from = 2;

  bool contains(int len) const;
  bool operator==(const Spectrum& other) const {
    return exceptions == other.exceptions && solid_from == other.solid_from;
  }
};

/// Finds a colorful cycle on exactly `len` vertices, if any. Each
/// undirected cycle is enumerated once: smallest vertex first, second
/// vertex less than last, colors pruned incrementally.
std::optional<Cycle> find_colorful_cycle(const ColoredClique& k, int len);

bool has_colorful_cycle(const ColoredClique& k, int len);

/// Exact spectrum of `k`; lengths above the vertex count are always
/// members, so solid_from <= n+1 and the data is finite.
Spectrum spectrum_of(const ColoredClique& k);

/// Submonoid of {2,3,...} under m*n = m+n-2 generated by `generators`
/// together with the identity 2, intersected with [2, limit].
std::vector<int> monoid_closure(const std::vector<int>& generators, int limit);

/// True iff `s` is closed under m+n-2, membership of 3 forces the whole
/// monoid, and membership of 4 forces the shape "all even numbers plus a
/// solid odd tail".
bool check_spectrum_laws(const Spectrum& s);

/// "spectrum exceptions=[a,b,...] solid_from=N"
std::string to_string(const Spectrum& s);

}  // namespace gallai
