#include "gallai/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gallai/spectrum.hpp"

namespace gallai {

namespace {

class ColoringSearch {
 public:
  ColoringSearch(int n, std::vector<int> forbidden, int required, std::uint64_t budget)
      : n_(n), forbidden_(std::move(forbidden)), required_(required), budget_(budget) {
    color_of_.assign(static_cast<size_t>(n_) * n_, -1);
    required_edge_.assign(static_cast<size_t>(n_) * n_, 0);
    for (int i = 0; i < required_; ++i) {
      const int u = i, v = (i + 1) % required_;
      required_edge_[pos(u, v)] = required_edge_[pos(v, u)] = 1;
    }
    build_edge_order();
    edge_color_.assign(edges_.size(), -1);
    required_color_used_.assign(edges_.size() + 1, 0);
    scratch_colors_.assign(edges_.size() + 1, 0);
    on_path_.assign(n_, 0);
  }

  SearchResult run() {
    SearchResult result;
    const bool sat = assign(0, 0);
    result.nodes = nodes_;
    if (timed_out_) {
      result.status = SearchStatus::timeout;
    } else if (sat) {
      result.status = SearchStatus::sat;
      result.witness = build_witness();
    } else {
      result.status = SearchStatus::unsat;
    }
    return result;
  }

 private:
  size_t pos(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }

  int color_at(int u, int v) const { return color_of_[pos(u, v)]; }

  // Static edge order: the required cycle comes first (distinctness and
  // restricted growth then force its colors outright), and each further
  // edge is the one closing the most forbidden-length cycles over edges
  // already ordered, ties broken lexicographically. The order is fixed
  // before the search, so the canonical form argument is unaffected.
  void build_edge_order() {
    std::vector<char> ordered(static_cast<size_t>(n_) * n_, 0);
    auto take = [&](int u, int v) {
      if (u > v) std::swap(u, v);
      edges_.emplace_back(u, v);
      ordered[pos(u, v)] = ordered[pos(v, u)] = 1;
    };
    for (int i = 0; i + 1 < required_; ++i) take(i, i + 1);
    take(0, required_ - 1);

    const size_t total = static_cast<size_t>(n_) * (n_ - 1) / 2;
    std::vector<char> path_mark(n_, 0);
    auto closures = [&](int u, int v) {
      long long count = 0;
      for (int len : forbidden_) {
        path_mark[u] = path_mark[v] = 1;
        auto dfs = [&](auto&& self, int from, int remaining) -> void {
          if (remaining == 0) {
            if (ordered[pos(from, v)]) ++count;
            return;
          }
          for (int w = 0; w < n_; ++w) {
            if (path_mark[w] || !ordered[pos(from, w)]) continue;
            path_mark[w] = 1;
            self(self, w, remaining - 1);
            path_mark[w] = 0;
          }
        };
        dfs(dfs, u, len - 2);
        path_mark[u] = path_mark[v] = 0;
      }
      return count;
    };
    while (edges_.size() < total) {
      long long best_count = -1;
      std::pair<int, int> best_edge{-1, -1};
      for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
          if (ordered[pos(u, v)]) continue;
          const long long count = closures(u, v);
          if (count > best_count) {
            best_count = count;
            best_edge = {u, v};
          }
        }
      take(best_edge.first, best_edge.second);
    }
  }

  bool assign(size_t index, int colors_used) {
    if (timed_out_) return false;
    if (index == edges_.size()) return true;
    const auto [u, v] = edges_[index];
    const bool on_required = required_edge_[pos(u, v)] != 0;
    const int limit = std::min(colors_used + 1, static_cast<int>(edges_.size()));
    for (int c = 0; c < limit; ++c) {
      if (++nodes_ > budget_) {
        timed_out_ = true;
        return false;
      }
      if (on_required && required_color_used_[c]) continue;
      edge_color_[index] = c;
      color_of_[pos(u, v)] = color_of_[pos(v, u)] = c;
      if (on_required) required_color_used_[c] = 1;
      if (!completes_forbidden_cycle(u, v, c, index) &&
          assign(index + 1, std::max(colors_used, c + 1)))
        return true;
      if (on_required) required_color_used_[c] = 0;
      edge_color_[index] = -1;
      color_of_[pos(u, v)] = color_of_[pos(v, u)] = -1;
      if (timed_out_) return false;
    }
    return false;
  }

  // The just-colored edge (u,v) with u < v is the latest in the edge
  // order, so any newly completed cycle passes through it and otherwise
  // uses only already-colored edges; unassigned edges (color -1) bar the
  // walk on their own.
  bool completes_forbidden_cycle(int u, int v, int c, size_t assigned) {
    bool found = false;
    scratch_colors_[c] = 1;
    on_path_[u] = on_path_[v] = 1;
    for (int len : forbidden_) {
      if (assigned + 1 < static_cast<size_t>(len)) continue;
      if (walk(u, v, len - 2)) {
        found = true;
        break;
      }
    }
    on_path_[u] = on_path_[v] = 0;
    scratch_colors_[c] = 0;
    return found;
  }

  bool walk(int from, int target, int remaining) {
    if (remaining == 0) {
      const int closing = color_at(from, target);
      return closing >= 0 && !scratch_colors_[closing];
    }
    for (int w = 0; w < n_; ++w) {
      if (on_path_[w]) continue;
      const int col = color_at(from, w);
      if (col < 0 || scratch_colors_[col]) continue;
      scratch_colors_[col] = 1;
      on_path_[w] = 1;
      const bool found = walk(w, target, remaining - 1);
      on_path_[w] = 0;
      scratch_colors_[col] = 0;
      if (found) return true;
    }
    return false;
  }

  ColoredClique build_witness() const {
    std::vector<std::vector<int>> matrix(n_, std::vector<int>(n_, -1));
    for (size_t i = 0; i < edges_.size(); ++i) {
      const auto [u, v] = edges_[i];
      matrix[u][v] = matrix[v][u] = edge_color_[i];
    }
    ColoredClique k = ColoredClique::from_matrix(n_, matrix);
    if (!has_colorful_cycle(k, required_))
      throw std::logic_error("internal: witness lost its required colorful cycle");
    for (int len : forbidden_)
      if (has_colorful_cycle(k, len))
        throw std::logic_error("internal: witness has a forbidden colorful cycle");
    return k;
  }

  const int n_;
  std::vector<int> forbidden_;
  const int required_;
  const std::uint64_t budget_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> edge_color_;
  std::vector<int> color_of_;
  std::vector<char> required_edge_;
  std::vector<char> required_color_used_;
  std::vector<char> scratch_colors_;
  std::vector<char> on_path_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

SearchResult search_coloring(int n, const std::vector<int>& forbidden, int required,
                             std::uint64_t node_budget) {
  if (n < 3) throw std::invalid_argument("search needs at least three vertices");
  if (required < 3 || required > n)
    throw std::invalid_argument("required length must lie in [3, n]");
  std::set<int> forb(forbidden.begin(), forbidden.end());
  for (int f : forb) {
    if (f < 3 || f > n) throw std::invalid_argument("forbidden lengths must lie in [3, n]");
    if (f == required)
      throw std::invalid_argument("required length cannot also be forbidden");
  }
  ColoringSearch search(n, std::vector<int>(forb.begin(), forb.end()), required, node_budget);
  return search.run();
}

}  // namespace gallai
