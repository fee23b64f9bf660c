#include "gallai/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace gallai {

bool Spectrum::contains(int len) const {
  if (len < 2) return false;
  if (len >= solid_from) return true;
  return !std::binary_search(exceptions.begin(), exceptions.end(), len);
}

namespace {

// Backtracking over colorful simple paths. The start vertex is the
// smallest on the cycle and the orientation with path[1] < path[last] is
// the one counted, so each undirected cycle is visited exactly once.
class ColorfulCycleScan {
 public:
  ColorfulCycleScan(const ColoredClique& k) : k_(k), n_(k.vertex_count()) {
    on_path_.assign(n_, 0);
    color_used_.assign(std::max(1, k.palette_size()), 0);
  }

  // Finds one colorful cycle of exactly `len` vertices.
  std::optional<Cycle> find(int len) {
    sweep_ = false;
    len_lo_ = len_hi_ = len;
    found_.reset();
    scan();
    return found_;
  }

  // Marks every length in [3, n] that has a colorful cycle.
  std::vector<char> lengths_present() {
    sweep_ = true;
    len_lo_ = 3;
    len_hi_ = n_;
    found_.reset();
    present_.assign(n_ + 1, 0);
    missing_ = std::max(0, n_ - 2);
    if (missing_ > 0) scan();
    return present_;
  }

 private:
  void scan() {
    for (int s = 0; s < n_; ++s) {
      path_.assign(1, s);
      on_path_[s] = 1;
      if (extend()) {
        on_path_[s] = 0;
        return;
      }
      on_path_[s] = 0;
    }
  }

  // Returns true once the caller can stop (single-length search hit, or
  // every length accounted for).
  bool extend() {
    const int depth = static_cast<int>(path_.size());
    if (depth >= 3 && depth >= len_lo_) {
      if (close_here()) return true;
    }
    if (depth == len_hi_) return false;
    const int last = path_.back();
    for (int v = path_.front() + 1; v < n_; ++v) {
      if (on_path_[v]) continue;
      const int c = k_.color(last, v);
      if (color_used_[c]) continue;
      path_.push_back(v);
      on_path_[v] = 1;
      color_used_[c] = 1;
      const bool done = extend();
      color_used_[c] = 0;
      on_path_[v] = 0;
      path_.pop_back();
      if (done) return true;
    }
    return false;
  }

  bool close_here() {
    const int depth = static_cast<int>(path_.size());
    if (path_[1] > path_[depth - 1]) return false;
    if (sweep_ && present_[depth]) return false;
    const int c = k_.color(path_.back(), path_.front());
    if (color_used_[c]) return false;
    if (!sweep_) {
      found_ = Cycle(path_);
      return true;
    }
    present_[depth] = 1;
    return --missing_ == 0;
  }

  const ColoredClique& k_;
  int n_;
  bool sweep_ = false;
  int len_lo_ = 3, len_hi_ = 3;
  std::vector<int> path_;
  std::vector<char> on_path_, color_used_, present_;
  int missing_ = 0;
  std::optional<Cycle> found_;
};

}  // namespace

std::optional<Cycle> find_colorful_cycle(const ColoredClique& k, int len) {
  if (len < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (len > k.vertex_count()) return std::nullopt;
  return ColorfulCycleScan(k).find(len);
}

bool has_colorful_cycle(const ColoredClique& k, int len) {
  return find_colorful_cycle(k, len).has_value();
}

Spectrum spectrum_of(const ColoredClique& k) {
  const int n = k.vertex_count();
  Spectrum s;
  if (n < 3) return s;
  std::vector<char> present = ColorfulCycleScan(k).lengths_present();
  for (int len = 3; len <= n; ++len)
    if (present[len]) s.exceptions.push_back(len);
  s.solid_from = s.exceptions.empty() ? 2 : s.exceptions.back() + 1;
  return s;
}

std::vector<int> monoid_closure(const std::vector<int>& generators, int limit) {
  if (limit < 2) throw std::invalid_argument("closure limit must be at least 2");
  for (int g : generators)
    if (g < 2) throw std::invalid_argument("generators must be at least 2");
  std::vector<char> member(limit + 1, 0);
  member[2] = 1;
  for (int x = 3; x <= limit; ++x) {
    for (int g : generators) {
      if (g < 3) continue;  // 2 is the identity
      const int prev = x - (g - 2);
      if (prev >= 2 && member[prev]) {
        member[x] = 1;
        break;
      }
    }
  }
  std::vector<int> out;
  for (int x = 2; x <= limit; ++x)
    if (member[x]) out.push_back(x);
  return out;
}

bool check_spectrum_laws(const Spectrum& s) {
  const int max_exc = s.exceptions.empty() ? 0 : s.exceptions.back();
  const int bound = s.solid_from + max_exc;
  // m*n = m+n-2 >= max(m,n), so any closure violation already shows up
  // below solid_from; checking up to `bound` is more than enough.
  for (int m = 2; m <= bound; ++m) {
    if (!s.contains(m)) continue;
    for (int n = m; n <= bound; ++n) {
      if (!s.contains(n)) continue;
      const int prod = m + n - 2;
      if (prod <= bound && !s.contains(prod)) return false;
    }
  }
  if (s.contains(3) && !s.exceptions.empty()) return false;
  if (s.contains(4)) {
    // Exceptions must be exactly the odd numbers 3,5,...,E for some E.
    int expect = 3;
    for (int e : s.exceptions) {
      if (e != expect) return false;
      expect += 2;
    }
  }
  return true;
}

std::string to_string(const Spectrum& s) {
  std::string out = "spectrum exceptions=[";
  for (size_t i = 0; i < s.exceptions.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.exceptions[i]);
  }
  out += "] solid_from=" + std::to_string(s.solid_from);
  return out;
}

}  // namespace gallai
