#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace gallai {

/// Invalid or inconsistent input data: malformed files, broken type
/// invariants, out-of-range arguments discovered during validation.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by operations that require a Gallai clique when given one that
/// is not; carries one colorful triangle as evidence.
class not_gallai_error : public std::runtime_error {
 public:
  not_gallai_error(const std::string& what, std::array<int, 3> triangle)
      : std::runtime_error(what), triangle_(triangle) {}

  const std::array<int, 3>& triangle() const { return triangle_; }

 private:
  std::array<int, 3> triangle_;
};

}  // namespace gallai
