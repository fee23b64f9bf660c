#include "gallai/runtime.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace gallai {

int thread_cap() {
  if (const char* env = std::getenv("GALLAI_THREADS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) return requested;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(static_cast<int>(hw), 1, 8);
}

}  // namespace gallai
