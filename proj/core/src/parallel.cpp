#include "hardy/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hardy {

std::size_t max_threads() {
  static const std::size_t cached = [] {
    const char* env = std::getenv("HARDY_THREADS");
    if (env == nullptr) return std::size_t{1};
    try {
      const long long parsed = std::stoll(env);
      if (parsed < 1) return std::size_t{1};
      return static_cast<std::size_t>(parsed);
    } catch (...) {
      return std::size_t{1};
    }
  }();
  return cached;
}

}  // namespace hardy
