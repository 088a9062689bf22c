#include "tavis/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace tavis {

std::size_t worker_count() {
  std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TAVIS_SIM_THREADS")) {
    std::size_t cap = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, cap);
    if (ec == std::errc() && ptr == end && cap > 0) return cap;
  }
  return hw;
}

}  // namespace tavis
