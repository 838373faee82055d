#pragma once

#include <cstdint>

namespace gspec::detail {

// splitmix64: advances state and returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Threads used by a kernel asked to run with `workers` (0 = runtime default).
int thread_count(int workers);

}  // namespace gspec::detail
