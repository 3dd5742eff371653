#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ghrv {

// Worker cap for the minor and point scans; 0 means hardware concurrency.
void set_jobs(unsigned jobs);
unsigned jobs();

// Runs fn(i) for i in [0, n) on up to jobs() threads. Results are written by
// index so the merged output does not depend on scheduling. The first
// exception (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace ghrv
