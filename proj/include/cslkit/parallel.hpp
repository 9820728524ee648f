#pragma once

#include <cstddef>

namespace cslkit {

/// Selects between the OpenMP kernel and its serial reference.
enum class Execution { Serial, Parallel };

namespace detail {

/// Calls body(i) for i in [0, count). Iterations must be independent; results
/// are written to per-index slots so output order never depends on scheduling.
template <class Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
}

}  // namespace detail
}  // namespace cslkit
