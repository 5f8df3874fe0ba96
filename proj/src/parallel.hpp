#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>

#include "lclab/execution.hpp"

namespace lclab::detail {

/// Runs fn(i) for i in [0, count). Results must be written to per-index slots so the
/// outcome does not depend on scheduling. If any call throws, the exception of the
/// lowest failing index is rethrown after the loop.
template <class Fn>
void for_each_index(std::size_t count, Execution execution, Fn&& fn) {
  if (execution == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr first_error;
  std::size_t first_index = std::numeric_limits<std::size_t>::max();
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(lclab_for_each_index)
      {
        if (static_cast<std::size_t>(i) < first_index) {
          first_index = static_cast<std::size_t>(i);
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace lclab::detail
