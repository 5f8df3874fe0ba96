#pragma once

#include <cstddef>

namespace lclab {

/// Serial is the reference path; Parallel distributes independent degrees,
/// chambers or corpus items over OpenMP threads and merges in input order.
enum class Execution { Serial, Parallel };

int max_threads();

}  // namespace lclab
