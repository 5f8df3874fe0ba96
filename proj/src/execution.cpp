#include "lclab/execution.hpp"

#include <omp.h>

namespace lclab {

int max_threads() { return omp_get_max_threads(); }

}  // namespace lclab
