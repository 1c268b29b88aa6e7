#include "cloc/parallel.hpp"

#include <omp.h>

namespace cloc {

int parallel_threads() { return omp_get_max_threads(); }

}  // namespace cloc
