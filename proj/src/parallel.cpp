#include "qmm/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace qmm {

int resolve_workers(int requested) {
  if (requested >= 1) return requested;
  if (const char* env = std::getenv("QMM_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
      // fall through to the OpenMP default
    }
  }
  return omp_get_max_threads();
}

}  // namespace qmm
