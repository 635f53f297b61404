#pragma once

namespace qmm {

// Worker count: an explicit request wins, then the QMM_WORKERS environment
// variable, then the OpenMP default. Every parallel reduction in this
// project is an exact associative merge, so results do not depend on the
// value chosen here.
int resolve_workers(int requested = 0);

}  // namespace qmm
