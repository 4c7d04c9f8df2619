#pragma once

namespace a5def {

// Worker count for block-parallel computations; reads A5DEF_THREADS and
// defaults to 1. Clamped to [1, 64].
int thread_count();

}  // namespace a5def
