#include "a5def/util.hpp"

#include <cstdlib>

namespace a5def {

int thread_count() {
  const char* env = std::getenv("A5DEF_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  if (n < 1) return 1;
  if (n > 64) return 64;
  return n;
}

}  // namespace a5def
