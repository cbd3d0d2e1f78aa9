#include "legweb/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace legweb {

namespace {

int read_cap() {
  const char* env = std::getenv("LEGWEB_THREADS");
  if (env == nullptr) return 0;
  try {
    int v = std::stoi(env);
    return v > 0 ? v : 0;
  } catch (...) {
    return 0;
  }
}

}  // namespace

int worker_count() {
  static const int count = [] {
    int n = omp_get_max_threads();
    int cap = read_cap();
    if (cap > 0 && cap < n) n = cap;
    return n < 1 ? 1 : n;
  }();
  return count;
}

}  // namespace legweb
