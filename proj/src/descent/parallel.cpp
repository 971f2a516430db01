#include "descent/parallel.hpp"

#include <cstdlib>

namespace descent::par {

Mode default_mode() {
#ifdef _OPENMP
  const char* forced = std::getenv("DESCENT_SERIAL");
  if (forced && forced[0] != '\0' && forced[0] != '0') return Mode::Serial;
  return Mode::Parallel;
#else
  return Mode::Serial;
#endif
}

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

const char* to_string(Mode m) {
  return m == Mode::Serial ? "serial" : "parallel";
}

}  // namespace descent::par
