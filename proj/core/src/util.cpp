#include "aisr/util.hpp"

#include <cstdlib>
#include <string>

namespace aisr {

unsigned env_worker_count() {
  const char* value = std::getenv("AISR_WORKERS");
  if (!value) return 1;
  try {
    long parsed = std::stol(value);
    if (parsed < 1) return 1;
    if (parsed > 256) return 256;
    return static_cast<unsigned>(parsed);
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace aisr
