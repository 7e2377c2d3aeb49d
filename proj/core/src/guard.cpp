#include "beid/guard.hpp"

#include <cstdlib>

namespace beid {

int guard_limit(int default_limit) {
  if (const char* env = std::getenv("BEID_GUARD_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > default_limit) return static_cast<int>(v);
  }
  return default_limit;
}

void check_guard(const char* what, int n, int default_limit) {
  int limit = guard_limit(default_limit);
  if (n > limit)
    throw guard_error(std::string(what) + ": size " + std::to_string(n) +
                      " exceeds the guard ceiling " + std::to_string(limit) +
                      " (set BEID_GUARD_N to raise it)");
}

}  // namespace beid
