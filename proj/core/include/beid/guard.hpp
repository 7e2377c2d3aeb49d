#pragma once

// Size guards for the exhaustive-search entry points.  Each guarded operation
// has a default ceiling chosen so a desk run finishes comfortably; setting the
// environment variable BEID_GUARD_N to an integer raises every ceiling to that
// value (it never lowers one).

#include <stdexcept>
#include <string>

namespace beid {

class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ceiling actually in force for an operation whose default ceiling is
// `default_limit`.
int guard_limit(int default_limit);

// Throws guard_error mentioning `what` when `n` exceeds the effective ceiling.
void check_guard(const char* what, int n, int default_limit);

}  // namespace beid
