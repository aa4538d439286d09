#pragma once

#include <gmpxx.h>

#include <string>

namespace arcmld {

// Exact rational coefficients. GMP does the heavy lifting; this header only
// pins down construction/formatting conventions used across the project.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace arcmld
