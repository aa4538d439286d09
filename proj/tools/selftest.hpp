#pragma once

namespace arcmld {

// Runs the built-in example suite (including one fixture per documented error
// code), printing one line per fixture. Returns the number of failures.
int run_selftest();

}  // namespace arcmld
