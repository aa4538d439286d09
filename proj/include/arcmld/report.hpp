#pragma once

#include <string>

#include "arcmld/mld.hpp"

namespace arcmld {

// Human-readable candidate table plus summary.
std::string format_report_human(const MldReport& report);

// Line-oriented machine-readable record: one row line per candidate with
// gamma weights, w, b1, codim, stabilization and row value. Byte-stable
// across runs.
std::string format_report_record(const MldReport& report);

std::string format_pia_human(const PiaReport& report);
std::string format_pia_record(const PiaReport& report);

// Run log: engine version, input content hash, and every (candidate, level)
// measured. No timestamps, so repeat runs produce identical logs.
std::string format_run_log(const std::string& command, const MldReport& report);

}  // namespace arcmld
