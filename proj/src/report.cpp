#include "arcmld/report.hpp"

#include <iomanip>
#include <sstream>

#include "arcmld/cache.hpp"

namespace arcmld {

namespace {

std::string w_string(const std::vector<int>& w) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ",";
    out << w[i];
  }
  out << ")";
  return out.str();
}

std::string value_string(const std::optional<Rat>& v) {
  return v.has_value() ? rat_to_string(*v) : "none";
}

std::string levels_string(const CodimCertificate& cert) {
  std::ostringstream out;
  for (size_t i = 0; i < cert.levels.size(); ++i) {
    if (i) out << ",";
    const auto& m = cert.levels[i];
    out << m.level << ":";
    if (m.codim.has_value()) out << *m.codim;
    else out << "inf";
  }
  return out.str();
}

std::string mode_string(ContactKind k) {
  return k == ContactKind::AtLeast ? "atleast" : "exact";
}

}  // namespace

std::string format_report_human(const MldReport& report) {
  std::ostringstream out;
  out << "mld report for scenario '" << report.scenario << "' (engine " << report.engine_version
      << ", input " << hex64(report.input_hash) << ")\n";
  out << "bounds: wmax=" << report.bounds.w_max << " bmax=" << report.bounds.b_max
      << " window=" << report.bounds.window << "  contact mode: "
      << mode_string(report.contact_mode) << "\n\n";
  out << std::left << std::setw(14) << "gamma" << std::setw(5) << "b1" << std::setw(12) << "w"
      << std::setw(8) << "codim" << std::setw(6) << "stab" << std::setw(12) << "value"
      << "levels\n";
  for (const auto& row : report.rows) {
    out << std::left << std::setw(14) << row.gamma.to_string() << std::setw(5) << row.b1
        << std::setw(12) << w_string(row.w) << std::setw(8) << row.cert.codim_string()
        << std::setw(6) << (row.cert.stabilized ? "yes" : "NO") << std::setw(12)
        << value_string(row.value) << levels_string(row.cert) << "\n";
  }
  out << "\nvalue: " << value_string(report.value);
  if (report.attained.has_value()) {
    const auto& row = report.rows[*report.attained];
    out << "  attained at gamma=" << row.gamma.to_string() << " b1=" << row.b1
        << " w=" << w_string(row.w);
  }
  out << "\n";
  out << "fully stabilized: " << (report.fully_stabilized ? "yes" : "no") << "\n";
  out << "negativity evidence: " << (report.negativity_evidence ? "yes" : "no") << "\n";
  if (report.oracle_value.has_value()) {
    out << "toric oracle: " << rat_to_string(*report.oracle_value);
    if (report.oracle_agrees.has_value()) {
      out << " (" << (*report.oracle_agrees ? "agrees" : "DISAGREES") << ")";
    }
    out << "\n  " << report.oracle_note << "\n";
  }
  for (const auto& a : report.assumptions) out << "assumption: " << a << "\n";
  return out.str();
}

std::string format_report_record(const MldReport& report) {
  std::ostringstream out;
  out << "arcmld-report 1\n";
  out << "scenario: " << report.scenario << "\n";
  out << "version: " << report.engine_version << "\n";
  out << "input-hash: " << hex64(report.input_hash) << "\n";
  out << "mode: " << mode_string(report.contact_mode) << "\n";
  out << "bounds: wmax=" << report.bounds.w_max << " bmax=" << report.bounds.b_max
      << " window=" << report.bounds.window << "\n";
  for (const auto& row : report.rows) {
    out << "row: gamma=" << row.gamma.to_string() << " b1=" << row.b1
        << " w=" << w_string(row.w) << " codim=" << row.cert.codim_string()
        << " stabilized=" << (row.cert.stabilized ? 1 : 0)
        << " certified=" << (row.cert.certified ? 1 : 0) << " levels=" << levels_string(row.cert)
        << " value=" << value_string(row.value) << "\n";
  }
  out << "value: " << value_string(report.value) << "\n";
  if (report.attained.has_value()) {
    const auto& row = report.rows[*report.attained];
    out << "attained: gamma=" << row.gamma.to_string() << " b1=" << row.b1
        << " w=" << w_string(row.w) << "\n";
  }
  out << "fully-stabilized: " << (report.fully_stabilized ? 1 : 0) << "\n";
  out << "negativity-evidence: " << (report.negativity_evidence ? 1 : 0) << "\n";
  if (report.oracle_value.has_value()) {
    out << "oracle: " << rat_to_string(*report.oracle_value);
    if (report.oracle_agrees.has_value()) out << " agrees=" << (*report.oracle_agrees ? 1 : 0);
    out << "\n";
    out << "oracle-note: " << report.oracle_note << "\n";
  }
  for (const auto& a : report.assumptions) out << "assumption: " << a << "\n";
  out << "end\n";
  return out.str();
}

std::string format_pia_human(const PiaReport& report) {
  std::ostringstream out;
  out << "pia check: " << (report.pass ? "PASS" : "FAIL") << "\n";
  out << report.detail << "\n\n";
  out << "--- ambient side (cuts as ideal factors) ---\n";
  out << format_report_human(report.lhs);
  out << "\n--- subvariety side (cuts as equations) ---\n";
  out << format_report_human(report.rhs);
  return out.str();
}

std::string format_pia_record(const PiaReport& report) {
  std::ostringstream out;
  out << "arcmld-pia 1\n";
  out << "pass: " << (report.pass ? 1 : 0) << "\n";
  out << "detail: " << report.detail << "\n";
  out << "[lhs]\n" << format_report_record(report.lhs);
  out << "[rhs]\n" << format_report_record(report.rhs);
  out << "end\n";
  return out.str();
}

std::string format_run_log(const std::string& command, const MldReport& report) {
  std::ostringstream out;
  out << "arcmld-log 1\n";
  out << "command: " << command << "\n";
  out << "version: " << report.engine_version << "\n";
  out << "scenario: " << report.scenario << "\n";
  out << "input-hash: " << hex64(report.input_hash) << "\n";
  for (const auto& row : report.rows) {
    out << "measured: " << candidate_key(row.gamma, row.b1, row.w, report.contact_mode)
        << " levels=" << levels_string(row.cert) << "\n";
  }
  out << "end\n";
  return out.str();
}

}  // namespace arcmld
