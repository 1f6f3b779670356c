#ifndef ROAM_HARNESS_CSV_HPP_
#define ROAM_HARNESS_CSV_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "roam/harness/scenario.hpp"

namespace roam::harness {

// Stable column order, UTF-8, LF endings, 6 significant digits:
// protocol,scenario,x,rreq,rrep,rerr,hello,nrl,e2ed_ms,data_sent,
// data_delivered,seed. One row per (protocol, x point, run).
void emit_csv(std::ostream& os, const std::vector<ScenarioResult>& results);
void emit_csv_file(const std::string& path, const std::vector<ScenarioResult>& results);

// gnuplot-friendly mirror of the numeric columns, one block per
// (protocol, scenario) pair separated by blank lines.
void emit_dat(std::ostream& os, const std::vector<ScenarioResult>& results);
void emit_dat_file(const std::string& path, const std::vector<ScenarioResult>& results);

}  // namespace roam::harness

#endif  // ROAM_HARNESS_CSV_HPP_
