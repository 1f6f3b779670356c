#include "roam/harness/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace roam::harness {

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void emit_rows(std::ostream& os, const ScenarioResult& result, bool csv) {
    const char sep = csv ? ',' : ' ';
    for (const auto& run : result.metrics.runs) {
        if (csv) os << protocol_name(result.config.protocol) << sep << result.config.scenario << sep;
        os << fmt6(run.x) << sep << run.rreq << sep << run.rrep << sep << run.rerr << sep
           << run.hello << sep << fmt6(run.nrl) << sep << fmt6(run.e2ed_mean * 1e3) << sep
           << run.data_sent << sep << run.data_delivered << sep << run.seed << '\n';
    }
}

}  // namespace

void emit_csv(std::ostream& os, const std::vector<ScenarioResult>& results) {
    os << "protocol,scenario,x,rreq,rrep,rerr,hello,nrl,e2ed_ms,data_sent,data_delivered,seed\n";
    for (const auto& r : results) emit_rows(os, r, true);
}

void emit_dat(std::ostream& os, const std::vector<ScenarioResult>& results) {
    os << "# x rreq rrep rerr hello nrl e2ed_ms data_sent data_delivered seed\n";
    const ScenarioResult* prev = nullptr;
    for (const auto& r : results) {
        if (prev && (prev->config.protocol != r.config.protocol ||
                     prev->config.scenario != r.config.scenario))
            os << '\n';  // gnuplot block break
        os << "# " << protocol_name(r.config.protocol) << ' ' << r.config.scenario << '\n';
        emit_rows(os, r, false);
        prev = &r;
    }
}

namespace {

template <typename Emit>
void emit_to_file(const std::string& path, Emit emit) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path + ": " +
                                       std::strerror(errno));
    emit(out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void emit_csv_file(const std::string& path, const std::vector<ScenarioResult>& results) {
    emit_to_file(path, [&](std::ostream& os) { emit_csv(os, results); });
}

void emit_dat_file(const std::string& path, const std::vector<ScenarioResult>& results) {
    emit_to_file(path, [&](std::ostream& os) { emit_dat(os, results); });
}

}  // namespace roam::harness
