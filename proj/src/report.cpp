#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "error.hpp"
#include "json.hpp"

namespace hgm {

std::string float_str(double x) {
    if (x == 0.0) x = 0.0; // collapse -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string value_str(const CycValue& v) {
    if (v.backend() == Backend::exact) return v.str();
    auto c = v.approx();
    double re = c.real() == 0.0 ? 0.0 : c.real();
    double im = c.imag() == 0.0 ? 0.0 : c.imag();
    std::string s = float_str(re);
    s += im < 0 ? "-" : "+";
    s += float_str(std::fabs(im));
    s += "i";
    return s;
}

void Report::finish() {
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return a.prime != b.prime ? a.prime < b.prime : a.sample < b.sample;
    });
    samples_total = failures = 0;
    max_rel_err = 0.0;
    std::set<long> primes;
    for (const auto& r : rows) {
        if (r.status == "skipped") continue;
        ++samples_total;
        if (r.status == "fail") ++failures;
        max_rel_err = std::max(max_rel_err, r.rel_err);
        primes.insert(r.prime);
    }
    primes_used = static_cast<long>(primes.size());
}

namespace {

nlohmann::json row_json(const ReportRow& r) {
    return {{"prime", std::to_string(r.prime)},   {"sample", std::to_string(r.sample)},
            {"z_sample", std::to_string(r.z_sample)}, {"lhs", r.lhs},
            {"rhs", r.rhs},                       {"abs_err", float_str(r.abs_err)},
            {"rel_err", float_str(r.rel_err)},    {"status", r.status},
            {"note", r.note}};
}

} // namespace

std::string report_str(const Report& r) {
    nlohmann::json j;
    j["schema"] = "1";
    j["identity"] = r.identity;
    j["calibration"] = r.calibration;
    j["monodromy"] = r.monodromy;
    j["notes"] = r.notes;
    auto rows = nlohmann::json::array();
    for (const auto& row : r.rows) rows.push_back(row_json(row));
    j["rows"] = std::move(rows);
    j["summary"] = {{"primes_used", std::to_string(r.primes_used)},
                    {"samples_total", std::to_string(r.samples_total)},
                    {"failures", std::to_string(r.failures)},
                    {"max_rel_err", float_str(r.max_rel_err)},
                    {"wall_time", "0"}};
    return j.dump();
}

void write_report(const Report& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::argument, "cannot open report file '" + path + "'");
    out << report_str(r) << '\n';
    out.flush();
    if (!out) fail(errc::argument, "error while writing report file '" + path + "'");
}

} // namespace hgm
