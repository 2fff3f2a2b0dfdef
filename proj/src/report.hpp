#pragma once

#include <string>
#include <vector>

#include "cyc.hpp"

namespace hgm {

// One verified (prime, sample) pair.
struct ReportRow {
    long prime = 0;
    int sample = 0;       // index within the prime's sample sequence
    long z_sample = 0;    // residue that was tested
    std::string lhs, rhs; // rendered values of the two sides
    double abs_err = 0.0;
    double rel_err = 0.0;
    std::string status = "pass"; // pass | fail | skipped
    std::string note;
};

// Shared report shape for every verifier; serializes to canonical JSON
// (sorted keys, every scalar a string) so identical runs are byte-identical.
struct Report {
    std::string identity;
    std::string calibration = "standard";
    std::string monodromy; // "ok", a mismatch description, or "" when not run
    std::vector<ReportRow> rows;
    std::vector<std::string> notes; // per-prime remarks ("p=31: no data")
    long primes_used = 0;
    long samples_total = 0; // pass + fail rows
    long failures = 0;
    double max_rel_err = 0.0;

    bool ok() const { return failures == 0 && (monodromy.empty() || monodromy == "ok"); }

    // Sorts rows by (prime, sample) and recomputes the summary block.
    void finish();
};

// %.17g with -0 normalized; the one float format used in reports.
std::string float_str(double x);

// Rendering of a computed value: floating as "re+imi" decimal strings,
// exact as the coefficient form of CycValue::str().
std::string value_str(const CycValue& v);

std::string report_str(const Report& r); // canonical JSON text
void write_report(const Report& r, const std::string& path);

} // namespace hgm
