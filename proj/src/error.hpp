#pragma once

#include <stdexcept>
#include <string>

namespace hgm {

// Error categories surfaced through the C API as integer codes.
enum class errc {
    ok = 0,
    argument = 1,     // bad input (range, parse, precondition)
    skip_prime = 2,   // this prime cannot carry the requested character data
    skip_sample = 3,  // this sample point is degenerate for the relation
    unsupported = 4,  // outside implemented range (no closed form, cap exceeded)
    data = 5,         // catalog missing/corrupted/version mismatch
    convergence = 6,  // series failed to converge within the term cap
    internal = 7,
};

class hgm_error : public std::runtime_error {
public:
    hgm_error(errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw hgm_error(c, msg); }

} // namespace hgm
