#pragma once

#include <complex>
#include <string>

#include "rat.hpp"

namespace hgm {

using Cplx = std::complex<double>;

// Parses "0.1", "0.1+0i", "-0.3+0.2i", "2e-1-3e-2i" (suffix i or I).
Cplx parse_complex(const std::string& s);
std::string cplx_str(Cplx z);     // "0.1+0i" style, matching the parser above

// Rising factorial a (a+1) ... (a+n-1); exact.
Rat pochhammer(const Rat& a, long n);

// Real-argument Gamma function, relative error <= 1e-12 on non-pole inputs;
// non-positive integers raise an argument error.
double gamma_real(double x);

struct SeriesSum {
    Cplx value{};
    double tail_bound = 0.0;  // geometric majorant for the dropped tail; +inf if
                              // the truncation point was too early to bound it
    double round_off = 0.0;   // bound on accumulated floating-point error
    long terms_used = 0;
    bool capped = false;      // hit the hard term cap before meeting the target
};

// Truncated Gauss series sum_{n<terms} (a)_n (b)_n / ((c)_n n!) z^n.
// Requires |z| < 1 and c not a non-positive integer (argument errors).
// With terms > 0 exactly `terms` terms are summed; with terms = 0 the
// truncation point is chosen adaptively until the tail bound drops below
// `target_tail` or the 10^4-term cap is reached (reported via `capped`).
SeriesSum f21(const Rat& a, const Rat& b, const Rat& c, Cplx z, long terms,
              double target_tail = 0.0);

enum class SeriesWhich { eq1, eq67 };
SeriesWhich parse_series_which(const std::string& s);  // "eq1" | "eq67"

struct SeriesCheck {
    Cplx lhs{}, rhs{};
    double abs_err = 0.0;
    double tol = 0.0;         // tolerance the check was held to (see below)
    long terms_used = 0;      // max over all series evaluations
    bool precision_warning = false;  // term cap kept the derived bound above target
    bool pass = false;
    std::string detail;       // one-line human-readable summary
};

// Checks one of the two classical transformation identities:
//   eq1:  F(a,b; (a+b+1)/2 | z) = F(a/2, b/2; (a+b+1)/2 | 4z(1-z))
//   eq67: F(a,b; (a+b+1)/2 | z) =
//           cos((a-b)pi/2)/cos((a+b)pi/2) * F(a,b; (a+b+1)/2 | 1-z)
//         + G((a+b+1)/2) G((a+b-1)/2) / (G(a) G(b)) * (1-z)^((1-a-b)/2)
//           * F((a-b+1)/2, (b-a+1)/2; (3-a-b)/2 | 1-z)
// All series arguments must lie strictly inside the unit disc; eq67 further
// needs a+b not an odd integer (cosine pole / Gamma poles) and a, b not
// non-positive integers.  `terms` > 0 forces a fixed truncation, 0 adapts.
// `target_tol` 0 picks the default (1e-10 for eq1, 1e-8 for eq67).  The check
// is held to the larger of target_tol and the truncation-derived error bound;
// needing the latter sets precision_warning.
SeriesCheck verify_series_identity(SeriesWhich which, const Rat& a, const Rat& b,
                                   Cplx z, long terms = 0, double target_tol = 0.0);

// True when (a, b, z) satisfies every eq67 precondition above.
bool eq67_admissible(const Rat& a, const Rat& b, Cplx z);

}  // namespace hgm
