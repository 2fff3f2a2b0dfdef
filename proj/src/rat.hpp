#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "error.hpp"

namespace hgm {

using Rat = mpq_class;

// Reduce a rational to its representative in [0, 1).
Rat ratmod1(const Rat& x);
Rat ratmod1(long num, long den);

bool is_integer(const Rat& x);

// den(x) as mpz; for reduced x.
inline const mpz_class& rat_den(const Rat& x) { return x.get_den(); }
inline const mpz_class& rat_num(const Rat& x) { return x.get_num(); }

// Parse "n", "-n/m", "n / m" into a rational (den > 0 enforced by mpq canonicalization).
Rat parse_rat(const std::string& s);

// Canonical short form: "0", "7", "-1/3".
std::string rat_str(const Rat& x);

// Parse "a,b;c,d"-style lists of rationals; outer split on ';', inner on ','.
std::vector<std::vector<Rat>> parse_rat_lists(const std::string& s);

// lcm of denominators of a list (as long); throws errc::argument on overflow.
long lcm_denominators(const std::vector<Rat>& xs);

long checked_long(const mpz_class& z, const char* what);

} // namespace hgm
