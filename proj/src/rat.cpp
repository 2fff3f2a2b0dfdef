#include "rat.hpp"

#include <cctype>

namespace hgm {

Rat ratmod1(const Rat& x) {
    mpz_class q, r;
    // floor division of num by den gives the fractional part in [0,1)
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    Rat out(r, x.get_den());
    out.canonicalize();
    return out;
}

Rat ratmod1(long num, long den) {
    if (den == 0) fail(errc::argument, "ratmod1: zero denominator");
    Rat x(num, den);
    x.canonicalize();
    return ratmod1(x);
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) fail(errc::argument, "empty rational literal");
    try {
        Rat x(t);
        if (x.get_den() == 0) fail(errc::argument, "zero denominator in '" + s + "'");
        x.canonicalize();
        return x;
    } catch (const std::invalid_argument&) {
        fail(errc::argument, "bad rational literal '" + s + "'");
    }
}

std::string rat_str(const Rat& x) {
    std::string s = x.get_num().get_str();
    if (x.get_den() != 1) s += "/" + x.get_den().get_str();
    return s;
}

std::vector<std::vector<Rat>> parse_rat_lists(const std::string& s) {
    std::vector<std::vector<Rat>> out;
    size_t start = 0;
    for (;;) {
        size_t semi = s.find(';', start);
        std::string chunk = s.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        std::vector<Rat> row;
        size_t p = 0;
        while (p <= chunk.size()) {
            size_t comma = chunk.find(',', p);
            std::string item = chunk.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
            bool blank = item.find_first_not_of(" \t") == std::string::npos;
            if (!blank) row.push_back(parse_rat(item));
            if (comma == std::string::npos) break;
            p = comma + 1;
        }
        out.push_back(std::move(row));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

long checked_long(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) fail(errc::argument, std::string(what) + ": value out of range");
    return z.get_si();
}

long lcm_denominators(const std::vector<Rat>& xs) {
    mpz_class l = 1;
    for (const Rat& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    return checked_long(l, "lcm of denominators");
}

} // namespace hgm
