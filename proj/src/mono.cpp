#include "mono.hpp"

#include <algorithm>

namespace hgm {

LocalClass make_class(const Rat& x, const Rat& y, bool jordan) {
    LocalClass c;
    c.e1 = ratmod1(x);
    c.e2 = ratmod1(y);
    if (c.e2 < c.e1) std::swap(c.e1, c.e2);
    c.jordan = jordan;
    return c;
}

bool LocalClass::is_trivial() const { return e1 == 0 && e2 == 0 && !jordan; }

bool LocalClass::is_pseudo_reflection() const {
    if (jordan) return e1 == 0 && e2 == 0;
    return e1 == 0 && e2 != 0; // exponents are sorted, so e1 is the zero slot
}

std::string LocalClass::str() const {
    std::string s = "{" + rat_str(e1) + "," + rat_str(e2);
    if (jordan) s += ";jordan";
    return s + "}";
}

bool class_equal(const LocalClass& a, const LocalClass& b) {
    return a.e1 == b.e1 && a.e2 == b.e2 && a.jordan == b.jordan;
}

LocalClass twist_class(const LocalClass& c, const Rat& s) {
    return make_class(c.e1 + s, c.e2 + s, c.jordan);
}

LocalClass pull_class(const LocalClass& c, int e) {
    if (e < 1) fail(errc::argument, "ramification index must be positive");
    return make_class(c.e1 * e, c.e2 * e, c.jordan);
}

MonodromyData local_data(const HGMParams& P) {
    MonodromyData d;
    d.at0 = make_class(-P.c, -P.d, P.c == P.d);
    d.at1 = make_class(Rat(0), P.c + P.d - P.a - P.b, ratmod1(P.a + P.b) == ratmod1(P.c + P.d));
    d.at_inf = make_class(P.a, P.b, P.a == P.b);
    return d;
}

std::string MonodromyData::str() const {
    return "0: " + at0.str() + "; 1: " + at1.str() + "; inf: " + at_inf.str();
}

HGMParams params_from_local_data(const MonodromyData& d) {
    HGMParams P = make_params(d.at_inf.e1, d.at_inf.e2, -d.at0.e1, -d.at0.e2);
    MonodromyData check = local_data(P);
    if (!class_equal(check.at0, d.at0) || !class_equal(check.at1, d.at1) ||
        !class_equal(check.at_inf, d.at_inf))
        fail(errc::data, "local data is not realized by any parameter pair: " + d.str());
    return P;
}

} // namespace hgm
