#include "ratmap.hpp"

#include <algorithm>

#include "error.hpp"

namespace hgm {

namespace {

struct Frac {
    QPoly num, den;
};

Frac frac_mul(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }

Frac frac_div(const Frac& a, const Frac& b) {
    if (b.num.is_zero()) fail(errc::argument, "division by the zero function");
    return {a.num * b.den, a.den * b.num};
}

Frac frac_addsub(const Frac& a, const Frac& b, bool sub) {
    QPoly n = sub ? a.num * b.den - b.num * a.den : a.num * b.den + b.num * a.den;
    return {std::move(n), a.den * b.den};
}

Frac to_frac(const ExprNode& e, const std::map<std::string, Rat>& syms) {
    switch (e.op) {
        case ExprNode::Op::num:
            return {QPoly::constant(e.value), QPoly::constant(Rat(1))};
        case ExprNode::Op::sym: {
            if (e.name == "z") return {QPoly(std::vector<Rat>{Rat(0), Rat(1)}), QPoly::constant(Rat(1))};
            auto it = syms.find(e.name);
            if (it == syms.end()) fail(errc::argument, "unbound symbol '" + e.name + "' in map expression");
            return {QPoly::constant(it->second), QPoly::constant(Rat(1))};
        }
        case ExprNode::Op::neg: {
            Frac f = to_frac(*e.lhs, syms);
            return {f.num * Rat(-1), f.den};
        }
        case ExprNode::Op::add:
            return frac_addsub(to_frac(*e.lhs, syms), to_frac(*e.rhs, syms), false);
        case ExprNode::Op::sub:
            return frac_addsub(to_frac(*e.lhs, syms), to_frac(*e.rhs, syms), true);
        case ExprNode::Op::mul:
            return frac_mul(to_frac(*e.lhs, syms), to_frac(*e.rhs, syms));
        case ExprNode::Op::div:
            return frac_div(to_frac(*e.lhs, syms), to_frac(*e.rhs, syms));
        case ExprNode::Op::pow: {
            Frac f = to_frac(*e.lhs, syms);
            long k = e.exponent;
            if (k < 0) {
                std::swap(f.num, f.den);
                k = -k;
            }
            if (f.den.is_zero()) fail(errc::argument, "division by the zero function");
            return {poly_pow(f.num, static_cast<int>(k)), poly_pow(f.den, static_cast<int>(k))};
        }
    }
    fail(errc::internal, "unhandled expression node");
}

RationalMap reduce(Frac f, std::string source) {
    if (f.den.is_zero()) fail(errc::argument, "map has zero denominator");
    if (f.num.is_zero()) fail(errc::argument, "map is identically zero");
    QPoly g = poly_gcd(f.num, f.den);
    QPoly num = poly_divexact(f.num, g);
    QPoly den = poly_divexact(f.den, g);
    QPoly prim = poly_primitive(den);
    Rat sigma = prim.lead() / den.lead();
    RationalMap m{num * sigma, prim, std::move(source)};
    if (m.degree() < 1) fail(errc::argument, "map is constant: " + m.source);
    return m;
}

} // namespace

int RationalMap::degree() const { return std::max(num.degree(), den.degree()); }

std::string RationalMap::str() const {
    if (den.degree() == 0 && den.c[0] == 1) return poly_str(num);
    return "(" + poly_str(num) + ")/(" + poly_str(den) + ")";
}

RationalMap make_map(const std::string& text) {
    ExprPtr e = parse_expr(text);
    return reduce(to_frac(*e, {}), text);
}

RationalMap make_map(const ExprNode& e, const std::map<std::string, Rat>& syms) {
    return reduce(to_frac(e, syms), "");
}

Rat map_eval(const RationalMap& m, const Rat& z) {
    Rat d = m.den.eval(z);
    if (d == 0) fail(errc::argument, "map has a pole at " + rat_str(z));
    return m.num.eval(z) / d;
}

long map_eval_mod(const RationalMap& m, const PrimeField& F, long z) {
    long d = m.den.eval_mod(F, z);
    if (d == 0) fail(errc::skip_sample, "sample maps to infinity mod " + std::to_string(F.p));
    long n = m.num.eval_mod(F, z);
    return static_cast<long>(static_cast<__int128>(n) * F.inv(d) % F.p);
}

Place place_at_infinity() {
    Place pl;
    pl.at_infinity = true;
    return pl;
}

Place place_of(const QPoly& pi) {
    if (pi.degree() < 1) fail(errc::argument, "a finite place needs a nonconstant polynomial");
    Place pl;
    pl.pi = poly_primitive(pi);
    return pl;
}

Place place_of_value(const Rat& r) {
    return place_of(QPoly(std::vector<Rat>{-r, Rat(1)}));
}

std::string Place::str() const { return at_infinity ? "inf" : poly_str(pi); }

namespace {

int mult_of(const QPoly& f, const QPoly& pi) {
    int k = 0;
    QPoly r = f;
    for (;;) {
        auto [q, rem] = poly_divrem(r, pi);
        if (!rem.is_zero()) return k;
        r = std::move(q);
        ++k;
    }
}

} // namespace

int map_ord(const RationalMap& m, const Place& at) {
    if (at.at_infinity) return m.den.degree() - m.num.degree();
    return mult_of(m.num, at.pi) - mult_of(m.den, at.pi);
}

namespace {

std::vector<RamPoint> fiber(const QPoly& pt, int deg_map) {
    std::vector<RamPoint> out;
    if (pt.is_zero()) fail(errc::internal, "degenerate fiber polynomial");
    if (pt.degree() >= 1)
        for (const auto& f : poly_factor(pt).factors) out.push_back({place_of(f.poly), f.mult});
    int e_inf = deg_map - std::max(pt.degree(), 0);
    if (e_inf > 0) out.push_back({place_at_infinity(), e_inf});
    return out;
}

std::string side_str(const std::vector<RamPoint>& v) {
    std::string s;
    for (const auto& rp : v) s += "(" + rp.place.str() + "," + std::to_string(rp.e) + ")";
    return s.empty() ? "-" : s;
}

} // namespace

RamProfile ramification_profile(const RationalMap& m) {
    int d = m.degree();
    RamProfile pr;
    pr.over0 = fiber(m.num, d);
    pr.over1 = fiber(m.num - m.den, d);
    pr.over_inf = fiber(m.den, d);
    for (const auto* side : {&pr.over0, &pr.over1, &pr.over_inf}) {
        int total = 0;
        for (const auto& rp : *side) total += rp.e * (rp.place.at_infinity ? 1 : rp.place.pi.degree());
        if (total != d) fail(errc::internal, "fiber degrees do not sum to the map degree");
    }
    return pr;
}

std::string RamProfile::str() const {
    return "0 -> " + side_str(over0) + "; 1 -> " + side_str(over1) + "; inf -> " + side_str(over_inf);
}

} // namespace hgm
