#pragma once

#include <string>
#include <vector>

#include "expr.hpp"
#include "poly.hpp"

namespace hgm {

// Rational function of z in lowest terms: num/den with den a primitive integer
// polynomial, positive leading coefficient, gcd(num, den) = 1.
struct RationalMap {
    QPoly num, den;
    std::string source;

    int degree() const; // max(deg num, deg den); the covering degree
    std::string str() const;
};

// Parses an expression in the single variable z (any other symbol fails).
RationalMap make_map(const std::string& text);
// Same, but substitutes the given symbol values first.
RationalMap make_map(const ExprNode& e, const std::map<std::string, Rat>& syms);

// Exact evaluation; throws errc::argument at a pole.
Rat map_eval(const RationalMap& m, const Rat& z);

// Evaluation mod p; throws errc::skip_sample when z lands on a pole mod p and
// errc::skip_prime when p divides a coefficient denominator.
long map_eval_mod(const RationalMap& m, const PrimeField& F, long z);

// A closed point of P^1: either the root locus of an irreducible primitive
// integer polynomial, or the point at infinity.
struct Place {
    QPoly pi;
    bool at_infinity = false;

    std::string str() const;
    bool operator==(const Place& o) const { return at_infinity == o.at_infinity && pi == o.pi; }
};

Place place_at_infinity();
Place place_of(const QPoly& pi);
// The place where z = r, as the primitive form of (z - r).
Place place_of_value(const Rat& r);

// Order of vanishing of the map at the place (negative at poles).
int map_ord(const RationalMap& m, const Place& at);

// Ramification data of the fibers over 0, 1 and infinity.
struct RamPoint {
    Place place;
    int e = 0;
};

struct RamProfile {
    std::vector<RamPoint> over0, over1, over_inf;
    std::string str() const; // "0 -> (z,1)(z-1,1); 1 -> (2*z-1,2); inf -> (inf,2)"
};

RamProfile ramification_profile(const RationalMap& m);

} // namespace hgm
