#pragma once

#include <string>

#include "hyp.hpp"

namespace hgm {

// Local monodromy class of a rank-2 local system at a point of P^1: a pair of
// exponents in Q/Z plus a flag for a nontrivial unipotent (Jordan) part.
struct LocalClass {
    Rat e1, e2;        // stored sorted, reduced mod 1
    bool jordan = false;

    bool is_trivial() const;           // identity: {0,0} without Jordan part
    bool is_pseudo_reflection() const; // {0,x} with x != 0, or a unipotent {0,0}
    std::string str() const;
};

LocalClass make_class(const Rat& x, const Rat& y, bool jordan);
bool class_equal(const LocalClass& a, const LocalClass& b);

// Twist by a character: shifts both exponents by s.
LocalClass twist_class(const LocalClass& c, const Rat& s);
// Pullback along a cover with ramification index e >= 1: exponents scale by e;
// a Jordan part survives, but merely colliding exponents do not create one.
LocalClass pull_class(const LocalClass& c, int e);

// The three-point local data of the rank-2 system attached to (a,b;c,d).
struct MonodromyData {
    LocalClass at0, at1, at_inf;
    std::string str() const;
};

MonodromyData local_data(const HGMParams& P);

// Inverse of local_data; validates internal consistency of the given data and
// throws errc::data when no parameter set realizes it.
HGMParams params_from_local_data(const MonodromyData& d);

} // namespace hgm
