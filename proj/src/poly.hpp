#pragma once

#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "rat.hpp"

namespace hgm {

// Dense univariate polynomial over Q, coefficients stored low-to-high with no
// trailing zeros; the zero polynomial has an empty coefficient vector.
struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }
    static QPoly constant(const Rat& v);
    static QPoly monomial(const Rat& v, int deg);

    void normalize();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lead() const;
    Rat at(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Rat(0); }

    Rat eval(const Rat& x) const;
    // Evaluation with coefficients reduced mod p; throws skip_prime when p
    // divides a coefficient denominator.
    long eval_mod(const PrimeField& F, long x) const;

    bool operator==(const QPoly& o) const { return c == o.c; }
};

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const Rat& s);
QPoly poly_pow(const QPoly& a, int n);

// Quotient and remainder with b != 0.
std::pair<QPoly, QPoly> poly_divrem(const QPoly& a, const QPoly& b);
// Exact division; throws errc::internal when the remainder is nonzero.
QPoly poly_divexact(const QPoly& a, const QPoly& b);
QPoly poly_derivative(const QPoly& a);
QPoly poly_monic(const QPoly& a);
QPoly poly_gcd(const QPoly& a, const QPoly& b); // monic unless both zero

// Primitive integer form: multiplies by a rational to reach integer coprime
// coefficients with positive leading coefficient.
QPoly poly_primitive(const QPoly& a);

// Squarefree decomposition (Yun): returns [(g_i, i)] with a = lead * prod g_i^i,
// each g_i monic squarefree, pairwise coprime; factors with g_i = 1 omitted.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& a);

struct PolyFactor {
    QPoly poly; // primitive integer form, positive leading coefficient
    int mult = 0;
};

// Irreducible factorization over Q for degree <= 6. Factors are sorted by
// degree and then coefficient sequence; `unit` collects the rational constant:
//   a = unit * prod poly_i^{mult_i}.
struct Factorization {
    Rat unit;
    std::vector<PolyFactor> factors;
};
Factorization poly_factor(const QPoly& a);

// "z^2-20*z-8" style rendering; empty polynomial prints "0".
std::string poly_str(const QPoly& a);

} // namespace hgm
