#include "dioph.hpp"

#include <utility>

#include "error.hpp"
#include "rng.hpp"

namespace hgm {

namespace {

// Trial-division bound for removing the square part of a discriminant.
constexpr unsigned long kSquarePartBound = 10000;

bool is_prime_long(long n) {
    if (n < 2) return false;
    mpz_class z(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

// Splits |n| = t^2 * m with m free of square factors below the trial bound;
// the sign of n is carried on m.
void square_part(const mpz_class& n, mpz_class& t, mpz_class& m) {
    t = 1;
    m = 1;
    mpz_class a = abs(n);
    if (a == 0) fail(errc::internal, "square_part: zero argument");
    for (unsigned long d = 2; d <= kSquarePartBound; d = (d == 2 ? 3 : d + 2)) {
        if (mpz_cmp_ui(a.get_mpz_t(), d * d) < 0) break;
        if (!mpz_divisible_ui_p(a.get_mpz_t(), d)) continue;
        unsigned long k = 0;
        while (mpz_divisible_ui_p(a.get_mpz_t(), d)) {
            mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), d);
            ++k;
        }
        mpz_class dz(static_cast<long>(d)), pw;
        mpz_pow_ui(pw.get_mpz_t(), dz.get_mpz_t(), k / 2);
        t *= pw;
        if (k % 2) m *= dz;
    }
    if (a > 1) {
        if (mpz_perfect_square_p(a.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
            t *= r;
        } else {
            m *= a;
        }
    }
    if (sgn(n) < 0) m = -m;
}

// Canonicalizes sqrt(x) for rational x as c * sqrt(d), c >= 0.
void surd_of(const Rat& x, Rat& coeff, mpz_class& disc) {
    if (x == 0) fail(errc::internal, "surd_of: zero argument");
    mpz_class big = rat_num(x) * rat_den(x);  // sqrt(n/d) = sqrt(n*d) / d
    mpz_class t, m;
    square_part(big, t, m);
    coeff = Rat(t) / Rat(rat_den(x));
    coeff.canonicalize();
    disc = m;
}

mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

std::string SurdPair::str() const {
    if (coefficient == 0 || disc == 1) {
        // Rational pair r +- c (a single rational when c = 0).
        if (coefficient == 0) return rat_str(rational);
        return rat_str(rational) + " +- " + rat_str(coefficient);
    }
    mpz_class den;
    mpz_lcm(den.get_mpz_t(), rat_den(rational).get_mpz_t(), rat_den(coefficient).get_mpz_t());
    mpz_class a = rat_num(rational) * (den / rat_den(rational));
    mpz_class c = rat_num(coefficient) * (den / rat_den(coefficient));
    std::string root = "sqrt(" + disc.get_str() + ")";
    std::string head;
    if (a != 0) head = a.get_str() + " +- ";
    else head = "+- ";
    std::string body = head + (c == 1 ? root : c.get_str() + "*" + root);
    if (den == 1) return body;
    return "(" + body + ")/" + den.get_str();
}

DiophPoints dioph_points(const mpz_class& alpha, const mpz_class& beta,
                         const mpz_class& gamma, long q, long pexp) {
    if (alpha == 0) fail(errc::argument, "dioph_points: alpha must be nonzero");
    if (beta == 0) fail(errc::argument, "dioph_points: beta = 0 is degenerate (w0 = 0)");
    if (gamma == 0) fail(errc::argument, "dioph_points: gamma must be nonzero");
    if (q < 3 || q % 2 == 0 || !is_prime_long(q))
        fail(errc::argument, "dioph_points: q must be an odd prime");
    if (!is_prime_long(pexp)) fail(errc::argument, "dioph_points: pexp must be prime");

    mpz_class aq = pow_z(alpha, static_cast<unsigned long>(q));
    mpz_class bq = pow_z(beta, static_cast<unsigned long>(q));
    mpz_class gp = pow_z(gamma, static_cast<unsigned long>(pexp));
    if (aq + bq != gp)
        fail(errc::argument,
             "dioph_points: alpha^q + beta^q != gamma^pexp for (" + alpha.get_str() + ", " +
                 beta.get_str() + ", " + gamma.get_str() + ", q=" + std::to_string(q) +
                 ", pexp=" + std::to_string(pexp) + ")");

    DiophPoints out;
    out.z0 = Rat(aq) / Rat(gp);
    out.z0.canonicalize();
    out.w0 = Rat(-bq * bq) / Rat(4 * aq * gp);
    out.w0.canonicalize();

    // Cross-check against the closed form in z0 alone.
    Rat check = -(out.z0 - 1) * (out.z0 - 1) / (4 * out.z0);
    if (check != out.w0) fail(errc::internal, "dioph_points: w0 identity failed");

    // 4u(1-u) = w0  <=>  u = (1 +- sqrt(1 - w0)) / 2.
    Rat under = 1 - out.w0;  // equals (2 alpha^q + beta^q)^2 / (4 alpha^q gamma^pexp)
    out.u0.rational = Rat(1, 2);
    if (under == 0) {
        out.u0.coefficient = 0;
        out.u0.disc = 1;
    } else {
        Rat c;
        mpz_class d;
        surd_of(under, c, d);
        out.u0.coefficient = c / 2;
        out.u0.coefficient.canonicalize();
        out.u0.disc = d;
    }

    mpz_class g;
    mpz_gcd(g.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gamma.get_mpz_t());
    out.primitive = (g == 1);
    return out;
}

std::vector<DiophTriple> admissible_triples(int count, uint64_t seed) {
    if (count < 0) fail(errc::argument, "admissible_triples: count must be >= 0");
    static const std::pair<long, long> kExps[] = {
        {3, 2}, {3, 5}, {3, 7}, {5, 2}, {5, 3}, {5, 7}, {7, 2}, {7, 3}, {7, 5},
    };
    SplitMix64 rng = seeded_stream(seed, "admissible-triples");
    std::vector<DiophTriple> out;
    out.reserve(static_cast<size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        const auto& [q, P] = kExps[rng.below(sizeof(kExps) / sizeof(kExps[0]))];
        long x = 1 + static_cast<long>(rng.below(6));
        long y = 1 + static_cast<long>(rng.below(6));
        mpz_class s = pow_z(mpz_class(x), static_cast<unsigned long>(q)) +
                      pow_z(mpz_class(y), static_cast<unsigned long>(q));
        long e = 1;
        while ((q * e + 1) % P != 0) ++e;
        long f = (q * e + 1) / P;
        DiophTriple t;
        t.q = q;
        t.pexp = P;
        t.alpha = x * pow_z(s, static_cast<unsigned long>(e));
        t.beta = y * pow_z(s, static_cast<unsigned long>(e));
        t.gamma = pow_z(s, static_cast<unsigned long>(f));
        if (rng.below(4) == 0) {
            // Occasionally scale the whole solution to exercise imprimitive input:
            // (lambda^pexp a, lambda^pexp b, lambda^q c) solves the same equation.
            long lambda = 2 + static_cast<long>(rng.below(2));
            mpz_class lp = pow_z(mpz_class(lambda), static_cast<unsigned long>(P));
            t.alpha *= lp;
            t.beta *= lp;
            t.gamma *= pow_z(mpz_class(lambda), static_cast<unsigned long>(q));
        }
        out.push_back(std::move(t));
    }
    return out;
}

bool disc_is_square_mod_p(const mpz_class& d, long p) {
    if (p < 3 || !is_prime_long(p)) fail(errc::argument, "disc_is_square_mod_p: p must be an odd prime");
    mpz_class pz(p);
    return mpz_legendre(d.get_mpz_t(), pz.get_mpz_t()) >= 0;
}

}  // namespace hgm
