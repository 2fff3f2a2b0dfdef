#include "poly.hpp"

#include <algorithm>

#include "error.hpp"

namespace hgm {

QPoly QPoly::constant(const Rat& v) {
    QPoly p;
    if (v != 0) p.c = {v};
    return p;
}

QPoly QPoly::monomial(const Rat& v, int deg) {
    QPoly p;
    if (v != 0) {
        p.c.assign(deg + 1, Rat(0));
        p.c[deg] = v;
    }
    return p;
}

void QPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Rat& QPoly::lead() const {
    if (c.empty()) fail(errc::internal, "lead of zero polynomial");
    return c.back();
}

Rat QPoly::eval(const Rat& x) const {
    Rat v(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

long QPoly::eval_mod(const PrimeField& F, long x) const {
    long p = F.p;
    long xr = F.reduce(x);
    long v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        long den = static_cast<long>(mpz_fdiv_ui(it->get_den().get_mpz_t(), p));
        if (den == 0)
            fail(errc::skip_prime, "polynomial coefficient denominator divisible by " + std::to_string(p));
        long num = static_cast<long>(mpz_fdiv_ui(it->get_num().get_mpz_t(), p));
        long coeff = static_cast<long>(static_cast<__int128>(num) * F.inv(den) % p);
        v = static_cast<long>((static_cast<__int128>(v) * xr + coeff) % p);
    }
    return v;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

QPoly operator*(const QPoly& a, const Rat& s) {
    if (s == 0) return QPoly();
    QPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

QPoly poly_pow(const QPoly& a, int n) {
    if (n < 0) fail(errc::argument, "poly_pow: negative exponent");
    QPoly r = QPoly::constant(Rat(1));
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

std::pair<QPoly, QPoly> poly_divrem(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) fail(errc::argument, "polynomial division by zero");
    QPoly q, r = a;
    int db = b.degree();
    if (r.degree() >= db) q.c.assign(r.degree() - db + 1, Rat(0));
    while (r.degree() >= db) {
        int shift = r.degree() - db;
        Rat f = r.lead() / b.lead();
        q.c[shift] = f;
        for (int i = 0; i <= db; ++i) r.c[shift + i] -= f * b.c[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

QPoly poly_divexact(const QPoly& a, const QPoly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) fail(errc::internal, "inexact polynomial division");
    return q;
}

QPoly poly_derivative(const QPoly& a) {
    QPoly r;
    for (size_t i = 1; i < a.c.size(); ++i) r.c.push_back(a.c[i] * Rat(static_cast<long>(i)));
    r.normalize();
    return r;
}

QPoly poly_monic(const QPoly& a) {
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.lead());
}

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = poly_divrem(x, y).second;
        x = std::move(y);
        y = poly_monic(r);
    }
    return poly_monic(x);
}

QPoly poly_primitive(const QPoly& a) {
    if (a.is_zero()) return a;
    mpz_class den_lcm(1);
    for (const Rat& q : a.c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_class num_gcd(0);
    for (const Rat& q : a.c) {
        mpz_class n = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rat s(den_lcm, num_gcd);
    s.canonicalize();
    QPoly r = a * s;
    if (r.lead() < 0) r = r * Rat(-1);
    return r;
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& a) {
    std::vector<std::pair<QPoly, int>> out;
    if (a.degree() < 1) return out;
    QPoly f = poly_monic(a);
    QPoly fp = poly_derivative(f);
    QPoly g = poly_gcd(f, fp);
    QPoly b = poly_divexact(f, g);
    QPoly d = poly_divexact(fp, g) - poly_derivative(b);
    int i = 1;
    while (b.degree() > 0) {
        QPoly ai = poly_gcd(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = poly_divexact(b, ai);
        d = poly_divexact(d, ai) - poly_derivative(b);
        ++i;
    }
    return out;
}

namespace {

// Positive divisors of |n|, n != 0; refuses huge inputs instead of stalling.
std::vector<mpz_class> divisors_of(const mpz_class& n) {
    mpz_class a = abs(n);
    if (a > 1000000000000L) fail(errc::unsupported, "constant too large for divisor enumeration");
    std::vector<mpz_class> lo, hi;
    for (mpz_class d(1); d * d <= a; ++d) {
        if (a % d == 0) {
            lo.push_back(d);
            if (d * d != a) hi.push_back(a / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

// Rational roots of a squarefree polynomial with deg >= 1 (0 not a root).
std::vector<Rat> rational_roots(const QPoly& f) {
    QPoly g = poly_primitive(f);
    std::vector<Rat> roots;
    for (const mpz_class& num : divisors_of(g.c.front().get_num()))
        for (const mpz_class& den : divisors_of(g.lead().get_num()))
            for (int sgn : {1, -1}) {
                Rat r(sgn * num, den);
                r.canonicalize();
                if (g.eval(r) == 0) roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Kronecker search for a proper factor of a squarefree integer polynomial with
// no rational roots; returns the zero polynomial when f is irreducible.
QPoly kronecker_factor(const QPoly& f) {
    int n = f.degree();
    for (int m = 2; m <= n / 2; ++m) {
        std::vector<Rat> xs;
        for (long v = 0; static_cast<int>(xs.size()) < m + 1; ++v) {
            xs.push_back(Rat(v));
            if (v > 0 && static_cast<int>(xs.size()) < m + 1) xs.push_back(Rat(-v));
        }
        std::vector<std::vector<mpz_class>> cand(m + 1);
        double combos = 1;
        for (int j = 0; j <= m; ++j) {
            mpz_class vj = f.eval(xs[j]).get_num();
            for (const mpz_class& d : divisors_of(vj)) {
                cand[j].push_back(d);
                cand[j].push_back(-d);
            }
            combos *= static_cast<double>(cand[j].size());
        }
        if (combos > 200000) fail(errc::unsupported, "factor search space too large");
        std::vector<size_t> pick(m + 1, 0);
        for (;;) {
            // Lagrange interpolation through (xs[j], cand[j][pick[j]])
            QPoly h;
            for (int j = 0; j <= m; ++j) {
                QPoly basis = QPoly::constant(Rat(1));
                Rat denom(1);
                for (int k = 0; k <= m; ++k) {
                    if (k == j) continue;
                    basis = basis * QPoly(std::vector<Rat>{-xs[k], Rat(1)});
                    denom *= xs[j] - xs[k];
                }
                h = h + basis * (Rat(cand[j][pick[j]]) / denom);
            }
            if (h.degree() >= 1 && h.degree() <= m) {
                bool integral = true;
                for (const Rat& q : h.c)
                    if (q.get_den() != 1) { integral = false; break; }
                if (integral && poly_divrem(f, h).second.is_zero()) return poly_primitive(h);
            }
            int j = 0;
            while (j <= m && ++pick[j] == cand[j].size()) pick[j++] = 0;
            if (j > m) break;
        }
    }
    return QPoly();
}

// Factors a monic squarefree polynomial into monic irreducibles.
void factor_squarefree(const QPoly& f, std::vector<QPoly>& out) {
    QPoly g = f;
    if (g.degree() >= 1 && g.c.front() == 0) {
        out.push_back(QPoly(std::vector<Rat>{Rat(0), Rat(1)}));
        std::vector<Rat> shifted(g.c.begin() + 1, g.c.end());
        g = QPoly(std::move(shifted));
    }
    for (const Rat& r : rational_roots(g)) {
        out.push_back(QPoly(std::vector<Rat>{-r, Rat(1)}));
        g = poly_divexact(g, out.back());
    }
    if (g.degree() == 0) return;
    if (g.degree() <= 3) { // rootless cubics and quadratics are irreducible
        out.push_back(poly_monic(g));
        return;
    }
    if (g.degree() > 6) fail(errc::unsupported, "factorization implemented for degree <= 6 only");
    QPoly h = kronecker_factor(poly_primitive(g));
    if (h.is_zero()) {
        out.push_back(poly_monic(g));
        return;
    }
    factor_squarefree(poly_monic(h), out);
    factor_squarefree(poly_monic(poly_divexact(g, h)), out);
}

} // namespace

Factorization poly_factor(const QPoly& a) {
    if (a.is_zero()) fail(errc::argument, "cannot factor the zero polynomial");
    Factorization out;
    out.unit = a.degree() == 0 ? a.c[0] : a.lead();
    for (const auto& [g, mult] : squarefree_decomposition(a)) {
        std::vector<QPoly> irr;
        factor_squarefree(g, irr);
        for (const QPoly& h : irr) {
            QPoly prim = poly_primitive(h);
            Rat lambda = prim.lead() / h.lead();
            for (int i = 0; i < mult; ++i) out.unit /= lambda;
            out.factors.push_back(PolyFactor{prim, mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const PolyFactor& x, const PolyFactor& y) {
        if (x.poly.degree() != y.poly.degree()) return x.poly.degree() < y.poly.degree();
        return poly_str(x.poly) < poly_str(y.poly);
    });
    return out;
}

std::string poly_str(const QPoly& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (int i = a.degree(); i >= 0; --i) {
        Rat q = a.c[i];
        if (q == 0) continue;
        if (!s.empty()) s += q > 0 ? "+" : "-";
        else if (q < 0) s += "-";
        Rat aq = abs(q);
        if (i == 0) {
            s += rat_str(aq);
            continue;
        }
        if (aq != 1) s += rat_str(aq) + "*";
        s += i == 1 ? "z" : "z^" + std::to_string(i);
    }
    return s;
}

} // namespace hgm
