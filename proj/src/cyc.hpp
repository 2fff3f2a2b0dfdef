#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rat.hpp"

namespace hgm {

enum class Backend { floating = 0, exact = 1 };

Backend parse_backend(const std::string& s);
std::string backend_name(Backend b);

// Reduction data for Q(zeta_M): coefficients of Phi_M and the rows
// x^j mod Phi_M for j in [phi, max(2*phi-1, M-1)].
struct LevelTable {
    long M = 1;
    long phi = 1;
    std::vector<mpz_class> cyclo;                  // Phi_M, monic, degree phi
    std::vector<std::vector<mpz_class>> rows;      // rows[j-phi] = x^j mod Phi_M
    std::vector<std::complex<double>> basis;       // e^{2*pi*i*j/M}, j < phi
};

std::shared_ptr<const LevelTable> level_table(long M);

// Coefficients of the cyclotomic polynomial Phi_M (monic, over Z).
std::vector<mpz_class> cyclotomic_poly(long M);

// Exact representation: value = scale * sum_j coeffs[j] * zeta_level^j, deg < phi(level).
// Canonical form: zero has scale 0 and zero coeffs; otherwise content(coeffs) = 1 and the
// first nonzero coefficient is positive. `mono`, when set, certifies value = scale * zeta^mono.
struct ExactPart {
    long level = 1;
    Rat scale = 0;
    std::vector<mpz_class> coeffs;
    std::optional<long> mono;
};

class CycValue {
public:
    CycValue() : backend_(Backend::floating), approx_(0.0, 0.0) {}

    static CycValue zero(Backend b);
    static CycValue from_rat(Backend b, const Rat& r);
    static CycValue from_double(double re, double im = 0.0);
    // zeta_level^expnum (exponent taken mod level).
    static CycValue root(Backend b, long level, long expnum);
    // scale * sum_j raw[j] * zeta_level^j with arbitrary degree; reduced mod Phi_level.
    static CycValue exact_from_raw(long level, std::vector<mpz_class> raw, const Rat& scale);

    Backend backend() const { return backend_; }
    std::complex<double> approx() const { return approx_; }
    bool is_zero() const;
    const ExactPart* exact() const { return ex_.get(); }

    CycValue operator+(const CycValue& o) const;
    CycValue operator-(const CycValue& o) const;
    CycValue operator*(const CycValue& o) const;
    CycValue operator-() const;
    CycValue mul_rat(const Rat& r) const;
    // Inverse is only available for rationals and roots of unity (monomials);
    // anything else throws errc::unsupported. The Gauss-sum inversion identity
    // supplies every other inverse the callers need.
    CycValue inverse() const;

    std::string str() const;

private:
    Backend backend_;
    std::complex<double> approx_;
    std::shared_ptr<const ExactPart> ex_;  // null for the float backend

    static CycValue make_exact(ExactPart p);
    friend bool cyc_equal(const CycValue&, const CycValue&, double tol);
    friend CycValue coerce_level(const CycValue&, long);
};

// exponent: rational e taken mod 1; value e^{2*pi*i*e}. Exact level = den(e).
CycValue cyc_root_of_unity(const Rat& exponent, Backend b);

// Exact values: equality of canonical coefficient vectors at the lcm level.
// Float (or mixed) values: |x-y| <= tol * max(1, |x|, |y|).
bool cyc_equal(const CycValue& x, const CycValue& y, double tol = 0.0);

std::string double_str(double x);
std::string complex_str(std::complex<double> z);

} // namespace hgm
