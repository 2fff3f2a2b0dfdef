#include "series.hpp"

#include <cctype>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "error.hpp"
#include "report.hpp"

namespace hgm {

namespace {

constexpr long kTermCap = 10000;
constexpr double kPi = 3.14159265358979323846;

bool is_nonpos_integer(const Rat& x) { return is_integer(x) && x <= 0; }

double stod_all(const std::string& s, const std::string& orig) {
    if (s.empty()) fail(errc::argument, "cannot parse complex number '" + orig + "'");
    size_t used = 0;
    double v;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        fail(errc::argument, "cannot parse complex number '" + orig + "'");
    }
    if (used != s.size()) fail(errc::argument, "cannot parse complex number '" + orig + "'");
    return v;
}

}  // namespace

Cplx parse_complex(const std::string& input) {
    std::string s;
    for (char ch : input)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) fail(errc::argument, "cannot parse complex number '" + input + "'");
    if (s.back() != 'i' && s.back() != 'I') return Cplx(stod_all(s, input), 0.0);
    std::string body = s.substr(0, s.size() - 1);
    // Split before the sign of the imaginary part: the last +/- that is not
    // leading and not part of an exponent.
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        // Pure imaginary: "0.2i", "i", "-i".
        if (body.empty() || body == "+") return Cplx(0.0, 1.0);
        if (body == "-") return Cplx(0.0, -1.0);
        return Cplx(0.0, stod_all(body, input));
    }
    std::string re = body.substr(0, split), im = body.substr(split);
    if (im == "+") return Cplx(stod_all(re, input), 1.0);
    if (im == "-") return Cplx(stod_all(re, input), -1.0);
    return Cplx(stod_all(re, input), stod_all(im, input));
}

std::string cplx_str(Cplx z) {
    std::string s = float_str(z.real());
    s += (z.imag() < 0 ? "-" : "+");
    s += float_str(std::abs(z.imag()));
    s += "i";
    return s;
}

Rat pochhammer(const Rat& a, long n) {
    if (n < 0) fail(errc::argument, "pochhammer: n must be >= 0");
    Rat out = 1;
    for (long k = 0; k < n; ++k) out *= a + k;
    return out;
}

double gamma_real(double x) {
    if (x <= 0.0 && x == std::floor(x))
        fail(errc::argument, "gamma_real: pole at non-positive integer " + float_str(x));
    return std::tgamma(x);
}

SeriesSum f21(const Rat& a, const Rat& b, const Rat& c, Cplx z, long terms,
              double target_tail) {
    if (is_nonpos_integer(c)) fail(errc::argument, "f21: c must not be a non-positive integer");
    double az = std::abs(z);
    if (!(az < 1.0)) fail(errc::argument, "f21: |z| must be < 1 for convergence");
    if (terms < 0) fail(errc::argument, "f21: terms must be >= 0");
    bool adaptive = (terms == 0);
    if (adaptive && !(target_tail > 0.0))
        fail(errc::argument, "f21: adaptive truncation needs a positive target_tail");
    long cap = adaptive ? kTermCap : terms;

    double ad = a.get_d(), bd = b.get_d(), cd = c.get_d();
    double aa = std::abs(ad), ba = std::abs(bd), ca = std::abs(cd);
    Cplx sum = 0.0, t = 1.0;
    double abs_sum = 0.0;
    SeriesSum out;
    long n = 0;
    for (;;) {
        sum += t;
        abs_sum += std::abs(t);
        ++n;  // indices 0 .. n-1 summed
        Cplx fac(((ad + (n - 1)) * (bd + (n - 1))) / ((cd + (n - 1)) * n));
        t *= fac * z;
        if (t == 0.0) {
            out.tail_bound = 0.0;  // terminating (polynomial) series
            break;
        }
        // Geometric majorant for the dropped tail sum_{m>=n} |t_m|: for m >= n
        // the term ratio is at most q below, which decreases in the index.
        double bound = std::numeric_limits<double>::infinity();
        double M = static_cast<double>(n);
        if (M > ca) {
            double q = az * (M + aa) * (M + ba) / ((M - ca) * (M + 1));
            if (q < 1.0) bound = std::abs(t) / (1.0 - q);
        }
        if (adaptive && bound <= target_tail) {
            out.tail_bound = bound;
            break;
        }
        if (n >= cap) {
            out.tail_bound = bound;
            out.capped = adaptive;
            break;
        }
    }
    out.value = sum;
    out.terms_used = n;
    out.round_off = 4.0 * DBL_EPSILON * static_cast<double>(n) * abs_sum;
    return out;
}

SeriesWhich parse_series_which(const std::string& s) {
    if (s == "eq1") return SeriesWhich::eq1;
    if (s == "eq67") return SeriesWhich::eq67;
    fail(errc::argument, "unknown series identity '" + s + "' (expected eq1 or eq67)");
}

namespace {

std::string eq67_violation(const Rat& a, const Rat& b, Cplx z) {
    if (!(std::abs(z) < 1.0)) return "eq67: |z| must be < 1";
    if (!(std::abs(1.0 - z) < 1.0)) return "eq67: |1-z| must be < 1";
    Rat s = a + b;
    if (is_integer(s) && rat_num(s) % 2 != 0)
        return "eq67: a+b must not be an odd integer (cosine and Gamma poles)";
    if (is_nonpos_integer(a)) return "eq67: a must not be a non-positive integer";
    if (is_nonpos_integer(b)) return "eq67: b must not be a non-positive integer";
    return "";
}

}  // namespace

bool eq67_admissible(const Rat& a, const Rat& b, Cplx z) {
    return eq67_violation(a, b, z).empty();
}

SeriesCheck verify_series_identity(SeriesWhich which, const Rat& a, const Rat& b,
                                   Cplx z, long terms, double target_tol) {
    double target = target_tol > 0.0 ? target_tol : (which == SeriesWhich::eq1 ? 1e-10 : 1e-8);
    Rat c = (a + b + 1) / 2;
    c.canonicalize();

    struct Side {
        Rat a, b, c;
        Cplx z;
        double coef_abs;  // weight of this series in the identity
    };
    std::vector<Side> sides;
    Cplx lhs, rhs;
    SeriesCheck out;

    auto run = [&](const Side& s) {
        double per_target = target / (4.0 * sides.size() * std::max(1.0, s.coef_abs));
        SeriesSum r = f21(s.a, s.b, s.c, s.z, terms, terms > 0 ? 0.0 : per_target);
        out.terms_used = std::max(out.terms_used, r.terms_used);
        if (r.capped) out.precision_warning = true;
        return r;
    };

    if (which == SeriesWhich::eq1) {
        if (is_nonpos_integer(c))
            fail(errc::argument, "eq1: c = (a+b+1)/2 must not be a non-positive integer");
        if (!(std::abs(z) < 1.0)) fail(errc::argument, "eq1: |z| must be < 1");
        Cplx w = 4.0 * z * (1.0 - z);
        if (!(std::abs(w) < 1.0)) fail(errc::argument, "eq1: |4z(1-z)| must be < 1");
        sides = {{a, b, c, z, 1.0}, {a / 2, b / 2, c, w, 1.0}};
        SeriesSum l = run(sides[0]), r = run(sides[1]);
        lhs = l.value;
        rhs = r.value;
        out.tol = l.tail_bound + r.tail_bound + l.round_off + r.round_off;
    } else {
        std::string bad = eq67_violation(a, b, z);
        if (!bad.empty()) fail(errc::argument, bad);
        double ad = a.get_d(), bd = b.get_d();
        double cos_ratio = std::cos((ad - bd) * kPi / 2) / std::cos((ad + bd) * kPi / 2);
        double gpref = gamma_real((ad + bd + 1) / 2) * gamma_real((ad + bd - 1) / 2) /
                       (gamma_real(ad) * gamma_real(bd));
        Cplx power = std::pow(1.0 - z, Cplx((1.0 - ad - bd) / 2, 0.0));
        Cplx w = 1.0 - z;
        sides = {{a, b, c, z, 1.0},
                 {a, b, c, w, std::abs(cos_ratio)},
                 {(a - b + 1) / 2, (b - a + 1) / 2, (3 - a - b) / 2, w,
                  std::abs(gpref * power)}};
        for (auto& s : sides) {
            s.a.canonicalize();
            s.b.canonicalize();
            s.c.canonicalize();
        }
        SeriesSum l = run(sides[0]), r1 = run(sides[1]), r2 = run(sides[2]);
        lhs = l.value;
        rhs = cos_ratio * r1.value + gpref * power * r2.value;
        out.tol = l.tail_bound + l.round_off +
                  sides[1].coef_abs * (r1.tail_bound + r1.round_off) +
                  sides[2].coef_abs * (r2.tail_bound + r2.round_off);
    }

    out.lhs = lhs;
    out.rhs = rhs;
    out.abs_err = std::abs(lhs - rhs);
    if (out.tol <= target) {
        out.tol = target;
    } else {
        out.precision_warning = true;
    }
    out.pass = out.abs_err <= out.tol;

    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", out.abs_err);
    out.detail = std::string(which == SeriesWhich::eq1 ? "eq1" : "eq67") + "(a=" + rat_str(a) +
                 ",b=" + rat_str(b) + ",z=" + cplx_str(z) + "): |lhs-rhs|=" + buf;
    std::snprintf(buf, sizeof buf, "%.3e", out.tol);
    out.detail += std::string(" tol=") + buf + " terms=" + std::to_string(out.terms_used) +
                  (out.precision_warning ? " [precision warning]" : "") +
                  (out.pass ? " pass" : " FAIL");
    return out;
}

}  // namespace hgm
