#include "cyc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <list>
#include <map>
#include <mutex>
#include <numeric>

namespace hgm {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr long kMaxLevel = 200000;
constexpr size_t kTableCache = 6;

long euler_phi(long n) {
    long r = n;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            r -= r / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

// quotient of exact polynomial division (num / den), both over Z, den monic-leading.
std::vector<mpz_class> poly_exact_div(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    size_t dn = den.size() - 1;
    if (num.size() < den.size()) fail(errc::internal, "cyclotomic division underflow");
    std::vector<mpz_class> q(num.size() - den.size() + 1);
    for (size_t i = num.size(); i-- > den.size() - 1;) {
        size_t qi = i - dn;
        if (qi >= q.size()) continue;
        mpz_class c = num[i] / den[dn];
        q[qi] = c;
        if (c != 0)
            for (size_t j = 0; j <= dn; ++j) num[qi + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) fail(errc::internal, "cyclotomic division not exact");
    return q;
}

std::map<long, std::vector<mpz_class>> g_cyclo_memo;
std::mutex g_cyclo_mutex;

std::vector<mpz_class> cyclotomic_poly_locked(long M) {
    auto it = g_cyclo_memo.find(M);
    if (it != g_cyclo_memo.end()) return it->second;
    std::vector<mpz_class> result;
    if (M == 1) {
        result = {mpz_class(-1), mpz_class(1)};  // x - 1
    } else {
        // (x^M - 1) / prod_{d | M, d < M} Phi_d
        std::vector<mpz_class> num(M + 1);
        num[0] = -1;
        num[M] = 1;
        std::vector<mpz_class> den = {mpz_class(1)};
        for (long d = 1; d < M; ++d) {
            if (M % d != 0) continue;
            const auto& phd = cyclotomic_poly_locked(d);
            std::vector<mpz_class> nd(den.size() + phd.size() - 1);
            for (size_t i = 0; i < den.size(); ++i) {
                if (den[i] == 0) continue;
                for (size_t j = 0; j < phd.size(); ++j)
                    nd[i + j] += den[i] * phd[j];
            }
            den = std::move(nd);
        }
        result = poly_exact_div(std::move(num), den);
    }
    g_cyclo_memo[M] = result;
    return result;
}

struct TableCache {
    std::mutex mutex;
    std::list<std::pair<long, std::shared_ptr<const LevelTable>>> lru;
};
TableCache g_tables;

std::shared_ptr<const LevelTable> build_table(long M) {
    auto t = std::make_shared<LevelTable>();
    t->M = M;
    t->cyclo = cyclotomic_poly(M);
    t->phi = static_cast<long>(t->cyclo.size()) - 1;
    long phi = t->phi;
    long top = std::max(2 * phi - 1, M - 1);
    long nrows = top - phi + 1;
    t->rows.resize(nrows);
    // x^phi = -(c_{phi-1} x^{phi-1} + ... + c_0)
    std::vector<mpz_class> cur(phi);
    for (long j = 0; j < phi; ++j) cur[j] = -t->cyclo[j];
    t->rows[0] = cur;
    for (long r = 1; r < nrows; ++r) {
        std::vector<mpz_class> nxt(phi);
        const mpz_class spill = cur[phi - 1];
        for (long j = phi - 1; j > 0; --j) nxt[j] = cur[j - 1];
        if (spill != 0)
            for (long j = 0; j < phi; ++j)
                if (t->rows[0][j] != 0) nxt[j] += spill * t->rows[0][j];
        t->rows[r] = std::move(nxt);
        cur = t->rows[r];
    }
    t->basis.resize(phi);
    for (long j = 0; j < phi; ++j)
        t->basis[j] = std::polar(1.0, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(M));
    return t;
}

// Reduce a raw coefficient vector (any degree) mod Phi_M into degree < phi, in place.
void reduce_vec(std::vector<mpz_class>& v, const LevelTable& t) {
    long phi = t.phi;
    for (size_t i = v.size(); i-- > static_cast<size_t>(phi);) {
        if (v[i] == 0) continue;
        mpz_class c = std::move(v[i]);
        v[i] = 0;
        const auto& row = t.rows[i - phi];
        for (long j = 0; j < phi; ++j)
            if (row[j] != 0) mpz_addmul(v[j].get_mpz_t(), c.get_mpz_t(), row[j].get_mpz_t());
    }
    v.resize(phi);
}

} // namespace

std::vector<mpz_class> cyclotomic_poly(long M) {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_poly_locked(M);
}

std::shared_ptr<const LevelTable> level_table(long M) {
    if (M < 1 || M > kMaxLevel) fail(errc::unsupported, "cyclotomic level out of range: " + std::to_string(M));
    std::lock_guard<std::mutex> lock(g_tables.mutex);
    for (auto it = g_tables.lru.begin(); it != g_tables.lru.end(); ++it) {
        if (it->first == M) {
            auto entry = *it;
            g_tables.lru.erase(it);
            g_tables.lru.push_front(entry);
            return entry.second;
        }
    }
    auto t = build_table(M);
    g_tables.lru.emplace_front(M, t);
    while (g_tables.lru.size() > kTableCache) g_tables.lru.pop_back();
    return t;
}

Backend parse_backend(const std::string& s) {
    if (s == "float" || s == "floating") return Backend::floating;
    if (s == "exact") return Backend::exact;
    fail(errc::argument, "unknown backend '" + s + "' (expected float or exact)");
}

std::string backend_name(Backend b) { return b == Backend::exact ? "exact" : "float"; }

namespace {

void canonicalize(ExactPart& p, const LevelTable& t) {
    bool all_zero = true;
    for (const auto& c : p.coeffs)
        if (c != 0) {
            all_zero = false;
            break;
        }
    if (all_zero || p.scale == 0) {
        p.scale = 0;
        p.coeffs.assign(t.phi, 0);
        p.mono.reset();
        return;
    }
    mpz_class g = 0;
    for (const auto& c : p.coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    int sign = 0;
    for (const auto& c : p.coeffs)
        if (c != 0) {
            sign = sgn(c);
            break;
        }
    if (sign < 0) g = -g;
    if (g != 1) {
        for (auto& c : p.coeffs) c /= g;
        p.scale *= Rat(g);
    }
    // detect basis monomial for the fast path
    long idx = -1;
    bool is_mono = true;
    for (long j = 0; j < static_cast<long>(p.coeffs.size()); ++j) {
        if (p.coeffs[j] == 0) continue;
        if (idx >= 0 || p.coeffs[j] != 1) {
            is_mono = false;
            break;
        }
        idx = j;
    }
    if (is_mono && idx >= 0)
        p.mono = idx;
    else
        p.mono.reset();
}

std::complex<double> approx_of(const ExactPart& p, const LevelTable& t) {
    std::complex<double> s(0.0, 0.0);
    for (long j = 0; j < t.phi; ++j)
        if (p.coeffs[j] != 0) s += p.coeffs[j].get_d() * t.basis[j];
    return s * p.scale.get_d();
}

} // namespace

CycValue CycValue::make_exact(ExactPart p) {
    auto t = level_table(p.level);
    canonicalize(p, *t);
    CycValue v;
    v.backend_ = Backend::exact;
    v.approx_ = approx_of(p, *t);
    v.ex_ = std::make_shared<const ExactPart>(std::move(p));
    return v;
}

CycValue CycValue::zero(Backend b) {
    if (b == Backend::floating) return CycValue();
    ExactPart p;
    p.level = 1;
    p.scale = 0;
    p.coeffs = {mpz_class(0)};
    return make_exact(std::move(p));
}

CycValue CycValue::from_rat(Backend b, const Rat& r) {
    Rat rc = r;
    rc.canonicalize(); // callers may hand over a raw num/den pair
    if (b == Backend::floating) return from_double(rc.get_d());
    ExactPart p;
    p.level = 1;
    p.scale = rc;
    p.coeffs = {mpz_class(1)};
    return make_exact(std::move(p));
}

CycValue CycValue::from_double(double re, double im) {
    CycValue v;
    v.backend_ = Backend::floating;
    v.approx_ = {re, im};
    return v;
}

CycValue CycValue::root(Backend b, long level, long expnum) {
    if (level < 1) fail(errc::argument, "root of unity: level must be positive");
    long e = ((expnum % level) + level) % level;
    if (b == Backend::floating)
        return from_double(std::cos(2.0 * kPi * e / level), std::sin(2.0 * kPi * e / level));
    auto t = level_table(level);
    ExactPart p;
    p.level = level;
    p.scale = 1;
    std::vector<mpz_class> raw(std::max<long>(e + 1, t->phi));
    raw[e] = 1;
    reduce_vec(raw, *t);
    p.coeffs = std::move(raw);
    CycValue v = make_exact(std::move(p));
    // Tag the exponent for the monomial fast path, keeping value == scale * zeta^mono.
    // Canonicalization may have folded a sign into the scale; absorb it via zeta^{M/2}.
    long m = -1;
    if (v.ex_->scale == 1)
        m = e;
    else if (v.ex_->scale == -1 && level % 2 == 0)
        m = (e + level / 2) % level;
    if (m >= 0 && !(v.ex_->mono && *v.ex_->mono == m)) {
        auto ex = std::make_shared<ExactPart>(*v.ex_);
        ex->mono = m;
        v.ex_ = ex;
    } else if (m < 0 && v.ex_->mono) {
        auto ex = std::make_shared<ExactPart>(*v.ex_);
        ex->mono.reset();
        v.ex_ = ex;
    }
    return v;
}

CycValue CycValue::exact_from_raw(long level, std::vector<mpz_class> raw, const Rat& scale) {
    auto t = level_table(level);
    if (raw.size() < static_cast<size_t>(t->phi)) raw.resize(t->phi);
    reduce_vec(raw, *t);
    ExactPart p;
    p.level = level;
    p.scale = scale;
    p.coeffs = std::move(raw);
    return make_exact(std::move(p));
}

CycValue cyc_root_of_unity(const Rat& exponent, Backend b) {
    Rat e = ratmod1(exponent);
    long level = checked_long(e.get_den(), "root-of-unity level");
    long num = checked_long(e.get_num(), "root-of-unity exponent");
    return CycValue::root(b, level, num);
}

bool CycValue::is_zero() const {
    if (backend_ == Backend::exact) return ex_->scale == 0;
    return approx_ == std::complex<double>(0.0, 0.0);
}

CycValue coerce_level(const CycValue& x, long level) {
    const ExactPart& p = *x.ex_;
    if (p.level == level) return x;
    if (level % p.level != 0) fail(errc::internal, "coercion to non-multiple level");
    long k = level / p.level;
    if (p.scale == 0) {
        ExactPart np;
        np.level = level;
        np.scale = 0;
        np.coeffs.assign(level_table(level)->phi, 0);
        return CycValue::make_exact(std::move(np));
    }
    if (p.mono) {
        long e = (*p.mono % p.level) * k % level;
        return CycValue::root(Backend::exact, level, e).mul_rat(p.scale);
    }
    auto t = level_table(level);
    std::vector<mpz_class> raw(static_cast<size_t>(p.coeffs.size() - 1) * k + 1);
    if (raw.size() < static_cast<size_t>(t->phi)) raw.resize(t->phi);
    for (size_t j = 0; j < p.coeffs.size(); ++j)
        if (p.coeffs[j] != 0) raw[j * k] = p.coeffs[j];
    reduce_vec(raw, *t);
    ExactPart np;
    np.level = level;
    np.scale = p.scale;
    np.coeffs = std::move(raw);
    return CycValue::make_exact(std::move(np));
}

namespace {

long lcm_level(long a, long b) {
    long g = std::gcd(a, b);
    long l = a / g * b;
    return l;
}

} // namespace

CycValue CycValue::operator+(const CycValue& o) const {
    if (backend_ == Backend::floating || o.backend_ == Backend::floating) {
        if (backend_ != o.backend_) fail(errc::internal, "mixed-backend arithmetic");
        return from_double((approx_ + o.approx_).real(), (approx_ + o.approx_).imag());
    }
    long L = lcm_level(ex_->level, o.ex_->level);
    CycValue a = coerce_level(*this, L), b = coerce_level(o, L);
    const ExactPart& pa = *a.ex_;
    const ExactPart& pb = *b.ex_;
    if (pa.scale == 0) return b;
    if (pb.scale == 0) return a;
    mpz_class da = pa.scale.get_den(), db = pb.scale.get_den(), d;
    mpz_lcm(d.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    mpz_class ma = pa.scale.get_num() * (d / da);
    mpz_class mb = pb.scale.get_num() * (d / db);
    ExactPart np;
    np.level = L;
    np.scale = Rat(1, d);
    np.coeffs.resize(pa.coeffs.size());
    for (size_t j = 0; j < np.coeffs.size(); ++j) {
        if (pa.coeffs[j] != 0) mpz_addmul(np.coeffs[j].get_mpz_t(), ma.get_mpz_t(), pa.coeffs[j].get_mpz_t());
        if (pb.coeffs[j] != 0) mpz_addmul(np.coeffs[j].get_mpz_t(), mb.get_mpz_t(), pb.coeffs[j].get_mpz_t());
    }
    return make_exact(std::move(np));
}

CycValue CycValue::operator-() const {
    if (backend_ == Backend::floating) return from_double(-approx_.real(), -approx_.imag());
    ExactPart np = *ex_;
    np.scale = -np.scale;
    return make_exact(std::move(np));
}

CycValue CycValue::operator-(const CycValue& o) const { return *this + (-o); }

CycValue CycValue::operator*(const CycValue& o) const {
    if (backend_ == Backend::floating || o.backend_ == Backend::floating) {
        if (backend_ != o.backend_) fail(errc::internal, "mixed-backend arithmetic");
        auto r = approx_ * o.approx_;
        return from_double(r.real(), r.imag());
    }
    long L = lcm_level(ex_->level, o.ex_->level);
    CycValue a = coerce_level(*this, L), b = coerce_level(o, L);
    const ExactPart& pa = *a.ex_;
    const ExactPart& pb = *b.ex_;
    if (pa.scale == 0 || pb.scale == 0) return zero(Backend::exact);
    auto t = level_table(L);
    // monomial fast path: exponent addition
    if (pa.mono && pb.mono) {
        long e = (*pa.mono + *pb.mono) % L;
        return root(Backend::exact, L, e).mul_rat(pa.scale * pb.scale);
    }
    ExactPart np;
    np.level = L;
    np.scale = pa.scale * pb.scale;
    std::vector<mpz_class> raw(pa.coeffs.size() + pb.coeffs.size() - 1);
    for (size_t i = 0; i < pa.coeffs.size(); ++i) {
        if (pa.coeffs[i] == 0) continue;
        for (size_t j = 0; j < pb.coeffs.size(); ++j)
            if (pb.coeffs[j] != 0)
                mpz_addmul(raw[i + j].get_mpz_t(), pa.coeffs[i].get_mpz_t(), pb.coeffs[j].get_mpz_t());
    }
    reduce_vec(raw, *t);
    np.coeffs = std::move(raw);
    return make_exact(std::move(np));
}

CycValue CycValue::mul_rat(const Rat& r) const {
    Rat rc = r;
    rc.canonicalize(); // callers may hand over a raw num/den pair
    if (backend_ == Backend::floating) {
        auto v = approx_ * rc.get_d();
        return from_double(v.real(), v.imag());
    }
    ExactPart np = *ex_;
    np.scale *= rc;
    auto mono = np.mono;
    CycValue v = make_exact(std::move(np));
    if (mono && v.ex_ && v.ex_->scale != 0) {
        auto ex = std::make_shared<ExactPart>(*v.ex_);
        ex->mono = mono;
        v.ex_ = ex;
    }
    return v;
}

CycValue CycValue::inverse() const {
    if (backend_ == Backend::floating) {
        if (approx_ == std::complex<double>(0.0, 0.0)) fail(errc::argument, "inverse of zero");
        auto v = 1.0 / approx_;
        return from_double(v.real(), v.imag());
    }
    const ExactPart& p = *ex_;
    if (p.scale == 0) fail(errc::argument, "inverse of zero");
    if (!p.mono) fail(errc::unsupported, "exact inverse only implemented for roots of unity and rationals");
    long e = (p.level - *p.mono % p.level) % p.level;
    return root(Backend::exact, p.level, e).mul_rat(Rat(1) / p.scale);
}

bool cyc_equal(const CycValue& x, const CycValue& y, double tol) {
    if (x.backend_ == Backend::exact && y.backend_ == Backend::exact) {
        long L = lcm_level(x.ex_->level, y.ex_->level);
        CycValue a = coerce_level(x, L), b = coerce_level(y, L);
        return a.ex_->scale == b.ex_->scale && a.ex_->coeffs == b.ex_->coeffs;
    }
    double m = std::max({1.0, std::abs(x.approx_), std::abs(y.approx_)});
    return std::abs(x.approx_ - y.approx_) <= tol * m;
}

std::string double_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string complex_str(std::complex<double> z) {
    return "(" + double_str(z.real()) + ", " + double_str(z.imag()) + ")";
}

std::string CycValue::str() const {
    if (backend_ == Backend::floating) return complex_str(approx_);
    const ExactPart& p = *ex_;
    std::string s = "[";
    for (size_t j = 0; j < p.coeffs.size(); ++j) {
        if (j) s += ", ";
        Rat c = p.scale * Rat(p.coeffs[j]);
        s += rat_str(c);
    }
    s += "] @ level " + std::to_string(p.level);
    return s;
}

} // namespace hgm
