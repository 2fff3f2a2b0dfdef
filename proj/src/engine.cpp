#include "engine.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "catalog.hpp"
#include "dioph.hpp"
#include "error.hpp"
#include "mono.hpp"
#include "ratmap.hpp"
#include "rng.hpp"
#include "series.hpp"
#include "verify.hpp"

namespace hgm {

namespace {

using Block = std::pair<std::vector<Report>, std::string>;

Backend to_backend(const std::string& s) {
    if (s == "exact") return Backend::exact;
    if (s == "float" || s == "floating") return Backend::floating;
    fail(errc::argument, "unknown backend '" + s + "' (expected exact or float)");
}

VerifyOptions vopts(const EngineOptions& o) {
    VerifyOptions v;
    v.prime_lo = o.prime_lo;
    v.prime_hi = o.prime_hi;
    v.samples = o.samples;
    v.seed = o.seed;
    v.backend = to_backend(o.backend);
    v.tol = o.tol;
    v.threads = o.threads;
    return v;
}

void compare_values(ReportRow& row, const CycValue& lhs, const CycValue& rhs, Backend b,
                    double tol) {
    row.lhs = value_str(lhs);
    row.rhs = value_str(rhs);
    auto dl = lhs.approx(), dr = rhs.approx();
    row.abs_err = std::abs(dl - dr);
    row.rel_err = row.abs_err / std::max({std::abs(dl), std::abs(dr), 1.0});
    bool pass = b == Backend::exact ? cyc_equal(lhs, rhs) : row.rel_err <= tol;
    row.status = pass ? "pass" : "fail";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::argument, "cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) fail(errc::argument, "write to '" + path + "' failed");
}

int report_failures(const Report& r) {
    int f = static_cast<int>(r.failures);
    if (!r.ok() && f == 0) f = 1;  // hard monodromy failure produces no rows
    return f;
}

std::string report_line(const Report& r) {
    std::ostringstream os;
    os << r.identity << ": " << (r.ok() ? "PASS" : "FAIL") << " primes=" << r.primes_used
       << " samples=" << r.samples_total << " failures=" << r.failures
       << " max_rel_err=" << float_str(r.max_rel_err);
    if (!r.monodromy.empty()) os << " monodromy=" << (r.monodromy == "ok" ? "ok" : "MISMATCH");
    os << " calibration=" << r.calibration;
    return os.str();
}

std::string report_block(const Report& r) {
    std::ostringstream os;
    os << report_line(r) << "\n";
    if (!r.monodromy.empty() && r.monodromy != "ok") os << "  monodromy: " << r.monodromy << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    for (const auto& row : r.rows)
        if (row.status == "fail")
            os << "  fail p=" << row.prime << " s=" << row.sample << " z=" << row.z_sample
               << (row.note.empty() ? "" : ": " + row.note) << "\n";
    return os.str();
}

EngineResult pack(const std::vector<Report>& rs, std::string text, const EngineOptions& o,
                  bool force_aggregate = false) {
    EngineResult res;
    for (const auto& r : rs) res.failures += report_failures(r);
    if (rs.size() == 1 && !force_aggregate) {
        res.json = report_str(rs[0]);
    } else {
        nlohmann::json doc;
        doc["schema"] = "1";
        auto arr = nlohmann::json::array();
        for (const auto& r : rs) arr.push_back(nlohmann::json::parse(report_str(r)));
        doc["reports"] = std::move(arr);
        doc["summary"]["reports"] = std::to_string(rs.size());
        doc["summary"]["failures"] = std::to_string(res.failures);
        res.json = doc.dump();
    }
    res.text = std::move(text);
    if (!o.json_path.empty()) write_text_file(o.json_path, res.json + "\n");
    return res;
}

std::string block_text(const std::vector<Report>& rs) {
    std::string t;
    for (const auto& r : rs) t += report_block(r);
    return t;
}

Syms parse_abc(const std::string& abc) {
    auto lists = parse_rat_lists(abc);
    if (lists.size() != 1 || lists[0].size() != 3)
        fail(errc::argument, "expected three comma-separated rationals, got '" + abc + "'");
    return {{"a", lists[0][0]}, {"b", lists[0][1]}, {"c", lists[0][2]}};
}

Syms parse_assigns(const std::string& s) {
    Syms out;
    if (s.empty()) return out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            fail(errc::argument, "expected name=value in '" + item + "'");
        out[item.substr(0, eq)] = parse_rat(item.substr(eq + 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

mpz_class parse_mpz(const std::string& s) {
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        fail(errc::argument, "not an integer: '" + s + "'");
    }
}

// ---- hsum ----

Block hsum_impl(const std::string& params_str, const std::string& z_str, const EngineOptions& o) {
    HGMParams P = parse_params(params_str);
    Rat z = parse_rat(z_str);
    Backend bk = to_backend(o.backend);
    long level = params_level(P);
    Report rep;
    rep.identity = "hsum(" + P.str() + ",z=" + rat_str(z) + ")";
    const mpz_class num = rat_num(z), den = rat_den(z), diff = num - den;
    bool use_switch = (P.c != 0 && P.d != 0);
    for (long p : primes_in_range(std::max<long>(5, o.prime_lo), o.prime_hi)) {
        if ((p - 1) % level != 0) continue;
        if (bk == Backend::exact && p > 43) {
            rep.notes.push_back("p=" + std::to_string(p) + ": skipped (exact backend cap)");
            continue;
        }
        if (p >= 100000) {
            rep.notes.push_back("p=" + std::to_string(p) + ": skipped (field cap)");
            continue;
        }
        ReportRow row;
        row.prime = p;
        unsigned long up = static_cast<unsigned long>(p);
        bool deg = mpz_fdiv_ui(num.get_mpz_t(), up) == 0 || mpz_fdiv_ui(den.get_mpz_t(), up) == 0 ||
                   mpz_fdiv_ui(diff.get_mpz_t(), up) == 0;
        if (deg) {
            row.status = "skipped";
            row.note = "z degenerate mod p (p divides num, den or num-den)";
            rep.rows.push_back(row);
            continue;
        }
        auto F = make_field(p);
        GaussTable T(F, bk);
        long zn = static_cast<long>(mpz_fdiv_ui(num.get_mpz_t(), up));
        long zd = static_cast<long>(mpz_fdiv_ui(den.get_mpz_t(), up));
        long zmod = static_cast<long>((static_cast<unsigned long>(zn) * F->inv(zd)) % up);
        row.z_sample = zmod;
        CycValue H = hyp_sum(T, P, zmod);
        if (!use_switch) {
            Rat lower = (P.d == 0 ? P.c : P.d);  // the possibly-nonzero lower parameter
            CycValue lhs = factor_prefactor(T, P.a, lower - P.a) * H;
            CycValue rhs = point_count_H(T, P.a, lower - P.a, P.b, zmod);
            row.note = "oracle: point-count; H=" + value_str(H);
            compare_values(row, lhs, rhs, bk, o.tol);
        } else {
            HGMParams Q = make_params(-P.c, -P.d, -P.a, -P.b);
            CycValue rhs = hyp_sum(T, Q, F->inv(zmod));
            row.note = "oracle: switch identity";
            compare_values(row, H, rhs, bk, o.tol);
        }
        rep.rows.push_back(row);
    }
    if (rep.rows.empty() && rep.notes.empty()) rep.notes.push_back("no qualified primes in range");
    rep.finish();
    return {{rep}, block_text({rep})};
}

// ---- verify-kummer / verify-cover ----

Block kummer_impl(const std::string& index, const std::string& abc, const EngineOptions& o) {
    Catalog cat = load_catalog(data_file("kummer24.cat"));
    Syms syms = parse_abc(abc);
    VerifyOptions v = vopts(o);
    std::vector<Report> reps;
    if (index == "all") {
        for (int i = 1; i <= 24; ++i) reps.push_back(verify_kummer(cat, i, syms, v));
    } else {
        int i = 0;
        try {
            size_t used = 0;
            i = std::stoi(index, &used);
            if (used != index.size()) throw std::invalid_argument(index);
        } catch (const std::exception&) {
            fail(errc::argument, "index must be 1..24 or 'all', got '" + index + "'");
        }
        reps.push_back(verify_kummer(cat, i, syms, v));
    }
    return {reps, block_text(reps)};
}

Block cover_impl(const std::string& name, const std::string& assigns, const EngineOptions& o) {
    Catalog cat = load_catalog(data_file("covers.cat"));
    Syms overrides = parse_assigns(assigns);
    VerifyOptions v = vopts(o);
    std::vector<const RelationSpec*> todo;
    if (name == "all")
        for (const auto& e : cat.entries) todo.push_back(&e);
    else
        todo.push_back(&cat.entry(name));
    std::vector<Report> reps;
    for (const RelationSpec* e : todo) {
        Syms syms = e->defaults;
        for (const auto& [k, val] : overrides) {
            if (syms.count(k))
                syms[k] = val;
            else if (name != "all")
                fail(errc::argument, "entry '" + e->id + "' has no free symbol '" + k + "'");
        }
        reps.push_back(verify_relation(*e, syms, v));
    }
    return {reps, block_text(reps)};
}

// ---- group ----

std::string mobius_label(const std::array<long, 4>& m) {
    RationalMap r;
    r.num = QPoly({Rat(m[1]), Rat(m[0])});
    r.den = QPoly({Rat(m[3]), Rat(m[2])});
    return r.str();
}

Block group_impl(const EngineOptions&) {
    Catalog cat = load_catalog(data_file("kummer24.cat"));
    std::vector<Transform> gens;
    gens.reserve(cat.entries.size());
    for (const auto& e : cat.entries) gens.push_back(transform_of(e));
    GroupSummary g = transform_group(gens);

    Report rep;
    rep.identity = "group(closure of the 24 transformations)";
    ReportRow row;
    row.lhs = std::to_string(g.elements.size());
    row.rhs = "144";
    bool pass = g.elements.size() == 144 && !g.is_abelian && g.generator_count == 24;
    row.status = pass ? "pass" : "fail";
    row.note = std::string(g.is_abelian ? "abelian" : "nonabelian") + ", " +
               std::to_string(g.generator_count) + " distinct generator images";
    rep.rows.push_back(row);

    std::ostringstream text;
    text << "order=" << g.elements.size() << "\n"
         << "abelian=" << (g.is_abelian ? "true" : "false") << "\n"
         << "distinct-generators=" << g.generator_count << "\n";
    for (const auto& [m, count] : g.census) {
        std::string line = "census " + mobius_label(m) + ": " + std::to_string(count);
        rep.notes.push_back(line);
        text << line << "\n";
    }
    rep.finish();
    return {{rep}, text.str()};
}

// ---- special values at z = 1 ----

const long kSmallDens[] = {2, 3, 4, 5, 6, 8, 10, 12};

Rat rand_unit(SplitMix64& g, const long* dens, size_t ndens) {
    long d = dens[g.below(ndens)];
    long n = 1 + static_cast<long>(g.below(static_cast<uint64_t>(d - 1)));
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string predict_branch(const HGMParams& P) {
    if (!is_integer(P.a + P.b - P.c - P.d)) return "jacobi";
    if (is_integer(P.a + P.b)) return "tate";
    return "unsupported";
}

long first_qualified_prime(long level, long lo, long hi, bool exact) {
    for (long p : primes_in_range(std::max<long>(5, lo), hi)) {
        if ((p - 1) % level != 0) continue;
        if (exact && p > 43) continue;
        return p;
    }
    return 0;
}

std::vector<Rat> sorted_mod1(std::vector<Rat> v) {
    for (auto& x : v) x = ratmod1(x);
    std::sort(v.begin(), v.end());
    return v;
}

Block special_impl(int count, int jac_count, const EngineOptions& o) {
    if (count < 0 || jac_count < 0) fail(errc::argument, "special: counts must be >= 0");
    Backend bk = to_backend(o.backend);
    bool exact = bk == Backend::exact;
    SplitMix64 rng = seeded_stream(o.seed, "special-params");
    Report rep;
    rep.identity = "special(count=" + std::to_string(count) + ",jac=" + std::to_string(jac_count) + ")";

    int branch_ok = 0, agree = 0, conj_agree = 0, norm_agree = 0, compared = 0;
    for (int i = 0; i < count; ++i) {
        int kind = i % 5;  // 0-2: jacobi branch, 3: tate branch, 4: unsupported
        HGMParams P;
        long p = 0;
        int delta_expected = 0;
        for (int attempt = 0; attempt < 1000 && p == 0; ++attempt) {
            auto r = [&] { return rand_unit(rng, kSmallDens, 8); };
            if (kind <= 2) {
                P = make_params(r(), r(), r(), r());
                if (is_integer(P.a + P.b - P.c - P.d) || !is_generic(P)) continue;
            } else if (kind == 3) {
                int sub = (i / 5) % 3;
                Rat a = r(), c = r();
                if (sub == 0)  // both pairs noninteger: delta = 1, value = p
                    P = make_params(a, -a, c, -c);
                else if (sub == 1)  // upper pair integral: delta = 0, value = 1
                    P = make_params(Rat(0), Rat(0), c, -c);
                else  // lower pair integral: delta = 0, value = 1
                    P = make_params(a, -a, Rat(0), Rat(0));
                delta_expected = sub == 0 ? 1 : 0;
                if (!is_generic(P)) continue;
            } else {
                Rat a = r(), b = r();
                if (is_integer(a + b)) continue;
                Rat c = r();
                P = make_params(a, b, c, a + b - c);
                if (!is_integer(P.a + P.b - P.c - P.d)) continue;  // paranoia
                if (!is_generic(P)) continue;
            }
            p = first_qualified_prime(params_level(P), o.prime_lo, o.prime_hi, exact);
        }
        if (p == 0)
            fail(errc::internal, "special: could not draw a parameter set with a usable prime");

        std::string predicted = predict_branch(P);
        auto F = make_field(p);
        GaussTable T(F, bk);

        ReportRow brow;  // branch-selection row (asserted)
        brow.prime = p;
        brow.sample = 2 * i;
        brow.z_sample = 1;
        brow.rhs = predicted;
        ReportRow crow;  // closed-form comparison row (reported, not asserted)
        crow.prime = p;
        crow.sample = 2 * i + 1;
        crow.z_sample = 1;
        crow.status = "skipped";
        bool extras_ok = true;
        try {
            TraceAtOne t = trace_at_one(T, P);
            brow.lhs = t.branch == TraceAtOne::Branch::jacobi ? "jacobi" : "tate";
            if (t.branch == TraceAtOne::Branch::jacobi) {
                auto ja = sorted_mod1({P.a - P.c, P.a - P.d, P.b - P.c, P.b - P.d});
                auto jb = sorted_mod1({P.a, P.b, -P.c, -P.d, P.a + P.b - P.c - P.d});
                extras_ok = sorted_mod1(t.ja) == ja && sorted_mod1(t.jb) == jb;
                if (!extras_ok) brow.note = "jacobi argument lists differ from the closed form";
            } else {
                extras_ok = t.delta == delta_expected;
                if (!extras_ok)
                    brow.note = "delta=" + std::to_string(t.delta) + " expected " +
                                std::to_string(delta_expected);
            }
            CycValue H1 = hyp_sum(T, P, 1);
            crow.lhs = value_str(H1);
            crow.rhs = value_str(t.value);
            auto dl = H1.approx(), dr = t.value.approx();
            crow.abs_err = std::abs(dl - dr);
            crow.rel_err = crow.abs_err / std::max({std::abs(dl), std::abs(dr), 1.0});
            auto close = [&](const CycValue& x, const CycValue& y) {
                if (exact) return cyc_equal(x, y);
                auto dx = x.approx(), dy = y.approx();
                return std::abs(dx - dy) / std::max({std::abs(dx), std::abs(dy), 1.0}) <= o.tol;
            };
            ++compared;
            std::string verdict;
            if (close(H1, t.value)) {
                ++agree;
                verdict = "agrees with the closed form";
            } else if (t.branch == TraceAtOne::Branch::jacobi) {
                std::vector<Rat> nja, njb;
                for (const Rat& x : t.ja) nja.push_back(-x);
                for (const Rat& x : t.jb) njb.push_back(-x);
                if (close(H1, T.jacobi_motive(nja, njb))) {
                    ++conj_agree;
                    verdict = "equals the complex conjugate of the closed form";
                } else {
                    verdict = "differs from the closed form";
                }
            } else {
                CycValue minus = CycValue::from_rat(bk, Rat(-1));
                CycValue psq = CycValue::from_rat(bk, Rat(p * p));
                if (close(H1 * minus, t.value) || close(H1 * psq, t.value) ||
                    close(H1 * psq * minus, t.value)) {
                    ++norm_agree;
                    verdict = "differs from the closed form by a sign and/or the factor 1/p^2";
                } else {
                    verdict = "differs from the closed form";
                }
            }
            crow.note = "reported (not asserted): sum at 1 " + verdict;
        } catch (const hgm_error& e) {
            if (e.code() != errc::unsupported) throw;
            brow.lhs = "unsupported";
            crow.lhs = "-";
            crow.rhs = "-";
            crow.note = "no closed form; comparison not available";
        }
        if (brow.note.empty()) brow.note = "branch selection for (" + P.str() + ")";
        bool bpass = brow.lhs == brow.rhs && extras_ok;
        brow.status = bpass ? "pass" : "fail";
        if (bpass) ++branch_ok;
        rep.rows.push_back(brow);
        rep.rows.push_back(crow);
    }

    // Exact Jacobi-equality rows: the motive built from x = (1+a+b)/2 and
    // y = (1-a+b)/2 with lists (x, 1-x) over (y, 1-y) has value exactly 1.
    static const long kOddDens[] = {3, 5, 7, 9};
    int jac_ok = 0;
    for (int j = 0; j < jac_count; ++j) {
        Rat a, b, x, y;
        long p = 0;
        for (int attempt = 0; attempt < 1000 && p == 0; ++attempt) {
            a = rand_unit(rng, kOddDens, 4);
            b = rand_unit(rng, kOddDens, 4);
            x = ratmod1((1 + a + b) / 2);
            y = ratmod1((1 - a + b) / 2);
            if (x == 0 || y == 0) continue;
            long level = lcm_denominators({x, ratmod1(-x), y, ratmod1(-y)});
            p = first_qualified_prime(level, 5, 43, true);
        }
        if (p == 0) fail(errc::internal, "special: no usable prime for a Jacobi-equality draw");
        auto F = make_field(p);
        GaussTable T(F, Backend::exact);
        CycValue J = T.jacobi_motive({x, ratmod1(1 - x)}, {y, ratmod1(1 - y)});
        CycValue one = T.chi(Rat(0), 1);
        ReportRow row;
        row.prime = p;
        row.sample = 2 * count + j;
        row.z_sample = 1;
        compare_values(row, J, one, Backend::exact, o.tol);
        row.note = "jacobi-equality at (a=" + rat_str(a) + ",b=" + rat_str(b) + ")";
        if (row.status == "pass") ++jac_ok;
        rep.rows.push_back(row);
    }

    rep.notes.push_back("branch selection: " + std::to_string(branch_ok) + "/" +
                        std::to_string(count) + " correct");
    rep.notes.push_back("sum at 1 vs closed form: " + std::to_string(agree) + "/" +
                        std::to_string(compared) + " agree exactly, " + std::to_string(conj_agree) +
                        " agree up to complex conjugation, " + std::to_string(norm_agree) +
                        " up to sign and a p-power (reported, not asserted)");
    rep.notes.push_back("jacobi-equality: " + std::to_string(jac_ok) + "/" +
                        std::to_string(jac_count) + " pass");
    rep.finish();
    return {{rep}, block_text({rep})};
}

// ---- dioph ----

void dioph_row(ReportRow& row, const DiophPoints& d) {
    Rat indep = -(d.z0 - 1) * (d.z0 - 1) / (4 * d.z0);
    Rat from_u = 1 - 4 * d.u0.coefficient * d.u0.coefficient * Rat(d.u0.disc);
    row.lhs = rat_str(d.w0);
    row.rhs = rat_str(indep);
    bool ok1 = indep == d.w0, ok2 = from_u == d.w0;
    row.status = ok1 && ok2 ? "pass" : "fail";
    if (!ok1)
        row.note = "-(z0-1)^2/(4 z0) differs from w0";
    else if (!ok2)
        row.note = "u0 does not satisfy 4u(1-u) = w0";
}

Block dioph_impl(const std::string& alpha, const std::string& beta, const std::string& gamma,
                 long q, long pexp, int random_count, const EngineOptions& o) {
    if (random_count < 0) fail(errc::argument, "dioph: count must be >= 0");
    DiophPoints d = dioph_points(parse_mpz(alpha), parse_mpz(beta), parse_mpz(gamma), q, pexp);
    Report rep;
    rep.identity = "dioph(alpha=" + alpha + ",beta=" + beta + ",gamma=" + gamma +
                   ",q=" + std::to_string(q) + ",pexp=" + std::to_string(pexp) + ")";
    rep.notes.push_back("z0 = " + rat_str(d.z0));
    rep.notes.push_back("w0 = " + rat_str(d.w0) + " = -(z0-1)^2/(4 z0)");
    rep.notes.push_back("u0 = " + d.u0.str() + " with 4 u0 (1-u0) = w0");
    rep.notes.push_back(std::string("primitive = ") + (d.primitive ? "true" : "false"));
    if (d.u0.disc != 1) {
        std::string split =
            "u0 discriminant " + d.u0.disc.get_str() + " is a square mod p for p in {";
        bool first = true;
        for (long p : primes_in_range(3, 60)) {
            if (!disc_is_square_mod_p(d.u0.disc, p)) continue;
            split += (first ? "" : ", ") + std::to_string(p);
            first = false;
        }
        rep.notes.push_back(split + "}");
    }

    ReportRow row0;
    dioph_row(row0, d);
    row0.note = row0.note.empty() ? "input solution" : row0.note;
    rep.rows.push_back(row0);

    auto triples = admissible_triples(random_count, o.seed);
    for (int k = 0; k < random_count; ++k) {
        const auto& t = triples[static_cast<size_t>(k)];
        DiophPoints dk = dioph_points(t.alpha, t.beta, t.gamma, t.q, t.pexp);
        ReportRow row;
        row.sample = k + 1;
        dioph_row(row, dk);
        if (row.note.empty())
            row.note = "random solution q=" + std::to_string(t.q) + " pexp=" + std::to_string(t.pexp);
        rep.rows.push_back(row);
    }
    rep.finish();

    std::ostringstream text;
    for (const auto& n : rep.notes) text << n << "\n";
    text << "random admissible solutions checked: " << random_count << " (" << rep.failures
         << " failures)\n";
    return {{rep}, text.str()};
}

// ---- series ----

Block series_impl(const std::string& which, const std::string& a, const std::string& b,
                  const std::string& z, long terms, const EngineOptions& o) {
    Cplx zz = parse_complex(z);
    SeriesCheck chk = verify_series_identity(parse_series_which(which), parse_rat(a),
                                             parse_rat(b), zz, terms,
                                             o.tol_set ? o.tol : 0.0);
    Report rep;
    rep.identity = "series(" + which + ",a=" + a + ",b=" + b + ",z=" + cplx_str(zz) + ")";
    ReportRow row;
    row.lhs = cplx_str(chk.lhs);
    row.rhs = cplx_str(chk.rhs);
    row.abs_err = chk.abs_err;
    row.rel_err = chk.abs_err / std::max({std::abs(chk.lhs), std::abs(chk.rhs), 1.0});
    row.status = chk.pass ? "pass" : "fail";
    row.note = chk.detail;
    rep.rows.push_back(row);
    if (chk.precision_warning)
        rep.notes.push_back("precision warning: term cap reached before the target tolerance");
    rep.finish();
    return {{rep}, chk.detail + "\n"};
}

// ---- monodromy ----

Block monodromy_impl(const std::string& params, const std::string& map_expr,
                     const EngineOptions&) {
    if (params.empty() && map_expr.empty())
        fail(errc::argument, "monodromy: need parameters and/or a map expression");
    Report rep;
    std::ostringstream text;
    std::string ident = "monodromy(";
    if (!params.empty()) {
        HGMParams P = parse_params(params);
        ident += P.str();
        MonodromyData d = local_data(P);
        for (auto [label, cls] : {std::pair<const char*, const LocalClass*>{"at 0:   ", &d.at0},
                                  {"at 1:   ", &d.at1},
                                  {"at inf: ", &d.at_inf}}) {
            rep.notes.push_back(std::string(label) + cls->str());
            text << label << cls->str() << "\n";
        }
        std::string gen = std::string("generic = ") + (is_generic(P) ? "true" : "false");
        rep.notes.push_back(gen);
        text << gen << "\n";
    }
    if (!map_expr.empty()) {
        RationalMap m = make_map(map_expr);
        if (!params.empty()) ident += ",";
        ident += "map=" + m.str();
        RamProfile prof = ramification_profile(m);
        rep.notes.push_back("degree = " + std::to_string(m.degree()));
        rep.notes.push_back("profile: " + prof.str());
        text << "degree = " << m.degree() << "\n" << "profile: " << prof.str() << "\n";
    }
    rep.identity = ident + ")";
    rep.finish();
    return {{rep}, text.str()};
}

// ---- calibrate ----

Block calibrate_impl(const std::string& log_path, const EngineOptions& o) {
    Catalog kum = load_catalog(data_file("kummer24.cat"));
    Catalog cov = load_catalog(data_file("covers.cat"));
    VerifyOptions v = vopts(o);
    v.samples = 5;

    Report rep;
    rep.identity = "calibrate";
    std::ostringstream log;
    log << "format: calibration-log 1\n"
        << "# four-variant probe on the first qualified prime, 5 samples, seed " << o.seed
        << ", backend " << o.backend << "\n"
        << "# kummer entries at a=1/3 b=1/5 c=1/2; cover entries at their defaults\n";
    int idx = 0, literal_kummer = 0;
    auto probe = [&](const RelationSpec& e, const Syms& syms, bool is_kummer) {
        auto passing = calibrate_relation(e, syms, v);
        bool rec_ok = std::find(passing.begin(), passing.end(), e.calibration) != passing.end();
        bool literal =
            std::find(passing.begin(), passing.end(), std::string("standard")) != passing.end();
        if (is_kummer && literal) ++literal_kummer;
        std::string pl;
        for (const auto& s : passing) pl += (pl.empty() ? "" : " ") + s;
        ReportRow row;
        row.sample = idx++;
        row.lhs = e.calibration;
        row.rhs = pl;
        row.status = rec_ok ? "pass" : "fail";
        row.note = e.id + ": literal twist " + (literal ? "passes" : "fails");
        rep.rows.push_back(row);
        log << e.id << ": recorded=" << e.calibration << " literal=" << (literal ? "pass" : "fail")
            << " passing=[" << pl << "]\n";
    };
    Syms abc{{"a", Rat(1, 3)}, {"b", Rat(1, 5)}, {"c", Rat(1, 2)}};
    for (const auto& e : kum.entries) probe(e, abc, true);
    for (const auto& e : cov.entries) probe(e, e.defaults, false);
    log << "# kummer entries passing with the literally transcribed twist: " << literal_kummer
        << "/" << kum.entries.size() << "\n";
    rep.notes.push_back("kummer literal-twist passes: " + std::to_string(literal_kummer) + "/" +
                        std::to_string(kum.entries.size()));
    rep.finish();
    if (!log_path.empty()) write_text_file(log_path, log.str());
    return {{rep}, log.str()};
}

}  // namespace

EngineResult run_hsum(const std::string& params, const std::string& z, const EngineOptions& o) {
    auto [reps, text] = hsum_impl(params, z, o);
    return pack(reps, text, o);
}

EngineResult run_verify_kummer(const std::string& index, const std::string& abc,
                               const EngineOptions& o) {
    auto [reps, text] = kummer_impl(index, abc, o);
    return pack(reps, text, o, index == "all");
}

EngineResult run_verify_cover(const std::string& name, const std::string& assigns,
                              const EngineOptions& o) {
    auto [reps, text] = cover_impl(name, assigns, o);
    return pack(reps, text, o, name == "all");
}

EngineResult run_group(const EngineOptions& o) {
    auto [reps, text] = group_impl(o);
    return pack(reps, text, o);
}

EngineResult run_special(int count, int jac_count, const EngineOptions& o) {
    auto [reps, text] = special_impl(count, jac_count, o);
    return pack(reps, text, o);
}

EngineResult run_dioph(const std::string& alpha, const std::string& beta,
                       const std::string& gamma, long q, long pexp, int random_count,
                       const EngineOptions& o) {
    auto [reps, text] = dioph_impl(alpha, beta, gamma, q, pexp, random_count, o);
    return pack(reps, text, o);
}

EngineResult run_series(const std::string& which, const std::string& a, const std::string& b,
                        const std::string& z, long terms, const EngineOptions& o) {
    auto [reps, text] = series_impl(which, a, b, z, terms, o);
    return pack(reps, text, o);
}

EngineResult run_monodromy(const std::string& params, const std::string& map_expr,
                           const EngineOptions& o) {
    auto [reps, text] = monodromy_impl(params, map_expr, o);
    return pack(reps, text, o);
}

EngineResult run_suite(const EngineOptions& o) {
    std::vector<Report> all;
    std::string text;
    auto take = [&](Block b) {
        for (auto& r : b.first) all.push_back(std::move(r));
        text += b.second;
    };
    take(group_impl(o));
    take(kummer_impl("all", "1/3,1/5,1/2", o));
    take(cover_impl("all", "", o));
    take(special_impl(20, 10, o));
    take(dioph_impl("2", "2", "4", 3, 2, 20, o));
    take(series_impl("eq1", "1/3", "1/5", "0.1+0i", 0, o));
    take(series_impl("eq67", "1/3", "1/5", "0.6+0i", 0, o));
    {
        EngineOptions oh = o;
        oh.prime_lo = 13;
        oh.prime_hi = 43;
        take(hsum_impl("1/2,1/2;0,0", "3", oh));
    }
    return pack(all, text, o, true);
}

EngineResult run_calibrate(const std::string& log_path, const EngineOptions& o) {
    auto [reps, text] = calibrate_impl(log_path, o);
    return pack(reps, text, o);
}

}  // namespace hgm
