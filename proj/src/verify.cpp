#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <thread>

#include "error.hpp"
#include "rng.hpp"

namespace hgm {

Calibration parse_calibration(const std::string& name) {
    Calibration c;
    if (name == "standard") return c;
    if (name == "jac-direct") {
        c.jac_direct = true;
        return c;
    }
    if (name == "kchar-neg") {
        c.kchar_negated = true;
        return c;
    }
    if (name == "side-swap") {
        c.sides_swapped = true;
        return c;
    }
    fail(errc::argument, "unknown calibration variant '" + name + "'");
}

std::string calibration_name(const Calibration& c) {
    if (c.jac_direct) return "jac-direct";
    if (c.kchar_negated) return "kchar-neg";
    if (c.sides_swapped) return "side-swap";
    return "standard";
}

HGMParams conjugate_params(const HGMParams& P, long j) {
    return make_params(j * P.a, j * P.b, j * P.c, j * P.d);
}

namespace {

long lcm_with(long acc, const mpz_class& den) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), mpz_class(acc).get_mpz_t(), den.get_mpz_t());
    return checked_long(l, "character level");
}

std::string identity_of(const RelationSpec& e, const Syms& syms, const VerifyOptions& opt) {
    std::string s = e.id + "(";
    bool first = true;
    for (const auto& [k, v] : syms) {
        if (!first) s += ",";
        first = false;
        s += k + "=" + rat_str(v);
    }
    s += ")";
    if (opt.perturb_param >= 0)
        s += "+perturb(param:" + std::to_string(opt.perturb_param) + "," +
             rat_str(opt.perturb_delta) + ")";
    if (opt.perturb_comp >= 0)
        s += "+perturb(comp:" + std::to_string(opt.perturb_comp) + "," +
             rat_str(opt.perturb_delta) + ")";
    return s;
}

} // namespace

BoundRelation bind_relation(const RelationSpec& e, const Syms& syms, const VerifyOptions& opt) {
    check_hypotheses(e, syms);
    BoundRelation R;
    R.spec = &e;
    R.syms = syms;
    R.cal = parse_calibration(opt.calibration.empty() ? e.calibration : opt.calibration);
    R.source = eval_params(e.source, syms);
    R.target = eval_params(e.target, syms);
    if (!is_generic(R.source))
        fail(errc::argument, "entry '" + e.id + "': source parameters " + R.source.str() +
                                 " are not generic");
    if (!is_generic(R.target))
        fail(errc::argument, "entry '" + e.id + "': target parameters " + R.target.str() +
                                 " are not generic");

    if (opt.perturb_param >= 0) {
        if (opt.perturb_param > 7) fail(errc::argument, "parameter index out of range 0..7");
        HGMParams& P = opt.perturb_param < 4 ? R.target : R.source;
        Rat v[4] = {P.a, P.b, P.c, P.d};
        v[opt.perturb_param % 4] += opt.perturb_delta;
        P = make_params(v[0], v[1], v[2], v[3]);
    }

    int index = 0;
    for (const auto& tc : e.comps) {
        BoundRelation::Comp c;
        c.kind = tc.kind;
        c.side = tc.side;
        bool perturbed = index == opt.perturb_comp;
        switch (tc.kind) {
        case TwistComp::Kind::theta:
        case TwistComp::Kind::eta:
        case TwistComp::Kind::kchar:
        case TwistComp::Kind::sign: {
            Rat v = eval_expr(*tc.exp, syms);
            if (tc.kind == TwistComp::Kind::kchar && R.cal.kchar_negated) v = -v;
            if (perturbed) v += opt.perturb_delta;
            c.exp = ratmod1(v);
            if (tc.kind == TwistComp::Kind::theta) {
                c.has_u = true;
                c.u = make_map("z");
            } else if (tc.kind == TwistComp::Kind::eta) {
                c.has_u = true;
                c.u = make_map("1-z");
            } else if (tc.kind == TwistComp::Kind::kchar) {
                c.has_u = true;
                c.u = *tc.u;
            }
            break;
        }
        case TwistComp::Kind::tate: {
            Rat v = eval_expr(*tc.exp, syms);
            if (perturbed) fail(errc::argument, "cannot perturb a tate component");
            if (!is_integer(v)) fail(errc::data, "tate exponent " + rat_str(v) + " is not an integer");
            c.tate = checked_long(v.get_num(), "tate exponent");
            break;
        }
        case TwistComp::Kind::jac: {
            for (const auto& x : tc.jac_a) c.ja.push_back(ratmod1(eval_expr(*x, syms)));
            for (const auto& x : tc.jac_b) c.jb.push_back(ratmod1(eval_expr(*x, syms)));
            if (perturbed) c.ja[0] = ratmod1(c.ja[0] + opt.perturb_delta);
            break;
        }
        case TwistComp::Kind::conj: {
            Rat v = eval_expr(*tc.exp, syms);
            if (perturbed) fail(errc::argument, "cannot perturb a conj component");
            if (!is_integer(v) || v <= 0)
                fail(errc::data, "conj index " + rat_str(v) + " is not a positive integer");
            R.conj = checked_long(v.get_num(), "conj index");
            break;
        }
        }
        if (tc.kind != TwistComp::Kind::conj) R.comps.push_back(std::move(c));
        ++index;
    }

    long tgt_level = params_level(conjugate_params(R.target, R.conj));
    if (std::gcd(R.conj, params_level(R.target)) != 1)
        fail(errc::argument, "conj index " + std::to_string(R.conj) +
                                 " is not invertible at level " +
                                 std::to_string(params_level(R.target)));
    long L = std::lcm(params_level(R.source), tgt_level);
    for (const auto& c : R.comps) {
        L = lcm_with(L, c.exp.get_den());
        for (const auto& r : c.ja) L = lcm_with(L, r.get_den());
        for (const auto& r : c.jb) L = lcm_with(L, r.get_den());
    }
    R.level = L;
    return R;
}

// ---------------------------------------------------------------------------
// Step 1: local monodromy bookkeeping.
// ---------------------------------------------------------------------------

std::string monodromy_mismatch(const BoundRelation& R) {
    MonodromyData Ds = local_data(R.source);
    MonodromyData Dt = local_data(conjugate_params(R.target, R.conj));
    RamProfile prof = ramification_profile(R.spec->map);

    std::vector<std::pair<Place, LocalClass>> cls;
    auto at = [&](const Place& pl) -> LocalClass& {
        for (auto& [p, c] : cls)
            if (p == pl) return c;
        cls.emplace_back(pl, make_class(Rat(0), Rat(0), false));
        return cls.back().second;
    };
    auto add_fiber = [&](const std::vector<RamPoint>& pts, const LocalClass& base) {
        for (const auto& rp : pts) at(rp.place) = pull_class(base, rp.e);
    };
    add_fiber(prof.over0, Dt.at0);
    add_fiber(prof.over1, Dt.at1);
    add_fiber(prof.over_inf, Dt.at_inf);

    // Twist characters shift the exponents at their own ramified places.
    for (const auto& c : R.comps) {
        if (!c.has_u) continue;
        Rat beta = c.exp;
        bool printed_target = c.side == Side::target;
        if (R.cal.sides_swapped) printed_target = !printed_target;
        if (!printed_target) beta = -beta;
        std::vector<Place> places{place_at_infinity()};
        for (const auto& f : poly_factor(c.u.num).factors) places.push_back(place_of(f.poly));
        for (const auto& f : poly_factor(c.u.den).factors) places.push_back(place_of(f.poly));
        for (const auto& pl : places) {
            int o = map_ord(c.u, pl);
            if (o != 0) at(pl) = twist_class(at(pl), beta * o);
        }
    }

    std::vector<std::string> nontrivial;
    for (const auto& [p, c] : cls)
        if (!c.is_trivial()) nontrivial.push_back(p.str());
    if (nontrivial.size() != 3) {
        std::string msg = "expected 3 ramified places, found " +
                          std::to_string(nontrivial.size()) + ":";
        for (const auto& s : nontrivial) msg += " " + s;
        return msg;
    }

    const Place pz = place_of_value(Rat(0));
    const Place p1 = place_of_value(Rat(1));
    const Place pinf = place_at_infinity();
    for (const Place& need : {pz, p1, pinf}) {
        bool found = false;
        for (const auto& [p, c] : cls)
            if (p == need && !c.is_trivial()) found = true;
        if (!found) return "no ramification at the place " + need.str();
    }

    MonodromyData rec;
    rec.at0 = at(pz);
    rec.at1 = at(p1);
    rec.at_inf = at(pinf);
    if (!class_equal(rec.at0, Ds.at0))
        return "place z: pulled back " + rec.at0.str() + " but the source has " + Ds.at0.str();
    if (!class_equal(rec.at1, Ds.at1))
        return "place z-1: pulled back " + rec.at1.str() + " but the source has " + Ds.at1.str();
    if (!class_equal(rec.at_inf, Ds.at_inf))
        return "place inf: pulled back " + rec.at_inf.str() + " but the source has " +
               Ds.at_inf.str();
    if (!rec.at1.is_pseudo_reflection())
        return "class at z-1 is " + rec.at1.str() + ", not a pseudo-reflection";

    try {
        HGMParams back = params_from_local_data(rec);
        auto same_pair = [](const Rat& x, const Rat& y, const Rat& u, const Rat& v) {
            return (x == u && y == v) || (x == v && y == u);
        };
        if (!same_pair(back.a, back.b, R.source.a, R.source.b) ||
            !same_pair(back.c, back.d, R.source.c, R.source.d))
            return "local data reconstructs " + back.str() + ", not " + R.source.str();
    } catch (const hgm_error& ex) {
        return std::string("local data is not realizable: ") + ex.what();
    }
    return "";
}

// ---------------------------------------------------------------------------
// Step 2: trace identity at sampled points.
// ---------------------------------------------------------------------------

namespace {

bool value_on_lhs(const Calibration& cal, const BoundRelation::Comp& c) {
    bool lhs = c.side == Side::target; // standard: printed values flip sides
    if (cal.sides_swapped) lhs = !lhs;
    if (cal.jac_direct && c.kind == TwistComp::Kind::jac) lhs = !lhs;
    return lhs;
}

CycValue comp_value(const BoundRelation::Comp& c, const GaussTable& gt, long z0) {
    const PrimeField& F = gt.F();
    switch (c.kind) {
    case TwistComp::Kind::theta:
        return gt.chi(c.exp, z0);
    case TwistComp::Kind::eta:
        return gt.chi(c.exp, F.reduce(1 - z0));
    case TwistComp::Kind::kchar:
        return gt.chi(c.exp, map_eval_mod(c.u, F, z0));
    case TwistComp::Kind::sign:
        return gt.chi(c.exp, F.p - 1);
    case TwistComp::Kind::tate: {
        Rat pw;
        if (c.tate >= 0) {
            mpz_class d;
            mpz_ui_pow_ui(d.get_mpz_t(), F.p, c.tate);
            pw = Rat(1, 1);
            pw /= Rat(d);
        } else {
            mpz_class n;
            mpz_ui_pow_ui(n.get_mpz_t(), F.p, -c.tate);
            pw = Rat(n);
        }
        return CycValue::from_rat(gt.backend(), pw);
    }
    case TwistComp::Kind::jac:
        return gt.jacobi_motive(c.ja, c.jb);
    case TwistComp::Kind::conj:
        break;
    }
    fail(errc::internal, "unreachable twist component");
}

struct PrimeOutcome {
    std::vector<ReportRow> rows;
    std::string note;
};

PrimeOutcome run_prime(const BoundRelation& R, long p, const VerifyOptions& opt) {
    PrimeOutcome out;
    if (opt.backend == Backend::exact && p > 43) {
        out.note = "p=" + std::to_string(p) + ": skipped (exact backend cap)";
        return out;
    }
    auto F = make_field(p);
    GaussTable gt(F, opt.backend);
    HGMParams tgtj = conjugate_params(R.target, R.conj);
    SplitMix64 rng = seeded_stream(opt.seed, R.spec->id + "#" + std::to_string(p));
    long budget = 64L * opt.samples;

    for (int s = 0; s < opt.samples; ++s) {
        long z0 = -1, w0 = -1;
        while (budget > 0) {
            --budget;
            long cand = 2 + static_cast<long>(rng.below(static_cast<std::uint64_t>(p - 3)));
            long w;
            try {
                w = map_eval_mod(R.spec->map, *F, cand);
            } catch (const hgm_error& e) {
                if (e.code() == errc::skip_sample) continue; // pole of the map
                throw;
            }
            if (w == 0 || w == 1) continue;
            bool usable = true;
            for (const auto& c : R.comps) {
                if (c.kind != TwistComp::Kind::kchar) continue;
                try {
                    if (map_eval_mod(c.u, *F, cand) == 0) usable = false;
                } catch (const hgm_error& e) {
                    if (e.code() != errc::skip_sample) throw;
                    usable = false;
                }
            }
            if (!usable) continue;
            z0 = cand;
            w0 = w;
            break;
        }

        ReportRow row;
        row.prime = p;
        row.sample = s;
        if (z0 < 0) {
            row.status = "skipped";
            row.note = "sampling budget exhausted";
            out.rows.push_back(row);
            continue;
        }
        row.z_sample = z0;
        try {
            CycValue lhs = hyp_sum(gt, R.source, z0);
            CycValue rhs = hyp_sum(gt, tgtj, w0);
            for (const auto& c : R.comps) {
                CycValue v = comp_value(c, gt, z0);
                if (value_on_lhs(R.cal, c))
                    lhs = lhs * v;
                else
                    rhs = rhs * v;
            }
            row.lhs = value_str(lhs);
            row.rhs = value_str(rhs);
            auto dl = lhs.approx(), dr = rhs.approx();
            row.abs_err = std::abs(dl - dr);
            row.rel_err = row.abs_err / std::max({std::abs(dl), std::abs(dr), 1.0});
            bool pass = opt.backend == Backend::exact ? cyc_equal(lhs, rhs)
                                                      : row.rel_err <= opt.tol;
            row.status = pass ? "pass" : "fail";
            if (!pass) row.note = "sides differ";
        } catch (const hgm_error& e) {
            if (e.code() == errc::skip_sample || e.code() == errc::skip_prime) {
                row.status = "skipped";
                row.note = e.what();
            } else {
                throw;
            }
        }
        out.rows.push_back(row);
    }
    return out;
}

} // namespace

Report verify_relation(const RelationSpec& e, const Syms& syms, const VerifyOptions& opt) {
    BoundRelation R = bind_relation(e, syms, opt);
    Report rep;
    rep.identity = identity_of(e, syms, opt);
    rep.calibration = calibration_name(R.cal);

    if (opt.step1) {
        rep.monodromy = monodromy_mismatch(R);
        if (!rep.monodromy.empty()) {
            // hard failure: no prime work
            rep.finish();
            return rep;
        }
        rep.monodromy = "ok";
    }

    std::vector<long> ps;
    for (long p : primes_in_range(std::max(opt.prime_lo, 5L), opt.prime_hi))
        if ((p - 1) % R.level == 0) ps.push_back(p);

    std::vector<PrimeOutcome> res(ps.size());
    unsigned nthreads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, ps.empty() ? 1 : static_cast<unsigned>(ps.size()));
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i; (i = cursor.fetch_add(1)) < ps.size();) {
            try {
                res[i] = run_prime(R, ps[i], opt);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < nthreads; ++t) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!res[i].note.empty()) rep.notes.push_back(res[i].note);
        bool any_counted = false;
        for (const auto& row : res[i].rows)
            if (row.status != "skipped") any_counted = true;
        if (!res[i].rows.empty() && !any_counted)
            rep.notes.push_back("p=" + std::to_string(ps[i]) + ": no data");
        for (auto& row : res[i].rows) rep.rows.push_back(std::move(row));
    }
    rep.finish();
    return rep;
}

Report verify_kummer(const Catalog& cat, int index, const Syms& abc, const VerifyOptions& opt) {
    if (index < 1 || index > 24) fail(errc::argument, "transformation index out of range 1..24");
    char id[8];
    std::snprintf(id, sizeof id, "k%02d", index);
    return verify_relation(cat.entry(id), abc, opt);
}

std::vector<std::string> calibrate_relation(const RelationSpec& e, const Syms& syms,
                                            const VerifyOptions& opt) {
    VerifyOptions probe = opt;
    probe.calibration = "standard";
    BoundRelation R = bind_relation(e, syms, probe);
    long first = 0;
    for (long p : primes_in_range(std::max(opt.prime_lo, 5L), opt.prime_hi))
        if ((p - 1) % R.level == 0) {
            first = p;
            break;
        }
    std::vector<std::string> passing;
    if (first == 0) return passing;
    for (const char* name : {"standard", "jac-direct", "kchar-neg", "side-swap"}) {
        VerifyOptions o = opt;
        o.calibration = name;
        o.prime_lo = o.prime_hi = first;
        o.step1 = false;
        Report r = verify_relation(e, syms, o);
        if (r.failures == 0 && r.samples_total > 0) passing.push_back(name);
    }
    return passing;
}

} // namespace hgm
