#include "catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "error.hpp"

#ifndef HGM_DATA_DIR_DEFAULT
#define HGM_DATA_DIR_DEFAULT "data"
#endif

namespace hgm {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

[[noreturn]] void bad(const std::string& path, int line, const std::string& msg) {
    fail(errc::data, path + ":" + std::to_string(line) + ": " + msg);
}

Side parse_side(std::string& rest, const std::string& path, int line) {
    size_t at = rest.rfind('@');
    if (at == std::string::npos) return Side::target;
    std::string side = trim(rest.substr(at + 1));
    rest = trim(rest.substr(0, at));
    if (side == "source") return Side::source;
    if (side == "target") return Side::target;
    bad(path, line, "side must be 'source' or 'target', got '" + side + "'");
}

std::vector<ExprPtr> parse_expr_list(const std::string& text) {
    std::vector<ExprPtr> out;
    for (const std::string& item : split(text, ','))
        if (!item.empty()) out.push_back(parse_expr(item));
    return out;
}

} // namespace

std::string TwistComp::str() const {
    const char* names[] = {"theta", "eta", "kchar", "sign", "tate", "jac", "conj"};
    std::string s = names[static_cast<int>(kind)];
    s += side == Side::source ? "@source" : "@target";
    return s;
}

bool RelationSpec::has(TwistComp::Kind k) const {
    for (const auto& c : comps)
        if (c.kind == k) return true;
    return false;
}

const RelationSpec& Catalog::entry(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return e;
    fail(errc::argument, "no catalog entry named '" + id + "'");
}

std::string data_file(const std::string& name) {
    const char* env = std::getenv("HGM_DATA_DIR");
    std::string dir = env && *env ? env : HGM_DATA_DIR_DEFAULT;
    return dir + "/" + name;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::data, "cannot open catalog file '" + path + "'");
    Catalog cat;
    RelationSpec* cur = nullptr;
    std::string raw;
    int ln = 0;
    bool saw_format = false;
    while (std::getline(in, raw)) {
        ++ln;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') bad(path, ln, "unterminated [entry] header");
            if (!saw_format) bad(path, ln, "missing 'format:' header before first entry");
            cat.entries.emplace_back();
            cur = &cat.entries.back();
            cur->id = trim(line.substr(1, line.size() - 2));
            if (cur->id.empty()) bad(path, ln, "empty entry name");
            continue;
        }
        size_t colon = line.find(':');
        if (colon == std::string::npos) bad(path, ln, "expected 'key: value'");
        std::string key = trim(line.substr(0, colon));
        std::string rest = trim(line.substr(colon + 1));
        if (key == "format") {
            std::istringstream fs(rest);
            fs >> cat.kind >> cat.version;
            if (!fs || (cat.kind != "kummer-catalog" && cat.kind != "cover-catalog"))
                bad(path, ln, "unrecognized format line '" + rest + "'");
            saw_format = true;
            continue;
        }
        if (!cur) bad(path, ln, "key outside of an [entry] block");
        try {
            if (key == "free") {
                for (const std::string& item : split(rest, ',')) {
                    size_t eq = item.find('=');
                    if (eq == std::string::npos) bad(path, ln, "free symbols need 'name=value'");
                    cur->defaults[trim(item.substr(0, eq))] = parse_rat(item.substr(eq + 1));
                }
            } else if (key == "source" || key == "target") {
                auto list = parse_expr_list(rest);
                if (list.size() != 4) bad(path, ln, key + " needs exactly 4 parameter expressions");
                auto& side = key == "source" ? cur->source : cur->target;
                for (int i = 0; i < 4; ++i) side[i] = std::move(list[i]);
            } else if (key == "map") {
                cur->map = make_map(rest);
            } else if (key == "theta" || key == "eta" || key == "sign" || key == "tate") {
                TwistComp c;
                c.kind = key == "theta"  ? TwistComp::Kind::theta
                         : key == "eta" ? TwistComp::Kind::eta
                         : key == "sign" ? TwistComp::Kind::sign
                                         : TwistComp::Kind::tate;
                c.side = parse_side(rest, path, ln);
                c.exp = parse_expr(rest);
                cur->comps.push_back(std::move(c));
            } else if (key == "kchar") {
                TwistComp c;
                c.kind = TwistComp::Kind::kchar;
                c.side = parse_side(rest, path, ln);
                size_t of = rest.find(" of ");
                if (of == std::string::npos) bad(path, ln, "kchar needs 'exponent of map'");
                c.exp = parse_expr(rest.substr(0, of));
                c.u = make_map(trim(rest.substr(of + 4)));
                cur->comps.push_back(std::move(c));
            } else if (key == "jac") {
                TwistComp c;
                c.kind = TwistComp::Kind::jac;
                c.side = parse_side(rest, path, ln);
                auto halves = split(rest, '|');
                if (halves.size() != 2) bad(path, ln, "jac needs 'a-list | b-list'");
                c.jac_a = parse_expr_list(halves[0]);
                c.jac_b = parse_expr_list(halves[1]);
                if (c.jac_a.empty() || c.jac_b.empty()) bad(path, ln, "empty jac list");
                cur->comps.push_back(std::move(c));
            } else if (key == "conj") {
                TwistComp c;
                c.kind = TwistComp::Kind::conj;
                c.exp = parse_expr(rest);
                cur->comps.push_back(std::move(c));
            } else if (key == "calibration") {
                if (rest != "standard" && rest != "jac-direct")
                    bad(path, ln, "unknown calibration '" + rest + "'");
                cur->calibration = rest;
            } else if (key == "profile") {
                cur->expected_profile = rest;
            } else if (key == "notint") {
                for (auto& e : parse_expr_list(rest)) cur->notint.push_back(std::move(e));
            } else {
                bad(path, ln, "unknown key '" + key + "'");
            }
        } catch (const hgm_error& e) {
            if (e.code() == errc::data) throw;
            bad(path, ln, e.what());
        }
    }
    if (!saw_format) fail(errc::data, path + ": missing 'format:' header");
    for (const auto& e : cat.entries) {
        if (!e.source[0] || !e.target[0]) fail(errc::data, path + ": entry '" + e.id + "' lacks source or target");
        if (e.map.num.is_zero()) fail(errc::data, path + ": entry '" + e.id + "' lacks a map");
    }
    return cat;
}

HGMParams eval_params(const std::array<ExprPtr, 4>& side, const std::map<std::string, Rat>& syms) {
    return make_params(eval_expr(*side[0], syms), eval_expr(*side[1], syms),
                       eval_expr(*side[2], syms), eval_expr(*side[3], syms));
}

void check_hypotheses(const RelationSpec& e, const std::map<std::string, Rat>& syms) {
    for (const auto& h : e.notint) {
        Rat v = eval_expr(*h, syms);
        if (is_integer(v)) {
            // reconstruct a readable form of the violated hypothesis
            std::string names;
            for (const auto& s : expr_symbols(*h)) names += (names.empty() ? "" : ",") + s;
            fail(errc::argument, "hypothesis violated in entry '" + e.id +
                                     "': expression in {" + names + "} evaluates to the integer " + rat_str(v));
        }
    }
}

namespace {

std::array<long, 4> mobius_normalize(std::array<Rat, 4> m) {
    mpz_class den_lcm(1);
    for (const Rat& q : m) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_class g(0);
    for (const Rat& q : m) {
        mpz_class n = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) fail(errc::data, "degenerate Mobius matrix");
    std::array<long, 4> out{};
    long sign = 0;
    for (int i = 0; i < 4; ++i) {
        mpz_class n = m[i].get_num() * (den_lcm / m[i].get_den()) / g;
        out[i] = checked_long(n, "Mobius entry");
        if (sign == 0 && out[i] != 0) sign = out[i] > 0 ? 1 : -1;
    }
    if (sign < 0)
        for (auto& x : out) x = -x;
    return out;
}

} // namespace

Transform transform_of(const RelationSpec& e) {
    // L from the target parameter expressions, which must be integral linear
    // forms in the three symbols of the entry (checked by evaluation).
    std::vector<std::string> syms;
    for (int i = 0; i < 4; ++i)
        for (const auto& s : expr_symbols(*e.target[i]))
            if (std::find(syms.begin(), syms.end(), s) == syms.end()) syms.push_back(s);
    std::sort(syms.begin(), syms.end());
    if (syms.size() > 3) fail(errc::data, "entry '" + e.id + "' uses more than three symbols");
    while (syms.size() < 3) syms.push_back("#unused" + std::to_string(syms.size()));

    auto eval_at = [&](int row, const std::array<Rat, 3>& v) {
        std::map<std::string, Rat> env;
        for (int j = 0; j < 3; ++j) env[syms[j]] = v[j];
        return eval_expr(*e.target[row], env);
    };
    Transform t;
    for (int r = 0; r < 3; ++r) {
        Rat off = eval_at(r, {Rat(0), Rat(0), Rat(0)});
        if (off != 0) fail(errc::data, "entry '" + e.id + "': target row has a constant offset");
        for (int j = 0; j < 3; ++j) {
            std::array<Rat, 3> v{Rat(0), Rat(0), Rat(0)};
            v[j] = Rat(1);
            Rat coeff = eval_at(r, v);
            if (!is_integer(coeff))
                fail(errc::data, "entry '" + e.id + "': target is not an integral linear form");
            t.L[3 * r + j] = checked_long(coeff.get_num(), "matrix entry");
        }
    }
    // the fourth (lower) parameter must vanish identically
    std::map<std::string, Rat> probe{{syms[0], Rat(2, 7)}, {syms[1], Rat(3, 5)}, {syms[2], Rat(5, 11)}};
    if (eval_expr(*e.target[3], probe) != 0)
        fail(errc::data, "entry '" + e.id + "': fourth target parameter is not 0");
    long det = t.L[0] * (t.L[4] * t.L[8] - t.L[5] * t.L[7]) - t.L[1] * (t.L[3] * t.L[8] - t.L[5] * t.L[6]) +
               t.L[2] * (t.L[3] * t.L[7] - t.L[4] * t.L[6]);
    if (det != 1 && det != -1) fail(errc::data, "entry '" + e.id + "': matrix is not in GL3(Z)");

    if (e.map.num.degree() > 1 || e.map.den.degree() > 1)
        fail(errc::data, "entry '" + e.id + "': map is not a Mobius transformation");
    t.m = mobius_normalize({e.map.num.at(1), e.map.num.at(0), e.map.den.at(1), e.map.den.at(0)});
    return t;
}

Transform transform_compose(const Transform& x, const Transform& y) {
    Transform r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            long s = 0;
            for (int k = 0; k < 3; ++k) s += x.L[3 * i + k] * y.L[3 * k + j];
            r.L[3 * i + j] = s;
        }
    // Mobius parts compose in the opposite order; see transform_group docs
    const auto& a = y.m;
    const auto& b = x.m;
    std::array<Rat, 4> m{Rat(a[0] * b[0] + a[1] * b[2]), Rat(a[0] * b[1] + a[1] * b[3]),
                         Rat(a[2] * b[0] + a[3] * b[2]), Rat(a[2] * b[1] + a[3] * b[3])};
    r.m = mobius_normalize(m);
    return r;
}

GroupSummary transform_group(const std::vector<Transform>& generators, std::size_t cap) {
    std::vector<Transform> elems;
    for (const auto& g : generators)
        if (std::find(elems.begin(), elems.end(), g) == elems.end()) elems.push_back(g);
    GroupSummary out;
    out.generator_count = elems.size();
    std::vector<Transform> frontier = elems;
    while (!frontier.empty()) {
        std::vector<Transform> next;
        for (const auto& x : frontier)
            for (size_t i = 0, n = elems.size(); i < n; ++i) {
                for (const Transform& pr : {transform_compose(x, elems[i]), transform_compose(elems[i], x)}) {
                    if (std::find(elems.begin(), elems.end(), pr) == elems.end()) {
                        elems.push_back(pr);
                        next.push_back(pr);
                    }
                }
                if (elems.size() > cap) fail(errc::convergence, "group closure exceeded the element cap");
            }
        frontier = std::move(next);
    }
    std::sort(elems.begin(), elems.end());
    out.is_abelian = true;
    for (const auto& x : elems) {
        for (const auto& y : elems)
            if (!(transform_compose(x, y) == transform_compose(y, x))) {
                out.is_abelian = false;
                break;
            }
        if (!out.is_abelian) break;
    }
    for (const auto& g : elems) ++out.census[g.m];
    out.elements = std::move(elems);
    return out;
}

} // namespace hgm
