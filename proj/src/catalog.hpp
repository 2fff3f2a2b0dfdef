#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "expr.hpp"
#include "hyp.hpp"
#include "ratmap.hpp"

namespace hgm {

// Which side of a relation a twist factor is printed next to.
enum class Side { source, target };

// One multiplicative factor (or parameter conjugation) attached to a relation.
struct TwistComp {
    enum class Kind { theta, eta, kchar, sign, tate, jac, conj };
    Kind kind = Kind::theta;
    Side side = Side::target;
    ExprPtr exp;                       // theta/eta/kchar/sign exponent, tate index, conj index
    std::optional<RationalMap> u;      // kchar argument, a rational function of z
    std::vector<ExprPtr> jac_a, jac_b; // jac numerator and denominator lists

    std::string str() const;
};

// A source-to-target relation between two rank-2 hypergeometric sums:
// parameters are expressions in the free symbols; the coordinate change is a
// rational map in z; comps carry the printed twist data.
struct RelationSpec {
    std::string id;
    std::map<std::string, Rat> defaults;       // free symbols with default values
    std::array<ExprPtr, 4> source, target;
    RationalMap map;
    std::vector<TwistComp> comps;
    std::string calibration = "standard";      // or "jac-direct"
    std::string expected_profile;              // optional frozen profile string
    std::vector<ExprPtr> notint;               // hypotheses: each must be non-integral

    bool has(TwistComp::Kind k) const;
};

struct Catalog {
    std::string kind;  // "kummer-catalog" or "cover-catalog"
    int version = 0;
    std::vector<RelationSpec> entries;

    const RelationSpec& entry(const std::string& id) const;
};

Catalog load_catalog(const std::string& path);

// Default location of a catalog data file: HGM_DATA_DIR env var if set, else
// the configured install-time directory.
std::string data_file(const std::string& name);

// Evaluates the four parameter expressions of one side.
HGMParams eval_params(const std::array<ExprPtr, 4>& side, const std::map<std::string, Rat>& syms);

// Checks the entry's notint hypotheses at the given symbol values; throws
// errc::argument naming the violated expression.
void check_hypotheses(const RelationSpec& e, const std::map<std::string, Rat>& syms);

// ---- closure group of the Kummer transformations ----

struct Transform {
    std::array<long, 9> L{};  // 3x3, row-major, acting on (a,b,c)
    std::array<long, 4> m{};  // Mobius matrix, canonical PGL2(Z) form

    bool operator==(const Transform& o) const { return L == o.L && m == o.m; }
    bool operator<(const Transform& o) const { return L != o.L ? L < o.L : m < o.m; }
};

// Derives (L, mobius) from a catalog entry; requires the target parameter
// expressions to be integral linear forms in the entry symbols.
Transform transform_of(const RelationSpec& e);

// Composition law under which the 24 transformations close: matrices multiply
// left-to-right while Mobius parts multiply right-to-left.
Transform transform_compose(const Transform& x, const Transform& y);

struct GroupSummary {
    std::vector<Transform> elements;   // sorted
    bool is_abelian = false;
    std::size_t generator_count = 0;   // distinct generator images
    std::map<std::array<long, 4>, std::size_t> census; // elements per Mobius part
};

GroupSummary transform_group(const std::vector<Transform>& generators, std::size_t cap = 100000);

} // namespace hgm
