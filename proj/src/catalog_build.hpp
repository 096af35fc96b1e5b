#pragma once

// Authoring helpers for the built-in catalog tables. "$" in member strings is
// replaced by the slot prefix ("w" / "z") at set-expansion time, so one member
// definition serves both the W and Z slots of an entry.

#include <functional>

#include "wxz/catalog.hpp"

namespace wxz::detail {

using Strings = std::vector<std::string>;

inline ParamSpec P(const std::string& n) { return ParamSpec::free(n, Domain::Complex); }
inline ParamSpec Pnz(const std::string& n) { return ParamSpec::free(n, Domain::NonzeroComplex); }
inline ParamSpec Psign(const std::string& n) { return ParamSpec::free(n, Domain::Sign); }
inline ParamSpec Psq(const std::string& n) { return ParamSpec::free(n, Domain::Square); }
inline ParamSpec Pd(const std::string& n, const std::string& e) {
    return ParamSpec::bound(n, Expr::parse(e));
}

inline Constraint NZ(const std::string& e) {
    return Constraint{{Expr::parse(e)}, true, e + " != 0"};
}
inline Constraint NZany(const Strings& es) {
    Constraint c;
    std::string t;
    for (const auto& e : es) {
        c.exprs.push_back(Expr::parse(e));
        t += (t.empty() ? "" : " or ") + e + " != 0";
    }
    c.nonzero = true;
    c.text = t;
    return c;
}
inline Constraint EQ0(const std::string& e) {
    return Constraint{{Expr::parse(e)}, false, e + " = 0"};
}

MatrixRecipe fam(const std::string& family, const Strings& args);
MatrixRecipe grid16(const Strings& cells, const std::string& label = "");
MatrixRecipe identity_recipe();
MatrixRecipe arbitrary_recipe();  // 16 free parameters xx0..xx15
MatrixRecipe conj(MatrixRecipe base, const Strings& c4, ConjMode mode = ConjMode::Conj);
MatrixRecipe transposed(MatrixRecipe base);

std::vector<ParamSpec> arbitrary_params();

/// One member of a named solution set (family label plus how to build it).
struct MemberSpec {
    std::string label;
    std::string family;                 // empty for grid members
    Strings args;                       // "$" marks the prefix slot
    Strings grid;                       // 16 cells for grid members
    bool transpose = false;
    Strings conj;                       // 4 cells; "$" supported
    std::vector<std::pair<std::string, Domain>> params;  // unprefixed names
    Strings nonzero;                    // constraint exprs, "$" supported
};

const std::vector<MemberSpec>& set_members(const std::string& set_name);
std::vector<std::string> set_member_labels(const std::string& set_name);

/// An authored entry; set-valued slots are named and expanded by add_entry_def.
struct EntryDef {
    std::string id;
    EquationSet scope = EquationSet::WXZ;
    std::vector<ParamSpec> params;
    std::vector<Constraint> constraints;
    MatrixRecipe w, x, z;
    std::string wset, zset;
};

void add_entry_def(Catalog& cat, const EntryDef& def);

void add_families_and_sets(Catalog& cat);
void add_wxx_entries(Catalog& cat);
void add_xxz_entries(Catalog& cat);
void add_wxz_entries(Catalog& cat);

} // namespace wxz::detail
