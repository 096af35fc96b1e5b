#include "catalog_build.hpp"

namespace wxz::detail {

MatrixRecipe fam(const std::string& family, const Strings& args) {
    MatrixRecipe r;
    r.family = family;
    for (const auto& a : args) r.args.push_back(Expr::parse(a));
    std::string d = family;
    if (!args.empty()) {
        d += "(";
        for (std::size_t k = 0; k < args.size(); ++k) d += (k ? "," : "") + args[k];
        d += ")";
    }
    r.label = d;
    return r;
}

MatrixRecipe grid16(const Strings& cells, const std::string& label) {
    if (cells.size() != 16) throw Error("grid16 needs 16 cells");
    MatrixRecipe r;
    for (const auto& c : cells) r.grid.push_back(Expr::parse(c));
    r.label = label.empty() ? "grid" : label;
    return r;
}

MatrixRecipe identity_recipe() {
    MatrixRecipe r = grid16({"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "0", "0",
                             "0", "1"},
                            "1");
    return r;
}

MatrixRecipe arbitrary_recipe() {
    Strings cells;
    for (int k = 0; k < 16; ++k) cells.push_back("xx" + std::to_string(k));
    MatrixRecipe r = grid16(cells, "arbitrary");
    return r;
}

std::vector<ParamSpec> arbitrary_params() {
    std::vector<ParamSpec> ps;
    for (int k = 0; k < 16; ++k) ps.push_back(P("xx" + std::to_string(k)));
    return ps;
}

MatrixRecipe conj(MatrixRecipe base, const Strings& c4, ConjMode mode) {
    if (c4.size() != 4) throw Error("conjugator needs 4 cells");
    for (const auto& c : c4) base.conj.push_back(Expr::parse(c));
    base.conj_mode = mode;
    std::string how = mode == ConjMode::Conj ? "C.C^-1"
                      : mode == ConjMode::ConjInv ? "C^-1.C"
                                                  : "C.C";
    base.label = "(" + base.label + " by " + how + ")";
    return base;
}

MatrixRecipe transposed(MatrixRecipe base) {
    base.transpose = true;
    base.label += "^T";
    return base;
}

namespace {

std::string subst(const std::string& s, const std::string& prefix) {
    std::string out;
    for (char c : s) {
        if (c == '$') out += prefix;
        else out.push_back(c);
    }
    return out;
}

MemberSpec plain(const std::string& family,
                 std::vector<std::pair<std::string, Domain>> params) {
    MemberSpec m;
    m.label = family;
    m.family = family;
    for (const auto& [n, d] : params) m.args.push_back("$" + n);
    m.params = std::move(params);
    return m;
}

std::vector<MemberSpec> members_5v() {
    return {
        plain("R_3.1", {{"r", Domain::NonzeroComplex},
                        {"s", Domain::NonzeroComplex},
                        {"t", Domain::NonzeroComplex}}),
        plain("R_2.1", {{"r", Domain::NonzeroComplex}, {"s", Domain::NonzeroComplex}}),
        plain("R_2.2", {{"r", Domain::NonzeroComplex}, {"s", Domain::NonzeroComplex}}),
    };
}

std::vector<MemberSpec> members_8v() {
    auto v = members_5v();
    v.push_back(plain("R_1.1", {{"r", Domain::NonzeroComplex}}));
    v.push_back(plain("R_1.2", {{"s", Domain::NonzeroComplex}}));
    v.push_back(plain("R_1.4", {{"t", Domain::NonzeroComplex}}));
    v.push_back(plain("R_0.1", {}));
    v.push_back(plain("R_0.2", {}));
    v.push_back(plain("R_0.3", {}));
    v.push_back(plain("R_0.4", {}));
    return v;
}

std::vector<MemberSpec> members_st() {
    MemberSpec id31;
    id31.label = "R_3.1(1,1,1)";
    id31.family = "R_3.1";
    id31.args = {"1", "1", "1"};
    return {
        id31,
        plain("R_2.3", {{"u", Domain::Complex}, {"v", Domain::Complex}}),
        plain("R_1.3", {{"u", Domain::Complex}}),
        plain("R_0.1", {}),
    };
}

std::vector<MemberSpec> members_s() {
    auto v = members_5v();
    v.push_back(plain("R_2.3", {{"u", Domain::Complex}, {"v", Domain::Complex}}));
    v.push_back(plain("R_1.1", {{"r", Domain::NonzeroComplex}}));
    v.push_back(plain("R_1.2", {{"s", Domain::NonzeroComplex}}));
    v.push_back(plain("R_1.3", {{"u", Domain::Complex}}));
    v.push_back(plain("R_1.4", {{"t", Domain::NonzeroComplex}}));
    v.push_back(plain("R_0.1", {}));
    v.push_back(plain("R_0.2", {}));
    v.push_back(plain("R_0.3", {}));
    v.push_back(plain("R_0.4", {}));
    return v;
}

MemberSpec member_r12t() {
    MemberSpec m = plain("R_1.2", {{"s", Domain::NonzeroComplex}});
    m.label = "R_1.2T";
    m.transpose = true;
    return m;
}

MemberSpec member_p() {
    MemberSpec m = plain("R_0.4", {});
    m.label = "P";
    return m;
}

MemberSpec dq(const std::string& label, const std::string& family,
              std::vector<std::pair<std::string, Domain>> params, bool transpose = false) {
    MemberSpec m = plain(family, std::move(params));
    m.label = label;
    m.transpose = transpose;
    m.conj = {"1", "0", "0", "$q"};
    m.params.emplace_back("q", Domain::NonzeroComplex);
    return m;
}

std::vector<MemberSpec> members_r8v() {
    std::vector<MemberSpec> v = members_5v();
    v.push_back(dq("QR_1.1Q", "R_1.1", {{"r", Domain::NonzeroComplex}}));
    v.push_back(dq("QR_1.2Q", "R_1.2", {{"s", Domain::NonzeroComplex}}));
    v.push_back(dq("QR_1.2TQ", "R_1.2", {{"s", Domain::NonzeroComplex}}, true));
    v.push_back(dq("QR_1.4Q", "R_1.4", {{"t", Domain::NonzeroComplex}}));
    v.push_back(dq("QR_0.1Q", "R_0.1", {}));
    v.push_back(dq("QR_0.2Q", "R_0.2", {}));
    v.push_back(dq("QR_0.3Q", "R_0.3", {}));
    v.push_back(dq("QR_0.2TQ", "R_0.2", {}, true));
    v.push_back(dq("QR_0.3TQ", "R_0.3", {}, true));

    MemberSpec m1;
    m1.label = "M_8V+";
    m1.grid = {"1", "0", "0", "$p/$q^2", "0", "1", "$p", "0",
               "0", "$p", "1", "0", "$p*$q^2", "0", "0", "1"};
    m1.params = {{"p", Domain::Complex}, {"q", Domain::NonzeroComplex}};
    m1.nonzero = {"$p-1", "$p+1"};
    v.push_back(m1);

    MemberSpec m2 = m1;
    m2.label = "M_8V-";
    m2.grid = {"1", "0", "0", "$p/$q^2", "0", "-1", "$p", "0",
               "0", "$p", "-1", "0", "$p*$q^2", "0", "0", "1"};
    v.push_back(m2);
    return v;
}

} // namespace

const std::vector<MemberSpec>& set_members(const std::string& set_name) {
    static const std::map<std::string, std::vector<MemberSpec>> defs = [] {
        std::map<std::string, std::vector<MemberSpec>> m;
        m["S_5V"] = members_5v();
        m["S_8V"] = members_8v();
        m["S_ST"] = members_st();
        m["S"] = members_s();
        m["R_8V"] = members_r8v();
        auto s_u = members_s();
        s_u.push_back(member_r12t());
        m["S_u_R12T"] = s_u;
        auto s8_u = members_8v();
        s8_u.push_back(member_r12t());
        m["S_8V_u_R12T"] = s8_u;
        auto s5_p = members_5v();
        s5_p.push_back(member_p());
        m["S_5V_u_P"] = s5_p;
        auto st_p = members_st();
        st_p.push_back(member_p());
        m["S_ST_u_P"] = st_p;
        return m;
    }();
    auto it = defs.find(set_name);
    if (it == defs.end()) throw Error("unknown set: " + set_name);
    return it->second;
}

std::vector<std::string> set_member_labels(const std::string& set_name) {
    std::vector<std::string> out;
    for (const auto& m : set_members(set_name)) out.push_back(m.label);
    return out;
}

namespace {

/// Materializes one set member into a recipe plus its sampled parameters.
void expand_member(const MemberSpec& m, const std::string& prefix, MatrixRecipe& recipe,
                   std::vector<ParamSpec>& params, std::vector<Constraint>& constraints) {
    if (!m.family.empty()) {
        Strings args;
        for (const auto& a : m.args) args.push_back(subst(a, prefix));
        recipe = fam(m.family, args);
    } else {
        Strings cells;
        for (const auto& c : m.grid) cells.push_back(subst(c, prefix));
        recipe = grid16(cells, m.label);
    }
    recipe.transpose = m.transpose;
    if (m.transpose) recipe.label += "^T";
    if (!m.conj.empty()) {
        Strings c4;
        for (const auto& c : m.conj) c4.push_back(subst(c, prefix));
        MatrixRecipe tmp = conj(recipe, c4, ConjMode::Conj);
        recipe = tmp;
        recipe.label = m.label;
    }
    recipe.label = m.label;
    for (const auto& [n, d] : m.params) params.push_back(ParamSpec::free(prefix + n, d));
    for (const auto& c : m.nonzero) constraints.push_back(NZ(subst(c, prefix)));
}

std::string recipe_desc(const char* slot, const MatrixRecipe& r) {
    return std::string(slot) + "=" + (r.label.empty() ? "?" : r.label);
}

} // namespace

void add_entry_def(Catalog& cat, const EntryDef& def) {
    std::vector<MemberSpec> wms, zms;
    if (!def.wset.empty()) wms = set_members(def.wset);
    if (!def.zset.empty()) zms = set_members(def.zset);

    const std::size_t wn = wms.empty() ? 1 : wms.size();
    const std::size_t zn = zms.empty() ? 1 : zms.size();
    for (std::size_t wi = 0; wi < wn; ++wi) {
        for (std::size_t zi = 0; zi < zn; ++zi) {
            SolutionEntry e;
            e.scope = def.scope;
            e.params = def.params;
            e.constraints = def.constraints;
            e.w = def.w;
            e.x = def.x;
            e.z = def.z;
            std::string suffix;
            if (!wms.empty()) {
                expand_member(wms[wi], "w", e.w, e.params, e.constraints);
                suffix += "[W:" + wms[wi].label + "]";
            }
            if (!zms.empty()) {
                expand_member(zms[zi], "z", e.z, e.params, e.constraints);
                suffix += "[Z:" + zms[zi].label + "]";
            }
            e.id = def.id + suffix;
            std::string d;
            if (!e.w.empty() || def.scope != EquationSet::XXZ) d += recipe_desc("W", e.w);
            if (!d.empty()) d += "; ";
            d += recipe_desc("X", e.x);
            if (def.scope != EquationSet::WXX) d += "; " + recipe_desc("Z", e.z);
            e.description = d;
            cat.add_entry(std::move(e));
        }
    }
}

} // namespace wxz::detail
