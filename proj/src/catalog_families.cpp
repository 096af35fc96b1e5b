#include "catalog_build.hpp"

namespace wxz::detail {

namespace {

MatrixFamily make(const std::string& name, std::vector<ParamSpec> params, Strings grid,
                  std::vector<Constraint> constraints = {}) {
    return MatrixFamily(name, 4, std::move(params), std::move(grid), std::move(constraints));
}

void add_r_families(Catalog& cat) {
    cat.add_family(make("R_3.1", {Pnz("r"), Pnz("s"), Pnz("t")},
                        {"1", "0", "0", "0",
                         "0", "r", "0", "0",
                         "0", "0", "s", "0",
                         "0", "0", "0", "t"}));
    cat.add_family(make("R_2.1", {Pnz("r"), Pnz("s")},
                        {"1", "0", "0", "0",
                         "0", "r", "0", "0",
                         "0", "1-r*s", "s", "0",
                         "0", "0", "0", "1"}));
    cat.add_family(make("R_2.2", {Pnz("r"), Pnz("s")},
                        {"1", "0", "0", "0",
                         "0", "r", "0", "0",
                         "0", "1-r*s", "s", "0",
                         "0", "0", "0", "-r*s"}));
    cat.add_family(make("R_2.3", {P("u"), P("v")},
                        {"1", "0", "0", "0",
                         "1", "1", "0", "0",
                         "u", "0", "1", "0",
                         "v", "u", "1", "1"}));
    cat.add_family(make("R_1.1", {Pnz("r")},
                        {"r-r^-1+2", "0", "0", "r-r^-1",
                         "0", "r+r^-1", "r-r^-1", "0",
                         "0", "r-r^-1", "r+r^-1", "0",
                         "r-r^-1", "0", "0", "r-r^-1-2"}));
    cat.add_family(make("R_1.2", {Pnz("s")},
                        {"1", "0", "0", "0",
                         "0", "1", "0", "0",
                         "0", "1-s", "s", "0",
                         "1", "0", "0", "-s"}));
    cat.add_family(make("R_1.3", {P("u")},
                        {"1", "0", "0", "0",
                         "-1", "1", "0", "0",
                         "1", "0", "1", "0",
                         "u", "-u", "u", "1"}));
    cat.add_family(make("R_1.4", {Pnz("t")},
                        {"0", "0", "0", "1",
                         "0", "0", "t", "0",
                         "0", "t", "0", "0",
                         "1", "0", "0", "0"}));
    cat.add_family(make("R_0.1", {},
                        {"1", "0", "0", "0",
                         "0", "1", "0", "0",
                         "0", "0", "1", "0",
                         "1", "0", "0", "1"}));
    cat.add_family(make("R_0.2", {},
                        {"1", "0", "0", "0",
                         "0", "-1", "0", "0",
                         "0", "0", "-1", "0",
                         "1", "0", "0", "1"}));
    cat.add_family(make("R_0.3", {},
                        {"1", "0", "0", "i",
                         "0", "1", "1", "0",
                         "0", "1", "-1", "0",
                         "i", "0", "0", "1"}));
    cat.add_family(make("R_0.4", {},
                        {"1", "0", "0", "0",
                         "0", "0", "1", "0",
                         "0", "1", "0", "0",
                         "0", "0", "0", "1"}));
}

void add_x_families(Catalog& cat) {
    cat.add_family(make("X1", {P("a"), P("b"), P("c")},
                        {"1", "0", "0", "0",
                         "0", "a", "0", "0",
                         "0", "0", "b", "0",
                         "0", "0", "0", "c"}));
    cat.add_family(make("X2", {P("a"), P("b"), P("c")},
                        {"1", "0", "0", "0",
                         "b", "1", "0", "0",
                         "0", "0", "a", "0",
                         "0", "0", "c", "a"},
                        {NZany({"b", "c"})}));
    cat.add_family(make("X3", {P("a"), P("b"), P("c")},
                        {"1", "0", "0", "0",
                         "0", "a", "0", "0",
                         "b", "0", "1", "0",
                         "0", "c", "0", "a"}));
    cat.add_family(make("X4", {P("a"), P("b"), P("c")},
                        {"1", "0", "0", "0",
                         "a", "1", "0", "0",
                         "b", "0", "1", "0",
                         "c", "b", "a", "1"},
                        {NZany({"a", "b", "c"})}));
    cat.add_family(make("X5", {P("a"), P("b"), P("c")},
                        {"1", "0", "0", "0",
                         "0", "0", "0", "a",
                         "0", "0", "b", "0",
                         "0", "c", "0", "0"},
                        {NZ("a"), NZ("b"), NZ("c")}));
    cat.add_family(make("X6", {P("a"), P("b"), P("c")},
                        {"0", "0", "1", "0",
                         "0", "0", "0", "a",
                         "b", "0", "0", "0",
                         "0", "c", "0", "0"},
                        {NZ("a"), NZ("b"), NZ("c")}));
    cat.add_family(make("X7", {P("a"), P("b")},
                        {"0", "0", "1", "0",
                         "0", "0", "a", "1",
                         "1", "0", "0", "0",
                         "b", "1", "0", "0"},
                        {NZany({"a", "b"})}));
    cat.add_family(make("X8", {P("a")},
                        {"0", "0", "1", "0",
                         "0", "0", "0", "-1",
                         "0", "a", "0", "0",
                         "1", "0", "0", "0"}));
    cat.add_family(make("X9", {P("b"), P("c"), P("d")},
                        {"1", "0", "0", "0",
                         "0", "b", "0", "0",
                         "0", "0", "c", "0",
                         "1", "0", "0", "d"}));
    cat.add_family(make("X10", {P("b"), P("c"), P("d"), P("g")},
                        {"1", "0", "0", "0",
                         "0", "b", "1", "0",
                         "0", "0", "c", "0",
                         "g", "0", "0", "d"},
                        {NZ("g")}));
    cat.add_family(make("X11", {P("a"), P("b"), P("c"), P("d")},
                        {"0", "a*b", "c", "0",
                         "a", "0", "0", "-c",
                         "d", "0", "0", "b",
                         "0", "-d", "1", "0"}));
    cat.add_family(make("X12", {P("a"), P("b")},
                        {"a", "0", "0", "0",
                         "0", "a", "0", "0",
                         "1", "0", "0", "b",
                         "0", "-1", "b", "0"}));
    cat.add_family(make("X13", {Pnz("g")},
                        {"0", "0", "i+1", "0",
                         "2*(i+1)*g", "0", "0", "i-1",
                         "-i*g", "0", "0", "1",
                         "0", "g", "0", "0"}));
    cat.add_family(make("X14", {P("a"), P("c"), Psign("eps"), Pd("p", "1/(a^2-c^2)")},
                        {"eps*a*p", "eps*c", "1", "0",
                         "eps*c", "eps*a*p", "0", "-1",
                         "eps", "0", "a", "c*p",
                         "0", "-eps", "c*p", "a"},
                        {EQ0("c^2*p-a^2*p+1")}));
    cat.add_family(make("X15", {P("a")},
                        {"a", "1-a^2", "0", "0",
                         "1", "-a", "0", "0",
                         "0", "0", "1", "0",
                         "0", "0", "0", "-1"},
                        {NZ("a-1"), NZ("a+1")}));
    cat.add_family(make("X16", {P("a"), P("b"), P("c"), P("d")},
                        {"1", "0", "0", "0",
                         "a", "1", "0", "0",
                         "b", "0", "1", "0",
                         "0", "c", "d", "1"},
                        {NZ("a-d"), NZ("b-c")}));
    cat.add_family(make("X17", {P("a"), P("b")},
                        {"1", "0", "0", "0",
                         "a", "1", "1", "0",
                         "a+b+1", "0", "1", "0",
                         "0", "a+b-1", "b", "1"}));
    cat.add_family(make("X18", {P("a")},
                        {"0", "0", "1", "0",
                         "0", "0", "0", "-1",
                         "a", "1", "0", "0",
                         "1-a^2", "-a", "0", "0"}));
    cat.add_family(make("X19", {P("a"), P("b"), P("c"), Psign("eps")},
                        {"1", "0", "0", "0",
                         "0", "a", "0", "0",
                         "b", "0", "eps", "0",
                         "0", "c", "0", "-a"}));
    cat.add_family(make("X20", {P("a"), P("b"), P("c")},
                        {"1", "0", "0", "0",
                         "b", "1", "0", "0",
                         "c", "0", "-1", "0",
                         "a", "c", "-b", "-1"}));
    cat.add_family(make("X21", {P("a"), P("b")},
                        {"a", "b", "1", "0",
                         "b", "a", "0", "-1",
                         "0", "i", "-b", "-a",
                         "-i", "0", "-a", "-b"}));
    cat.add_family(make("X22", {P("a"), P("b"), P("c"), P("d"), P("e"), P("f"), P("g"), P("h")},
                        {"a", "0", "b", "0",
                         "c", "a", "d", "b",
                         "e", "0", "f", "0",
                         "g", "e", "h", "f"}));
    cat.add_family(make("X23", {P("a"), P("b"), P("c"), P("d"), P("e"), P("f"), P("g"), P("h")},
                        {"a", "0", "b", "0",
                         "0", "c", "0", "d",
                         "e", "0", "f", "0",
                         "0", "g", "0", "h"}));
}

// Canonical-form cell tables. "0" and "1" are fixed, "al+1"/"al-1" are the
// scaled eigenvalue pair, anything else is a free entry; repeated names tie.
const char* const kForms[14][16] = {
    {"a1", "a2", "al+1", "0", "b1", "b2", "0", "al-1", "c1", "c2", "c3", "c4", "d1", "d2", "d3", "d4"},
    {"a1", "a2", "a3", "0", "b1", "b2", "1", "a3", "c1", "1", "c3", "c4", "0", "d2", "d3", "d4"},
    {"a1", "a2", "a3", "0", "b1", "b2", "1", "a3", "al+1", "0", "c3", "c4", "0", "al-1", "d3", "d4"},
    {"a1", "a2", "a3", "0", "b1", "b2", "1", "a3", "c1", "0", "c3", "c4", "d1", "c1", "d3", "d4"},
    {"a1", "a2", "a3", "0", "b1", "b2", "0", "a3", "al+1", "0", "c3", "c4", "0", "al-1", "d3", "d4"},
    {"a1", "a2", "a3", "0", "b1", "b2", "0", "a3", "c1", "0", "c3", "1", "1", "c1", "0", "d4"},
    {"a1", "a2", "a3", "0", "b1", "b2", "0", "a3", "c1", "0", "al+1", "0", "1", "c1", "0", "al-1"},
    {"a1", "a2", "a3", "0", "b1", "b2", "0", "a3", "c1", "0", "c3", "0", "1", "c1", "d3", "c3"},
    {"a1", "a2", "a3", "0", "b1", "b2", "0", "a3", "c1", "0", "al+1", "0", "0", "c1", "0", "al-1"},
    {"a1", "1", "a3", "0", "0", "b2", "0", "a3", "c1", "0", "c3", "0", "0", "c1", "1", "c3"},
    {"al+1", "0", "a3", "0", "0", "al-1", "0", "a3", "c1", "0", "c3", "0", "0", "c1", "1", "c3"},
    {"a1", "0", "a3", "0", "b1", "a1", "0", "a3", "c1", "0", "c3", "0", "0", "c1", "1", "c3"},
    {"a1", "0", "a3", "0", "0", "b2", "0", "a3", "c1", "0", "c3", "0", "0", "c1", "0", "c3"},
    {"a1", "0", "a3", "0", "1", "a1", "0", "a3", "c1", "0", "c3", "0", "0", "c1", "0", "c3"},
};

void add_canonical_forms(Catalog& cat) {
    for (int f = 0; f < 14; ++f) {
        CanonicalPattern pat;
        pat.index = f + 1;
        std::map<std::string, int> ties;
        std::map<std::string, int> counts;
        for (int k = 0; k < 16; ++k) counts[kForms[f][k]]++;

        std::vector<ParamSpec> params;
        Strings grid;
        std::set<std::string> seen;
        for (int k = 0; k < 16; ++k) {
            const std::string cell = kForms[f][k];
            PatternCell pc;
            if (cell == "0") {
                pc.kind = PatternCell::Zero;
                grid.push_back("0");
            } else if (cell == "1") {
                pc.kind = PatternCell::One;
                grid.push_back("1");
            } else if (cell == "al+1") {
                pc.kind = PatternCell::AlphaPlus;
                grid.push_back("alpha+1");
                if (!seen.count("alpha")) {
                    params.push_back(P("alpha"));
                    seen.insert("alpha");
                }
            } else if (cell == "al-1") {
                pc.kind = PatternCell::AlphaMinus;
                grid.push_back("alpha-1");
            } else {
                pc.kind = PatternCell::Free;
                if (counts[cell] > 1) {
                    auto it = ties.find(cell);
                    if (it == ties.end()) it = ties.emplace(cell, static_cast<int>(ties.size())).first;
                    pc.tie = it->second;
                }
                grid.push_back(cell);
                if (!seen.count(cell)) {
                    params.push_back(P(cell));
                    seen.insert(cell);
                }
            }
            pat.cells[k] = pc;
        }
        cat.add_pattern(pat);
        cat.add_family(MatrixFamily("A_" + std::to_string(f + 1), 4, std::move(params),
                                    std::move(grid), {}, /*require_invertible=*/false));
    }
}

} // namespace

void add_families_and_sets(Catalog& cat) {
    add_r_families(cat);
    add_x_families(cat);
    add_canonical_forms(cat);
    for (const char* name : {"S", "S_5V", "S_8V", "S_ST", "R_8V", "S_u_R12T", "S_8V_u_R12T",
                             "S_5V_u_P", "S_ST_u_P"}) {
        SolutionSet s;
        s.name = name;
        s.members = set_member_labels(name);
        cat.add_set(std::move(s));
    }
}

} // namespace wxz::detail
