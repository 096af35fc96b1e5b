#include "catalog_build.hpp"

// Pairs (X, Z) solving [X,X,Z] = 0 and [Z,Z,Z] = 0: the trivial Z = P row for
// every X family, then the nontrivial list per X family. Conjugated Z's are
// built as (C (x) C) R (C (x) C)^-1 from the listed 2x2 conjugators; radicands
// are sampled as perfect squares where that keeps the matrix exact.

namespace wxz::detail {

namespace {

EntryDef base(const std::string& id) {
    EntryDef d;
    d.id = id;
    d.scope = EquationSet::XXZ;
    return d;
}

void block_x1(Catalog& cat) {
    {
        EntryDef d = base("xxz/X1/1");
        d.params = {Pnz("a"), Pnz("b"), Pnz("c")};
        d.x = fam("X1", {"a", "b", "c"});
        d.zset = "S_5V";
        add_entry_def(cat, d);
    }
    const char* configs[3][3] = {{"-1", "b", "b"}, {"-1", "b", "-b"}, {"1", "b", "-b"}};
    for (int k = 0; k < 3; ++k) {
        EntryDef d = base("xxz/X1/2" + std::string(1, char('a' + k)));
        d.params = {Pnz("b")};
        d.x = fam("X1", {configs[k][0], configs[k][1], configs[k][2]});
        d.zset = "R_8V";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X1/3");
        d.params = {Pnz("b")};
        d.x = fam("X1", {"1", "b", "b"});
        d.zset = "S_u_R12T";
        add_entry_def(cat, d);
    }
}

void block_x2_x3_x4(Catalog& cat) {
    {
        EntryDef d = base("xxz/X2/1");
        d.params = {Pnz("a"), P("b"), P("c")};
        d.x = fam("X2", {"a", "b", "c"});
        d.zset = "S_ST";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X3/1");
        d.params = {Pnz("a"), P("b"), P("c")};
        d.x = fam("X3", {"a", "b", "c"});
        d.zset = "S_5V";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X3/2");
        d.params = {P("b")};
        d.x = fam("X3", {"-1", "b", "-b"});
        d.zset = "R_8V";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X3/3");
        d.params = {P("b")};
        d.x = fam("X3", {"1", "b", "b"});
        d.zset = "S_u_R12T";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X4/1");
        d.params = {P("a"), P("b"), P("c")};
        d.x = fam("X4", {"a", "b", "c"});
        d.zset = "S_ST";
        add_entry_def(cat, d);
    }
}

void block_x5(Catalog& cat) {
    {
        EntryDef d = base("xxz/X5/1");
        d.params = {Pnz("c")};
        d.x = fam("X5", {"1/c", "-1", "c"});
        d.z = fam("R_1.1", {"i"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X5/2");
        d.params = {Pnz("c"), Pnz("x")};
        d.x = fam("X5", {"1/c", "-1", "c"});
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X5/3");
        d.params = {Pnz("a"), Pnz("c")};
        d.x = fam("X5", {"a", "1", "c"});
        d.zset = "S_5V";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X5/4");
        d.params = {Pnz("c")};
        d.x = fam("X5", {"1/c", "1", "c"});
        d.zset = "R_8V";
        add_entry_def(cat, d);
    }
}

void block_x6(Catalog& cat) {
    {
        EntryDef d = base("xxz/X6/1");
        d.params = {Pnz("b"), Pnz("c")};
        d.x = fam("X6", {"b/c", "b", "c"});
        d.z = fam("R_1.1", {"i"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X6/2");
        d.params = {Pnz("b"), Pnz("c"), Pnz("x")};
        d.x = fam("X6", {"b/c", "b", "c"});
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X6/3");
        d.params = {Pnz("b"), Pnz("c")};
        d.x = fam("X6", {"c/b", "b", "c"});
        d.zset = "S_5V";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X6/4");
        d.params = {Pnz("c")};
        d.x = fam("X6", {"-1", "-c", "c"});
        d.zset = "R_8V";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X6/5");
        d.params = {Pnz("c")};
        d.x = fam("X6", {"1", "c", "c"});
        d.zset = "S_u_R12T";
        add_entry_def(cat, d);
    }
}

void block_x7(Catalog& cat) {
    {
        EntryDef d = base("xxz/X7/1");
        d.params = {Pnz("a")};
        d.x = fam("X7", {"a", "a"});
        d.zset = "S_ST";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X7/2");
        d.params = {Pnz("a")};
        d.x = fam("X7", {"a", "-a"});
        d.z = fam("R_3.1", {"-1", "-1", "1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X7/3");
        d.params = {Pnz("a"), Pnz("x"), P("y")};
        d.x = fam("X7", {"a", "-a"});
        d.z = conj(fam("R_0.2", {}), {"x", "0", "y", "1"}, ConjMode::ConjInv);
        add_entry_def(cat, d);
    }
}

void block_x8(Catalog& cat) {
    const Strings conj_a = {"(1+eps*i)/sqrt(2)*sqrt(a)", "eps*sqrt(a)",
                            "(1-eps*i)/sqrt(2)", "i"};
    {
        EntryDef d = base("xxz/X8/1");
        d.params = {Psq("a"), Psign("eps"), Pnz("x")};
        d.x = fam("X8", {"a"});
        d.z = conj(fam("R_1.4", {"x"}), conj_a);
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X8/2");
        d.params = {Psq("a"), Psign("eps")};
        d.x = fam("X8", {"a"});
        d.z = conj(fam("R_0.3", {}), conj_a);
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X8/3");
        d.params = {Psq("a"), Pnz("x")};
        d.x = fam("X8", {"a"});
        d.z = conj(fam("R_3.1", {"x", "-x", "1"}), {"-sqrt(a)*i", "sqrt(a)*i", "1", "1"});
        add_entry_def(cat, d);
    }
}

void block_x9(Catalog& cat) {
    {
        EntryDef d = base("xxz/X9/1");
        d.params = {Pnz("b"), Pnz("c"), Pnz("d")};
        d.x = fam("X9", {"b", "c", "d"});
        d.z = fam("R_2.1", {"c", "b/d"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X9/2");
        d.params = {Pnz("q"), Pnz("x")};
        d.x = fam("X9", {"1", "1", "-1"});
        d.z = conj(fam("R_1.2", {"x"}), {"1", "0", "0", "q"});
        add_entry_def(cat, d);
    }
    {
        // D(q) R_1.2^at(x) D(q)^-1; the at-transposition folds into the conjugator
        EntryDef d = base("xxz/X9/3");
        d.params = {Pnz("q"), Pnz("x")};
        d.x = fam("X9", {"1", "-1", "1"});
        d.z = conj(transposed(fam("R_1.2", {"x"})), {"0", "1", "q", "0"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X9/4");
        d.params = {Pnz("b"), Pnz("c"), Pnz("x")};
        d.x = fam("X9", {"b", "c", "-c*b"});
        d.z = fam("R_2.2", {"c", "x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X9/5");
        d.params = {Psign("eps"), Pnz("q")};
        d.x = fam("X9", {"eps", "-1", "-eps"});
        d.z = conj(fam("R_0.2", {}), {"1", "0", "0", "q"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X9/6");
        d.params = {Pnz("c"), Pnz("x")};
        d.constraints = {NZ("c-1")};
        d.x = fam("X9", {"1", "c", "c"});
        d.z = conj(fam("R_3.1", {"c", "1/c", "1"}), {"1-c", "0", "x", "x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X9/7");
        d.params = {};
        d.x = fam("X9", {"1", "1", "1"});
        d.zset = "S_ST";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X9/8");
        d.params = {Psign("eps")};
        d.x = fam("X9", {"eps", "1", "eps"});
        d.z = fam("R_0.1", {});
        add_entry_def(cat, d);
    }
}

void block_x10(Catalog& cat) {
    {
        EntryDef d = base("xxz/X10/1");
        d.params = {Pnz("d"), Pnz("g"), Psign("eps")};
        d.x = fam("X10", {"eps*d", "eps", "d", "g"});
        d.z = fam("R_3.1", {"eps", "eps", "1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X10/2");
        d.params = {Pnz("d"), Pnz("g"), Psign("eps")};
        d.x = fam("X10", {"eps*d", "-eps", "d", "g"});
        d.z = fam("R_2.1", {"-eps", "eps"});
        add_entry_def(cat, d);
    }
    {
        // x = k^2/g keeps sqrt(g*x) exact
        EntryDef d = base("xxz/X10/3");
        d.params = {Pnz("d"), Pnz("g"), Psq("k2"), Pd("x", "k2/g")};
        d.constraints = {NZ("1-x*(1-d^2)")};
        d.x = fam("X10", {"-d", "1", "d", "g"});
        d.z = conj(fam("R_1.2", {"-1+x*(1-d^2)"}), {"1", "0", "0", "sqrt(g*x)"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X10/4");
        d.params = {Pnz("d"), Pnz("g"), Psq("k2"), Pd("x", "k2/g")};
        d.constraints = {NZ("1+x*(1-d^2)")};
        d.x = fam("X10", {"d", "-1", "d", "g"});
        d.z = conj(transposed(fam("R_1.2", {"-1-x*(1-d^2)"})), {"0", "1", "sqrt(g*x)", "0"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X10/5");
        d.params = {Pnz("g")};
        d.x = fam("X10", {"1", "1", "1", "g"});
        d.zset = "S_ST";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X10/6");
        d.params = {Pnz("g"), Pnz("x"), P("y")};
        d.x = fam("X10", {"1", "-1", "-1", "g"});
        d.z = conj(fam("R_0.2", {}), {"x", "0", "y", "1"}, ConjMode::ConjInv);
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X10/7");
        d.params = {Pnz("g")};
        d.x = fam("X10", {"-1", "-1", "1", "g"});
        d.z = fam("R_0.2", {});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X10/8");
        d.params = {Pnz("g")};
        d.x = fam("X10", {"-1", "1", "-1", "g"});
        d.z = fam("R_0.1", {});
        add_entry_def(cat, d);
    }
}

void block_x12(Catalog& cat) {
    {
        EntryDef d = base("xxz/X12/1");
        d.params = {Pnz("a"), Pnz("b")};
        d.x = fam("X12", {"a", "b"});
        d.z = conj(fam("R_2.2", {"b/a", "b/a"}), {"1", "1", "1", "-1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X12/2");
        d.params = {Pnz("a"), Pnz("b")};
        d.x = fam("X12", {"a", "b"});
        d.z = conj(fam("R_1.1", {"a/b"}), {"1", "1", "1", "-1"});
        add_entry_def(cat, d);
    }
    {
        // q^2 = 1 - b/a, sampled as b = a(1-q^2)
        EntryDef d = base("xxz/X12/3");
        d.params = {Pnz("a"), Pnz("q"), Pd("b", "a*(1-q^2)")};
        d.constraints = {NZ("1-q^2")};
        d.x = fam("X12", {"a", "b"});
        d.z = conj(fam("R_1.2", {"b/a"}), {"1", "q", "1", "-q"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X12/4");
        d.params = {Pnz("a"), Pnz("q"), Pd("b", "a*(q^2-1)")};
        d.constraints = {NZ("q^2-1")};
        d.x = fam("X12", {"a", "b"});
        d.z = conj(fam("R_1.2", {"-b/a"}), {"1", "q", "-1", "q"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X12/5");
        d.params = {Pnz("b"), Pnz("q"), Pd("a", "b*(-1-q^2)")};
        d.constraints = {NZ("1+q^2")};
        d.x = fam("X12", {"a", "b"});
        d.z = conj(transposed(fam("R_1.2", {"-a/b"})), {"q", "1", "-q", "1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X12/6");
        d.params = {Pnz("b"), Pnz("q"), Pd("a", "b*(1+q^2)")};
        d.constraints = {NZ("1+q^2")};
        d.x = fam("X12", {"a", "b"});
        d.z = conj(transposed(fam("R_1.2", {"a/b"})), {"q", "1", "q", "-1"});
        add_entry_def(cat, d);
    }
}

void block_x14(Catalog& cat) {
    EntryDef d = base("xxz/X14/1");
    d.params = {P("a"), P("c"), Pd("m", "a^2-c^2"), Psign("eps")};
    d.constraints = {NZ("m"), NZ("c"), NZ("a")};
    d.x = fam("X14", {"a", "c", "eps", "1/m"});
    d.z = conj(fam("R_1.1", {"eps*a/c"}), {"1", "1", "1", "-1"}, ConjMode::Sandwich);
    add_entry_def(cat, d);
}

void block_x15(Catalog& cat) {
    {
        // q^2 = a^2 - 1 via a = (u^2+1)/(2u), q = (1-u^2)/(2u)
        EntryDef d = base("xxz/X15/1");
        d.params = {Pnz("u"), Pd("a", "(u^2+1)/(2*u)"), Pd("q", "(1-u^2)/(2*u)"), Pnz("x")};
        d.constraints = {NZ("u-1"), NZ("u+1")};
        d.x = fam("X15", {"a"});
        d.z = conj(fam("R_3.1", {"x", "x", "1"}), {"-q", "q", "1", "1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X15/2");
        d.params = {Psign("e3")};
        d.x = grid16({"e3", "0", "0", "0", "1", "-e3", "0", "0", "0", "0", "1", "0", "0", "0",
                      "0", "-1"},
                     "X15(a=e3)");
        d.z = fam("R_0.1", {});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X15/3");
        d.params = {Pnz("x")};
        d.x = fam("X15", {"0"});
        d.z = conj(fam("R_3.1", {"x", "x", "1"}), {"-1", "1", "1", "1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X15/4");
        d.params = {Pnz("x")};
        d.x = fam("X15", {"0"});
        d.z = conj(fam("R_1.4", {"x"}), {"-1", "1", "1", "1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X15/5");
        d.params = {Pnz("x")};
        d.x = fam("X15", {"0"});
        d.z = conj(fam("R_1.4", {"x"}), {"-i", "i", "1", "1"});
        add_entry_def(cat, d);
    }
}

void block_x16(Catalog& cat) {
    {
        EntryDef d = base("xxz/X16/1");
        d.params = {P("b"), P("c")};
        d.constraints = {NZ("b-c")};
        d.x = grid16({"1", "0", "0", "0", "0", "1", "0", "0", "b", "0", "1", "0", "0", "c", "0",
                      "1"},
                     "X16(a=d=0)");
        d.zset = "S_5V";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X16/2");
        d.params = {P("a"), Pnz("b"), P("d")};
        d.constraints = {NZ("a-d")};
        d.x = fam("X16", {"a", "b", "b*(1+a-d)", "d"});
        d.z = fam("R_1.3", {"d-a-1"});
        add_entry_def(cat, d);
    }
}

void block_x18(Catalog& cat) {
    {
        // b = (1-m^2)/(1+m^2), q = 2m/(1+m^2) with 1+m^2 = n^2, p = (1-m i)/n
        EntryDef d = base("xxz/X18/1");
        d.params = {Pnz("u"),
                    Pd("m", "(u^2-1)/(2*u)"),
                    Pd("n", "(u^2+1)/(2*u)"),
                    Pd("b", "(1-m^2)/(1+m^2)"),
                    Pd("q", "2*m/(1+m^2)"),
                    Pd("p", "(1-m*i)/n"),
                    Pnz("x")};
        d.constraints = {NZ("u-1"), NZ("u+1"), NZ("m")};
        d.x = fam("X18", {"b"});
        d.z = conj(fam("R_1.4", {"x"}), {"i", "-i*p", "q", "p*q"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X18/2");
        d.params = {Psign("eps"), Pnz("x")};
        d.x = fam("X18", {"eps"});
        d.z = conj(fam("R_0.2", {}), {"-1", "x", "4*eps", "0"});
        add_entry_def(cat, d);
    }
}

void block_x19(Catalog& cat) {
    {
        EntryDef d = base("xxz/X19/1");
        d.params = {Pnz("a"), P("c")};
        d.x = fam("X19", {"a", "0", "c", "1"});
        d.zset = "S_5V";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X19/2");
        d.params = {Psign("e3"), P("b"), P("c")};
        d.x = fam("X19", {"e3", "b", "c", "-1"});
        d.z = fam("R_1.1", {"i"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X19/3");
        d.params = {Psign("e3"), P("b"), P("c"), Pnz("x")};
        d.x = fam("X19", {"e3", "b", "c", "-1"});
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X19/4");
        d.params = {Pnz("a"), P("b")};
        d.x = fam("X19", {"a", "b", "a*b", "-1"});
        d.zset = "S_5V";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X19/5");
        d.params = {P("b")};
        d.x = fam("X19", {"-1", "b", "-b", "-1"});
        d.zset = "R_8V";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X19/6");
        d.params = {P("b")};
        d.x = fam("X19", {"1", "b", "b", "-1"});
        d.zset = "S_u_R12T";
        add_entry_def(cat, d);
    }
}

void block_x20(Catalog& cat) {
    {
        EntryDef d = base("xxz/X20/1");
        d.params = {P("a"), P("c")};
        d.x = fam("X20", {"a", "0", "c"});
        d.z = fam("R_3.1", {"-1", "-1", "1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X20/2");
        d.params = {P("a"), P("c"), Pnz("x"), P("y")};
        d.x = fam("X20", {"a", "0", "c"});
        d.z = conj(fam("R_0.2", {}), {"x", "0", "y", "1"}, ConjMode::ConjInv);
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X20/3");
        d.params = {P("b"), P("c")};
        d.x = fam("X20", {"c*b", "b", "c"});
        d.zset = "S_ST";
        add_entry_def(cat, d);
    }
}

void block_x21(Catalog& cat) {
    {
        EntryDef d = base("xxz/X21/1");
        d.params = {P("a")};
        d.x = fam("X21", {"a", "0"});
        d.z = conj(fam("R_0.3", {}), {"1", "sqrt(i)", "1", "-sqrt(i)"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X21/2");
        d.params = {Pnz("x")};
        d.x = fam("X21", {"0", "0"});
        d.z = conj(fam("R_3.1", {"x", "-x", "1"}), {"1", "1", "-1", "1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("xxz/X21/3");
        d.params = {Pnz("x")};
        d.x = fam("X21", {"0", "0"});
        d.z = conj(fam("R_1.4", {"x"}), {"1", "sqrt(i)", "-1", "sqrt(i)"});
        add_entry_def(cat, d);
    }
}

void trivial_z_rows(Catalog& cat) {
    const char* const rows[] = {"X1",  "X2",  "X3",  "X4",  "X5",  "X6",  "X7",  "X8",
                                "X9",  "X10", "X11", "X12", "X13", "X14", "X15", "X16",
                                "X17", "X18", "X19", "X20", "X21", "X22", "X23"};
    for (const char* fname : rows) {
        EntryDef d = base(std::string("xxz/") + fname + "/trivial");
        const MatrixFamily& f = cat.family(fname);
        Strings args;
        for (const auto& p : f.params()) {
            if (!p.derived.empty()) continue;
            d.params.push_back(p);
            args.push_back(p.name);
        }
        d.x = fam(fname, args);
        d.z = fam("R_0.4", {});
        add_entry_def(cat, d);
    }
}

} // namespace

void add_xxz_entries(Catalog& cat) {
    trivial_z_rows(cat);
    block_x1(cat);
    block_x2_x3_x4(cat);
    block_x5(cat);
    block_x6(cat);
    block_x7(cat);
    block_x8(cat);
    block_x9(cat);
    block_x10(cat);
    block_x12(cat);
    block_x14(cat);
    block_x15(cat);
    block_x16(cat);
    block_x18(cat);
    block_x19(cat);
    block_x20(cat);
    block_x21(cat);
}

} // namespace wxz::detail
