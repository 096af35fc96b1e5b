#include "catalog_build.hpp"

// Pairs (W, X) solving [W,W,W] = 0 and [W,X,X] = 0: the generic solutions per
// solution subset, then the non-generic list per R-family.

namespace wxz::detail {

namespace {

EntryDef base(const std::string& id) {
    EntryDef d;
    d.id = id;
    d.scope = EquationSet::WXX;
    return d;
}

void generic(Catalog& cat) {
    // W in S_5V: X1(a,b,c) and X2(a,b,c) for all a,b,c
    {
        EntryDef d = base("wxx/gen-5V-X1");
        d.wset = "S_5V";
        d.params = {P("a"), P("b"), P("c")};
        d.x = fam("X1", {"a", "b", "c"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/gen-5V-X2");
        d.wset = "S_5V";
        d.params = {P("a"), P("b"), P("c")};
        d.x = fam("X2", {"a", "b", "c"});
        add_entry_def(cat, d);
    }
    // W in S_8V: X1(a, e1, e2*a) and X2(e1, a, e1*a)
    {
        EntryDef d = base("wxx/gen-8V-X1");
        d.wset = "S_8V";
        d.params = {P("a"), Psign("e1"), Psign("e2")};
        d.x = fam("X1", {"a", "e1", "e2*a"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/gen-8V-X2");
        d.wset = "S_8V";
        d.params = {P("a"), Psign("e1")};
        d.x = fam("X2", {"e1", "a", "e1*a"});
        add_entry_def(cat, d);
    }
    // W in S_ST: X3(a,b,c) and X4(a,b,c)
    {
        EntryDef d = base("wxx/gen-ST-X3");
        d.wset = "S_ST";
        d.params = {P("a"), P("b"), P("c")};
        d.x = fam("X3", {"a", "b", "c"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/gen-ST-X4");
        d.wset = "S_ST";
        d.params = {P("a"), P("b"), P("c")};
        d.x = fam("X4", {"a", "b", "c"});
        add_entry_def(cat, d);
    }
}

void block_r31(Catalog& cat) {
    auto w_ss1 = [] { return fam("R_3.1", {"s", "s", "1"}); };
    {
        EntryDef d = base("wxx/R_3.1/1");
        d.params = {Pnz("s"), Pnz("a"), Pnz("b"), Pnz("c")};
        d.w = w_ss1();
        d.x = fam("X5", {"a", "b", "c"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_3.1/2");
        d.params = {Pnz("s"), Pnz("a"), Pnz("b"), Pnz("c")};
        d.w = w_ss1();
        d.x = fam("X6", {"a", "b", "c"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_3.1/3");
        d.params = {Pnz("s"), P("a"), P("b")};
        d.w = w_ss1();
        d.x = fam("X7", {"a", "b"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_3.1/4");
        d.params = {Pnz("s"), Pnz("a")};
        d.w = fam("R_3.1", {"s", "-s", "1"});
        d.x = fam("X8", {"a"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_3.1/5");
        d.params = {Pnz("s"), Pnz("a"), Psign("eps")};
        d.w = fam("R_3.1", {"1/s", "s", "eps"});
        d.x = fam("X9", {"s", "a", "eps*s*a"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_3.1/6");
        d.params = {Psign("eps"), P("b"), Pnz("c")};
        d.w = fam("R_3.1", {"eps", "eps", "-eps"});
        d.x = fam("X10", {"eps", "b", "-b", "c"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_3.1/7");
        d.params = {Pnz("a"), Pnz("b"), Pnz("c"), Pnz("d")};
        d.w = fam("R_3.1", {"-1", "-1", "1"});
        d.x = fam("X11", {"a", "b", "c", "d"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_3.1/8");
        d.params = {P("a"), P("b"), P("c"), P("d"), P("e"), P("f"), P("g"), P("h")};
        d.w = fam("R_3.1", {"1", "1", "1"});
        d.x = fam("X22", {"a", "b", "c", "d", "e", "f", "g", "h"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_3.1/9");
        d.params = {P("a"), P("b"), P("c"), P("d"), P("e"), P("f"), P("g"), P("h")};
        d.w = fam("R_3.1", {"1", "1", "1"});
        d.x = fam("X23", {"a", "b", "c", "d", "e", "f", "g", "h"});
        add_entry_def(cat, d);
    }
}

void block_r21(Catalog& cat) {
    {
        EntryDef d = base("wxx/R_2.1/1");
        d.params = {Pnz("r"), Pnz("s"), Pnz("a")};
        d.w = fam("R_2.1", {"r", "s"});
        d.x = fam("X9", {"1/r", "a", "s*a"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_2.1/2");
        d.params = {Pnz("s"), Pnz("a"), Pnz("b")};
        d.w = fam("R_2.1", {"s", "s"});
        d.x = fam("X10", {"1/s", "a", "s*a", "b"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_2.1/3");
        d.params = {Pnz("a"), Pnz("b")};
        d.w = fam("R_2.1", {"1", "-1"});
        d.x = fam("X12", {"a", "b"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_2.1/4");
        d.params = {Pnz("g")};
        d.w = fam("R_2.1", {"i", "i"});
        d.x = fam("X13", {"g"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_2.1/5");
        d.params = {Pnz("a")};
        d.w = fam("R_2.1", {"i", "-i"});
        d.x = fam("X8", {"a"});
        add_entry_def(cat, d);
    }
}

void block_r22(Catalog& cat) {
    {
        EntryDef d = base("wxx/R_2.2/1");
        d.params = {Pnz("r"), Pnz("s"), Pnz("a")};
        d.w = fam("R_2.2", {"r", "s"});
        d.x = fam("X9", {"1/r", "a", "-a/r"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_2.2/2");
        d.params = {Pnz("s"), Pnz("a"), Pnz("g")};
        d.w = fam("R_2.2", {"s", "s"});
        d.x = fam("X10", {"1/s", "a", "-a/s", "g"});
        add_entry_def(cat, d);
    }
}

void block_r11(Catalog& cat) {
    {
        EntryDef d = base("wxx/R_1.1/1");
        d.params = {Pnz("r"), Psign("eps")};
        d.w = fam("R_1.1", {"r"});
        d.x = fam("X10", {"r", "-eps", "eps*r", "eps"});
        add_entry_def(cat, d);
    }
    {
        // c^2 = a^2 - (r-1)/(r+1); r is recovered from m = a^2 - c^2
        EntryDef d = base("wxx/R_1.1/2");
        d.params = {P("a"), P("c"), Pd("m", "a^2-c^2"), Pd("r", "(1+m)/(1-m)"),
                    Psign("eps")};
        d.constraints = {NZ("m"), NZ("m-1"), NZ("m+1"), NZ("c")};
        d.w = fam("R_1.1", {"r"});
        d.x = fam("X14", {"a", "c", "eps", "(r+1)/(r-1)"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_1.1/3");
        d.params = {P("a")};
        d.w = fam("R_1.1", {"i"});
        d.x = fam("X15", {"a"});
        add_entry_def(cat, d);
    }
}

void block_r12(Catalog& cat) {
    {
        EntryDef d = base("wxx/R_1.2/1");
        d.params = {Pnz("s"), Psign("eps")};
        d.w = fam("R_1.2", {"s"});
        d.x = fam("X9", {"1", "eps", "-eps"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_1.2/2");
        d.params = {Pnz("s"), Psign("eps")};
        d.constraints = {NZ("s-1")};
        d.w = fam("R_1.2", {"s"});
        d.x = fam("X10", {"1/s", "eps", "-eps/s", "eps/(s-1)"});
        add_entry_def(cat, d);
    }
    {
        // a^2 - b^2 = s + 1
        EntryDef d = base("wxx/R_1.2/3");
        d.params = {P("a"), P("b"), Pd("s", "a^2-b^2-1")};
        d.constraints = {NZ("s")};
        d.w = fam("R_1.2", {"s"});
        d.x = fam("X12", {"a", "b"});
        add_entry_def(cat, d);
    }
}

void block_r13(Catalog& cat) {
    {
        EntryDef d = base("wxx/R_1.3/1");
        d.params = {P("u"), Pnz("a"), P("b")};
        d.constraints = {NZ("u+1")};
        d.w = fam("R_1.3", {"u"});
        d.x = fam("X16", {"a", "b", "b-u-1", "-u*a"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_1.3/2");
        d.params = {P("a"), P("b")};
        d.w = fam("R_1.3", {"1"});
        d.x = fam("X17", {"a", "b"});
        add_entry_def(cat, d);
    }
}

void block_r14(Catalog& cat) {
    {
        EntryDef d = base("wxx/R_1.4/1");
        d.params = {Pnz("t"), Pnz("a"), Psign("eps")};
        d.w = fam("R_1.4", {"t"});
        d.x = fam("X5", {"a", "eps", "a"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_1.4/2");
        d.params = {Pnz("t"), Pnz("a")};
        d.w = fam("R_1.4", {"t"});
        d.x = fam("X6", {"a", "1", "-a"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_1.4/3");
        d.params = {Pnz("t"), P("a")};
        d.w = fam("R_1.4", {"t"});
        d.x = fam("X15", {"a"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_1.4/4");
        d.params = {Pnz("t"), P("a")};
        d.w = fam("R_1.4", {"t"});
        d.x = fam("X18", {"a"});
        add_entry_def(cat, d);
    }
}

void block_r0x(Catalog& cat) {
    {
        EntryDef d = base("wxx/R_0.1/1");
        d.params = {P("a"), P("b"), P("c"), Psign("eps")};
        d.w = fam("R_0.1", {});
        d.x = fam("X19", {"a", "b", "c", "eps"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_0.1/2");
        d.params = {P("a"), P("b"), P("c")};
        d.w = fam("R_0.1", {});
        d.x = fam("X20", {"a", "b", "c"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_0.2/1");
        d.params = {Psign("eps")};
        d.w = fam("R_0.2", {});
        d.x = fam("X9", {"-1", "eps", "-eps"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_0.2/2");
        d.params = {Psign("eps"), Pnz("b")};
        d.w = fam("R_0.2", {});
        d.x = fam("X11", {"eps", "b", "0", "1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_0.3/1");
        d.params = {P("a")};
        d.w = fam("R_0.3", {});
        d.x = fam("X10", {"a", "-1", "a", "i"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_0.3/2");
        d.params = {P("a"), P("b")};
        d.w = fam("R_0.3", {});
        d.x = fam("X21", {"a", "b"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxx/R_0.4/1");
        d.params = arbitrary_params();
        d.w = fam("R_0.4", {});
        d.x = arbitrary_recipe();
        add_entry_def(cat, d);
    }
}

} // namespace

void add_wxx_entries(Catalog& cat) {
    generic(cat);
    block_r31(cat);
    block_r21(cat);
    block_r22(cat);
    block_r11(cat);
    block_r12(cat);
    block_r13(cat);
    block_r14(cat);
    block_r0x(cat);
}

} // namespace wxz::detail
