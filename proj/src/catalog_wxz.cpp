#include "catalog_build.hpp"

// The full classified triple list: seven generic items followed by the
// non-generic items in list order (n1..n79). Set-valued W/Z slots expand to
// one entry per member family.

namespace wxz::detail {

namespace {

EntryDef base(const std::string& id) {
    EntryDef d;
    d.id = id;
    d.scope = EquationSet::WXZ;
    return d;
}

MatrixRecipe p_recipe() { return fam("R_0.4", {}); }

void generics(Catalog& cat) {
    {
        EntryDef d = base("wxz/g1");
        d.wset = "S";
        d.x = identity_recipe();
        d.zset = "S_u_R12T";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/g2");
        d.wset = "S_8V";
        d.x = grid16({"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "0", "0", "0",
                      "-1"},
                     "diag(1,1,1,-1)");
        d.zset = "S_8V_u_R12T";
        add_entry_def(cat, d);
    }
    const Strings swap_tail = {"1", "0", "0", "0", "0", "1", "0", "0",
                               "0", "0", "0", "1", "0", "0", "1", "0"};
    {
        EntryDef d = base("wxz/g3");
        d.wset = "S_8V";
        d.params = {Pnz("x")};
        d.x = grid16(swap_tail, "1(+)sigma");
        d.z = fam("R_3.1", {"x", "x", "1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/g4");
        d.wset = "S_8V";
        d.params = {Pnz("x")};
        d.x = grid16(swap_tail, "1(+)sigma");
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/g5");
        d.wset = "S_5V";
        d.params = {Pnz("a")};
        d.x = grid16({"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "0", "0", "0",
                      "a"},
                     "diag(1,1,1,a)");
        d.zset = "S_5V_u_P";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/g6");
        d.wset = "S_5V";
        d.params = {P("a")};
        d.x = grid16({"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "0", "0", "a",
                      "1"},
                     "lower-unit(a)");
        d.zset = "S_ST_u_P";
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/g7");
        d.wset = "S_ST";
        d.params = {P("a")};
        d.x = grid16({"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "a", "0", "0",
                      "1"},
                     "corner-unit(a)");
        d.zset = "S_ST_u_P";
        add_entry_def(cat, d);
    }
}

void block_r31(Catalog& cat) {
    {
        EntryDef d = base("wxz/n1");
        d.params = {Pnz("s"), Pnz("b")};
        d.w = fam("R_3.1", {"s", "s", "1"});
        d.x = grid16({"1", "0", "0", "0", "0", "0", "0", "1", "0", "0", "b", "0", "0", "1", "0",
                      "0"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    const Strings all_ones = {"1", "1", "1", "-1", "1", "1", "-1", "1",
                              "1", "-1", "1", "1", "-1", "1", "1", "1"};
    {
        EntryDef d = base("wxz/n2");
        d.params = {Pnz("s"), Pnz("x")};
        d.w = fam("R_3.1", {"s", "s", "1"});
        d.x = grid16(all_ones);
        d.z = fam("R_3.1", {"x", "x", "1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n3");
        d.params = {Pnz("s"), Pnz("x")};
        d.w = fam("R_3.1", {"s", "s", "1"});
        d.x = grid16(all_ones);
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    const Strings perm_minus = {"1", "0", "0", "0", "0", "0", "0", "1",
                                "0", "0", "-1", "0", "0", "1", "0", "0"};
    {
        EntryDef d = base("wxz/n4");
        d.params = {Pnz("s")};
        d.w = fam("R_3.1", {"s", "s", "1"});
        d.x = grid16(perm_minus);
        d.z = fam("R_1.1", {"i"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n5");
        d.params = {Pnz("s"), Pnz("x")};
        d.w = fam("R_3.1", {"s", "s", "1"});
        d.x = grid16(perm_minus);
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n6");
        d.params = {Pnz("s"), Pnz("a")};
        d.w = fam("R_3.1", {"s", "s", "1"});
        d.x = grid16({"0", "0", "1", "0", "0", "0", "0", "a", "1", "0", "0", "0", "0", "1", "0",
                      "0"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    const Strings x_inv_a = {"0", "0", "1", "0", "0", "0", "0", "a",
                             "1", "0", "0", "0", "0", "1/a", "0", "0"};
    {
        EntryDef d = base("wxz/n7");
        d.params = {Pnz("s"), Pnz("a")};
        d.w = fam("R_3.1", {"s", "s", "1"});
        d.x = grid16(x_inv_a);
        d.z = fam("R_1.1", {"i"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n8");
        d.params = {Pnz("s"), Pnz("a"), Pnz("x")};
        d.w = fam("R_3.1", {"s", "s", "1"});
        d.x = grid16(x_inv_a);
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n9");
        d.params = {Pnz("s"), P("c")};
        d.w = fam("R_3.1", {"s", "s", "1"});
        d.x = grid16({"0", "0", "1", "0", "0", "0", "1", "1", "1", "0", "0", "0", "c", "1", "0",
                      "0"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n10");
        d.params = {Pnz("s")};
        d.w = fam("R_3.1", {"s", "s", "1"});
        d.x = grid16({"0", "0", "1", "0", "0", "0", "1", "1", "1", "0", "0", "0", "-1", "1", "0",
                      "0"});
        d.z = fam("R_3.1", {"-1", "-1", "1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n11");
        d.params = {Pnz("s"), Pnz("x")};
        d.w = fam("R_3.1", {"s", "s", "1"});
        d.x = grid16({"0", "0", "x", "0", "0", "0", "1", "x", "x", "0", "0", "0", "-1", "x", "0",
                      "0"});
        d.z = fam("R_0.2", {});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n12");
        d.params = {Pnz("s"), Pnz("a")};
        d.w = fam("R_3.1", {"s", "-s", "1"});
        d.x = grid16({"0", "0", "1", "0", "0", "0", "0", "-1", "0", "a", "0", "0", "1", "0", "0",
                      "0"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n13");
        d.params = {Pnz("s"), Pnz("q"), Pnz("x")};
        d.w = fam("R_3.1", {"s", "-s", "1"});
        d.x = grid16({"0", "0", "0", "1", "0", "0", "1", "0", "0", "q", "0", "0", "-q", "0", "0",
                      "0"});
        d.z = fam("R_3.1", {"x", "-x", "1"});
        add_entry_def(cat, d);
    }
    const Strings x_ieps_q = {"0", "0", "0", "1", "0", "0", "i*eps", "0",
                              "0", "i*eps*q", "0", "0", "q", "0", "0", "0"};
    {
        EntryDef d = base("wxz/n14");
        d.params = {Pnz("s"), Pnz("q"), Psign("eps"), Pnz("x")};
        d.w = fam("R_3.1", {"s", "-s", "1"});
        d.x = grid16(x_ieps_q);
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n15");
        d.params = {Pnz("s"), Pnz("q"), Psign("eps")};
        d.w = fam("R_3.1", {"s", "-s", "1"});
        d.x = grid16(x_ieps_q);
        d.z = fam("R_0.3", {});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n16");
        d.params = {Psign("e1"), Psign("e2"), Pnz("g")};
        d.w = fam("R_3.1", {"e1", "e1", "1"});
        d.x = grid16({"1", "0", "0", "0", "0", "e1", "1", "0", "0", "0", "e2", "0", "g", "0", "0",
                      "e1*e2"});
        d.z = fam("R_3.1", {"e2", "e2", "1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n17");
        d.params = {Psign("eps"), Pnz("g")};
        d.w = fam("R_3.1", {"eps", "eps", "1"});
        d.x = grid16({"1", "0", "0", "0", "0", "eps", "1", "0", "0", "0", "1", "0", "g", "0", "0",
                      "eps"});
        d.z = fam("R_0.1", {});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n18");
        d.params = {Psign("eps"), Pnz("g")};
        d.w = fam("R_3.1", {"eps", "eps", "1"});
        d.x = grid16({"1", "0", "0", "0", "0", "eps", "1", "0", "0", "0", "-1", "0", "g", "0", "0",
                      "-eps"});
        d.z = fam("R_0.2", {});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n19");
        d.params = {Pnz("a"), Pnz("b"), Pnz("c"), Pnz("d")};
        d.w = fam("R_3.1", {"-1", "-1", "1"});
        d.x = fam("X11", {"a", "b", "c", "d"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n20");
        d.params = {P("a"), P("b"), P("c"), P("d"), P("g"), P("h")};
        d.w = fam("R_3.1", {"1", "1", "1"});
        d.x = grid16({"1", "0", "0", "0", "a", "1", "b", "0", "c", "0", "d", "0", "g", "c", "h",
                      "d"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n21");
        d.params = {P("a"), P("b"), P("c"), P("d"), P("g"), P("h")};
        d.w = fam("R_3.1", {"1", "1", "1"});
        d.x = grid16({"1", "0", "0", "0", "0", "a", "0", "b", "c", "0", "d", "0", "0", "g", "0",
                      "h"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
}

void block_r21(Catalog& cat) {
    const Strings x_rsa = {"1", "0", "0", "0", "0", "1/r", "0", "0",
                           "0", "0", "a", "0", "1", "0", "0", "s*a"};
    {
        EntryDef d = base("wxz/n22");
        d.params = {Pnz("r"), Pnz("s"), Pnz("a")};
        d.w = fam("R_2.1", {"r", "s"});
        d.x = grid16(x_rsa);
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n23");
        d.params = {Pnz("r"), Pnz("s"), Pnz("a")};
        d.w = fam("R_2.1", {"r", "s"});
        d.x = grid16(x_rsa);
        d.z = fam("R_2.1", {"a", "1/(r*s*a)"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n24");
        d.params = {Pnz("s"), Pnz("a"), Pnz("x")};
        d.w = fam("R_2.1", {"-1/s", "s"});
        d.x = grid16({"1", "0", "0", "0", "0", "-s", "0", "0", "0", "0", "a", "0", "1", "0", "0",
                      "s*a"});
        d.z = fam("R_2.2", {"a", "x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n25");
        d.params = {Psign("eps"), Pnz("q"), Pnz("x")};
        d.w = fam("R_2.1", {"eps", "-eps"});
        d.x = grid16({"1", "0", "0", "0", "0", "eps", "0", "0", "0", "0", "1", "0", "q", "0", "0",
                      "-eps"});
        d.z = fam("R_1.2", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n26");
        d.params = {Pnz("s"), Pnz("a"), Pnz("g")};
        d.w = fam("R_2.1", {"s", "s"});
        d.x = grid16({"1", "0", "0", "0", "0", "1/s", "1", "0", "0", "0", "a", "0", "g", "0", "0",
                      "s*a"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n27");
        d.params = {Psign("e1"), Psign("e2"), Pnz("g")};
        d.w = fam("R_2.1", {"i*e1", "i*e1"});
        d.x = grid16({"1", "0", "0", "0", "0", "-i*e1", "1", "0", "0", "0", "e2", "0", "g", "0",
                      "0", "i*e1*e2"});
        d.z = fam("R_2.1", {"e2", "-e2"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n28");
        d.params = {Psign("eps"), Pnz("q"), Pnz("a")};
        d.constraints = {NZ("-1+2/(a*q)")};
        d.w = fam("R_2.1", {"i*eps", "i*eps"});
        d.x = grid16({"1", "0", "0", "0", "0", "-i*eps", "q", "0", "0", "0", "1", "0", "a", "0",
                      "0", "i*eps"});
        d.z = fam("R_1.2", {"-1+2/(a*q)"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n29");
        d.params = {Pnz("a"), Pnz("b")};
        d.w = fam("R_2.1", {"1", "-1"});
        d.x = fam("X12", {"a", "b"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    const Strings x_ab_mb = {"a", "0", "0", "0", "0", "a", "0", "0",
                             "0", "1", "b", "0", "1", "0", "0", "-b"};
    {
        EntryDef d = base("wxz/n30");
        d.params = {Pnz("a"), Pnz("b")};
        d.w = fam("R_2.1", {"1", "-1"});
        d.x = grid16(x_ab_mb);
        d.z = fam("R_2.2", {"b/a", "b/a"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n31");
        d.params = {Pnz("a"), Pnz("b")};
        d.w = fam("R_2.1", {"1", "-1"});
        d.x = grid16(x_ab_mb);
        d.z = fam("R_1.1", {"a/b"});
        add_entry_def(cat, d);
    }
    {
        // (a-b)/(eps a) = k^2 via b = a(1 - eps k^2)
        EntryDef d = base("wxz/n32");
        d.params = {Psign("eps"), Pnz("a"), Psq("k2"), Pd("b", "a*(1-eps*k2)")};
        d.constraints = {NZ("b")};
        d.w = fam("R_2.1", {"eps", "-eps"});
        d.x = grid16({"a", "0", "0", "0", "0", "eps*a", "0", "0", "0", "sqrt((a-b)/(eps*a))", "b",
                      "0", "1/sqrt((a-b)/(eps*a))", "0", "0", "-eps*b"});
        d.z = fam("R_1.2", {"b/a"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n33");
        d.params = {Pnz("a"), Pnz("b")};
        d.w = fam("R_2.1", {"1", "-1"});
        d.x = grid16({"a", "0", "0", "0", "0", "a", "0", "0", "0", "1/sqrt(i)", "b", "0",
                      "sqrt(i)", "0", "0", "-b"});
        d.z = fam("R_0.3", {});
        add_entry_def(cat, d);
    }
}

void block_r22(Catalog& cat) {
    const Strings x_alt = {"1", "0", "0", "0", "0", "1/r", "0", "0",
                           "0", "0", "a", "0", "1", "0", "0", "-a/r"};
    {
        EntryDef d = base("wxz/n34");
        d.params = {Pnz("r"), Pnz("s"), Pnz("a")};
        d.w = fam("R_2.2", {"r", "s"});
        d.x = grid16(x_alt);
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n35");
        d.params = {Pnz("r"), Pnz("s"), Pnz("a"), Pnz("x")};
        d.w = fam("R_2.2", {"r", "s"});
        d.x = grid16(x_alt);
        d.z = fam("R_2.2", {"a", "x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n36");
        d.params = {Psign("eps"), Pnz("s"), Pnz("q"), Pnz("x")};
        d.w = fam("R_2.2", {"eps", "s"});
        d.x = grid16({"1", "0", "0", "0", "0", "eps", "0", "0", "0", "0", "1", "0", "q", "0", "0",
                      "-eps"});
        d.z = fam("R_1.2", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n37");
        d.params = {Pnz("s"), Pnz("a"), Pnz("g")};
        d.w = fam("R_2.2", {"s", "s"});
        d.x = grid16({"1", "0", "0", "0", "0", "1/s", "1", "0", "0", "0", "a", "0", "g", "0", "0",
                      "-a/s"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n38");
        d.params = {Pnz("s"), Pnz("q"), Pnz("g")};
        d.constraints = {NZ("(s^2-1)/(q*g*s^2)-1")};
        d.w = fam("R_2.2", {"s", "s"});
        d.x = grid16({"1", "0", "0", "0", "0", "1/s", "q", "0", "0", "0", "1", "0", "g", "0", "0",
                      "-1/s"});
        d.z = fam("R_1.2", {"(s^2-1)/(q*g*s^2)-1"});
        add_entry_def(cat, d);
    }
}

void block_r11(Catalog& cat) {
    {
        EntryDef d = base("wxz/n39");
        d.params = {Pnz("r"), Psign("eps")};
        d.w = fam("R_1.1", {"r"});
        d.x = grid16({"1", "0", "0", "0", "0", "r", "1", "0", "0", "0", "-eps", "0", "eps", "0",
                      "0", "eps*r"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n40");
        d.params = {Pnz("r"), Pnz("q")};
        d.constraints = {NZ("(r^2-1)/q^2-1")};
        d.w = fam("R_1.1", {"r"});
        d.x = grid16({"1", "0", "0", "0", "0", "r", "q", "0", "0", "0", "1", "0", "-q", "0", "0",
                      "-r"});
        d.z = fam("R_1.2", {"(r^2-1)/q^2-1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n41");
        d.params = {P("a"), Pnz("c"), Pd("m", "a^2-c^2"), Pd("r", "(1+m)/(1-m)"),
                    Psign("eps")};
        d.constraints = {NZ("m"), NZ("m-1"), NZ("m+1")};
        d.w = fam("R_1.1", {"r"});
        d.x = grid16({"eps*a*(r+1)/(r-1)", "eps*c", "1", "0",
                      "eps*c", "eps*a*(r+1)/(r-1)", "0", "-1",
                      "eps", "0", "a", "c*(r+1)/(r-1)",
                      "0", "-eps", "c*(r+1)/(r-1)", "a"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n42");
        d.params = {Pnz("a"), Pnz("c"), Pd("m", "a^2-c^2"), Pd("r", "(1+m)/(1-m)"),
                    Psign("eps")};
        d.constraints = {NZ("m"), NZ("m-1"), NZ("m+1")};
        d.w = fam("R_1.1", {"r"});
        d.x = grid16({"eps*(a*(r+1)/(r-1)+c)", "0", "0", "1",
                      "0", "eps*(a*(r+1)/(r-1)-c)", "1", "0",
                      "0", "eps", "a+c*(r+1)/(r-1)", "0",
                      "eps", "0", "0", "a-c*(r+1)/(r-1)"});
        d.z = fam("R_1.1", {"eps*a/c"});
        add_entry_def(cat, d);
    }
    const Strings x_a_block = {"a", "1-a^2", "0", "0", "1", "-a", "0", "0",
                               "0", "0", "1", "0", "0", "0", "0", "-1"};
    {
        EntryDef d = base("wxz/n43");
        d.params = {P("a")};
        d.w = fam("R_1.1", {"i"});
        d.x = grid16(x_a_block);
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n44");
        d.params = {Psign("eps")};
        d.w = fam("R_1.1", {"i"});
        d.x = grid16({"eps", "0", "0", "0", "1", "-eps", "0", "0", "0", "0", "1", "0", "0", "0",
                      "0", "-1"});
        d.z = fam("R_0.1", {});
        add_entry_def(cat, d);
    }
    const Strings x_diag_swap = {"1", "0", "0", "0", "0", "-1", "0", "0",
                                 "0", "0", "0", "1", "0", "0", "1", "0"};
    {
        EntryDef d = base("wxz/n45");
        d.params = {Pnz("x")};
        d.w = fam("R_1.1", {"i"});
        d.x = grid16(x_diag_swap);
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n46");
        d.params = {Pnz("x")};
        d.w = fam("R_1.1", {"i"});
        d.x = grid16({"0", "-i", "0", "0", "i", "0", "0", "0", "0", "0", "0", "1", "0", "0", "1",
                      "0"});
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
}

void block_r12(Catalog& cat) {
    {
        EntryDef d = base("wxz/n47");
        d.params = {Pnz("s"), Psign("eps")};
        d.w = fam("R_1.2", {"s"});
        d.x = grid16({"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "eps", "0", "1", "0", "0",
                      "-eps"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n48");
        d.params = {Pnz("s"), Pnz("q"), Pnz("x")};
        d.w = fam("R_1.2", {"s"});
        d.x = grid16({"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "q", "0", "0",
                      "-1"});
        d.z = fam("R_1.2", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n49");
        d.params = {Pnz("s"), Pnz("q"), Pnz("x")};
        d.w = fam("R_1.2", {"s"});
        d.x = grid16({"1", "0", "0", "0", "0", "1", "0", "0", "0", "q", "1", "0", "0", "0", "0",
                      "-1"});
        d.z = transposed(fam("R_1.2", {"x"}));
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n50");
        d.params = {Pnz("s"), Psign("eps")};
        d.w = fam("R_1.2", {"s"});
        d.x = grid16({"1", "0", "0", "0", "0", "1/s", "s-1", "0", "0", "0", "eps", "0", "eps", "0",
                      "0", "-eps/s"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n51");
        d.params = {Pnz("s"), Pnz("a")};
        d.constraints = {NZ("(s+1)/(a^2*s^2)-1")};
        d.w = fam("R_1.2", {"s"});
        d.x = grid16({"1", "0", "0", "0", "0", "1/s", "a*(s-1)", "0", "0", "0", "1", "0", "a", "0",
                      "0", "-1/s"});
        d.z = fam("R_1.2", {"(s+1)/(a^2*s^2)-1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n52");
        d.params = {Pnz("s"), Pnz("a")};
        d.constraints = {NZ("(s+1)/(a^2*s^2)-1")};
        d.w = fam("R_1.2", {"s"});
        d.x = grid16({"1/s", "0", "0", "a*(1-s)", "0", "1", "0", "0", "0", "a", "1/s", "0", "0",
                      "0", "0", "-1"});
        d.z = transposed(fam("R_1.2", {"(s+1)/(a^2*s^2)-1"}));
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n53");
        d.params = {Pnz("s"), Pnz("a")};
        d.w = fam("R_1.2", {"s"});
        d.x = grid16({"a", "0", "0", "0", "0", "a", "0", "0", "1", "0", "0", "1", "0", "-1",
                      "a^2-s-1", "0"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        // a^2 - s - 1 = k^2 via s = a^2 - k2 - 1
        EntryDef d = base("wxz/n54");
        d.params = {Pnz("a"), Psq("k2"), Pd("s", "a^2-k2-1")};
        d.constraints = {NZ("s")};
        d.w = fam("R_1.2", {"s"});
        d.x = grid16({"a", "0", "0", "0", "0", "a", "0", "0", "0", "1/sqrt(i)", "sqrt(a^2-s-1)",
                      "0", "sqrt(i)", "0", "0", "-sqrt(a^2-s-1)"});
        d.z = fam("R_0.3", {});
        add_entry_def(cat, d);
    }
}

void block_r13_r14(Catalog& cat) {
    {
        EntryDef d = base("wxz/n55");
        d.params = {P("u"), P("a"), P("b")};
        d.w = fam("R_1.3", {"u"});
        d.x = grid16({"1", "0", "0", "0", "a", "1", "0", "0", "b", "0", "1", "0", "0", "b-u-1",
                      "-u*a", "1"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n56");
        d.params = {P("u"), Pnz("b")};
        d.w = fam("R_1.3", {"u"});
        d.x = grid16({"1", "0", "0", "0", "-1/b", "1", "0", "0", "b", "0", "1", "0", "0",
                      "b-u-1", "u/b", "1"});
        d.z = fam("R_1.3", {"(u+1)/b-1"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n57");
        d.params = {P("a"), P("b")};
        d.w = fam("R_1.3", {"1"});
        d.x = grid16({"1", "0", "0", "0", "a", "1", "1", "0", "a+b+1", "0", "1", "0", "0",
                      "a+b-1", "b", "1"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n58");
        d.params = {Pnz("t"), Pnz("a"), Psign("eps")};
        d.w = fam("R_1.4", {"t"});
        d.x = grid16({"1", "0", "0", "0", "0", "0", "0", "a", "0", "0", "eps", "0", "0", "a", "0",
                      "0"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n59");
        d.params = {Pnz("t"), Pnz("a")};
        d.w = fam("R_1.4", {"t"});
        d.x = grid16({"0", "0", "1", "0", "0", "0", "0", "a", "1", "0", "0", "0", "0", "-a", "0",
                      "0"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n60");
        d.params = {Pnz("t"), Pnz("x")};
        d.w = fam("R_1.4", {"t"});
        d.x = grid16({"0", "0", "1", "0", "0", "0", "0", "i", "1", "0", "0", "0", "0", "-i", "0",
                      "0"});
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n61");
        d.params = {Pnz("t"), P("a")};
        d.w = fam("R_1.4", {"t"});
        d.x = grid16({"a", "1-a^2", "0", "0", "1", "-a", "0", "0", "0", "0", "1", "0", "0", "0",
                      "0", "-1"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n62");
        d.params = {Pnz("t"), Psign("eps")};
        d.w = fam("R_1.4", {"t"});
        d.x = grid16({"eps", "0", "0", "0", "1", "-eps", "0", "0", "0", "0", "1", "0", "0", "0",
                      "0", "-1"});
        d.z = fam("R_0.1", {});
        add_entry_def(cat, d);
    }
    const Strings x_diag_swap = {"1", "0", "0", "0", "0", "-1", "0", "0",
                                 "0", "0", "0", "1", "0", "0", "1", "0"};
    {
        EntryDef d = base("wxz/n63");
        d.params = {Pnz("t"), Pnz("x")};
        d.w = fam("R_1.4", {"t"});
        d.x = grid16(x_diag_swap);
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n64");
        d.params = {Pnz("t"), Pnz("x")};
        d.w = fam("R_1.4", {"t"});
        d.x = grid16({"1", "0", "0", "0", "0", "-1", "0", "0", "0", "0", "0", "i", "0", "0", "-i",
                      "0"});
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n65");
        d.params = {Pnz("t"), P("a")};
        d.w = fam("R_1.4", {"t"});
        d.x = fam("X18", {"a"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n66");
        d.params = {Pnz("t"), Pnz("p"), Psign("eps"), Pnz("x")};
        d.w = fam("R_1.4", {"t"});
        d.x = grid16({"0", "0", "0", "p", "0", "0", "1/p", "0", "0", "eps/p", "0", "0", "eps*p",
                      "0", "0", "0"});
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n67");
        d.params = {Pnz("t"), P("x")};
        d.w = fam("R_1.4", {"t"});
        d.x = grid16({"0", "0", "1", "0", "0", "0", "x", "-1", "1", "0", "0", "0", "-x", "-1",
                      "0", "0"});
        d.z = fam("R_0.2", {});
        add_entry_def(cat, d);
    }
    const Strings x_corner = {"0", "0", "0", "1", "0", "0", "i*eps", "0",
                              "0", "i*eps", "0", "0", "1", "0", "0", "0"};
    {
        EntryDef d = base("wxz/n68");
        d.params = {Pnz("x"), Psign("eps")};
        d.w = fam("R_1.4", {"x"});
        d.x = grid16(x_corner);
        d.z = fam("R_1.4", {"x"});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n69");
        d.params = {Pnz("x"), Psign("eps")};
        d.w = fam("R_1.4", {"x"});
        d.x = grid16(x_corner);
        d.z = fam("R_0.3", {});
        add_entry_def(cat, d);
    }
}

void block_r0x(Catalog& cat) {
    {
        EntryDef d = base("wxz/n70");
        d.params = {P("a"), P("b"), P("c"), Psign("eps")};
        d.w = fam("R_0.1", {});
        d.x = fam("X19", {"a", "b", "c", "eps"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n71");
        d.params = {P("a"), P("b"), P("c")};
        d.w = fam("R_0.1", {});
        d.x = fam("X20", {"a", "b", "c"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n72");
        d.params = {P("a"), P("c")};
        d.w = fam("R_0.1", {});
        d.x = grid16({"1", "0", "0", "0", "0", "1", "0", "0", "c", "0", "-1", "0", "a", "c", "0",
                      "-1"});
        d.z = fam("R_0.2", {});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n73");
        d.params = {Psign("eps")};
        d.w = fam("R_0.2", {});
        d.x = grid16({"1", "0", "0", "0", "0", "-1", "0", "0", "0", "0", "eps", "0", "1", "0",
                      "0", "-eps"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n74");
        d.params = {Pnz("q")};
        d.w = fam("R_0.2", {});
        d.x = grid16({"1", "0", "0", "0", "0", "-1", "0", "0", "0", "0", "-1", "0", "q", "0", "0",
                      "1"});
        d.z = fam("R_0.2", {});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n75");
        d.params = {Psign("eps"), Pnz("b")};
        d.w = fam("R_0.2", {});
        d.x = fam("X11", {"eps", "b", "0", "1"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n76");
        d.params = {P("a")};
        d.w = fam("R_0.3", {});
        d.x = grid16({"1", "0", "0", "0", "0", "a", "1", "0", "0", "0", "-1", "0", "i", "0", "0",
                      "a"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n77");
        d.params = {P("a"), P("b")};
        d.w = fam("R_0.3", {});
        d.x = fam("X21", {"a", "b"});
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n78");
        d.params = {P("a")};
        d.w = fam("R_0.3", {});
        d.x = grid16({"a", "0", "0", "i", "0", "a", "1", "0", "0", "1", "-a", "0", "i", "0", "0",
                      "a"});
        d.z = fam("R_0.3", {});
        add_entry_def(cat, d);
    }
    {
        EntryDef d = base("wxz/n79");
        d.params = arbitrary_params();
        d.w = p_recipe();
        d.x = arbitrary_recipe();
        d.z = p_recipe();
        add_entry_def(cat, d);
    }
}

} // namespace

void add_wxz_entries(Catalog& cat) {
    generics(cat);
    block_r31(cat);
    block_r21(cat);
    block_r22(cat);
    block_r11(cat);
    block_r12(cat);
    block_r13_r14(cat);
    block_r0x(cat);
}

} // namespace wxz::detail
