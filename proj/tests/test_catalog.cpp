#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "wxz/catalog.hpp"
#include "wxz/sweep.hpp"

using namespace wxz;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

SquareMatrix inst(const char* fam, std::vector<Scalar> args) {
    return cat().family(fam).instantiate_args(args);
}

SquareMatrix conj_tt(const SquareMatrix& t2, const SquareMatrix& m) {
    SquareMatrix tt = kron(t2, t2);
    return tt * m * matrix_inverse(tt);
}

const SquareMatrix kSigma = SquareMatrix::sigma();

} // namespace

TEST_CASE("cardinalities") {
    CHECK(cat().r_family_names().size() == 12);
    CHECK(cat().x_family_names().size() == 23);
    CHECK(cat().canonical_patterns().size() == 14);
    for (int k = 0; k < 14; ++k) CHECK(cat().canonical_patterns()[k].index == k + 1);
    CHECK(cat().set("R_8V").members.size() == 14);
}

TEST_CASE("set algebra at the family level") {
    auto family_set = [](const SolutionSet& s) {
        std::set<std::string> out;
        for (const auto& m : s.members) {
            // strip instance decorations like "R_3.1(1,1,1)"
            out.insert(m.substr(0, m.find('(')));
        }
        return out;
    };
    auto s = family_set(cat().set("S"));
    auto s5 = family_set(cat().set("S_5V"));
    auto s8 = family_set(cat().set("S_8V"));
    auto st = family_set(cat().set("S_ST"));

    CHECK(s.size() == 12);
    CHECK(s5.size() == 3);
    CHECK(s8.size() == 10);
    CHECK(st.size() == 4);

    CHECK(std::includes(s8.begin(), s8.end(), s5.begin(), s5.end()));
    std::set<std::string> uni;
    uni.insert(s8.begin(), s8.end());
    uni.insert(st.begin(), st.end());
    CHECK(uni == s);
}

TEST_CASE("R-family invariance identities") {
    Rng rng(123);
    for (int k = 0; k < 10; ++k) {
        Scalar r = rng.scalar(true), s = rng.scalar(true), t = rng.scalar(true);
        Scalar u = rng.scalar(false), v = rng.scalar(false);

        SquareMatrix r31 = inst("R_3.1", {r, s, t});
        CHECK(r31.transpose() == r31);
        CHECK(matrix_inverse(r31) == inst("R_3.1", {r.inverse(), s.inverse(), t.inverse()}));
        CHECK(op_plus(r31) == inst("R_3.1", {s, r, t}));
        CHECK(conj_tt(kSigma, r31) == t * inst("R_3.1", {s / t, r / t, t.inverse()}));

        SquareMatrix r21 = inst("R_2.1", {r, s});
        CHECK(op_antidiag(r21) == inst("R_2.1", {s, r}));
        CHECK(matrix_inverse(r21) == inst("R_2.1", {r.inverse(), s.inverse()}));
        CHECK(conj_tt(kSigma, op_plus(r21)) == r21);

        SquareMatrix r22 = inst("R_2.2", {r, s});
        CHECK(op_antidiag(r22) == (-(r * s)) * inst("R_2.2", {-r.inverse(), -s.inverse()}));
        CHECK(conj_tt(kSigma, op_plus(r22)) == (-(r * s)) * inst("R_2.2", {-s.inverse(), -r.inverse()}));

        SquareMatrix r23 = inst("R_2.3", {u, v});
        CHECK(op_antidiag(r23) == r23);
        SquareMatrix tpm(2, {Scalar(1), Scalar(0), Scalar(0), Scalar(-1)});
        CHECK(conj_tt(tpm, matrix_inverse(r23)) == inst("R_2.3", {u, Scalar(2) * u - v}));
        if (!u.is_zero()) {
            SquareMatrix tu(2, {u, Scalar(0), Scalar(0), Scalar(1)});
            CHECK(conj_tt(tu, op_plus(r23)) == inst("R_2.3", {u.inverse(), v / (u * u)}));
        }

        SquareMatrix r11 = inst("R_1.1", {r});
        CHECK(r11.transpose() == r11);
        CHECK(op_plus(r11) == r11);
        // diag(1,i) conjugation of the inverse rescales into the family again
        SquareMatrix ti(2, {Scalar(1), Scalar(0), Scalar(0), Scalar::i()});
        CHECK(conj_tt(ti, matrix_inverse(r11)) ==
              Scalar(Rational(1, 4)) * inst("R_1.1", {r.inverse()}));

        // T = diag(1, sqrt(s)) at a perfect square keeps everything exact
        Scalar sq = s * s;
        SquareMatrix r12 = inst("R_1.2", {sq});
        SquareMatrix ts(2, {Scalar(1), Scalar(0), Scalar(0), scalar_sqrt(sq)});
        CHECK(conj_tt(ts, matrix_inverse(r12)) == inst("R_1.2", {sq.inverse()}));

        SquareMatrix r13 = inst("R_1.3", {u});
        CHECK(op_plus(r13) == matrix_inverse(r13));
        CHECK(op_plus(r13) == conj_tt(tpm, r13));

        SquareMatrix r14 = inst("R_1.4", {t});
        CHECK(r14.transpose() == r14);
        CHECK(op_plus(r14) == r14);
        CHECK(matrix_inverse(r14) == inst("R_1.4", {t.inverse()}));
        CHECK(conj_tt(kSigma, r14) == r14);

        for (const char* nm : {"R_0.1", "R_0.2"}) {
            SquareMatrix r0 = inst(nm, {});
            CHECK(op_antidiag(r0) == r0);
            CHECK(op_plus(r0) == r0);
            CHECK(conj_tt(ti, matrix_inverse(r0)) == r0);
        }
        SquareMatrix r03 = inst("R_0.3", {});
        CHECK(r03.transpose() == r03);
        CHECK(conj_tt(kSigma, op_plus(r03)) == r03);
        CHECK(Scalar(2) * conj_tt(ti, matrix_inverse(r03)) == r03);
    }
}

TEST_CASE("enumerate scopes") {
    auto generic = cat().enumerate("generic");
    std::set<std::string> bases;
    for (const auto& e : generic) {
        bases.insert(e.id.substr(0, e.id.find('[')));
    }
    CHECK(bases.size() == 7);

    auto nongeneric = cat().enumerate("nongeneric");
    std::set<std::string> nbases;
    for (const auto& e : nongeneric) nbases.insert(e.id.substr(0, e.id.find('[')));
    CHECK(nbases.size() == 79);

    CHECK(cat().enumerate("wxz").size() == generic.size() + nongeneric.size());
    CHECK_THROWS_AS(cat().enumerate("nope"), Error);

    // the terminal item: W = P, X arbitrary, Z = P
    bool found = false;
    for (const auto& e : nongeneric) {
        if (e.id == "wxz/n79") {
            found = true;
            CHECK(e.x.label == "arbitrary");
        }
    }
    CHECK(found);

    // the XXZ list for the diagonal family includes Z in S_5V
    int diag_5v = 0;
    for (const auto& e : cat().xxz_entries()) {
        if (e.id.rfind("xxz/X1/1[", 0) == 0) ++diag_5v;
    }
    CHECK(diag_5v == 3);
}

TEST_CASE("realize a cross-bound entry") {
    // W = R_2.1(2,3) with the diagonal-ish X at a = 5 forces Z = R_2.1(5, 1/30)
    const SolutionEntry* entry = nullptr;
    for (const auto& e : cat().wxz_entries()) {
        if (e.id == "wxz/n23") entry = &e;
    }
    REQUIRE(entry != nullptr);
    Assignment env{{"r", Scalar(2)}, {"s", Scalar(3)}, {"a", Scalar(5)}};
    WxzTriple t = cat().realize_entry(*entry, env);
    CHECK(t.w == inst("R_2.1", {Scalar(2), Scalar(3)}));
    CHECK(t.z == inst("R_2.1", {Scalar(5), Scalar(Rational(1, 30))}));
    CHECK(wxz_residual(t.w, t.x, t.z).exact());

    // generic entry 1 with W = Z = P, X = 1
    for (const auto& e : cat().wxz_entries()) {
        if (e.id == "wxz/g1[W:R_0.4][Z:R_0.4]") {
            WxzTriple g = cat().realize_entry(e, {});
            CHECK(g.w == SquareMatrix::permutation_p());
            CHECK(g.x == SquareMatrix::identity(4));
            CHECK(wxz_residual(g.w, g.x, g.z).exact());
        }
    }
}

TEST_CASE("radical-bearing conjugated entry stays exact at square radicands") {
    // the conjugator uses sqrt(a); a is sampled as a perfect square
    const SolutionEntry* entry = nullptr;
    for (const auto& e : cat().xxz_entries()) {
        if (e.id == "xxz/X8/3") entry = &e;
    }
    REQUIRE(entry != nullptr);
    Assignment env{{"a", Scalar(4)}, {"x", Scalar(2)}};
    WxzTriple t = cat().realize_entry(*entry, env);
    CHECK(t.z.is_exact());
    ResidualReport rep = wxz_residual_masked(t.w, t.x, t.z, entry->residual_mask());
    CHECK(rep.exact());
}

TEST_CASE("catalog JSON round trip") {
    std::string text = cat().to_json_text();
    Catalog loaded = Catalog::from_json_text(text);
    CHECK(loaded.to_json_text() == text);
    CHECK(loaded.r_family_names().size() == 12);
    CHECK(loaded.x_family_names().size() == 23);
    CHECK(loaded.wxz_entries().size() == cat().wxz_entries().size());

    // a loaded catalog realizes identical matrices
    Rng rng(5);
    const auto& e1 = cat().wxz_entries().at(40);
    const SolutionEntry* e2 = nullptr;
    for (const auto& e : loaded.wxz_entries()) {
        if (e.id == e1.id) e2 = &e;
    }
    REQUIRE(e2 != nullptr);
    auto [env, t1] = cat().sample_and_realize(e1, rng);
    WxzTriple t2 = loaded.realize_entry(*e2, env);
    CHECK(t1.w == t2.w);
    CHECK(t1.x == t2.x);
    CHECK(t1.z == t2.z);
}

namespace {

// char poly coefficients by Faddeev-LeVerrier, exact
std::array<Scalar, 5> char_poly(const SquareMatrix& a) {
    std::array<Scalar, 5> c{Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    SquareMatrix m(a.dim());
    for (int k = 1; k <= a.dim(); ++k) {
        m = (k == 1) ? a : a * (m + c[k - 1] * SquareMatrix::identity(a.dim()));
        Scalar tr(0);
        for (int j = 0; j < a.dim(); ++j) tr += m.at(j, j);
        c[k] = -(tr / Scalar(k));
    }
    return c;
}

} // namespace

TEST_CASE("the two explicit eight-vertex members are similar to named families") {
    // spectra match R_3.1(r,r,1) with r = (1-p)/(1+p) and R_1.4(t) scaled,
    // t = (1+p)/(1-p)
    Scalar p(Rational(1, 3)), q(2);
    Assignment env{{"p", p}, {"q", q}};
    Expr cell = Expr::parse("p/q^2");
    SquareMatrix m1{{Scalar(1), Scalar(0), Scalar(0), cell.eval(env)},
                    {Scalar(0), Scalar(1), p, Scalar(0)},
                    {Scalar(0), p, Scalar(1), Scalar(0)},
                    {p * q * q, Scalar(0), Scalar(0), Scalar(1)}};
    Scalar r = (Scalar(1) - p) / (Scalar(1) + p);
    SquareMatrix target1 = (Scalar(1) + p) * cat().family("R_3.1").instantiate_args({r, r, Scalar(1)});
    CHECK(char_poly(m1) == char_poly(target1));
    CHECK(yb_commutator(m1, m1, m1).is_zero());

    SquareMatrix m2{{Scalar(1), Scalar(0), Scalar(0), cell.eval(env)},
                    {Scalar(0), Scalar(-1), p, Scalar(0)},
                    {Scalar(0), p, Scalar(-1), Scalar(0)},
                    {p * q * q, Scalar(0), Scalar(0), Scalar(1)}};
    Scalar t = (Scalar(1) + p) / (Scalar(1) - p);
    SquareMatrix target2 = (Scalar(1) - p) * cat().family("R_1.4").instantiate_args({t});
    CHECK(char_poly(m2) == char_poly(target2));
    CHECK(yb_commutator(m2, m2, m2).is_zero());
}

TEST_CASE("set-valued slots expand to one entry per member family") {
    std::map<std::string, int> counts;
    for (const auto& e : cat().wxz_entries()) {
        counts[e.id.substr(0, e.id.find('['))]++;
    }
    CHECK(counts["wxz/g1"] == 13 * 12);  // W in S, Z in S u {R_1.2^T}
    CHECK(counts["wxz/g2"] == 10 * 11);
    CHECK(counts["wxz/g3"] == 10);
    CHECK(counts["wxz/g4"] == 10);
    CHECK(counts["wxz/g5"] == 3 * 4);
    CHECK(counts["wxz/g6"] == 3 * 5);
    CHECK(counts["wxz/g7"] == 4 * 5);
    CHECK(counts["wxz/n23"] == 1);
    CHECK(cat().wxz_entries().size() == 412);
}

TEST_CASE("shipped catalog file matches the built-in tables") {
    std::ifstream in(std::string(WXZ_SOURCE_DIR) + "/data/catalog.json");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == cat().to_json_text() + "\n");
}

TEST_CASE("yb soundness spot check over every R family") {
    for (const auto& name : cat().r_family_names()) {
        const MatrixFamily& f = cat().family(name);
        for (int k = 0; k < 3; ++k) {
            Rng rng = Rng::derive(2024, name, k);
            SquareMatrix r = f.instantiate(f.sample(rng));
            CHECK(yb_commutator(r, r, r).is_zero());
        }
    }
}
