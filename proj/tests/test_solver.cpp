#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/oracles.hpp"
#include "wxz/catalog.hpp"
#include "wxz/solver.hpp"
#include "wxz/symmetry.hpp"

using namespace wxz;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

SquareMatrix random_exact(Rng& rng) {
    std::vector<Scalar> e;
    for (int k = 0; k < 16; ++k) e.push_back(rng.scalar(false, true));
    return SquareMatrix(4, std::move(e));
}

SquareMatrix diag4(Scalar a, Scalar b, Scalar c, Scalar d) {
    SquareMatrix m(4);
    return m.with_entry(0, 0, a).with_entry(1, 1, b).with_entry(2, 2, c).with_entry(3, 3, d);
}

} // namespace

TEST_CASE("kernel of the identity is everything") {
    CHECK(solve_z_linear(SquareMatrix::identity(4)).size() == 16);
    CHECK(solve_w_linear(SquareMatrix::identity(4)).size() == 16);
}

TEST_CASE("diagonal X kernel contains the five-vertex pattern") {
    SquareMatrix x = diag4(Scalar(1), Scalar(2), Scalar(3), Scalar(5));
    auto basis = solve_z_linear(x);
    for (int pos : {0, 5, 10, 15, 9}) {  // (0,0),(1,1),(2,2),(3,3),(2,1)
        SquareMatrix unit(4);
        unit = unit.with_entry(pos / 4, pos % 4, Scalar(1));
        CHECK(in_span(basis, unit));
    }
}

TEST_CASE("w-side examples") {
    SquareMatrix p = SquareMatrix::permutation_p();
    auto wp = solve_w_linear(p);
    CHECK(in_span(wp, p));

    // X = diag(1,1,1,-1): the full eight-vertex span solves the W equation
    SquareMatrix x = diag4(Scalar(1), Scalar(1), Scalar(1), Scalar(-1));
    auto basis = solve_w_linear(x);
    for (int pos : eight_vertex_pattern()) {
        SquareMatrix unit(4);
        unit = unit.with_entry(pos / 4, pos % 4, Scalar(1));
        CHECK(in_span(basis, unit));
    }
}

TEST_CASE("soundness and rank/nullity against the oracle") {
    Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        SquareMatrix x = random_exact(rng);
        LinearSystem sys = z_linear_system(x);
        auto basis = nullspace_basis(sys);
        int rank = system_rank(sys);
        CHECK(rank + static_cast<int>(basis.size()) == 16);
        CHECK(oracle::rank_oracle(sys) == rank);
        for (const auto& b : basis) CHECK(yb_commutator(x, x, b).is_zero());
    }
}

TEST_CASE("catalog Z lies in the computed span") {
    int tested = 0;
    for (const auto& e : cat().xxz_entries()) {
        if (e.id.find("trivial") != std::string::npos) continue;
        if (tested >= 12) break;
        Rng rng = Rng::derive(31337, e.id, 0);
        auto [env, t] = cat().sample_and_realize(e, rng);
        if (!t.x.is_exact() || !t.z.is_exact()) continue;
        auto basis = solve_z_linear(t.x);
        CHECK(in_span(basis, t.z));
        ++tested;
    }
    CHECK(tested >= 10);
}

TEST_CASE("no nontrivial invertible YBE element for the octagonal family") {
    SquareMatrix x = cat().family("X13").instantiate_args({Scalar(1)});
    auto basis = solve_z_linear(x);
    std::vector<SquareMatrix> candidates = basis;
    Rng rng(5);
    for (int k = 0; k < 80; ++k) candidates.push_back(sample_span(basis, rng));
    for (const auto& pat : {diagonal_pattern(), five_vertex_pattern(), eight_vertex_pattern(),
                            special_triangular_pattern()}) {
        auto sub = pattern_restrict(basis, pat);
        for (const auto& m : sub) candidates.push_back(m);
        for (int k = 0; k < 20; ++k) candidates.push_back(sample_span(sub, rng));
    }
    auto kept = ybe_filter(candidates, /*require_invertible=*/true);
    SquareMatrix p = SquareMatrix::permutation_p();
    for (const auto& m : kept) {
        // every invertible finding is a scalar multiple of the flip
        Scalar lambda = m.at(0, 0);
        CHECK_FALSE(lambda.is_zero());
        CHECK(m == lambda * p);
    }
}

TEST_CASE("ybe filter") {
    std::vector<SquareMatrix> cands = {SquareMatrix::identity(4), SquareMatrix::permutation_p(),
                                       SquareMatrix::identity(4).with_entry(0, 1, Scalar(1)),
                                       cat().family("R_0.3").instantiate_args({})};
    auto kept = ybe_filter(cands);
    CHECK(kept.size() == 3);  // the perturbed identity fails
    auto kept_inv = ybe_filter(cands, true);
    CHECK(kept_inv.size() == 3);
}

TEST_CASE("pattern restriction") {
    auto all = solve_z_linear(SquareMatrix::identity(4));
    auto diag = pattern_restrict(all, diagonal_pattern());
    CHECK(diag.size() == 4);
    for (const auto& m : diag) {
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (r != c) CHECK(m.at(r, c).is_zero());
    }
}

TEST_CASE("derive_from_qr") {
    SquareMatrix p = SquareMatrix::permutation_p();
    auto [t1, t2] = derive_from_qr(p, p);
    CHECK(t1.w == p);
    CHECK(t2.z == p);
    CHECK(wxz_residual(t1.w, t1.x, t1.z).exact());
    CHECK(wxz_residual(t2.w, t2.x, t2.z).exact());

    // a pair with a genuinely conjugated second triple
    SquareMatrix q8v = cat().family("R_0.3").instantiate_args({});
    SquareMatrix r8v = diag4(Scalar(1), Scalar(1), Scalar(1), Scalar(-1));
    auto [u1, u2] = derive_from_qr(q8v, r8v);
    CHECK(wxz_residual(u1.w, u1.x, u1.z).exact());
    CHECK(wxz_residual(u2.w, u2.x, u2.z).exact());
    CHECK(u2.z != u2.w);

    // q = 1 with a diagonal Yang-Baxter solution
    SquareMatrix r31 = diag4(Scalar(1), Scalar(2), Scalar(3), Scalar(5));
    auto [v1, v2] = derive_from_qr(SquareMatrix::identity(4), r31);
    CHECK(wxz_residual(v1.w, v1.x, v1.z).exact());
    CHECK(wxz_residual(v2.w, v2.x, v2.z).exact());

    SquareMatrix bad = SquareMatrix::identity(4).with_entry(0, 1, Scalar(1));
    CHECK_THROWS_WITH_AS(derive_from_qr(p, bad), "precondition violated: [R,R,R] != 0",
                         PreconditionViolated);
    // individually fine solutions whose mixed equations fail
    SquareMatrix r03 = cat().family("R_0.3").instantiate_args({});
    CHECK_THROWS_AS(derive_from_qr(r31, r03), PreconditionViolated);
    // q = 1 demands commuting embeddings of r, which fails here
    CHECK_THROWS_AS(derive_from_qr(SquareMatrix::identity(4), r03), PreconditionViolated);
    // admissible pair whose constructed triple leaves the manifold: refused
    SquareMatrix r21 = cat().family("R_2.1").instantiate_args({Scalar(2), Scalar(3)});
    CHECK_THROWS_AS(derive_from_qr(r21, r21), PreconditionViolated);
}

TEST_CASE("canonical reducer on planted instances") {
    Rng rng(2718);
    int counts[15] = {0};
    for (int trial = 0; trial < 300; ++trial) {
        int form = static_cast<int>(rng.below(14)) + 1;
        const MatrixFamily& fam = cat().family("A_" + std::to_string(form));
        Assignment env;
        for (const auto& p : fam.params()) env[p.name] = rng.scalar(false);
        SquareMatrix canonical = fam.instantiate(env);
        SquareMatrix s = random_conjugator(rng);
        Scalar lambda = rng.scalar(true);
        SquareMatrix conj = kron(SquareMatrix::identity(2), s);
        SquareMatrix input = lambda * (conj * canonical * matrix_inverse(conj));

        CanonicalReduction red = reduce_canonical(input);
        REQUIRE(red.form_index >= 1);
        REQUIRE(red.form_index <= 14);
        counts[red.form_index]++;
        CHECK(red.exact);
        SquareMatrix cc = kron(SquareMatrix::identity(2), red.s);
        CHECK(red.lambda * (cc * input * matrix_inverse(cc)) == red.canonical);
        CHECK(cat().canonical_patterns()[red.form_index - 1].matches(red.canonical));

        CanonicalReduction again = reduce_canonical(red.canonical);
        CHECK(again.form_index == red.form_index);
    }
    // the planted sweep must actually reach a spread of forms
    int reached = 0;
    for (int k = 1; k <= 14; ++k)
        if (counts[k]) ++reached;
    CHECK(reached >= 10);
}

TEST_CASE("canonical reducer spec cases") {
    // already in the all-scalar-blocks pattern with distinct upper-left diagonal
    SquareMatrix a13{{Scalar(2), Scalar(0), Scalar(5), Scalar(0)},
                     {Scalar(0), Scalar(3), Scalar(0), Scalar(5)},
                     {Scalar(7), Scalar(0), Scalar(4), Scalar(0)},
                     {Scalar(0), Scalar(7), Scalar(0), Scalar(4)}};
    CanonicalReduction red = reduce_canonical(a13);
    CHECK(red.form_index == 13);
    CHECK(red.lambda == Scalar(1));

    // distinct eigenvalues in the upper-right block: scaled to alpha +- 1
    Rng rng(555);
    for (int k = 0; k < 20; ++k) {
        SquareMatrix m = SquareMatrix(4);
        std::vector<Scalar> e;
        for (int j = 0; j < 16; ++j) e.push_back(rng.scalar(false));
        m = SquareMatrix(4, e);
        // plant distinct rational eigenvalues 3 and 5 in the upper-right block
        m = m.with_entry(0, 2, Scalar(3)).with_entry(0, 3, Scalar(0)).with_entry(1, 2, Scalar(7)).with_entry(1, 3, Scalar(5));
        CanonicalReduction r = reduce_canonical(m);
        CHECK(r.form_index == 1);
        CHECK(r.canonical.at(0, 2) - r.canonical.at(1, 3) == Scalar(2));
        // lambda = 2/(mu1 - mu2), eigenvalues {5,3} or {3,5}
        bool ok = r.lambda == Scalar(1) || r.lambda == Scalar(-1);
        CHECK(ok);
    }

    // an X2 instance lands in the lower-triangular-equal-diagonal form
    SquareMatrix x2 = cat().family("X2").instantiate_args({Scalar(3), Scalar(2), Scalar(5)});
    CanonicalReduction rx = reduce_canonical(x2);
    CHECK(rx.form_index == 12);
    SquareMatrix cc = kron(SquareMatrix::identity(2), rx.s);
    CHECK(rx.lambda * (cc * x2 * matrix_inverse(cc)) == rx.canonical);

    // irrational block eigenvalues fall back to the approximate path
    SquareMatrix irr = SquareMatrix::identity(4)
                           .with_entry(0, 2, Scalar(1))
                           .with_entry(1, 3, Scalar(-1))
                           .with_entry(0, 3, Scalar(1))
                           .with_entry(1, 2, Scalar(1));
    CanonicalReduction ri = reduce_canonical(irr);
    CHECK_FALSE(ri.exact);
    CHECK(ri.form_index == 1);
}

TEST_CASE("check_triple") {
    SquareMatrix p = SquareMatrix::permutation_p();
    SquareMatrix one = SquareMatrix::identity(4);
    TripleCheck tc = check_triple(p, one, p);
    CHECK(tc.pass);
    CHECK(tc.report.exact());
    CHECK(tc.w_invertible);
    CHECK(tc.x_invertible);
    CHECK(tc.z_invertible);
    // the flip's partial transpose is singular, so the filter rejects it
    CHECK_FALSE(tc.w_second_invertible);
    CHECK_FALSE(check_triple(p, one, p, /*require_second_inverse=*/true).pass);

    SquareMatrix w = cat().family("R_3.1").instantiate_args({Scalar(2), Scalar(3), Scalar(5)});
    SquareMatrix z = cat().family("R_1.3").instantiate_args({Scalar(1)});
    TripleCheck tg = check_triple(w, one, z);
    CHECK(tg.pass);
    CHECK(tg.report.exact());
    CHECK(tg.w_second_invertible);  // diagonal matrices are fixed by the partial transpose
    CHECK(check_triple(w, one, z, true).pass);

    TripleCheck tb = check_triple(w.with_entry(0, 1, Scalar(1)), one, z);
    CHECK_FALSE(tb.pass);
    CHECK(tb.report.max_residual() > 0);
}
