#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wxz/catalog.hpp"
#include "wxz/json_io.hpp"
#include "wxz/symmetry.hpp"

using namespace wxz;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

bool verifies(const WxzTriple& t) {
    return wxz_residual(t.w, t.x, t.z).pass(approx_tolerance());
}

WxzTriple sample_triple(int which, std::uint64_t seed) {
    const auto& entries = cat().wxz_entries();
    const SolutionEntry& e = entries[which % entries.size()];
    Rng rng = Rng::derive(seed, e.id, 0);
    return cat().sample_and_realize(e, rng).second;
}

} // namespace

TEST_CASE("identity continuous symmetry") {
    WxzTriple t = sample_triple(3, 1);
    WxzTriple u = apply_continuous(ContinuousSym::identity(), t);
    CHECK(u.w == t.w);
    CHECK(u.x == t.x);
    CHECK(u.z == t.z);
}

TEST_CASE("sigma conjugation maps the plus-form back") {
    // (T(x)T) R_2.1+(r,s) (T(x)T)^-1 = R_2.1(r,s) with T the swap
    SquareMatrix r21 = cat().family("R_2.1").instantiate_args({Scalar(2), Scalar(5)});
    WxzTriple t{op_plus(r21), SquareMatrix::identity(4), op_plus(r21)};
    ContinuousSym sym;
    sym.t = SquareMatrix::sigma();
    sym.s = SquareMatrix::sigma();
    WxzTriple u = apply_continuous(sym, t);
    CHECK(u.w == r21);
    CHECK(u.z == r21);
    CHECK(verifies(u));
}

TEST_CASE("diag(1,sqrt(s)) conjugation inverts the one-parameter family") {
    Scalar s(Rational(9, 4));  // perfect square keeps it exact
    SquareMatrix r12inv = matrix_inverse(cat().family("R_1.2").instantiate_args({s}));
    ContinuousSym sym;
    sym.t = SquareMatrix(2, {Scalar(1), Scalar(0), Scalar(0), scalar_sqrt(s)});
    sym.s = sym.t;
    WxzTriple u = apply_continuous(sym, WxzTriple{r12inv, SquareMatrix::identity(4), r12inv});
    CHECK(u.w == cat().family("R_1.2").instantiate_args({s.inverse()}));
    CHECK(u.w.is_exact());
}

TEST_CASE("discrete involutions") {
    WxzTriple t = sample_triple(11, 2);
    DiscreteSym tr{DiscreteSym::Tag::TransposeAll, false, false, 1, 1};
    WxzTriple u = apply_discrete(tr, apply_discrete(tr, t));
    CHECK(u.w == t.w);
    CHECK(u.x == t.x);
    CHECK(u.z == t.z);

    DiscreteSym at{DiscreteSym::Tag::AntiDiag, false, false, 1, 1};
    WxzTriple v = apply_discrete(at, apply_discrete(at, t));
    CHECK(v.w == t.w);
    CHECK(v.x == t.x);
    CHECK(v.z == t.z);
}

TEST_CASE("hash computed both ways agrees") {
    Rng rng(17);
    int done = 0;
    while (done < 1000) {
        std::vector<Scalar> e;
        for (int k = 0; k < 16; ++k) e.push_back(rng.scalar(false, true));
        SquareMatrix m(4, std::move(e));
        if (!matrix_invertible(m)) continue;
        CHECK(op_inv(op_plus(m)) == op_plus(op_inv(m)));
        ++done;
    }
}

TEST_CASE("composition closure") {
    Rng rng(29);
    WxzTriple t = sample_triple(7, 3);
    for (int k = 0; k < 20; ++k) {
        ContinuousSym s1, s2;
        s1.t = random_conjugator(rng);
        s1.s = random_conjugator(rng);
        s1.omega = rng.scalar(true);
        s1.xi = rng.scalar(true);
        s1.zeta = rng.scalar(true);
        s2.t = random_conjugator(rng);
        s2.s = random_conjugator(rng);
        s2.omega = rng.scalar(true);
        s2.xi = rng.scalar(true);
        s2.zeta = rng.scalar(true);
        WxzTriple lhs = apply_continuous(s2, apply_continuous(s1, t));
        WxzTriple rhs = apply_continuous(ContinuousSym::composed(s2, s1), t);
        CHECK(lhs.w == rhs.w);
        CHECK(lhs.x == rhs.x);
        CHECK(lhs.z == rhs.z);
    }
}

TEST_CASE("solution-set invariance under random symmetries") {
    Rng rng(41);
    int applied = 0;
    for (int trial = 0; applied < 400 && trial < 4000; ++trial) {
        WxzTriple t = sample_triple(trial, 4);
        if (!t.w.is_exact() || !t.x.is_exact() || !t.z.is_exact()) continue;
        try {
            WxzTriple u;
            switch (rng.below(3)) {
                case 0: {
                    ContinuousSym sym;
                    sym.t = random_conjugator(rng);
                    sym.s = random_conjugator(rng);
                    sym.omega = rng.scalar(true);
                    sym.xi = rng.scalar(true);
                    sym.zeta = rng.scalar(true);
                    u = apply_continuous(sym, t);
                    break;
                }
                case 1: {
                    DiscreteSym sym;
                    sym.tag = static_cast<DiscreteSym::Tag>(rng.below(5));
                    sym.w_hash = rng.coin();
                    sym.z_hash = rng.coin();
                    sym.c = rng.sign();
                    sym.d = rng.sign();
                    u = apply_discrete(sym, t);
                    break;
                }
                default: {
                    DiscreteSym sym{DiscreteSym::Tag::SwapWZ, false, false, rng.sign(), rng.sign()};
                    u = apply_discrete(sym, t);
                    break;
                }
            }
            CHECK(wxz_residual(u.w, u.x, u.z).exact());
            ++applied;
        } catch (const SingularMatrix&) {
        }
    }
    CHECK(applied == 400);
}

TEST_CASE("lemma hypothesis gating") {
    WxzTriple t{cat().family("R_1.3").instantiate_args({Scalar(2)}), SquareMatrix::identity(4),
                SquareMatrix::permutation_p()};
    // R_1.3 does not commute with a generic diag(x)diag conjugation
    SquareMatrix bad(2, {Scalar(1), Scalar(0), Scalar(0), Scalar(7)});
    CHECK_THROWS_AS(apply_lemma1(bad, bad, Lemma1Variant::LeftX, t), HypothesisViolated);

    // W commutes but X does not intertwine
    WxzTriple t2{cat().family("R_3.1").instantiate_args({Scalar(2), Scalar(3), Scalar(5)}),
                 cat().family("R_2.3").instantiate_args({Scalar(1), Scalar(2)}),
                 SquareMatrix::permutation_p()};
    CHECK_THROWS_AS(apply_lemma1(bad, bad, Lemma1Variant::LeftX, t2), HypothesisViolated);
    CHECK_THROWS_AS(apply_lemma2(bad, bad, Lemma2Variant::ConjZ, t2), HypothesisViolated);
}

TEST_CASE("lemma transformations on commuting data") {
    // diagonal W, diagonal T = A: all three variants produce verified triples
    WxzTriple t{cat().family("R_3.1").instantiate_args({Scalar(2), Scalar(3), Scalar(5)}),
                SquareMatrix::identity(4),
                cat().family("R_3.1").instantiate_args({Scalar(7), Scalar(2), Scalar(1)})};
    REQUIRE(verifies(t));
    SquareMatrix tdiag(2, {Scalar(1), Scalar(0), Scalar(0), Scalar(4)});

    WxzTriple a = apply_lemma1(tdiag, tdiag, Lemma1Variant::LeftX, t);
    CHECK(a.x == kron(tdiag, SquareMatrix::identity(2)));
    CHECK(verifies(a));
    WxzTriple b = apply_lemma1(tdiag, tdiag, Lemma1Variant::RightX, t);
    CHECK(verifies(b));
    WxzTriple c = apply_lemma1(tdiag, tdiag, Lemma1Variant::ConjW, t);
    CHECK(verifies(c));

    WxzTriple d = apply_lemma2(tdiag, tdiag, Lemma2Variant::LeftX, t);
    CHECK(d.x == kron(SquareMatrix::identity(2), tdiag));
    CHECK(verifies(d));
    CHECK(verifies(apply_lemma2(tdiag, tdiag, Lemma2Variant::RightX, t)));
    CHECK(verifies(apply_lemma2(tdiag, tdiag, Lemma2Variant::ConjZ, t)));

    // eight-vertex invariance: R_1.4 commutes with diag(1,-1)(x)diag(1,-1)
    WxzTriple e{cat().family("R_1.4").instantiate_args({Scalar(2)}), SquareMatrix::identity(4),
                SquareMatrix::permutation_p()};
    REQUIRE(verifies(e));
    SquareMatrix tpm(2, {Scalar(1), Scalar(0), Scalar(0), Scalar(-1)});
    CHECK(verifies(apply_lemma1(tpm, tpm, Lemma1Variant::ConjW, e)));
}

TEST_CASE("conjugation variants refuse data outside the sound regime") {
    // The flip commutes with every S(x)S and the diagonal X intertwines, yet
    // the conjugated flip is no Yang-Baxter solution; the operation must
    // refuse rather than emit a broken triple.
    WxzTriple f{SquareMatrix::permutation_p(),
                cat().family("X1").instantiate_args({Scalar(2), Scalar(3), Scalar(5)}),
                SquareMatrix::permutation_p()};
    REQUIRE(wxz_residual(f.w, f.x, f.z).exact());
    SquareMatrix sdiag(2, {Scalar(1), Scalar(0), Scalar(0), Scalar(3)});
    CHECK_THROWS_AS(apply_lemma2(sdiag, sdiag, Lemma2Variant::ConjZ, f), HypothesisViolated);
    CHECK_THROWS_AS(apply_lemma1(sdiag, sdiag, Lemma1Variant::ConjW, f), HypothesisViolated);
    // the non-conjugating variants remain valid on the same data
    CHECK(wxz_residual(apply_lemma2(sdiag, sdiag, Lemma2Variant::LeftX, f).w,
                       apply_lemma2(sdiag, sdiag, Lemma2Variant::LeftX, f).x,
                       apply_lemma2(sdiag, sdiag, Lemma2Variant::LeftX, f).z)
              .exact());
}

TEST_CASE("symmetry ops replay through their JSON form") {
    WxzTriple t = sample_triple(5, 6);
    Rng rng(61);
    ContinuousSym sym;
    sym.t = random_conjugator(rng);
    sym.s = random_conjugator(rng);
    sym.omega = rng.scalar(true);
    sym.xi = rng.scalar(true);
    sym.zeta = rng.scalar(true);
    WxzTriple direct = apply_continuous(sym, t);
    WxzTriple replayed = apply_sym_json(continuous_sym_to_json(sym), t);
    CHECK(direct.w == replayed.w);
    CHECK(direct.x == replayed.x);
    CHECK(direct.z == replayed.z);

    DiscreteSym d{DiscreteSym::Tag::SwapWZ, false, false, 1, -1};
    WxzTriple d1 = apply_discrete(d, t);
    WxzTriple d2 = apply_sym_json(discrete_sym_to_json(d), t);
    CHECK(d1.w == d2.w);
    CHECK(d1.z == d2.z);

    WxzTriple base{cat().family("R_3.1").instantiate_args({Scalar(2), Scalar(3), Scalar(5)}),
                   SquareMatrix::identity(4), SquareMatrix::permutation_p()};
    SquareMatrix td(2, {Scalar(1), Scalar(0), Scalar(0), Scalar(7)});
    WxzTriple l1 = apply_lemma1(td, td, Lemma1Variant::LeftX, base);
    WxzTriple l2 = apply_sym_json(lemma1_to_json(td, td, Lemma1Variant::LeftX), base);
    CHECK(l1.x == l2.x);
}

TEST_CASE("orbit sampling") {
    WxzTriple start{SquareMatrix::permutation_p(), SquareMatrix::identity(4),
                    SquareMatrix::permutation_p()};
    auto w0 = orbit_sample(start, 0, 9);
    CHECK(w0.size() == 1);

    auto w3 = orbit_sample(start, 3, 9);
    CHECK(w3.size() == 4);
    for (const auto& t : w3) CHECK(wxz_residual(t.w, t.x, t.z).exact());

    // determinism
    auto w3b = orbit_sample(start, 3, 9);
    REQUIRE(w3.size() == w3b.size());
    for (std::size_t k = 0; k < w3.size(); ++k) CHECK(w3[k].w == w3b[k].w);

    // depth 5 from a generic family-1 instance
    WxzTriple gen{cat().family("R_2.2").instantiate_args({Scalar(2), Scalar(3)}),
                  SquareMatrix::identity(4),
                  cat().family("R_1.3").instantiate_args({Scalar(4)})};
    auto w5 = orbit_sample(gen, 5, 10);
    CHECK(w5.size() == 6);
    for (const auto& t : w5) CHECK(wxz_residual(t.w, t.x, t.z).pass(approx_tolerance()));

    WxzTriple broken{SquareMatrix::identity(4).with_entry(0, 1, Scalar(1)),
                     SquareMatrix::identity(4), SquareMatrix::identity(4)};
    CHECK_THROWS_AS(orbit_sample(broken, 1, 1), PreconditionViolated);
}
