#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wxz/catalog.hpp"

using namespace wxz;

namespace {
const Catalog& cat() { return Catalog::builtin(); }
}

TEST_CASE("instantiate concrete matrices") {
    const MatrixFamily& r22 = cat().family("R_2.2");
    SquareMatrix m = r22.instantiate_args({Scalar(2), Scalar(3)});
    CHECK(m.at(0, 0) == Scalar(1));
    CHECK(m.at(1, 1) == Scalar(2));
    CHECK(m.at(2, 2) == Scalar(3));
    CHECK(m.at(3, 3) == Scalar(-6));
    CHECK(m.at(2, 1) == Scalar(-5));  // 1 - rs

    CHECK(cat().family("R_3.1").instantiate_args({Scalar(1), Scalar(1), Scalar(1)}) ==
          SquareMatrix::identity(4));
}

TEST_CASE("missing and violated parameters") {
    const MatrixFamily& r31 = cat().family("R_3.1");
    CHECK_THROWS_AS(r31.instantiate(Assignment{{"r", Scalar(1)}}), IncompleteAssignment);
    CHECK_THROWS_AS(r31.instantiate_args({Scalar(0), Scalar(1), Scalar(1)}), ConstraintViolated);

    // the X14 family carries c^2 p = a^2 p - 1; a consistent p is accepted,
    // anything else refused
    const MatrixFamily& x14 = cat().family("X14");
    Assignment good{{"a", Scalar(2)}, {"c", Scalar(1)}, {"eps", Scalar(1)},
                    {"p", Scalar(Rational(1, 3))}};
    CHECK_NOTHROW(x14.instantiate(good));
    Assignment bad = good;
    bad["p"] = Scalar(5);
    CHECK_THROWS_AS(x14.instantiate(bad), ConstraintViolated);

    // X15 excludes a = +-1
    CHECK_THROWS_AS(cat().family("X15").instantiate_args({Scalar(1)}), ConstraintViolated);
}

TEST_CASE("sampling respects domains") {
    const MatrixFamily& r14 = cat().family("R_1.4");
    for (int k = 0; k < 200; ++k) {
        Rng rng = Rng::derive(99, "r14", k);
        Assignment env = r14.sample(rng);
        CHECK_FALSE(env.at("t").is_zero());
    }
    const MatrixFamily& x15 = cat().family("X15");
    for (int k = 0; k < 200; ++k) {
        Rng rng = Rng::derive(99, "x15", k);
        Assignment env = x15.sample(rng);
        CHECK(env.at("a") != Scalar(1));
        CHECK(env.at("a") != Scalar(-1));
    }
    const MatrixFamily& x19 = cat().family("X19");
    for (int k = 0; k < 100; ++k) {
        Rng rng = Rng::derive(99, "x19", k);
        Assignment env = x19.sample(rng);
        bool is_sign = env.at("eps") == Scalar(1) || env.at("eps") == Scalar(-1);
        CHECK(is_sign);
    }
    // X14's derived p always satisfies the family constraint
    const MatrixFamily& x14 = cat().family("X14");
    for (int k = 0; k < 100; ++k) {
        Rng rng = Rng::derive(99, "x14", k);
        Assignment env = x14.sample(rng);
        Scalar lhs = env.at("c") * env.at("c") * env.at("p");
        Scalar rhs = env.at("a") * env.at("a") * env.at("p") - Scalar(1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sampled instances are invertible where required") {
    for (const char* name : {"R_2.1", "X1", "X11", "X22", "X23"}) {
        const MatrixFamily& f = cat().family(name);
        for (int k = 0; k < 30; ++k) {
            Rng rng = Rng::derive(7, name, k);
            CHECK(matrix_invertible(f.instantiate(f.sample(rng))));
        }
    }
}

TEST_CASE("sample_many is deterministic in the seed") {
    const MatrixFamily& f = cat().family("R_2.3");
    auto a = f.sample_many(11, 5);
    auto b = f.sample_many(11, 5);
    REQUIRE(a.size() == 5);
    for (int k = 0; k < 5; ++k) {
        CHECK(a[k].at("u") == b[k].at("u"));
        CHECK(a[k].at("v") == b[k].at("v"));
    }
    auto c = f.sample_many(12, 5);
    bool all_same = true;
    for (int k = 0; k < 5; ++k) {
        if (a[k].at("u") != c[k].at("u") || a[k].at("v") != c[k].at("v")) all_same = false;
    }
    CHECK_FALSE(all_same);
}

TEST_CASE("exact values stay reduced") {
    Scalar half(Rational(2, 4));
    CHECK(half.exact_re().get_num() == 1);
    CHECK(half.exact_re().get_den() == 2);
    Scalar sum = Scalar(Rational(1, 6)) + Scalar(Rational(1, 3));
    CHECK(sum.exact_re().get_num() == 1);
    CHECK(sum.exact_re().get_den() == 2);
}

TEST_CASE("disjunctive domain constraints") {
    const MatrixFamily& x2 = cat().family("X2");
    Assignment both_zero{{"a", Scalar(2)}, {"b", Scalar(0)}, {"c", Scalar(0)}};
    CHECK_THROWS_AS(x2.instantiate(both_zero), ConstraintViolated);
    Assignment one_zero{{"a", Scalar(2)}, {"b", Scalar(0)}, {"c", Scalar(3)}};
    CHECK_NOTHROW(x2.instantiate(one_zero));
}
