#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wxz/sweep.hpp"

using namespace wxz;

TEST_CASE("serial and parallel sweeps agree byte for byte") {
    VerifyOptions opts;
    opts.scope = "wxx";
    opts.samples = 3;
    opts.seed = 17;
    opts.parallel = true;
    VerificationReport par = run_verification(Catalog::builtin(), opts);
    opts.parallel = false;
    VerificationReport ser = run_verification(Catalog::builtin(), opts);
    CHECK(par.to_json_text() == ser.to_json_text());
    CHECK(par.all_passed());
}

TEST_CASE("determinism in the seed") {
    VerifyOptions opts;
    opts.scope = "ybe";
    opts.samples = 4;
    opts.seed = 5;
    VerificationReport a = run_verification(Catalog::builtin(), opts);
    VerificationReport b = run_verification(Catalog::builtin(), opts);
    CHECK(a.to_json_text() == b.to_json_text());
    CHECK(a.all_passed());
    CHECK(a.entries.size() == 12);
    CHECK(a.exact_fraction() == 1.0);
}

TEST_CASE("approx backend still passes under the tolerance") {
    VerifyOptions opts;
    opts.scope = "ybe";
    opts.samples = 3;
    opts.seed = 2;
    opts.approx_backend = true;
    VerificationReport rep = run_verification(Catalog::builtin(), opts);
    CHECK(rep.all_passed());
    CHECK(rep.exact_checks == 0);
    CHECK(rep.exact_fraction() == 0.0);
}

TEST_CASE("corrupted catalog fails with the entry named") {
    std::string text = Catalog::builtin().to_json_text();
    // break the five-vertex entry of the first two-parameter family
    auto pos = text.find("\"(1-(r*s))\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 11, "\"(2-(r*s))\"");
    Catalog broken = Catalog::from_json_text(text);

    VerifyOptions opts;
    opts.scope = "ybe";
    opts.samples = 4;
    opts.seed = 7;
    VerificationReport rep = run_verification(broken, opts);
    CHECK_FALSE(rep.all_passed());
    bool named = false;
    for (const auto& e : rep.entries) {
        if (!e.pass && e.id.find("R_2.1") != std::string::npos) named = true;
    }
    CHECK(named);
}

TEST_CASE("second-inverse gate rejects flip-based triples") {
    VerifyOptions opts;
    opts.scope = "wxz";
    opts.samples = 1;
    opts.seed = 3;
    opts.second_inverse = true;
    VerificationReport rep = run_verification(Catalog::builtin(), opts);
    // triples with W = P or Z = P fail the quality filter; plenty of others stay
    CHECK(rep.failed > 0);
    CHECK(rep.passed > 0);
    bool flip_failed = false;
    for (const auto& e : rep.entries) {
        if (e.id == "wxz/n79" && !e.pass) flip_failed = true;
    }
    CHECK(flip_failed);
}
