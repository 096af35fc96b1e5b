#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wxz/catalog.hpp"
#include "wxz/json_io.hpp"

using namespace wxz;
namespace fs = std::filesystem;

namespace {

const char* cli() { return WXZ_CLI_PATH; }

struct Run {
    int exit_code;
    std::string out;
};

Run run(const std::string& args) {
    fs::path tmp = fs::temp_directory_path() / "wxz_cli_out.txt";
    std::string cmd = std::string(cli()) + " " + args + " > " + tmp.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

fs::path write_matrix(const std::string& name, const SquareMatrix& m) {
    fs::path p = fs::temp_directory_path() / name;
    json_to_file(matrix_to_json(m), p.string());
    return p;
}

} // namespace

TEST_CASE("check accepts a solution and rejects a perturbed one") {
    SquareMatrix p = SquareMatrix::permutation_p();
    SquareMatrix one = SquareMatrix::identity(4);
    auto wf = write_matrix("w.json", p);
    auto xf = write_matrix("x.json", one);
    auto zf = write_matrix("z.json", p);

    Run ok = run("check --w " + wf.string() + " --x " + xf.string() + " --z " + zf.string());
    CHECK(ok.exit_code == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["pass"] == true);
    CHECK(j["exact"] == true);
    CHECK(j["residuals"]["[W,W,W]"]["exact_zero"] == true);

    auto wband = write_matrix("wb.json", p.with_entry(0, 1, Scalar(1)));
    Run bad = run("check --w " + wband.string() + " --x " + xf.string() + " --z " + zf.string());
    CHECK(bad.exit_code == 1);
    auto jb = nlohmann::json::parse(bad.out);
    CHECK(jb["pass"] == false);
}

TEST_CASE("solve-z on the identity emits sixteen basis matrices") {
    auto xf = write_matrix("xid.json", SquareMatrix::identity(4));
    Run r = run("solve-z --x " + xf.string());
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["dimension"] == 16);
    CHECK(j["rank"] == 0);
    CHECK(j["basis"].size() == 16);
}

TEST_CASE("reduce emits the matching form with a verified round trip") {
    // an instance of the seventh pattern
    const MatrixFamily& a7 = Catalog::builtin().family("A_7");
    Assignment env;
    Rng rng(3);
    for (const auto& p : a7.params()) env[p.name] = Scalar(rng.rational(false));
    auto af = write_matrix("a7.json", a7.instantiate(env));
    Run r = run("reduce --a " + af.string());
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["form"] == 7);
    CHECK(j["round_trip"] == true);
}

TEST_CASE("verify is deterministic and exits nonzero on a broken catalog") {
    fs::path out1 = fs::temp_directory_path() / "rep1.json";
    fs::path out2 = fs::temp_directory_path() / "rep2.json";
    Run a = run("verify --scope ybe --samples 3 --seed 11 --quiet --out " + out1.string());
    Run b = run("verify --scope ybe --samples 3 --seed 11 --quiet --out " + out2.string());
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    std::ifstream f1(out1), f2(out2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(!s1.str().empty());

    // corrupted catalog file: nonzero exit, failing family named
    std::string text = Catalog::builtin().to_json_text();
    auto pos = text.find("\"(1-(r*s))\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 11, "\"(2-(r*s))\"");
    fs::path catf = fs::temp_directory_path() / "broken_catalog.json";
    std::ofstream(catf) << text;
    Run broken = run("--catalog " + catf.string() + " verify --scope ybe --samples 3 --seed 11");
    CHECK(broken.exit_code == 1);
    CHECK(broken.out.find("R_2.1") != std::string::npos);
}

TEST_CASE("dump family and catalog round trip") {
    Run r = run("dump --family R_2.2 --assign r=2,s=3");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["matrix"]["dim"] == 4);
    CHECK(j["matrix"]["rows"][3][3]["re"] == "-6");

    fs::path catf = fs::temp_directory_path() / "dumped_catalog.json";
    Run d = run("dump-catalog --out " + catf.string());
    CHECK(d.exit_code == 0);
    Run v = run("--catalog " + catf.string() + " verify --scope ybe --samples 2 --seed 1 --quiet");
    CHECK(v.exit_code == 0);

    Run e = run("dump --entry wxz/n23 --seed 4");
    CHECK(e.exit_code == 0);
    auto je = nlohmann::json::parse(e.out);
    CHECK(je["entry"] == "wxz/n23");
    CHECK(je.contains("w"));
    CHECK(je.contains("z"));
}

TEST_CASE("orbit emits verified triples") {
    SquareMatrix p = SquareMatrix::permutation_p();
    auto wf = write_matrix("ow.json", p);
    auto xf = write_matrix("ox.json", SquareMatrix::identity(4));
    auto zf = write_matrix("oz.json", p);
    Run r = run("orbit --w " + wf.string() + " --x " + xf.string() + " --z " + zf.string() +
                " --depth 2 --seed 5");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["length"] == 3);
    CHECK(j["triples"].size() == 3);
}

TEST_CASE("apply replays a serialized symmetry op") {
    SquareMatrix p = SquareMatrix::permutation_p();
    auto wf = write_matrix("aw.json", p);
    auto xf = write_matrix("ax.json", SquareMatrix::identity(4));
    auto zf = write_matrix("az.json", p);
    fs::path opf = fs::temp_directory_path() / "op.json";
    std::ofstream(opf) << R"({"kind":"discrete","tag":"swap","c":1,"d":1})";
    Run r = run("apply --w " + wf.string() + " --x " + xf.string() + " --z " + zf.string() +
                " --op " + opf.string());
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["exact"] == true);
}

TEST_CASE("bad input is a parse error") {
    fs::path p = fs::temp_directory_path() / "junk.json";
    std::ofstream(p) << "{ not json";
    Run r = run("check --w " + p.string() + " --x " + p.string() + " --z " + p.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("error") != std::string::npos);
}
