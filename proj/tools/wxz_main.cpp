#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wxz/json_io.hpp"
#include "wxz/solver.hpp"
#include "wxz/sweep.hpp"
#include "wxz/symmetry.hpp"

namespace {

using wxz::Catalog;
using J = nlohmann::ordered_json;

Catalog load_catalog(const std::string& path_flag) {
    std::string path = path_flag;
    if (path.empty()) {
        if (const char* env = std::getenv("WXZ_CATALOG")) path = env;
    }
    if (path.empty()) return Catalog::builtin();
    std::ifstream in(path);
    if (!in.good()) throw wxz::Error("cannot open catalog " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return Catalog::from_json_text(ss.str());
}

wxz::Assignment parse_assignment(const std::string& text) {
    wxz::Assignment env;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw wxz::Error("bad assignment item: " + item);
        std::string name = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        env[name] = wxz::Expr::parse(value).eval({});
    }
    return env;
}

J residuals_json(const wxz::ResidualReport& rep) {
    const char* names[4] = {"[W,W,W]", "[Z,Z,Z]", "[W,X,X]", "[X,X,Z]"};
    J j;
    for (int k = 0; k < 4; ++k) {
        J e;
        e["residual"] = rep.residual[k];
        e["exact_zero"] = rep.identically_zero[k] && rep.exact_inputs;
        j[names[k]] = std::move(e);
    }
    return j;
}

int cmd_verify(const std::string& catalog_path, const std::string& scope, int samples,
               std::uint64_t seed, double tau, const std::string& backend, bool second_inverse,
               bool serial, const std::string& out_path, bool quiet) {
    Catalog cat = load_catalog(catalog_path);
    wxz::VerifyOptions opts;
    opts.scope = scope;
    opts.samples = samples;
    opts.seed = seed;
    opts.tau = tau;
    opts.approx_backend = backend == "approx";
    opts.second_inverse = second_inverse;
    opts.parallel = !serial;
    wxz::VerificationReport rep = wxz::run_verification(cat, opts);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << rep.to_json_text() << "\n";
    }
    if (!quiet) {
        for (const auto& e : rep.entries) {
            if (!e.pass) {
                std::cout << "FAIL " << e.id << " (" << e.description << "): " << e.note << "\n";
            }
        }
        std::cout << "scope=" << rep.scope << " entries=" << rep.entries.size()
                  << " passed=" << rep.passed << " failed=" << rep.failed
                  << " exact_fraction=" << rep.exact_fraction() << "\n";
    }
    return rep.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier and solver for the constant WXZ Yang-Baxter system"};
    app.require_subcommand(1);

    std::string catalog_path;
    app.add_option("--catalog", catalog_path,
                   "catalog JSON file (default: WXZ_CATALOG env var, else built-in)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a catalog verification sweep");
    std::string scope = "all", backend = "exact-preferred", out_path;
    int samples = 0;
    std::uint64_t seed = 1;
    double tau = 1e-9;
    bool second_inverse = false, serial = false, quiet = false;
    verify->add_option("--scope", scope, "ybe|wxx|xxz|wxz|all")->capture_default_str();
    verify->add_option("--samples", samples, "assignments per entry (0 = scope default)");
    verify->add_option("--seed", seed, "sweep seed")->capture_default_str();
    verify->add_option("--tau", tau, "approximate-path tolerance")->capture_default_str();
    verify->add_option("--backend", backend, "exact-preferred|approx")->capture_default_str();
    verify->add_flag("--second-inverse", second_inverse,
                     "also require W and Z second-invertible");
    verify->add_flag("--serial", serial, "disable the parallel sweep");
    verify->add_flag("--quiet", quiet, "suppress the console summary");
    verify->add_option("--out", out_path, "write the JSON report here");

    // check
    auto* check = app.add_subcommand("check", "residual check of one triple");
    std::string wf, xf, zf;
    bool chk_second = false;
    check->add_option("--w", wf, "W matrix JSON file")->required();
    check->add_option("--x", xf, "X matrix JSON file")->required();
    check->add_option("--z", zf, "Z matrix JSON file")->required();
    check->add_flag("--second-inverse", chk_second, "require W and Z second-invertible");

    // solve-z / solve-w
    auto* solvez = app.add_subcommand("solve-z", "exact kernel of [X,X,Z] = 0 in Z");
    auto* solvew = app.add_subcommand("solve-w", "exact kernel of [W,X,X] = 0 in W");
    std::string solve_x;
    bool with_filter = false;
    for (auto* sc : {solvez, solvew}) {
        sc->add_option("--x", solve_x, "X matrix JSON file")->required();
        sc->add_flag("--ybe-filter", with_filter,
                     "report kernel elements that also satisfy the Yang-Baxter equation");
    }

    // reduce
    auto* reduce = app.add_subcommand("reduce", "canonical form under scaled (1(x)S)-conjugation");
    std::string af;
    reduce->add_option("--a", af, "matrix JSON file")->required();

    // apply
    auto* apply = app.add_subcommand("apply", "apply a serialized symmetry op to a triple");
    std::string aw, ax, az, opf;
    apply->add_option("--w", aw)->required();
    apply->add_option("--x", ax)->required();
    apply->add_option("--z", az)->required();
    apply->add_option("--op", opf, "symmetry op JSON file")->required();

    // orbit
    auto* orbit = app.add_subcommand("orbit", "random symmetry walk from a verified triple");
    std::string ow, ox, oz;
    int depth = 3;
    std::uint64_t oseed = 1;
    orbit->add_option("--w", ow)->required();
    orbit->add_option("--x", ox)->required();
    orbit->add_option("--z", oz)->required();
    orbit->add_option("--depth", depth)->capture_default_str();
    orbit->add_option("--seed", oseed)->capture_default_str();

    // dump
    auto* dump = app.add_subcommand("dump", "emit a concrete family or entry instance");
    std::string dump_family, dump_entry, assign_text;
    std::uint64_t dump_seed = 1;
    dump->add_option("--family", dump_family, "family name, e.g. R_2.2");
    dump->add_option("--entry", dump_entry, "entry id, e.g. wxz/n23");
    dump->add_option("--assign", assign_text, "comma-separated values, e.g. r=2,s=3/2");
    dump->add_option("--seed", dump_seed, "seed for unassigned parameters");

    // dump-catalog
    auto* dumpcat = app.add_subcommand("dump-catalog", "write the catalog as JSON");
    std::string dumpcat_out;
    dumpcat->add_option("--out", dumpcat_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            return cmd_verify(catalog_path, scope, samples, seed, tau, backend, second_inverse,
                              serial, out_path, quiet);
        }
        if (check->parsed()) {
            auto w = wxz::matrix_from_file(wf);
            auto x = wxz::matrix_from_file(xf);
            auto z = wxz::matrix_from_file(zf);
            wxz::TripleCheck tc = wxz::check_triple(w, x, z, chk_second);
            J j;
            j["schema"] = "wxz-check/1";
            j["pass"] = tc.pass;
            j["exact"] = tc.report.exact();
            j["residuals"] = residuals_json(tc.report);
            j["invertible"] = {{"w", tc.w_invertible}, {"x", tc.x_invertible}, {"z", tc.z_invertible}};
            j["second_invertible"] = {{"w", tc.w_second_invertible},
                                      {"x", tc.x_second_invertible},
                                      {"z", tc.z_second_invertible}};
            std::cout << j.dump(2) << "\n";
            return tc.pass ? 0 : 1;
        }
        if (solvez->parsed() || solvew->parsed()) {
            auto x = wxz::matrix_from_file(solve_x);
            auto basis = solvez->parsed() ? wxz::solve_z_linear(x) : wxz::solve_w_linear(x);
            auto sys = solvez->parsed() ? wxz::z_linear_system(x) : wxz::w_linear_system(x);
            J j;
            j["schema"] = "wxz-kernel/1";
            j["unknown"] = solvez->parsed() ? "z" : "w";
            j["rank"] = wxz::system_rank(sys);
            j["dimension"] = basis.size();
            J jb = J::array();
            for (const auto& b : basis) jb.push_back(wxz::matrix_to_json(b));
            j["basis"] = std::move(jb);
            if (with_filter) {
                std::vector<wxz::SquareMatrix> candidates = basis;
                wxz::Rng rng(7);
                for (int k = 0; k < 50; ++k) candidates.push_back(wxz::sample_span(basis, rng));
                for (const auto& pat :
                     {wxz::diagonal_pattern(), wxz::five_vertex_pattern(),
                      wxz::eight_vertex_pattern(), wxz::special_triangular_pattern()}) {
                    auto sub = wxz::pattern_restrict(basis, pat);
                    candidates.insert(candidates.end(), sub.begin(), sub.end());
                    for (int k = 0; k < 10; ++k) candidates.push_back(wxz::sample_span(sub, rng));
                }
                auto kept = wxz::ybe_filter(candidates, /*require_invertible=*/true);
                J jf = J::array();
                for (const auto& m : kept) jf.push_back(wxz::matrix_to_json(m));
                j["ybe_findings"] = std::move(jf);
                j["ybe_findings_note"] = "sampled search, not exhaustive";
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (reduce->parsed()) {
            auto a = wxz::matrix_from_file(af);
            wxz::CanonicalReduction red = wxz::reduce_canonical(a);
            wxz::SquareMatrix cc = wxz::kron(wxz::SquareMatrix::identity(2), red.s);
            bool round_trip =
                (red.lambda * (cc * a * wxz::matrix_inverse(cc))) == red.canonical;
            J j;
            j["schema"] = "wxz-reduction/1";
            j["form"] = red.form_index;
            j["s"] = wxz::matrix_to_json(red.s);
            j["lambda"] = wxz::scalar_to_json(red.lambda);
            j["canonical"] = wxz::matrix_to_json(red.canonical);
            j["exact"] = red.exact;
            j["round_trip"] = round_trip;
            std::cout << j.dump(2) << "\n";
            return round_trip ? 0 : 1;
        }
        if (apply->parsed()) {
            wxz::WxzTriple t{wxz::matrix_from_file(aw), wxz::matrix_from_file(ax),
                             wxz::matrix_from_file(az)};
            std::ifstream in(opf);
            if (!in.good()) throw wxz::Error("cannot open " + opf);
            nlohmann::json op;
            in >> op;
            wxz::WxzTriple u = wxz::apply_sym_json(op, t);
            wxz::ResidualReport rep = wxz::wxz_residual(u.w, u.x, u.z);
            J j;
            j["schema"] = "wxz-apply/1";
            j["w"] = wxz::matrix_to_json(u.w);
            j["x"] = wxz::matrix_to_json(u.x);
            j["z"] = wxz::matrix_to_json(u.z);
            j["pass"] = rep.pass(wxz::approx_tolerance());
            j["exact"] = rep.exact();
            std::cout << j.dump(2) << "\n";
            return rep.pass(wxz::approx_tolerance()) ? 0 : 1;
        }
        if (orbit->parsed()) {
            wxz::WxzTriple t{wxz::matrix_from_file(ow), wxz::matrix_from_file(ox),
                             wxz::matrix_from_file(oz)};
            auto walk = wxz::orbit_sample(t, depth, oseed);
            J j;
            j["schema"] = "wxz-orbit/1";
            j["length"] = walk.size();
            J jt = J::array();
            for (const auto& step : walk) {
                J js;
                js["w"] = wxz::matrix_to_json(step.w);
                js["x"] = wxz::matrix_to_json(step.x);
                js["z"] = wxz::matrix_to_json(step.z);
                jt.push_back(std::move(js));
            }
            j["triples"] = std::move(jt);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (dump->parsed()) {
            Catalog cat = load_catalog(catalog_path);
            wxz::Assignment env = parse_assignment(assign_text);
            if (!dump_family.empty()) {
                const auto& f = cat.family(dump_family);
                wxz::Rng rng(dump_seed);
                wxz::Assignment full = f.sample(rng);
                for (const auto& [k, v] : env) full[k] = v;
                J j;
                j["schema"] = "wxz-dump/1";
                j["family"] = dump_family;
                J ja;
                for (const auto& p : f.params()) {
                    if (full.count(p.name)) ja[p.name] = full[p.name].str();
                }
                j["assignment"] = std::move(ja);
                j["matrix"] = wxz::matrix_to_json(f.instantiate(full));
                std::cout << j.dump(2) << "\n";
                return 0;
            }
            if (!dump_entry.empty()) {
                for (const auto& scope_name : {"wxx", "xxz", "wxz"}) {
                    for (const auto& e : cat.enumerate(scope_name)) {
                        if (e.id != dump_entry) continue;
                        wxz::Rng rng(dump_seed);
                        auto [full, triple] = cat.sample_and_realize(e, rng);
                        for (const auto& [k, v] : env) full[k] = v;
                        triple = cat.realize_entry(e, full);
                        J j;
                        j["schema"] = "wxz-dump/1";
                        j["entry"] = e.id;
                        j["description"] = e.description;
                        J ja;
                        for (const auto& [k, v] : full) ja[k] = v.str();
                        j["assignment"] = std::move(ja);
                        j["w"] = wxz::matrix_to_json(triple.w);
                        j["x"] = wxz::matrix_to_json(triple.x);
                        j["z"] = wxz::matrix_to_json(triple.z);
                        std::cout << j.dump(2) << "\n";
                        return 0;
                    }
                }
                throw wxz::Error("entry not found: " + dump_entry);
            }
            throw wxz::Error("dump needs --family or --entry");
        }
        if (dumpcat->parsed()) {
            Catalog cat = load_catalog(catalog_path);
            if (dumpcat_out.empty()) {
                std::cout << cat.to_json_text() << "\n";
            } else {
                std::ofstream out(dumpcat_out);
                out << cat.to_json_text() << "\n";
            }
            return 0;
        }
    } catch (const wxz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
