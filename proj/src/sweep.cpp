#include "wxz/sweep.hpp"

#include <sstream>

#include "json.hpp"
#include "wxz/solver.hpp"

namespace wxz {

namespace {

struct Item {
    enum class Kind { YbeFamily, Entry } kind;
    std::string id;
    std::string description;
    const MatrixFamily* family = nullptr;  // YbeFamily
    const SolutionEntry* entry = nullptr;  // Entry
};

EntryResult run_item(const Catalog& cat, const Item& item, const VerifyOptions& opts,
                     int samples) {
    EntryResult res;
    res.id = item.id;
    res.description = item.description;
    for (int k = 0; k < samples; ++k) {
        Rng rng = Rng::derive(opts.seed, item.id, static_cast<std::uint64_t>(k));
        try {
            bool exact_zero = false;
            bool pass = false;
            double residual = 0.0;
            if (item.kind == Item::Kind::YbeFamily) {
                Assignment env = item.family->sample(rng);
                SquareMatrix r = item.family->instantiate(env);
                if (opts.approx_backend) r = r.to_approx();
                SquareMatrix c = yb_commutator(r, r, r);
                exact_zero = r.is_exact() && c.is_zero();
                residual = exact_zero ? 0.0 : c.max_abs();
                pass = exact_zero || residual < opts.tau;
            } else {
                auto [env, triple] = cat.sample_and_realize(*item.entry, rng, opts.approx_backend);
                if (opts.approx_backend) {
                    triple.w = triple.w.to_approx();
                    triple.x = triple.x.to_approx();
                    triple.z = triple.z.to_approx();
                }
                ResidualReport rep = wxz_residual_masked(triple.w, triple.x, triple.z,
                                                         item.entry->residual_mask());
                exact_zero = rep.exact();
                residual = rep.max_residual();
                pass = rep.pass(opts.tau);
                if (pass && opts.second_inverse && item.entry->scope == EquationSet::WXZ) {
                    pass = second_inverse_check(triple.w) && second_inverse_check(triple.z);
                    if (!pass && res.note.empty()) res.note = "second inverse missing";
                }
            }
            res.checks++;
            if (exact_zero) res.exact_checks++;
            res.max_residual = std::max(res.max_residual, residual);
            if (!pass) {
                res.pass = false;
                if (res.note.empty()) {
                    std::ostringstream os;
                    os << "sample " << k << ": residual " << residual;
                    res.note = os.str();
                }
            }
        } catch (const Unsatisfiable& e) {
            res.pass = false;
            if (res.note.empty()) res.note = e.what();
        } catch (const Error& e) {
            res.pass = false;
            if (res.note.empty()) res.note = e.what();
        }
    }
    return res;
}

} // namespace

VerificationReport run_verification(const Catalog& cat, const VerifyOptions& opts) {
    const double saved_tau = approx_tolerance();
    approx_tolerance() = opts.tau;

    std::vector<Item> items;
    auto add_entries = [&](const std::vector<SolutionEntry>& es) {
        for (const auto& e : es) {
            Item it;
            it.kind = Item::Kind::Entry;
            it.id = e.id;
            it.description = e.description;
            it.entry = &e;
            items.push_back(it);
        }
    };
    const bool all = opts.scope == "all";
    if (all || opts.scope == "ybe") {
        for (const auto& name : cat.r_family_names()) {
            Item it;
            it.kind = Item::Kind::YbeFamily;
            it.id = "ybe/" + name;
            it.description = "[R,R,R] for R = " + name;
            it.family = &cat.family(name);
            items.push_back(it);
        }
    }
    if (all || opts.scope == "wxx") add_entries(cat.wxx_entries());
    if (all || opts.scope == "xxz") add_entries(cat.xxz_entries());
    if (all || opts.scope == "wxz") add_entries(cat.wxz_entries());
    if (items.empty() && !all) throw Error("unknown scope: " + opts.scope);

    std::vector<EntryResult> results(items.size());
    const int n = static_cast<int>(items.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
    for (int k = 0; k < n; ++k) {
        int samples = opts.samples;
        if (samples <= 0) samples = items[k].kind == Item::Kind::YbeFamily ? 20 : 10;
        results[k] = run_item(cat, items[k], opts, samples);
    }

    approx_tolerance() = saved_tau;

    VerificationReport rep;
    rep.scope = opts.scope;
    rep.seed = opts.seed;
    rep.samples = opts.samples;
    rep.tau = opts.tau;
    rep.backend = opts.approx_backend ? "approx" : "exact-preferred";
    rep.entries = std::move(results);
    for (const auto& r : rep.entries) {
        (r.pass ? rep.passed : rep.failed)++;
        rep.total_checks += r.checks;
        rep.exact_checks += r.exact_checks;
    }
    return rep;
}

std::string VerificationReport::to_json_text() const {
    nlohmann::ordered_json j;
    j["schema"] = "wxz-report/1";
    j["scope"] = scope;
    j["seed"] = seed;
    j["samples"] = samples;
    j["tau"] = tau;
    j["backend"] = backend;
    nlohmann::ordered_json es = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["description"] = e.description;
        je["checks"] = e.checks;
        je["exact_checks"] = e.exact_checks;
        je["max_residual"] = e.max_residual;
        je["pass"] = e.pass;
        if (!e.note.empty()) je["note"] = e.note;
        es.push_back(std::move(je));
    }
    j["entries"] = std::move(es);
    j["summary"] = {{"entries", entries.size()},
                    {"passed", passed},
                    {"failed", failed},
                    {"checks", total_checks},
                    {"exact_checks", exact_checks},
                    {"exact_fraction", exact_fraction()}};
    return j.dump(2);
}

} // namespace wxz
