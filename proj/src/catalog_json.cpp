#include "json.hpp"
#include "wxz/catalog.hpp"

// Versioned on-disk form of the catalog. Expressions are stored as their
// printable text and re-parsed on load, so a shipped file and the built-in
// tables realize identical matrices.

namespace wxz {

namespace {

using J = nlohmann::ordered_json;

std::string domain_name(Domain d) {
    switch (d) {
        case Domain::Complex: return "complex";
        case Domain::NonzeroComplex: return "nonzero";
        case Domain::Sign: return "sign";
        case Domain::Square: return "square";
    }
    return "complex";
}

Domain domain_from(const std::string& s) {
    if (s == "nonzero") return Domain::NonzeroComplex;
    if (s == "sign") return Domain::Sign;
    if (s == "square") return Domain::Square;
    return Domain::Complex;
}

J params_to_json(const std::vector<ParamSpec>& ps) {
    J out = J::array();
    for (const auto& p : ps) {
        J jp;
        jp["name"] = p.name;
        if (p.derived.empty()) {
            jp["domain"] = domain_name(p.domain);
        } else {
            jp["derived"] = p.derived.str();
        }
        out.push_back(std::move(jp));
    }
    return out;
}

std::vector<ParamSpec> params_from_json(const nlohmann::json& j) {
    std::vector<ParamSpec> out;
    for (const auto& jp : j) {
        if (jp.contains("derived")) {
            out.push_back(ParamSpec::bound(jp["name"].get<std::string>(),
                                           Expr::parse(jp["derived"].get<std::string>())));
        } else {
            out.push_back(ParamSpec::free(jp["name"].get<std::string>(),
                                          domain_from(jp.value("domain", "complex"))));
        }
    }
    return out;
}

J constraints_to_json(const std::vector<Constraint>& cs) {
    J out = J::array();
    for (const auto& c : cs) {
        J jc;
        J exprs = J::array();
        for (const auto& e : c.exprs) exprs.push_back(e.str());
        jc["exprs"] = std::move(exprs);
        jc["nonzero"] = c.nonzero;
        jc["text"] = c.text;
        out.push_back(std::move(jc));
    }
    return out;
}

std::vector<Constraint> constraints_from_json(const nlohmann::json& j) {
    std::vector<Constraint> out;
    for (const auto& jc : j) {
        Constraint c;
        for (const auto& e : jc["exprs"]) c.exprs.push_back(Expr::parse(e.get<std::string>()));
        c.nonzero = jc.value("nonzero", true);
        c.text = jc.value("text", "");
        out.push_back(std::move(c));
    }
    return out;
}

J recipe_to_json(const MatrixRecipe& r) {
    J j;
    if (!r.family.empty()) {
        j["family"] = r.family;
        J args = J::array();
        for (const auto& a : r.args) args.push_back(a.str());
        j["args"] = std::move(args);
    } else if (!r.grid.empty()) {
        J grid = J::array();
        for (const auto& g : r.grid) grid.push_back(g.str());
        j["grid"] = std::move(grid);
    }
    if (r.transpose) j["transpose"] = true;
    if (!r.conj.empty()) {
        J c = J::array();
        for (const auto& e : r.conj) c.push_back(e.str());
        j["conj"] = std::move(c);
        j["conj_mode"] = r.conj_mode == ConjMode::Conj ? "conj"
                         : r.conj_mode == ConjMode::ConjInv ? "conj_inv"
                                                            : "sandwich";
    }
    if (!r.label.empty()) j["label"] = r.label;
    return j;
}

MatrixRecipe recipe_from_json(const nlohmann::json& j) {
    MatrixRecipe r;
    if (j.contains("family")) {
        r.family = j["family"].get<std::string>();
        for (const auto& a : j.value("args", nlohmann::json::array())) {
            r.args.push_back(Expr::parse(a.get<std::string>()));
        }
    }
    if (j.contains("grid")) {
        for (const auto& g : j["grid"]) r.grid.push_back(Expr::parse(g.get<std::string>()));
    }
    r.transpose = j.value("transpose", false);
    if (j.contains("conj")) {
        for (const auto& e : j["conj"]) r.conj.push_back(Expr::parse(e.get<std::string>()));
        const std::string mode = j.value("conj_mode", "conj");
        r.conj_mode = mode == "conj_inv" ? ConjMode::ConjInv
                      : mode == "sandwich" ? ConjMode::Sandwich
                                           : ConjMode::Conj;
    }
    r.label = j.value("label", "");
    return r;
}

std::string scope_name(EquationSet s) {
    switch (s) {
        case EquationSet::WXX: return "wxx";
        case EquationSet::XXZ: return "xxz";
        case EquationSet::WXZ: return "wxz";
    }
    return "wxz";
}

EquationSet scope_from(const std::string& s) {
    if (s == "wxx") return EquationSet::WXX;
    if (s == "xxz") return EquationSet::XXZ;
    return EquationSet::WXZ;
}

} // namespace

std::string Catalog::to_json_text() const {
    J j;
    j["schema"] = "wxz-catalog/1";

    J fams = J::array();
    for (const auto& name : family_order()) {
        const MatrixFamily& f = family(name);
        J jf;
        jf["name"] = f.name();
        jf["dim"] = f.dim();
        jf["params"] = params_to_json(f.params());
        J grid = J::array();
        for (const auto& g : f.grid()) grid.push_back(g.str());
        jf["grid"] = std::move(grid);
        if (!f.constraints().empty()) jf["constraints"] = constraints_to_json(f.constraints());
        jf["require_invertible"] = f.require_invertible();
        fams.push_back(std::move(jf));
    }
    j["families"] = std::move(fams);

    J sets = J::array();
    for (const auto& name : set_names()) {
        const SolutionSet& s = set(name);
        J js;
        js["name"] = s.name;
        js["members"] = s.members;
        sets.push_back(std::move(js));
    }
    j["sets"] = std::move(sets);

    J pats = J::array();
    for (const auto& p : canonical_patterns()) {
        J jp;
        jp["index"] = p.index;
        J cells = J::array();
        for (const auto& c : p.cells) {
            J jc;
            switch (c.kind) {
                case PatternCell::Free: jc["kind"] = "free"; break;
                case PatternCell::Zero: jc["kind"] = "zero"; break;
                case PatternCell::One: jc["kind"] = "one"; break;
                case PatternCell::AlphaPlus: jc["kind"] = "alpha+"; break;
                case PatternCell::AlphaMinus: jc["kind"] = "alpha-"; break;
            }
            if (c.tie >= 0) jc["tie"] = c.tie;
            cells.push_back(std::move(jc));
        }
        jp["cells"] = std::move(cells);
        pats.push_back(std::move(jp));
    }
    j["canonical_forms"] = std::move(pats);

    auto entries_json = [&](const std::vector<SolutionEntry>& es) {
        J out = J::array();
        for (const auto& e : es) {
            J je;
            je["id"] = e.id;
            je["scope"] = scope_name(e.scope);
            je["description"] = e.description;
            je["params"] = params_to_json(e.params);
            if (!e.constraints.empty()) je["constraints"] = constraints_to_json(e.constraints);
            if (!e.w.empty()) je["w"] = recipe_to_json(e.w);
            if (!e.x.empty()) je["x"] = recipe_to_json(e.x);
            if (!e.z.empty()) je["z"] = recipe_to_json(e.z);
            out.push_back(std::move(je));
        }
        return out;
    };
    j["wxx_entries"] = entries_json(wxx_entries());
    j["xxz_entries"] = entries_json(xxz_entries());
    j["wxz_entries"] = entries_json(wxz_entries());
    return j.dump(1);
}

Catalog Catalog::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("catalog: ") + e.what(), e.byte);
    }
    if (j.value("schema", "") != "wxz-catalog/1") {
        throw ParseError("unsupported catalog schema", 0);
    }
    Catalog cat;
    for (const auto& jf : j["families"]) {
        std::vector<std::string> grid;
        for (const auto& g : jf["grid"]) grid.push_back(g.get<std::string>());
        std::vector<Constraint> cs;
        if (jf.contains("constraints")) cs = constraints_from_json(jf["constraints"]);
        cat.add_family(MatrixFamily(jf["name"].get<std::string>(), jf["dim"].get<int>(),
                                    params_from_json(jf["params"]), std::move(grid), std::move(cs),
                                    jf.value("require_invertible", true)));
    }
    for (const auto& js : j.value("sets", nlohmann::json::array())) {
        SolutionSet s;
        s.name = js["name"].get<std::string>();
        for (const auto& m : js["members"]) s.members.push_back(m.get<std::string>());
        cat.add_set(std::move(s));
    }
    for (const auto& jp : j.value("canonical_forms", nlohmann::json::array())) {
        CanonicalPattern p;
        p.index = jp["index"].get<int>();
        int k = 0;
        for (const auto& jc : jp["cells"]) {
            PatternCell c;
            const std::string kind = jc.value("kind", "free");
            if (kind == "zero") c.kind = PatternCell::Zero;
            else if (kind == "one") c.kind = PatternCell::One;
            else if (kind == "alpha+") c.kind = PatternCell::AlphaPlus;
            else if (kind == "alpha-") c.kind = PatternCell::AlphaMinus;
            else c.kind = PatternCell::Free;
            c.tie = jc.value("tie", -1);
            p.cells[k++] = c;
        }
        cat.add_pattern(std::move(p));
    }
    auto load_entries = [&](const nlohmann::json& arr) {
        for (const auto& je : arr) {
            SolutionEntry e;
            e.id = je["id"].get<std::string>();
            e.scope = scope_from(je.value("scope", "wxz"));
            e.description = je.value("description", "");
            e.params = params_from_json(je["params"]);
            if (je.contains("constraints")) e.constraints = constraints_from_json(je["constraints"]);
            if (je.contains("w")) e.w = recipe_from_json(je["w"]);
            if (je.contains("x")) e.x = recipe_from_json(je["x"]);
            if (je.contains("z")) e.z = recipe_from_json(je["z"]);
            cat.add_entry(std::move(e));
        }
    };
    load_entries(j.value("wxx_entries", nlohmann::json::array()));
    load_entries(j.value("xxz_entries", nlohmann::json::array()));
    load_entries(j.value("wxz_entries", nlohmann::json::array()));
    return cat;
}

} // namespace wxz
