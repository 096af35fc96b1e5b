#include "wxz/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace wxz {

bool CanonicalPattern::matches(const SquareMatrix& m) const {
    if (m.dim() != 4) return false;
    // ties
    std::map<int, Scalar> groups;
    Scalar alpha_plus, alpha_minus;
    bool saw_plus = false, saw_minus = false;
    for (int k = 0; k < 16; ++k) {
        const Scalar& v = m.entries()[k];
        const PatternCell& c = cells[k];
        switch (c.kind) {
            case PatternCell::Zero:
                if (!v.is_zero()) return false;
                break;
            case PatternCell::One:
                if (v != Scalar(1)) return false;
                break;
            case PatternCell::AlphaPlus:
                alpha_plus = v;
                saw_plus = true;
                break;
            case PatternCell::AlphaMinus:
                alpha_minus = v;
                saw_minus = true;
                break;
            case PatternCell::Free:
                break;
        }
        if (c.tie >= 0) {
            auto it = groups.find(c.tie);
            if (it == groups.end()) {
                groups.emplace(c.tie, v);
            } else if (it->second != v) {
                return false;
            }
        }
    }
    if (saw_plus != saw_minus) return false;
    if (saw_plus && (alpha_plus - alpha_minus) != Scalar(2)) return false;
    return true;
}

void Catalog::add_family(MatrixFamily f) {
    family_order_.push_back(f.name());
    families_[f.name()] = std::move(f);
}

void Catalog::add_entry(SolutionEntry e) {
    switch (e.scope) {
        case EquationSet::WXX: wxx_.push_back(std::move(e)); break;
        case EquationSet::XXZ: xxz_.push_back(std::move(e)); break;
        case EquationSet::WXZ: wxz_.push_back(std::move(e)); break;
    }
}

const MatrixFamily& Catalog::family(const std::string& name) const {
    auto it = families_.find(name);
    if (it == families_.end()) throw Error("unknown family: " + name);
    return it->second;
}

const SolutionSet& Catalog::set(const std::string& name) const {
    auto it = sets_.find(name);
    if (it == sets_.end()) throw Error("unknown set: " + name);
    return it->second;
}

std::vector<std::string> Catalog::r_family_names() const {
    std::vector<std::string> out;
    for (const auto& n : family_order_)
        if (n.rfind("R_", 0) == 0) out.push_back(n);
    return out;
}

std::vector<std::string> Catalog::set_names() const {
    std::vector<std::string> out;
    for (const auto& [name, s] : sets_) out.push_back(name);
    return out;
}

std::vector<std::string> Catalog::x_family_names() const {
    std::vector<std::string> out;
    for (const auto& n : family_order_)
        if (n.size() > 1 && n[0] == 'X' && std::isdigit(static_cast<unsigned char>(n[1])))
            out.push_back(n);
    return out;
}

std::vector<SolutionEntry> Catalog::enumerate(const std::string& scope) const {
    if (scope == "wxx") return wxx_;
    if (scope == "xxz") return xxz_;
    if (scope == "wxz") return wxz_;
    std::vector<SolutionEntry> out;
    if (scope == "generic" || scope == "nongeneric") {
        const std::string prefix = scope == "generic" ? "wxz/g" : "wxz/n";
        for (const auto& e : wxz_)
            if (e.id.rfind(prefix, 0) == 0) out.push_back(e);
        return out;
    }
    throw Error("unknown scope: " + scope);
}

SquareMatrix Catalog::build(const MatrixRecipe& recipe, const Assignment& env) const {
    SquareMatrix base;
    if (!recipe.family.empty()) {
        const MatrixFamily& fam = family(recipe.family);
        Assignment fenv;
        const auto& ps = fam.params();
        if (recipe.args.size() > ps.size()) throw Error("too many args for " + recipe.family);
        for (std::size_t k = 0; k < recipe.args.size(); ++k) {
            fenv[ps[k].name] = recipe.args[k].eval(env);
        }
        base = fam.instantiate(fenv);
    } else {
        if (recipe.grid.size() != 16) throw Error("inline grid must have 16 entries");
        std::vector<Scalar> entries;
        entries.reserve(16);
        for (const auto& e : recipe.grid) entries.push_back(e.eval(env));
        base = SquareMatrix(4, std::move(entries));
    }
    if (recipe.transpose) base = base.transpose();
    if (!recipe.conj.empty()) {
        if (recipe.conj.size() != 4) throw Error("conjugator must be 2x2");
        std::vector<Scalar> centries;
        for (const auto& e : recipe.conj) centries.push_back(e.eval(env));
        SquareMatrix c2(2, std::move(centries));
        SquareMatrix cc = kron(c2, c2);
        switch (recipe.conj_mode) {
            case ConjMode::Conj: base = cc * base * matrix_inverse(cc); break;
            case ConjMode::ConjInv: base = matrix_inverse(cc) * base * cc; break;
            case ConjMode::Sandwich: base = cc * base * cc; break;
        }
    }
    return base;
}

WxzTriple Catalog::realize_entry(const SolutionEntry& e, const Assignment& env) const {
    Assignment full = env;
    if (!complete_assignment(e.params, full)) throw DivisionByZero();
    if (auto bad = check_constraints(e.constraints, full)) {
        throw ConstraintViolated(e.id + ": " + *bad);
    }
    WxzTriple t;
    t.w = e.w.empty() ? SquareMatrix::identity(4) : build(e.w, full);
    t.x = e.x.empty() ? SquareMatrix::identity(4) : build(e.x, full);
    t.z = e.z.empty() ? SquareMatrix::identity(4) : build(e.z, full);
    return t;
}

std::pair<Assignment, WxzTriple> Catalog::sample_and_realize(const SolutionEntry& e, Rng& rng,
                                                             bool force_approx) const {
    for (int attempt = 0; attempt < 600; ++attempt) {
        Assignment env;
        try {
            env = sample_assignment(e.params, e.constraints, rng, 1);
        } catch (const Unsatisfiable&) {
            continue;
        }
        if (force_approx) {
            for (auto& [k, v] : env) v = v.to_approx();
        }
        try {
            WxzTriple t = realize_entry(e, env);
            if (!matrix_invertible(t.w) || !matrix_invertible(t.z)) continue;
            bool x_arbitrary = e.x.label == "arbitrary";
            if (!x_arbitrary && !matrix_invertible(t.x)) continue;
            return {env, t};
        } catch (const DivisionByZero&) {
        } catch (const SingularMatrix&) {
        } catch (const ConstraintViolated&) {
        }
    }
    throw Unsatisfiable("entry " + e.id + ": no admissible sample");
}

} // namespace wxz
