#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wxz/family.hpp"

namespace wxz {

enum class ConjMode { Conj, ConjInv, Sandwich };

/// How one matrix of a triple is built: a family instance or an inline grid,
/// optionally transposed, optionally conjugated by C (x) C for a 2x2
/// conjugator C (Conj: C M C^-1, ConjInv: C^-1 M C, Sandwich: C M C).
struct MatrixRecipe {
    std::string family;
    std::vector<Expr> args;
    std::vector<Expr> grid;        // 16 exprs when family is empty
    bool transpose = false;
    std::vector<Expr> conj;        // 4 exprs (2x2) when present
    ConjMode conj_mode = ConjMode::Conj;
    std::string label;             // short display name

    bool empty() const { return family.empty() && grid.empty(); }
};

enum class EquationSet { WXX, XXZ, WXZ };

/// One classified solution item, fully expanded (set-valued slots resolved).
struct SolutionEntry {
    std::string id;
    std::string description;
    EquationSet scope = EquationSet::WXZ;
    std::vector<ParamSpec> params;
    std::vector<Constraint> constraints;
    MatrixRecipe w, x, z;

    /// Bits into wxz_residual_masked: [W,W,W]=1, [Z,Z,Z]=2, [W,X,X]=4, [X,X,Z]=8.
    unsigned residual_mask() const {
        switch (scope) {
            case EquationSet::WXX: return 1u | 4u;
            case EquationSet::XXZ: return 2u | 8u;
            case EquationSet::WXZ: return 0xFu;
        }
        return 0xFu;
    }
};

struct SolutionSet {
    std::string name;
    std::vector<std::string> members;  // family labels, e.g. "R_2.1", "QR_1.4Q"
};

struct PatternCell {
    enum Kind { Free, Zero, One, AlphaPlus, AlphaMinus };
    Kind kind = Free;
    int tie = -1;
};

/// Zero/unit/tie pattern of one canonical form.
struct CanonicalPattern {
    int index = 0;
    std::array<PatternCell, 16> cells;
    bool matches(const SquareMatrix& m) const;
};

/// The full data-driven encoding: R-families, X-families, canonical forms,
/// the named solution sets and the three classified solution lists.
class Catalog {
public:
    static const Catalog& builtin();

    static Catalog from_json_text(const std::string& text);
    std::string to_json_text() const;

    bool has_family(const std::string& name) const { return families_.count(name) != 0; }
    const MatrixFamily& family(const std::string& name) const;
    const std::vector<std::string>& family_order() const { return family_order_; }
    std::vector<std::string> r_family_names() const;
    std::vector<std::string> x_family_names() const;
    std::vector<std::string> set_names() const;

    const SolutionSet& set(const std::string& name) const;
    bool has_set(const std::string& name) const { return sets_.count(name) != 0; }

    const std::vector<CanonicalPattern>& canonical_patterns() const { return patterns_; }

    const std::vector<SolutionEntry>& wxx_entries() const { return wxx_; }
    const std::vector<SolutionEntry>& xxz_entries() const { return xxz_; }
    const std::vector<SolutionEntry>& wxz_entries() const { return wxz_; }

    /// scope: "wxx", "xxz", "wxz", "generic", "nongeneric"
    std::vector<SolutionEntry> enumerate(const std::string& scope) const;

    SquareMatrix build(const MatrixRecipe& recipe, const Assignment& env) const;

    /// Concrete triple for an entry; unused slots hold the identity.
    WxzTriple realize_entry(const SolutionEntry& e, const Assignment& env) const;

    /// Draws parameters until the entry realizes with invertible matrices.
    std::pair<Assignment, WxzTriple> sample_and_realize(const SolutionEntry& e, Rng& rng,
                                                        bool force_approx = false) const;

    // mutation used by the builders and the JSON loader
    void add_family(MatrixFamily f);
    void add_set(SolutionSet s) { sets_[s.name] = std::move(s); }
    void add_pattern(CanonicalPattern p) { patterns_.push_back(std::move(p)); }
    void add_entry(SolutionEntry e);

private:
    std::map<std::string, MatrixFamily> families_;
    std::vector<std::string> family_order_;
    std::map<std::string, SolutionSet> sets_;
    std::vector<CanonicalPattern> patterns_;
    std::vector<SolutionEntry> wxx_, xxz_, wxz_;
};

} // namespace wxz
