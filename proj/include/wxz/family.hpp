#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wxz/expr.hpp"
#include "wxz/matrix.hpp"
#include "wxz/rng.hpp"

namespace wxz {

enum class Domain { Complex, NonzeroComplex, Sign, Square };

struct ParamSpec {
    std::string name;
    Domain domain = Domain::Complex;
    Expr derived;  // when set, computed from earlier parameters instead of drawn

    static ParamSpec free(const std::string& n, Domain d) { return {n, d, Expr()}; }
    static ParamSpec bound(const std::string& n, const Expr& e) {
        return {n, Domain::Complex, e};
    }
};

/// nonzero=true: at least one of the expressions must be nonzero (covers the
/// disjunctive domains like "b != 0 or c != 0"); nonzero=false: all must vanish.
struct Constraint {
    std::vector<Expr> exprs;
    bool nonzero = true;
    std::string text;
};

/// Draws one value for a free parameter. Square draws k and returns k^2, which
/// keeps later square roots of the parameter exact.
Scalar draw_param(Rng& rng, Domain domain);

/// A named parametric matrix template: ordered parameters, a grid of entry
/// expressions and polynomial constraints among the parameters.
class MatrixFamily {
public:
    MatrixFamily() = default;
    MatrixFamily(std::string name, int dim, std::vector<ParamSpec> params,
                 std::vector<std::string> grid, std::vector<Constraint> constraints = {},
                 bool require_invertible = true);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    const std::vector<ParamSpec>& params() const { return params_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    const std::vector<Expr>& grid() const { return grid_; }
    bool require_invertible() const { return require_invertible_; }

    /// Builds the concrete matrix. Throws IncompleteAssignment when a parameter
    /// is missing and ConstraintViolated when a constraint fails.
    SquareMatrix instantiate(const Assignment& assignment) const;

    /// Positional form, matching the parameter order.
    SquareMatrix instantiate_args(const std::vector<Scalar>& args) const;

    /// Draws an assignment satisfying all constraints (and invertibility when
    /// required). Throws Unsatisfiable after too many rejected draws.
    Assignment sample(Rng& rng) const;

    std::vector<Assignment> sample_many(std::uint64_t seed, int count) const;

private:
    std::string name_;
    int dim_ = 4;
    std::vector<ParamSpec> params_;
    std::vector<Expr> grid_;
    std::vector<Constraint> constraints_;
    bool require_invertible_ = true;
};

/// Completes an assignment: computes bound parameters that are absent, draws
/// nothing. Returns false if a division blows up.
bool complete_assignment(const std::vector<ParamSpec>& params, Assignment& env);

/// Checks a constraint set against an assignment; returns the first violated
/// constraint's text, or nullopt.
std::optional<std::string> check_constraints(const std::vector<Constraint>& cs,
                                             const Assignment& env);

/// Draws an assignment for an arbitrary parameter list with constraints.
Assignment sample_assignment(const std::vector<ParamSpec>& params,
                             const std::vector<Constraint>& constraints, Rng& rng,
                             int max_tries = 400);

} // namespace wxz
