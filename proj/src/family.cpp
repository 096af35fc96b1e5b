#include "wxz/family.hpp"

namespace wxz {

Scalar draw_param(Rng& rng, Domain domain) {
    switch (domain) {
        case Domain::Sign:
            return Scalar(rng.sign());
        case Domain::NonzeroComplex:
            // mostly rational, sometimes properly Gaussian
            return rng.below(4) == 0 ? rng.scalar(true, true) : rng.scalar(true, false);
        case Domain::Square: {
            Rational k = rng.rational(true, 3, 2);
            return Scalar(k * k);
        }
        case Domain::Complex:
        default:
            return rng.below(4) == 0 ? rng.scalar(false, true) : rng.scalar(false, false);
    }
}

bool complete_assignment(const std::vector<ParamSpec>& params, Assignment& env) {
    for (const auto& p : params) {
        if (env.count(p.name)) continue;
        if (p.derived.empty()) return false;
        try {
            env[p.name] = p.derived.eval(env);
        } catch (const DivisionByZero&) {
            return false;
        }
    }
    return true;
}

std::optional<std::string> check_constraints(const std::vector<Constraint>& cs,
                                             const Assignment& env) {
    for (const auto& c : cs) {
        bool any_nonzero = false;
        bool all_zero = true;
        bool blew_up = false;
        for (const auto& e : c.exprs) {
            Scalar v;
            try {
                v = e.eval(env);
            } catch (const DivisionByZero&) {
                blew_up = true;
                break;
            }
            if (!v.is_zero()) {
                any_nonzero = true;
                all_zero = false;
            }
        }
        if (blew_up) return c.text;
        if (c.nonzero ? !any_nonzero : !all_zero) return c.text;
    }
    return std::nullopt;
}

Assignment sample_assignment(const std::vector<ParamSpec>& params,
                             const std::vector<Constraint>& constraints, Rng& rng,
                             int max_tries) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Assignment env;
        bool ok = true;
        for (const auto& p : params) {
            if (p.derived.empty()) {
                env[p.name] = draw_param(rng, p.domain);
            } else {
                try {
                    env[p.name] = p.derived.eval(env);
                } catch (const DivisionByZero&) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        if (check_constraints(constraints, env)) continue;
        return env;
    }
    throw Unsatisfiable("no admissible assignment found");
}

MatrixFamily::MatrixFamily(std::string name, int dim, std::vector<ParamSpec> params,
                           std::vector<std::string> grid, std::vector<Constraint> constraints,
                           bool require_invertible)
    : name_(std::move(name)),
      dim_(dim),
      params_(std::move(params)),
      constraints_(std::move(constraints)),
      require_invertible_(require_invertible) {
    if (grid.size() != static_cast<std::size_t>(dim_ * dim_)) {
        throw DimensionMismatch("family " + name_ + ": grid size");
    }
    grid_.reserve(grid.size());
    for (const auto& g : grid) grid_.push_back(Expr::parse(g));
}

SquareMatrix MatrixFamily::instantiate(const Assignment& assignment) const {
    Assignment env = assignment;
    for (const auto& p : params_) {
        if (!env.count(p.name)) {
            if (p.derived.empty()) throw IncompleteAssignment(p.name);
            env[p.name] = p.derived.eval(env);
        }
        const Scalar& v = env[p.name];
        if ((p.domain == Domain::NonzeroComplex || p.domain == Domain::Square) && v.is_zero()) {
            throw ConstraintViolated(name_ + ": " + p.name + " must be nonzero");
        }
        if (p.domain == Domain::Sign && v != Scalar(1) && v != Scalar(-1)) {
            throw ConstraintViolated(name_ + ": " + p.name + " must be a sign");
        }
    }
    if (auto bad = check_constraints(constraints_, env)) {
        throw ConstraintViolated(name_ + ": " + *bad);
    }
    std::vector<Scalar> entries;
    entries.reserve(grid_.size());
    for (const auto& e : grid_) entries.push_back(e.eval(env));
    return SquareMatrix(dim_, std::move(entries));
}

SquareMatrix MatrixFamily::instantiate_args(const std::vector<Scalar>& args) const {
    std::size_t free_count = 0;
    for (const auto& p : params_)
        if (p.derived.empty()) ++free_count;
    if (args.size() != free_count && args.size() != params_.size()) {
        throw IncompleteAssignment(name_ + ": expected " + std::to_string(free_count) +
                                   " arguments");
    }
    Assignment env;
    std::size_t k = 0;
    for (const auto& p : params_) {
        if (k < args.size() && (p.derived.empty() || args.size() == params_.size())) {
            env[p.name] = args[k++];
        }
    }
    return instantiate(env);
}

Assignment MatrixFamily::sample(Rng& rng) const {
    for (int attempt = 0; attempt < 400; ++attempt) {
        Assignment env;
        try {
            env = sample_assignment(params_, constraints_, rng, 1);
        } catch (const Unsatisfiable&) {
            continue;
        }
        if (require_invertible_) {
            try {
                if (!matrix_invertible(instantiate(env))) continue;
            } catch (const DivisionByZero&) {
                continue;
            } catch (const ConstraintViolated&) {
                continue;
            }
        }
        return env;
    }
    throw Unsatisfiable("family " + name_ + ": sampling failed");
}

std::vector<Assignment> MatrixFamily::sample_many(std::uint64_t seed, int count) const {
    std::vector<Assignment> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        Rng rng = Rng::derive(seed, name_, static_cast<std::uint64_t>(k));
        out.push_back(sample(rng));
    }
    return out;
}

} // namespace wxz
