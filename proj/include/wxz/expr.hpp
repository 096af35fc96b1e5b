#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "wxz/scalar.hpp"

namespace wxz {

using Assignment = std::map<std::string, Scalar>;

/// Entry expressions of catalog families: rational arithmetic, integer powers
/// and square roots over named parameters plus the imaginary unit.
class Expr {
public:
    Expr() = default;

    static Expr constant(const Scalar& v);
    static Expr param(const std::string& name);

    /// Parses "1 - r*s", "sqrt(i)*e", "(s+1)/(a^2*s^2) - 1", "-q^-1", ...
    static Expr parse(const std::string& text);

    bool empty() const { return !node_; }

    Scalar eval(const Assignment& env) const;
    void collect_params(std::set<std::string>& out) const;
    std::string str() const;

    struct Node;  // implementation detail, only the source file touches it

private:
    std::shared_ptr<const Node> node_;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

/// Shorthand used throughout the catalog tables.
inline Expr operator""_e(const char* s, std::size_t) { return Expr::parse(s); }

} // namespace wxz
