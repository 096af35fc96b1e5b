#pragma once

#include <optional>
#include <vector>

#include "wxz/catalog.hpp"
#include "wxz/matrix.hpp"

namespace wxz {

/// The homogeneous 64x16 system whose kernel is {Z : [X,X,Z] = 0} (or the
/// W-side analogue). Rows follow the 8x8 commutator entries row-major; columns
/// are the unknown's entries row-major.
struct LinearSystem {
    std::vector<Scalar> coeff;  // 64*16 row-major
    int rank = -1;

    const Scalar& at(int r, int c) const { return coeff[r * 16 + c]; }
};

LinearSystem z_linear_system(const SquareMatrix& x);
LinearSystem w_linear_system(const SquareMatrix& x);

/// Exact nullspace basis by fraction-free row reduction, reshaped to 4x4.
std::vector<SquareMatrix> solve_z_linear(const SquareMatrix& x);
std::vector<SquareMatrix> solve_w_linear(const SquareMatrix& x);

std::vector<SquareMatrix> nullspace_basis(const LinearSystem& sys);
int system_rank(const LinearSystem& sys);

/// Is v in the span of the basis? Exact linear solve.
bool in_span(const std::vector<SquareMatrix>& basis, const SquareMatrix& v);

/// Keeps the candidates whose YBE residual vanishes (and, optionally, that are
/// invertible).
std::vector<SquareMatrix> ybe_filter(const std::vector<SquareMatrix>& candidates,
                                     bool require_invertible = false);

/// Sparsity ansatz: positions allowed to be nonzero (row-major indices).
using Pattern = std::vector<int>;
Pattern diagonal_pattern();
Pattern five_vertex_pattern();
Pattern eight_vertex_pattern();
Pattern special_triangular_pattern();

/// Restricts a span to the matrices supported inside the pattern; the result
/// is a basis of the intersection.
std::vector<SquareMatrix> pattern_restrict(const std::vector<SquareMatrix>& basis,
                                           const Pattern& pattern);

/// Random element of the span with small rational coefficients.
SquareMatrix sample_span(const std::vector<SquareMatrix>& basis, Rng& rng);

/// Both triples obtainable from a pair (Q,R) with [Q,Q,Q] = [R,R,R] = 0 and
/// [Q,R,R] = [R,R,Q] = 0: (Q, R, Q) and (Q, R, R+ Q R-). Raises
/// PreconditionViolated naming the failing commutator.
std::pair<WxzTriple, WxzTriple> derive_from_qr(const SquareMatrix& q, const SquareMatrix& r);

/// Result of reducing A to one of the fourteen canonical forms by
/// A' = lambda (1(x)S) A (1(x)S)^-1.
struct CanonicalReduction {
    int form_index = 0;       // 1..14
    SquareMatrix s;           // 2x2, invertible
    Scalar lambda{1};
    SquareMatrix canonical;   // = lambda (1(x)S) input (1(x)S)^-1
    bool exact = true;        // false when an irrational eigenvalue forced floats
};

CanonicalReduction reduce_canonical(const SquareMatrix& a);

struct TripleCheck {
    ResidualReport report;
    bool w_invertible = false, x_invertible = false, z_invertible = false;
    bool w_second_invertible = false, x_second_invertible = false, z_second_invertible = false;
    bool pass = false;
};

TripleCheck check_triple(const SquareMatrix& w, const SquareMatrix& x, const SquareMatrix& z,
                         bool require_second_inverse = false);

} // namespace wxz
