#pragma once

#include <array>
#include <initializer_list>
#include <vector>

#include "wxz/scalar.hpp"

namespace wxz {

/// Dense square matrix over Scalar. Local dimension is two, so sizes are
/// 2 (conjugators), 4 (R-matrices) and 8 (triple tensor space). Row-major,
/// first tensor factor most significant: for dim 4 the row index is
/// 2*i1 + i2, for dim 8 it is 4*i1 + 2*i2 + i3.
class SquareMatrix {
public:
    SquareMatrix() : dim_(0) {}
    explicit SquareMatrix(int dim);
    SquareMatrix(int dim, std::vector<Scalar> entries);
    SquareMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static SquareMatrix identity(int dim);
    static SquareMatrix zero(int dim) { return SquareMatrix(dim); }
    /// The tensor-factor flip (dim 4) .
    static SquareMatrix permutation_p();
    /// The 2x2 swap.
    static SquareMatrix sigma();

    int dim() const { return dim_; }
    const Scalar& at(int r, int c) const { return entries_[r * dim_ + c]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    bool is_exact() const;
    bool is_zero() const;
    bool is_identity() const;

    /// Largest |entry|, as a double.
    double max_abs() const;

    SquareMatrix to_approx() const;
    SquareMatrix with_entry(int r, int c, const Scalar& v) const;

    SquareMatrix transpose() const;
    SquareMatrix operator-() const;

    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
    friend SquareMatrix operator*(const Scalar& s, const SquareMatrix& a);

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b);
    friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

private:
    int dim_;
    std::vector<Scalar> entries_;
};

SquareMatrix matrix_mul(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix matrix_transpose(const SquareMatrix& a);

/// Inverse by fraction-free elimination on exact input (first nonzero pivot),
/// partial-pivot elimination on approximate input. Throws SingularMatrix.
SquareMatrix matrix_inverse(const SquareMatrix& a);

/// Determinant via the same elimination.
Scalar matrix_det(const SquareMatrix& a);

bool matrix_invertible(const SquareMatrix& a);

/// Kronecker product; (a (x) b)[i1*db+i2, j1*db+j2] = a[i1,j1] b[i2,j2].
SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b);

enum class Slot { S12, S13, S23 };

/// Embeds a 4x4 matrix into the 8x8 triple tensor space on the given pair of
/// factors. Slot 13 is realized by conjugating the slot-12 embedding with the
/// middle swap 1 (x) P.
SquareMatrix embed(const SquareMatrix& r, Slot slot);

/// [R,S,T] = R12 S13 T23 - T23 S13 R12.
SquareMatrix yb_commutator(const SquareMatrix& r, const SquareMatrix& s, const SquareMatrix& t);

/// Partial transpose in the second tensor factor (swap of index i2 with j2).
SquareMatrix partial_transpose_second(const SquareMatrix& r);

/// True iff the partial transpose in the second factor is invertible.
bool second_inverse_check(const SquareMatrix& r);

/// Y+ = P Y P, Y- = Y^-1, Y# = (Y+)- = (Y-)+, Y^at = (sigma(x)sigma) Y^T (sigma(x)sigma).
SquareMatrix op_plus(const SquareMatrix& y);
SquareMatrix op_inv(const SquareMatrix& y);
SquareMatrix op_hash(const SquareMatrix& y);
SquareMatrix op_antidiag(const SquareMatrix& y);

struct WxzTriple {
    SquareMatrix w, x, z;
};

/// Max-abs residuals of the four equations [W,W,W], [Z,Z,Z], [W,X,X], [X,X,Z],
/// with per-equation identically-zero flags.
struct ResidualReport {
    std::array<double, 4> residual{{0, 0, 0, 0}};
    std::array<bool, 4> identically_zero{{false, false, false, false}};
    bool exact_inputs = false;

    /// True iff all inputs were exact and all four residuals are exactly zero.
    bool exact() const {
        return exact_inputs && identically_zero[0] && identically_zero[1] &&
               identically_zero[2] && identically_zero[3];
    }
    double max_residual() const;
    /// Exactly zero, or below tau on the approximate path.
    bool pass(double tau) const;
};

ResidualReport wxz_residual(const SquareMatrix& w, const SquareMatrix& x, const SquareMatrix& z);

/// Residual of a subset of the four equations (used by the WXX / XXZ sweeps):
/// mask bits 0..3 select [W,W,W], [Z,Z,Z], [W,X,X], [X,X,Z].
ResidualReport wxz_residual_masked(const SquareMatrix& w, const SquareMatrix& x,
                                   const SquareMatrix& z, unsigned mask);

} // namespace wxz
