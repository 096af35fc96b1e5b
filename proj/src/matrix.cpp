#include "wxz/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace wxz {

namespace {

void check_dim(int dim) {
    if (dim != 2 && dim != 4 && dim != 8) {
        throw DimensionMismatch("matrix dimension must be 2, 4 or 8, got " + std::to_string(dim));
    }
}

} // namespace

SquareMatrix::SquareMatrix(int dim) : dim_(dim), entries_(dim * dim, Scalar(0)) {
    check_dim(dim);
}

SquareMatrix::SquareMatrix(int dim, std::vector<Scalar> entries)
    : dim_(dim), entries_(std::move(entries)) {
    check_dim(dim);
    if (entries_.size() != static_cast<std::size_t>(dim_ * dim_)) {
        throw DimensionMismatch("entry count does not match dimension");
    }
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    dim_ = static_cast<int>(rows.size());
    check_dim(dim_);
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != static_cast<std::size_t>(dim_)) {
            throw DimensionMismatch("ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

SquareMatrix SquareMatrix::identity(int dim) {
    SquareMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.entries_[i * dim + i] = Scalar(1);
    return m;
}

SquareMatrix SquareMatrix::permutation_p() {
    SquareMatrix m(4);
    m.entries_[0 * 4 + 0] = Scalar(1);
    m.entries_[1 * 4 + 2] = Scalar(1);
    m.entries_[2 * 4 + 1] = Scalar(1);
    m.entries_[3 * 4 + 3] = Scalar(1);
    return m;
}

SquareMatrix SquareMatrix::sigma() {
    SquareMatrix m(2);
    m.entries_[0 * 2 + 1] = Scalar(1);
    m.entries_[1 * 2 + 0] = Scalar(1);
    return m;
}

bool SquareMatrix::is_exact() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar& s) { return s.is_exact(); });
}

bool SquareMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar& s) { return s.is_zero(); });
}

bool SquareMatrix::is_identity() const {
    return *this == identity(dim_);
}

double SquareMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, e.abs());
    return m;
}

SquareMatrix SquareMatrix::to_approx() const {
    std::vector<Scalar> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.to_approx());
    return SquareMatrix(dim_, std::move(out));
}

SquareMatrix SquareMatrix::with_entry(int r, int c, const Scalar& v) const {
    SquareMatrix m = *this;
    m.entries_[r * dim_ + c] = v;
    return m;
}

SquareMatrix SquareMatrix::transpose() const {
    SquareMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m.entries_[c * dim_ + r] = at(r, c);
    return m;
}

SquareMatrix SquareMatrix::operator-() const {
    SquareMatrix m(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
    return m;
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("add");
    SquareMatrix m(a.dim_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) m.entries_[k] = a.entries_[k] + b.entries_[k];
    return m;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("sub");
    SquareMatrix m(a.dim_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) m.entries_[k] = a.entries_[k] - b.entries_[k];
    return m;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("mul");
    const int n = a.dim_;
    SquareMatrix m(n);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const Scalar& ark = a.at(r, k);
            if (ark.is_exact() && ark.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                m.entries_[r * n + c] += ark * b.at(k, c);
            }
        }
    }
    return m;
}

SquareMatrix operator*(const Scalar& s, const SquareMatrix& a) {
    SquareMatrix m(a.dim_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) m.entries_[k] = s * a.entries_[k];
    return m;
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        if (a.entries_[k] != b.entries_[k]) return false;
    }
    return true;
}

SquareMatrix matrix_mul(const SquareMatrix& a, const SquareMatrix& b) { return a * b; }
SquareMatrix matrix_transpose(const SquareMatrix& a) { return a.transpose(); }

namespace {

// Fraction-free (Bareiss) elimination over the augmented matrix [A | B].
// Pivots are the first nonzero entry in each column; divisions by the previous
// pivot are exact. Returns false when A is singular.
bool eliminate(std::vector<Scalar>& m, int n, int cols, Scalar* det_out) {
    Scalar prev(1);
    Scalar det(1);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r) {
            if (!m[r * cols + k].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return false;
        if (piv != k) {
            for (int c = 0; c < cols; ++c) std::swap(m[piv * cols + c], m[k * cols + c]);
            sign = -sign;
        }
        const Scalar pivot = m[k * cols + k];
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < cols; ++c) {
                m[r * cols + c] = (m[r * cols + c] * pivot - m[r * cols + k] * m[k * cols + c]) / prev;
            }
            m[r * cols + k] = Scalar(0);
        }
        prev = pivot;
        det = pivot;
    }
    if (det_out) *det_out = (sign > 0) ? det : -det;
    return true;
}

} // namespace

SquareMatrix matrix_inverse(const SquareMatrix& a) {
    const int n = a.dim();
    const int cols = 2 * n;
    std::vector<Scalar> m(n * cols, Scalar(0));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r * cols + c] = a.at(r, c);
        m[r * cols + n + r] = Scalar(1);
    }
    if (!eliminate(m, n, cols, nullptr)) throw SingularMatrix();
    // back substitution on the echelon form
    std::vector<Scalar> inv(n * n, Scalar(0));
    for (int rhs = 0; rhs < n; ++rhs) {
        for (int r = n - 1; r >= 0; --r) {
            Scalar sum = m[r * cols + n + rhs];
            for (int c = r + 1; c < n; ++c) sum -= m[r * cols + c] * inv[c * n + rhs];
            inv[r * n + rhs] = sum / m[r * cols + r];
        }
    }
    return SquareMatrix(n, std::move(inv));
}

Scalar matrix_det(const SquareMatrix& a) {
    const int n = a.dim();
    std::vector<Scalar> m = a.entries();
    Scalar det;
    if (!eliminate(m, n, n, &det)) return Scalar(0);
    return det;
}

bool matrix_invertible(const SquareMatrix& a) {
    return !matrix_det(a).is_zero();
}

SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b) {
    const int da = a.dim();
    const int db = b.dim();
    const int n = da * db;
    if (n != 4 && n != 8) throw DimensionMismatch("kron result must be 4x4 or 8x8");
    std::vector<Scalar> out(n * n, Scalar(0));
    for (int i1 = 0; i1 < da; ++i1)
        for (int j1 = 0; j1 < da; ++j1) {
            const Scalar& aij = a.at(i1, j1);
            if (aij.is_exact() && aij.is_zero()) continue;
            for (int i2 = 0; i2 < db; ++i2)
                for (int j2 = 0; j2 < db; ++j2) {
                    out[(i1 * db + i2) * n + (j1 * db + j2)] = aij * b.at(i2, j2);
                }
        }
    return SquareMatrix(n, std::move(out));
}

SquareMatrix embed(const SquareMatrix& r, Slot slot) {
    if (r.dim() != 4) throw DimensionMismatch("embed expects a 4x4 matrix");
    switch (slot) {
        case Slot::S12:
            return kron(r, SquareMatrix::identity(2));
        case Slot::S23:
            return kron(SquareMatrix::identity(2), r);
        case Slot::S13: {
            static const SquareMatrix p23 = kron(SquareMatrix::identity(2), SquareMatrix::permutation_p());
            return p23 * kron(r, SquareMatrix::identity(2)) * p23;
        }
    }
    throw DimensionMismatch("bad slot");
}

SquareMatrix yb_commutator(const SquareMatrix& r, const SquareMatrix& s, const SquareMatrix& t) {
    SquareMatrix r12 = embed(r, Slot::S12);
    SquareMatrix s13 = embed(s, Slot::S13);
    SquareMatrix t23 = embed(t, Slot::S23);
    return r12 * s13 * t23 - t23 * s13 * r12;
}

SquareMatrix partial_transpose_second(const SquareMatrix& r) {
    if (r.dim() != 4) throw DimensionMismatch("partial transpose expects a 4x4 matrix");
    SquareMatrix m(4);
    std::vector<Scalar> out(16, Scalar(0));
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int j1 = 0; j1 < 2; ++j1)
                for (int j2 = 0; j2 < 2; ++j2) {
                    out[(2 * i1 + i2) * 4 + (2 * j1 + j2)] = r.at(2 * i1 + j2, 2 * j1 + i2);
                }
    return SquareMatrix(4, std::move(out));
}

bool second_inverse_check(const SquareMatrix& r) {
    return matrix_invertible(partial_transpose_second(r));
}

SquareMatrix op_plus(const SquareMatrix& y) {
    static const SquareMatrix p = SquareMatrix::permutation_p();
    return p * y * p;
}

SquareMatrix op_inv(const SquareMatrix& y) { return matrix_inverse(y); }

SquareMatrix op_hash(const SquareMatrix& y) { return matrix_inverse(op_plus(y)); }

SquareMatrix op_antidiag(const SquareMatrix& y) {
    static const SquareMatrix ss = kron(SquareMatrix::sigma(), SquareMatrix::sigma());
    return ss * y.transpose() * ss;
}

double ResidualReport::max_residual() const {
    return std::max(std::max(residual[0], residual[1]), std::max(residual[2], residual[3]));
}

bool ResidualReport::pass(double tau) const {
    for (int k = 0; k < 4; ++k) {
        if (!identically_zero[k] && residual[k] >= tau) return false;
        if (exact_inputs && !identically_zero[k]) return false;
    }
    return true;
}

ResidualReport wxz_residual_masked(const SquareMatrix& w, const SquareMatrix& x,
                                   const SquareMatrix& z, unsigned mask) {
    ResidualReport rep;
    rep.exact_inputs = w.is_exact() && x.is_exact() && z.is_exact();
    auto fill = [&rep](int k, const SquareMatrix& c) {
        bool zero = true;
        double mx = 0.0;
        for (const auto& e : c.entries()) {
            if (e.is_exact()) {
                if (!(sgn(e.exact_re()) == 0 && sgn(e.exact_im()) == 0)) {
                    zero = false;
                    mx = std::max(mx, e.abs());
                }
            } else {
                zero = false;
                mx = std::max(mx, e.abs());
            }
        }
        rep.identically_zero[k] = zero;
        rep.residual[k] = zero ? 0.0 : mx;
    };
    if (mask & 1u) fill(0, yb_commutator(w, w, w));
    else rep.identically_zero[0] = true;
    if (mask & 2u) fill(1, yb_commutator(z, z, z));
    else rep.identically_zero[1] = true;
    if (mask & 4u) fill(2, yb_commutator(w, x, x));
    else rep.identically_zero[2] = true;
    if (mask & 8u) fill(3, yb_commutator(x, x, z));
    else rep.identically_zero[3] = true;
    return rep;
}

ResidualReport wxz_residual(const SquareMatrix& w, const SquareMatrix& x, const SquareMatrix& z) {
    return wxz_residual_masked(w, x, z, 0xFu);
}

} // namespace wxz
