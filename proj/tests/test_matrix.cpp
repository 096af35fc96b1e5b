#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wxz/matrix.hpp"
#include "wxz/rng.hpp"

using namespace wxz;

namespace {

SquareMatrix random_mat(Rng& rng, int dim, bool gaussian = false) {
    std::vector<Scalar> e;
    for (int k = 0; k < dim * dim; ++k) e.push_back(rng.scalar(false, gaussian));
    return SquareMatrix(dim, std::move(e));
}

SquareMatrix diag4(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    SquareMatrix m(4);
    return m.with_entry(0, 0, a).with_entry(1, 1, b).with_entry(2, 2, c).with_entry(3, 3, d);
}

} // namespace

TEST_CASE("kron identities") {
    SquareMatrix i2 = SquareMatrix::identity(2);
    CHECK(kron(i2, i2) == SquareMatrix::identity(4));

    // sigma (x) sigma is the 4x4 antidiagonal permutation
    SquareMatrix ss = kron(SquareMatrix::sigma(), SquareMatrix::sigma());
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(ss.at(r, c) == (r + c == 3 ? Scalar(1) : Scalar(0)));

    // diag(1,q) (x) diag(1,q) at q=3 is diag(1,3,3,9)
    SquareMatrix t(2, {Scalar(1), Scalar(0), Scalar(0), Scalar(3)});
    CHECK(kron(t, t) == diag4(Scalar(1), Scalar(3), Scalar(3), Scalar(9)));
}

TEST_CASE("mixed-product law") {
    Rng rng(11);
    for (int k = 0; k < 1000; ++k) {
        SquareMatrix a = random_mat(rng, 2), b = random_mat(rng, 2);
        SquareMatrix c = random_mat(rng, 2), d = random_mat(rng, 2);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
}

TEST_CASE("embeddings") {
    SquareMatrix i4 = SquareMatrix::identity(4);
    CHECK(embed(i4, Slot::S12) == SquareMatrix::identity(8));
    CHECK(embed(i4, Slot::S13) == SquareMatrix::identity(8));
    CHECK(embed(i4, Slot::S23) == SquareMatrix::identity(8));

    // the flip embedded on slots 1,2 exchanges the first two tensor factors
    SquareMatrix p12 = embed(SquareMatrix::permutation_p(), Slot::S12);
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int i3 = 0; i3 < 2; ++i3) {
                int from = 4 * i1 + 2 * i2 + i3;
                int to = 4 * i2 + 2 * i1 + i3;
                CHECK(p12.at(to, from) == Scalar(1));
            }

    // spectrum of a diagonal matrix embedded on slots 1,3: index enumeration
    SquareMatrix d = diag4(Scalar(1), Scalar(2), Scalar(3), Scalar(5));
    SquareMatrix e13 = embed(d, Slot::S13);
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int i3 = 0; i3 < 2; ++i3) {
                int idx = 4 * i1 + 2 * i2 + i3;
                CHECK(e13.at(idx, idx) == d.at(2 * i1 + i3, 2 * i1 + i3));
            }

    SUBCASE("conjugation identities") {
        Rng rng(5);
        SquareMatrix p12m = embed(SquareMatrix::permutation_p(), Slot::S12);
        SquareMatrix p23m = embed(SquareMatrix::permutation_p(), Slot::S23);
        for (int k = 0; k < 100; ++k) {
            SquareMatrix r = random_mat(rng, 4);
            CHECK(p23m * embed(r, Slot::S12) * p23m == embed(r, Slot::S13));
            CHECK(p12m * embed(r, Slot::S23) * p12m == embed(r, Slot::S13));
        }
    }
}

TEST_CASE("commutator") {
    SquareMatrix p = SquareMatrix::permutation_p();
    CHECK(yb_commutator(p, p, p).is_zero());

    // identity plus the off-corner unit happens to solve the equation (it is
    // the transpose of a catalog solution); a unit at (0,1) does not
    SquareMatrix corner = SquareMatrix::identity(4).with_entry(0, 3, Scalar(1));
    CHECK(yb_commutator(corner, corner, corner).is_zero());
    SquareMatrix bad = SquareMatrix::identity(4).with_entry(0, 1, Scalar(1));
    CHECK_FALSE(yb_commutator(bad, bad, bad).is_zero());

    SUBCASE("antisymmetry under reversal") {
        Rng rng(23);
        for (int k = 0; k < 50; ++k) {
            SquareMatrix r = random_mat(rng, 4), s = random_mat(rng, 4), t = random_mat(rng, 4);
            SquareMatrix lhs = yb_commutator(r, s, t);
            SquareMatrix reversed = embed(t, Slot::S23) * embed(s, Slot::S13) * embed(r, Slot::S12) -
                                    embed(r, Slot::S12) * embed(s, Slot::S13) * embed(t, Slot::S23);
            CHECK((lhs + reversed).is_zero());
        }
    }
}

TEST_CASE("wxz residual structure with X = 1") {
    Rng rng(31);
    SquareMatrix one = SquareMatrix::identity(4);
    for (int k = 0; k < 20; ++k) {
        SquareMatrix w = random_mat(rng, 4), z = random_mat(rng, 4);
        ResidualReport rep = wxz_residual(w, one, z);
        // [W,1,1] and [1,1,Z] vanish identically; only the two cubic equations survive
        CHECK(rep.identically_zero[2]);
        CHECK(rep.identically_zero[3]);
    }
    SquareMatrix p = SquareMatrix::permutation_p();
    ResidualReport rep = wxz_residual(p, random_mat(rng, 4), p);
    CHECK(rep.exact());
}

TEST_CASE("inverse") {
    SquareMatrix p = SquareMatrix::permutation_p();
    CHECK(matrix_inverse(SquareMatrix::identity(4)) == SquareMatrix::identity(4));
    CHECK(matrix_inverse(p) == p);
    CHECK_THROWS_AS(matrix_inverse(SquareMatrix(4)), SingularMatrix);

    Rng rng(3);
    int done = 0;
    while (done < 50) {
        SquareMatrix m = random_mat(rng, 4, true);
        if (!matrix_invertible(m)) continue;
        CHECK(m * matrix_inverse(m) == SquareMatrix::identity(4));
        ++done;
    }
}

TEST_CASE("partial transpose and second invertibility") {
    // diagonal matrices are fixed by the partial transpose
    SquareMatrix d = diag4(Scalar(1), Scalar(2), Scalar(3), Scalar(5));
    CHECK(partial_transpose_second(d) == d);
    CHECK(second_inverse_check(d));

    // the flip collapses to a rank-one partial transpose
    SquareMatrix p = SquareMatrix::permutation_p();
    SquareMatrix pt = partial_transpose_second(p);
    CHECK(pt.at(0, 0) == Scalar(1));
    CHECK(pt.at(0, 3) == Scalar(1));
    CHECK(pt.at(3, 0) == Scalar(1));
    CHECK(pt.at(3, 3) == Scalar(1));
    CHECK(pt.at(1, 1) == Scalar(0));
    CHECK(matrix_det(pt).is_zero());
    CHECK_FALSE(second_inverse_check(p));

    // involution
    Rng rng(17);
    for (int k = 0; k < 50; ++k) {
        SquareMatrix m = random_mat(rng, 4);
        CHECK(partial_transpose_second(partial_transpose_second(m)) == m);
    }
}

TEST_CASE("hash operators") {
    Rng rng(29);
    int done = 0;
    while (done < 200) {
        SquareMatrix m = random_mat(rng, 4);
        if (!matrix_invertible(m)) continue;
        CHECK(op_hash(m) == op_plus(op_inv(m)));
        CHECK(op_plus(op_plus(m)) == m);
        CHECK(op_inv(op_inv(m)) == m);
        CHECK(op_antidiag(op_antidiag(m)) == m);
        ++done;
    }
}
