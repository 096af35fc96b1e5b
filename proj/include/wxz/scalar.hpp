#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

#include "wxz/error.hpp"

namespace wxz {

/// Exact rational number, always stored in reduced form with positive denominator.
using Rational = mpq_class;

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& q);

/// True iff q = (p/r)^2 for some rational p/r; if so *root is the nonnegative root.
bool rational_sqrt(const Rational& q, Rational* root);

/// Absolute tolerance used for equality and zero tests on approximate scalars.
double& approx_tolerance();

/// A complex number that is either an exact Gaussian rational or a pair of doubles.
/// Arithmetic between two exact values stays exact; anything touching an
/// approximate value yields an approximate result.
class Scalar {
public:
    Scalar() : exact_(true), re_(0), im_(0), are_(0.0), aim_(0.0) {}
    Scalar(int n) : exact_(true), re_(n), im_(0), are_(0.0), aim_(0.0) {}
    Scalar(const Rational& re, const Rational& im = Rational(0))
        : exact_(true), re_(re), im_(im), are_(0.0), aim_(0.0) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar exact(const Rational& re, const Rational& im = Rational(0)) {
        return Scalar(re, im);
    }
    static Scalar approx(double re, double im = 0.0) {
        Scalar s;
        s.exact_ = false;
        s.are_ = re;
        s.aim_ = im;
        return s;
    }
    static Scalar rational(long num, long den) { return Scalar(Rational(num, den)); }
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool is_exact() const { return exact_; }

    const Rational& exact_re() const { return re_; }
    const Rational& exact_im() const { return im_; }

    double re() const { return exact_ ? re_.get_d() : are_; }
    double im() const { return exact_ ? im_.get_d() : aim_; }
    std::complex<double> to_complex() const { return {re(), im()}; }

    /// Forgets exactness.
    Scalar to_approx() const { return approx(re(), im()); }

    bool is_zero() const;
    bool is_one() const { return *this == Scalar(1); }

    /// |value| as a double (used for residual norms and reports).
    double abs() const { return std::abs(to_complex()); }

    Scalar operator-() const;
    Scalar conj() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    /// Exact comparison between exact values; tolerance comparison otherwise.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Integer power (negative exponents invert).
    Scalar pow(long e) const;

    std::string str() const;

private:
    bool exact_;
    Rational re_, im_;
    double are_, aim_;
};

/// Principal square root: nonnegative real part, and nonnegative imaginary part
/// on the branch cut. Exact input stays exact iff it is a perfect square over
/// the Gaussian rationals.
Scalar scalar_sqrt(const Scalar& a);

inline Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar scalar_neg(const Scalar& a) { return -a; }
inline Scalar scalar_inv(const Scalar& a) { return a.inverse(); }

} // namespace wxz
