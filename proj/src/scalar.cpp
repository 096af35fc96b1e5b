#include "wxz/scalar.hpp"

#include <cmath>
#include <sstream>

namespace wxz {

double& approx_tolerance() {
    static double tau = 1e-9;
    return tau;
}

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) {
        throw ParseError("bad rational literal '" + s + "'", 0);
    }
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

bool rational_sqrt(const Rational& q, Rational* root) {
    if (sgn(q) < 0) return false;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (root) *root = Rational(rn, rd);
    return true;
}

bool Scalar::is_zero() const {
    if (exact_) return sgn(re_) == 0 && sgn(im_) == 0;
    return std::abs(std::complex<double>(are_, aim_)) <= approx_tolerance();
}

Scalar Scalar::operator-() const {
    if (exact_) return Scalar(-re_, -im_);
    return approx(-are_, -aim_);
}

Scalar Scalar::conj() const {
    if (exact_) return Scalar(re_, -im_);
    return approx(are_, -aim_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.re_ + b.re_, a.im_ + b.im_);
    return Scalar::approx(a.re() + b.re(), a.im() + b.im());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.re_ - b.re_, a.im_ - b.im_);
    return Scalar::approx(a.re() - b.re(), a.im() - b.im());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
        return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    auto p = a.to_complex() * b.to_complex();
    return Scalar::approx(p.real(), p.imag());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (exact_) {
        Rational n = re_ * re_ + im_ * im_;
        return Scalar(re_ / n, -im_ / n);
    }
    auto p = 1.0 / to_complex();
    return approx(p.real(), p.imag());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return a.re_ == b.re_ && a.im_ == b.im_;
    return std::abs(a.to_complex() - b.to_complex()) <= approx_tolerance();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    std::ostringstream os;
    if (exact_) {
        os << re_.get_str();
        if (sgn(im_) != 0) os << (sgn(im_) > 0 ? "+" : "") << im_.get_str() << "i";
    } else {
        os << are_;
        if (aim_ != 0.0) os << (aim_ > 0 ? "+" : "") << aim_ << "i";
        os << "~";
    }
    return os.str();
}

Scalar scalar_sqrt(const Scalar& a) {
    if (a.is_exact()) {
        const Rational& x = a.exact_re();
        const Rational& y = a.exact_im();
        if (sgn(y) == 0) {
            Rational r;
            if (sgn(x) >= 0) {
                if (rational_sqrt(x, &r)) return Scalar(r);
            } else {
                if (rational_sqrt(-x, &r)) return Scalar(Rational(0), r);
            }
        } else {
            // w = u+vi with u^2-v^2 = x, 2uv = y; |w|^2 = sqrt(x^2+y^2) must be
            // rational, and (|w|^2 + x)/2 a rational square, for an exact root.
            Rational n2 = x * x + y * y;
            Rational n;
            if (rational_sqrt(n2, &n)) {
                Rational u2 = (n + x) / 2;
                Rational u;
                if (rational_sqrt(u2, &u)) {
                    if (sgn(u) != 0) {
                        Rational v = y / (2 * u);
                        // principal branch: re >= 0, and since y != 0, u > 0 works
                        return Scalar(u, v);
                    }
                }
            }
        }
    }
    auto w = std::sqrt(a.to_complex());
    return Scalar::approx(w.real(), w.imag());
}

} // namespace wxz
