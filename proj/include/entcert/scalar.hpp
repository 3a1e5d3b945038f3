#ifndef ENTCERT_SCALAR_HPP
#define ENTCERT_SCALAR_HPP

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace entcert {

using Int = mpz_class;
using Rational = mpq_class;

// mpq_class's two-argument constructor does not canonicalize; every rational
// entering the library goes through here.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

// Parses "p", "-p" or "p/q". Used by the JSON readers.
Rational parse_rational(const std::string& text);

// Renders canonical "p" or "p/q" with q > 0.
std::string rational_to_string(const Rational& q);

/// Complex number with exact rational real and imaginary parts.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long value) : re(value), im(0) {}  // NOLINT: implicit by design
    Scalar(Rational real) : re(std::move(real)), im(0) {}
    Scalar(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    // |x|^2, always a nonnegative rational.
    Rational norm_sq() const { return re * re + im * im; }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        Rational n = o.norm_sq();
        if (n == 0) throw std::domain_error("division by zero scalar");
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

std::string scalar_to_string(const Scalar& s);

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << scalar_to_string(s);
}

}  // namespace entcert

#endif
