#pragma once

#include <gmpxx.h>

#include <string>

namespace dsphere {

using Rational = mpq_class;

// num/den in lowest terms; mpq_class(num, den) does not reduce
inline Rational ratio(const mpz_class& num, const mpz_class& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Exact element of Q(i).
struct Gauss {
    Rational re;
    Rational im;

    Gauss() = default;
    Gauss(long v) : re(v), im(0) {}
    Gauss(Rational r) : re(std::move(r)), im(0) {}
    Gauss(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gauss I() { return Gauss(0, 1); }

    bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool isOne() const { return re == 1 && sgn(im) == 0; }
    bool isReal() const { return sgn(im) == 0; }

    Gauss conj() const { return Gauss(re, -im); }

    Gauss operator-() const { return Gauss(-re, -im); }
    Gauss& operator+=(const Gauss& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gauss& operator-=(const Gauss& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gauss& operator*=(const Gauss& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Gauss& operator/=(const Gauss& o);

    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
    friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

    // "3/4", "-i", "(1/2 - 2 i)"
    std::string str() const;
};

Gauss ipow(int k);  // i^k
std::string rationalStr(const Rational& r);
Rational parseRational(const std::string& s);

}  // namespace dsphere
