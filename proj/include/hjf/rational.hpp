// Exact scalar arithmetic: rationals (GMP mpq_class) and Gaussian rationals.
//
// GaussRat is a plain value type a + b*i with a, b rational.  All arithmetic
// is exact; there is no floating point anywhere in this library.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hjf {

using Rat = mpq_class;

// Exact rational from machine integers.  gmpxx has no long long overloads and
// its two-argument constructor does not canonicalize, so every integral
// num/den pair in the library goes through here.
static_assert(sizeof(long) == sizeof(long long), "LP64 assumed: long long must fit in long");
inline Rat rat(long long num, long long den = 1) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

// Parse "p/q" or "p" into a canonical rational.  Throws std::invalid_argument
// on malformed input (including q = 0).
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Gaussian rational a + b*i.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(long r, long i) : re(r), im(i) {}

    static GaussRat i() { return GaussRat(0, 1); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }

    // N(a+bi) = a^2 + b^2 (rational, non-negative).
    Rat norm() const { return re * re + im * im; }

    GaussRat operator-() const { return GaussRat(-re, -im); }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        // Zero fast paths keep the hot accumulation loops cheap: most series
        // handled here have purely real (often integer) coefficients.
        if (sgn(im) == 0 && sgn(o.im) == 0) {
            re *= o.re;
            return *this;
        }
        Rat a = re * o.re - im * o.im;
        Rat b = re * o.im + im * o.re;
        re = std::move(a);
        im = std::move(b);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
        if (sgn(o.im) == 0) {
            re /= o.re;
            im /= o.re;
            return *this;
        }
        Rat n = o.norm();
        Rat a = (re * o.re + im * o.im) / n;
        Rat b = (im * o.re - re * o.im) / n;
        re = std::move(a);
        im = std::move(b);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

// acc += p * q without constructing a full temporary GaussRat when the
// imaginary parts vanish (the common case in theta-series convolutions).
inline void add_mul(GaussRat& acc, const GaussRat& p, const GaussRat& q) {
    if (sgn(p.im) == 0 && sgn(q.im) == 0) {
        acc.re += p.re * q.re;
        return;
    }
    acc.re += p.re * q.re - p.im * q.im;
    acc.im += p.re * q.im + p.im * q.re;
}

// i^e for e reduced mod 4.
inline GaussRat unit_power(long e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return GaussRat(1, 0);
        case 1: return GaussRat(0, 1);
        case 2: return GaussRat(-1, 0);
        default: return GaussRat(0, -1);
    }
}

inline GaussRat pow(GaussRat base, unsigned long e) {
    GaussRat out(1, 0);
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

inline std::string gauss_to_string(const GaussRat& g) {
    if (g.is_real()) return rat_to_string(g.re);
    std::string s = rat_to_string(g.re);
    s += (sgn(g.im) < 0) ? " - " : " + ";
    Rat a = abs(g.im);
    if (a != 1) s += rat_to_string(a) + "*";
    s += "i";
    return s;
}

}  // namespace hjf
