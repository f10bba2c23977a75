#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

#include "gencore/errors.hpp"

namespace gencore {

using Rational = mpq_class;

inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

/// Parses "p", "-p", or "p/q". The result is canonicalized (positive
/// denominator, gcd(|num|, den) = 1).
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    try {
        Rational q(s);
        q.canonicalize();
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

/// Exact complex scalar a + bi with rational real and imaginary parts.
/// All arithmetic keeps both components in canonical reduced form.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}                     // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}      // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational norm = b.re * b.re + b.im * b.im;
        if (norm == 0) throw Error("division by zero GaussianRational");
        return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return rational_to_string(z.re);
    std::string s = rational_to_string(z.re);
    s += (z.im > 0) ? "+" : "-";
    s += rational_to_string(abs(z.im));
    s += "i";
    return s;
}

} // namespace gencore
