#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "cotwist/errors.hpp"

namespace cotwist {

using Rational = boost::multiprecision::cpp_rational;

// Element of Q(i).  cpp_rational keeps both parts in lowest terms with a
// positive denominator, so structural equality is canonical.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long n) : re(n) {}                 // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return {Rational(1)}; }
    static GaussianRational imaginaryUnit() { return {Rational(0), Rational(1)}; }
    static GaussianRational fraction(long num, long den) { return {Rational(num, den)}; }

    bool isZero() const { return re == 0 && im == 0; }
    bool isReal() const { return im == 0; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    GaussianRational inverse() const {
        if (isZero()) throw DomainError("division by zero in Q(i)");
        Rational n = re * re + im * im;
        return {re / n, -im / n};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

    bool operator==(const GaussianRational& o) const = default;
};

// Canonical textual form, re-parseable by the expression grammar.
// Pure reals print as "3" or "1/2"; pure imaginaries as "i", "-i", "2*i",
// "1/2*i"; mixed values as "1/2+i" (no surrounding parentheses; the caller
// adds them when the value is used as a factor).
std::string toString(const GaussianRational& q);

// True when the printed form needs parentheses before "*monomial".
bool needsParens(const GaussianRational& q);

}  // namespace cotwist
