#pragma once

// Exact coefficient arithmetic: arbitrary-precision rationals and the
// Gaussian rationals Q(i) built on top of them.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fmethod {

// mpq_class keeps numerator/denominator in lowest terms with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// An element re + im*i of Q(i).
/// num/den in lowest terms; den != 0.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

class GaussScalar {
public:
    GaussScalar() = default;
    GaussScalar(long v) : re_(v) {}  // NOLINT: implicit integer promotion is intended
    GaussScalar(const Rational& re) : re_(re) {}  // NOLINT
    GaussScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussScalar i() { return {Rational(0), Rational(1)}; }
    static GaussScalar frac(long num, long den) { return make_rational(num, den); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussScalar conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussScalar inverse() const;

    GaussScalar operator-() const { return {-re_, -im_}; }
    GaussScalar& operator+=(const GaussScalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussScalar& operator-=(const GaussScalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussScalar& operator*=(const GaussScalar& o);
    GaussScalar& operator/=(const GaussScalar& o) { return *this *= o.inverse(); }

    friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
    friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
    friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
    friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) { return a /= b; }

    friend bool operator==(const GaussScalar& a, const GaussScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // Canonical text form "a/b+c/d*i"; parse(to_string(x)) == x.
    std::string to_string() const;
    static GaussScalar parse(std::string_view text);

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussScalar& s);

GaussScalar pow(const GaussScalar& base, unsigned exponent);

/// t(t-1)...(t-k+1)/k! for rational t.
Rational gen_binomial(const Rational& t, unsigned k);

Rational factorial(unsigned k);

/// k!/(k-r)!, zero when r > k.
Rational falling_factorial(unsigned k, unsigned r);

}  // namespace fmethod
