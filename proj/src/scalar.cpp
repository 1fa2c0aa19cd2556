#include "fmethod/scalar.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace fmethod {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Unsigned body: "12", "3/4", "0.125", ".5", "7.".
Rational parse_unsigned(std::string_view body, std::string_view whole) {
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction '" + std::string(whole) + "'");
        mpz_class d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
        Rational r(mpz_class{std::string(num)}, d);
        r.canonicalize();
        return r;
    }
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot);
        auto fp = body.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw ParseError("malformed decimal '" + std::string(whole) + "'");
        std::string digits = std::string(ip) + std::string(fp);
        mpz_class den = 1;
        for (std::size_t k = 0; k < fp.size(); ++k) den *= 10;
        Rational r(mpz_class(digits.empty() ? "0" : digits), den);
        r.canonicalize();
        return r;
    }
    if (!all_digits(body)) throw ParseError("malformed number '" + std::string(whole) + "'");
    return Rational(mpz_class{std::string(body)});
}

std::string strip(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s = strip(text);
    if (s.empty()) throw ParseError("empty number");
    bool neg = false;
    std::string_view body(s);
    if (body.front() == '+' || body.front() == '-') {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational r = parse_unsigned(body, text);
    return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

GaussScalar GaussScalar::inverse() const {
    Rational d = norm();
    if (sgn(d) == 0) throw std::domain_error("division by zero in Q(i)");
    return {re_ / d, -im_ / d};
}

GaussScalar& GaussScalar::operator*=(const GaussScalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

std::string GaussScalar::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : im_.get_str() + "*i";
    if (sgn(re_) == 0) return imag;
    if (imag.front() != '-') imag = "+" + imag;
    return re_.get_str() + imag;
}

GaussScalar GaussScalar::parse(std::string_view text) {
    std::string s = strip(text);
    if (s.empty()) throw ParseError("empty scalar");
    // split into signed terms at top-level '+'/'-'
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '*' && s[k - 1] != '/') {
            terms.push_back(s.substr(start, k - start));
            start = k;
        }
    }
    terms.push_back(s.substr(start));
    if (terms.size() > 2) throw ParseError("too many terms in scalar '" + std::string(text) + "'");

    GaussScalar out;
    bool seen_re = false, seen_im = false;
    for (const auto& term : terms) {
        std::string_view t(term);
        bool neg = false;
        if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
            neg = t.front() == '-';
            t.remove_prefix(1);
        }
        if (t.empty()) throw ParseError("dangling sign in '" + std::string(text) + "'");
        bool imaginary = t.back() == 'i';
        if (imaginary) {
            t.remove_suffix(1);
            if (!t.empty() && t.back() == '*') t.remove_suffix(1);
        }
        Rational v = (imaginary && t.empty()) ? Rational(1) : parse_unsigned(t, text);
        if (neg) v = -v;
        if (imaginary) {
            if (seen_im) throw ParseError("two imaginary parts in '" + std::string(text) + "'");
            seen_im = true;
            out.im_ = v;
        } else {
            if (seen_re) throw ParseError("two real parts in '" + std::string(text) + "'");
            seen_re = true;
            out.re_ = v;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussScalar& s) { return os << s.to_string(); }

GaussScalar pow(const GaussScalar& base, unsigned exponent) {
    GaussScalar acc(1), b = base;
    while (exponent) {
        if (exponent & 1U) acc *= b;
        b *= b;
        exponent >>= 1U;
    }
    return acc;
}

Rational gen_binomial(const Rational& t, unsigned k) {
    Rational acc(1);
    for (unsigned j = 0; j < k; ++j) {
        acc *= t - j;
        acc /= j + 1;
    }
    return acc;
}

Rational factorial(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
}

Rational falling_factorial(unsigned k, unsigned r) {
    if (r > k) return Rational(0);
    mpz_class acc = 1;
    for (unsigned j = 0; j < r; ++j) acc *= k - j;
    return Rational(acc);
}

}  // namespace fmethod
