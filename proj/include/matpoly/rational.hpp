#pragma once

/// Exact rational arithmetic. Thin value wrapper around
/// boost::multiprecision::cpp_rational, which keeps fractions normalized
/// (gcd(|num|, den) = 1, den > 0). Nothing here ever rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace matpoly {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        // boost's two-integer constructor wants a canonical fraction
        BigInt n = num, d = den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        BigInt g = boost::multiprecision::gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        v_ = BigRat(n, d);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(BigRat(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational");
        return Rational(den(), num());
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(unsigned long long e) const {
        Rational r(1), b(*this);
        while (e != 0) {
            if (e & 1ULL) r *= b;
            b *= b;
            e >>= 1ULL;
        }
        return r;
    }

    /// Text form "p" or "p/q". Inverse of parse().
    std::string str() const {
        std::string s = num().str();
        if (den() != 1) s += "/" + den().str();
        return s;
    }

    /// Parses "p" or "p/q" with an optional leading sign.
    static Rational parse(std::string_view text) {
        auto bad = [&] { throw std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
        if (text.empty()) bad();
        std::size_t slash = text.find('/');
        auto parse_int = [&](std::string_view s) -> BigInt {
            if (s.empty()) bad();
            std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
            if (i == s.size()) bad();
            for (std::size_t k = i; k < s.size(); ++k)
                if (s[k] < '0' || s[k] > '9') bad();
            return BigInt(std::string(s));
        };
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        BigInt num = parse_int(text.substr(0, slash));
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) throw std::domain_error("rational with zero denominator");
        return Rational(num, den);
    }

    double to_double() const { return static_cast<double>(v_); }

private:
    explicit Rational(BigRat v) : v_(std::move(v)) {}
    BigRat v_;
};

inline Rational gcd(const Rational& a, const Rational& b) {
    if (!a.is_integer() || !b.is_integer())
        throw std::invalid_argument("gcd of non-integers");
    return Rational(boost::multiprecision::gcd(a.num(), b.num()));
}

} // namespace matpoly
