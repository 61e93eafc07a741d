#pragma once

/// Arithmetic in cyclotomic fields Q(ε_n) = Q[x]/Φ_n(x), with ε_n a
/// primitive n-th root of unity. Elements are coefficient vectors of
/// length φ(n) over the rationals; Φ_n is irreducible over Q, so every
/// nonzero element is invertible (extended Euclid against Φ_n).
///
/// An element of order 1 is a plain rational and embeds into any Q(ε_n);
/// mixed-order arithmetic is allowed exactly when one side is rational.

#include "matpoly/errors.hpp"
#include "matpoly/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matpoly {

namespace polydetail {

// Dense univariate polynomials over Q, lowest degree first.
using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline Poly scale(Poly a, const Rational& c) {
    for (auto& x : a) x *= c;
    trim(a);
    return a;
}

// Division with remainder; the divisor must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
    trim(num);
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    Poly quot;
    if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rational(0));
    const Rational lead_inv = den.back().inverse();
    while (num.size() >= den.size()) {
        std::size_t shift = num.size() - den.size();
        Rational q = num.back() * lead_inv;
        quot[shift] = q;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= q * den[i];
        trim(num);
    }
    trim(quot);
    return {quot, num};
}

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic gcd.
inline std::tuple<Poly, Poly, Poly> ext_gcd(Poly a, Poly b) {
    Poly u0{Rational(1)}, v0{}, u1{}, v1{Rational(1)};
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        Poly u2 = sub(u0, mul(q, u1));
        Poly v2 = sub(v0, mul(q, v1));
        a = b; b = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (!a.empty() && !a.back().is_one()) {
        Rational inv = a.back().inverse();
        a = scale(a, inv);
        u0 = scale(u0, inv);
        v0 = scale(v0, inv);
    }
    return {a, u0, v0};
}

} // namespace polydetail

inline unsigned euler_phi(unsigned n) {
    if (n == 0) throw std::invalid_argument("euler_phi(0)");
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

/// Coefficients of the n-th cyclotomic polynomial Φ_n, lowest degree
/// first, monic of degree φ(n). Computed by dividing x^n - 1 by Φ_d for
/// every proper divisor d of n; all coefficients come out integral.
inline std::vector<Rational> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
    if (n == 1) return {Rational(-1), Rational(1)};
    polydetail::Poly num(n + 1, Rational(0));
    num[0] = Rational(-1);
    num[n] = Rational(1);
    polydetail::Poly den{Rational(1)};
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) den = polydetail::mul(den, cyclotomic_polynomial(d));
    auto [q, r] = polydetail::divmod(num, den);
    if (!r.empty()) throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

namespace polydetail {

// Process-wide cache of Φ_n; append-only under a mutex so concurrent
// reads of already-cached orders are safe.
inline const Poly& phi_cached(unsigned n) {
    static std::map<unsigned, Poly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, cyclotomic_polynomial(n)).first;
    return it->second;
}

} // namespace polydetail

class Cyclotomic {
public:
    /// Zero, as a rational (order 1).
    Cyclotomic() : order_(1), coeffs_{Rational(0)} {}

    /// Rational constant (order 1); embeds into any Q(ε_n) on contact.
    Cyclotomic(const Rational& r) : order_(1), coeffs_{r} {}
    Cyclotomic(long long n) : Cyclotomic(Rational(n)) {}

    /// Element with the given residue coefficients; length must be φ(order).
    Cyclotomic(unsigned order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {
        if (order_ == 0) throw std::invalid_argument("cyclotomic order must be positive");
        if (coeffs_.size() != euler_phi(order_))
            throw std::invalid_argument("coefficient vector length must equal phi(order)");
    }

    static Cyclotomic constant(unsigned order, const Rational& r) {
        std::vector<Rational> c(euler_phi(order), Rational(0));
        c[0] = r;
        return Cyclotomic(order, std::move(c));
    }

    /// ε_n^k, reduced modulo Φ_n.
    static Cyclotomic root_of_unity(unsigned n, unsigned k = 1) {
        if (n == 0) throw std::invalid_argument("root_of_unity: order must be positive");
        k %= n;
        polydetail::Poly mono(k + 1, Rational(0));
        mono[k] = Rational(1);
        return from_poly(n, std::move(mono));
    }

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
    }

    /// True when the element lies in Q (no ε contribution).
    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return false;
        return true;
    }

    Rational as_rational() const {
        if (!is_rational()) throw std::domain_error("cyclotomic element is not rational");
        return coeffs_[0];
    }

    Cyclotomic operator-() const {
        Cyclotomic r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Cyclotomic operator+(Cyclotomic a, Cyclotomic b) {
        promote(a, b);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
        return a;
    }
    friend Cyclotomic operator-(Cyclotomic a, Cyclotomic b) {
        promote(a, b);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
        return a;
    }
    friend Cyclotomic operator*(Cyclotomic a, Cyclotomic b) {
        promote(a, b);
        polydetail::Poly pa(a.coeffs_.begin(), a.coeffs_.end());
        polydetail::Poly pb(b.coeffs_.begin(), b.coeffs_.end());
        return from_poly(a.order_, polydetail::mul(pa, pb));
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    friend bool operator==(Cyclotomic a, Cyclotomic b) {
        promote(a, b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero cyclotomic element");
        if (is_rational()) {
            Cyclotomic r(*this);
            r.coeffs_[0] = r.coeffs_[0].inverse();
            return r;
        }
        polydetail::Poly f(coeffs_.begin(), coeffs_.end());
        auto [g, u, v] = polydetail::ext_gcd(f, polydetail::phi_cached(order_));
        (void)v;
        if (g.size() != 1)
            throw std::logic_error("cyclotomic inverse: gcd with Phi_n not constant");
        // g is monic 1, so u*f ≡ 1 (mod Φ_n).
        return from_poly(order_, u);
    }

    /// Field automorphism ε ↦ ε^{n-1} = ε^{-1}; fixes Q.
    Cyclotomic conjugate() const {
        if (order_ == 1 || is_rational()) return *this;
        Cyclotomic einv = root_of_unity(order_, order_ - 1);
        Cyclotomic acc = constant(order_, Rational(0));
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc = acc * einv;
            acc += Cyclotomic(coeffs_[k]);
        }
        return acc;
    }

    Cyclotomic pow(long long e) const {
        Cyclotomic base = *this;
        if (e < 0) {
            base = base.inverse();
            e = -e;
        }
        Cyclotomic r(Rational(1));
        while (e != 0) {
            if (e & 1LL) r = r * base;
            base = base * base;
            e >>= 1LL;
        }
        return r;
    }

    /// Text form: a polynomial in `e`, e.g. "1/2 - 1/2*e + e^2"; "0" when zero.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational& c = coeffs_[k];
            if (c.is_zero()) continue;
            Rational mag = c.abs();
            if (first) {
                if (c.sign() < 0) out += "-";
                first = false;
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            bool unit = mag.is_one();
            if (k == 0) {
                out += mag.str();
            } else {
                if (!unit) out += mag.str() + "*";
                out += "e";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    /// Parses the str() grammar: signed terms `rat`, `rat*e^k`, or `e^k`,
    /// with `e` a primitive order-th root of unity.
    static Cyclotomic parse(std::string_view text, unsigned order);

private:
    static Cyclotomic from_poly(unsigned order, polydetail::Poly p) {
        const auto& phi = polydetail::phi_cached(order);
        auto [q, r] = polydetail::divmod(std::move(p), phi);
        (void)q;
        std::vector<Rational> c(euler_phi(order), Rational(0));
        for (std::size_t i = 0; i < r.size(); ++i) c[i] = r[i];
        Cyclotomic z;
        z.order_ = order;
        z.coeffs_ = std::move(c);
        return z;
    }

    // Makes both operands live in the same field. A rational constant
    // (order 1, or coefficients beyond the constant all zero) embeds into
    // the other operand's field; two genuinely different orders are an error.
    static void promote(Cyclotomic& a, Cyclotomic& b) {
        if (a.order_ == b.order_) return;
        if (a.is_rational()) {
            a = constant(b.order_, a.coeffs_[0]);
        } else if (b.is_rational()) {
            b = constant(a.order_, b.coeffs_[0]);
        } else {
            throw std::invalid_argument("mixed cyclotomic orders " + std::to_string(a.order_) +
                                        " and " + std::to_string(b.order_));
        }
    }

    unsigned order_;
    std::vector<Rational> coeffs_;
};

inline Cyclotomic Cyclotomic::parse(std::string_view text, unsigned order) {
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto parse_uint = [&]() -> unsigned long long {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits", start);
        return std::stoull(std::string(text.substr(start, pos - start)));
    };

    Cyclotomic result = Cyclotomic::constant(order, Rational(0));
    skip_ws();
    if (pos == text.size()) throw ParseError("empty scalar", pos);
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) {
            if (first) throw ParseError("empty scalar", pos);
            break;
        }
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", pos);
        }
        skip_ws();
        if (pos == text.size()) throw ParseError("dangling sign", pos);

        Rational coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            BigInt num(parse_uint());
            BigInt den(1);
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                den = BigInt(parse_uint());
                if (den == 0) throw ParseError("zero denominator", pos - 1);
            }
            coef = Rational(num, den);
            have_coef = true;
        }
        bool have_e = false;
        unsigned long long epow = 1;
        if (have_coef) {
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
                if (pos == text.size() || text[pos] != 'e')
                    throw ParseError("expected 'e' after '*'", pos);
            }
        }
        if (pos < text.size() && text[pos] == 'e') {
            ++pos;
            have_e = true;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                epow = parse_uint();
            }
        }
        if (!have_coef && !have_e) throw ParseError("expected term", pos);

        Cyclotomic term = have_e
            ? Cyclotomic(coef) * Cyclotomic::root_of_unity(order, static_cast<unsigned>(epow % order))
            : Cyclotomic(coef);
        if (sign < 0) term = -term;
        result += term;
        first = false;
    }
    return result;
}

} // namespace matpoly
