#pragma once

/// The rational Hamilton quaternions (-1,-1 / Q): i^2 = j^2 = -1,
/// ij = k = -ji. The reduced norm w^2+x^2+y^2+z^2 vanishes only at 0, so
/// this is a division algebra and exact inverses always exist. On top of
/// it, the square-central 2x2 matrix form
///
///   [ a                b       ]
///   [ -b^{-1}(a^2-α)  -b^{-1}ab ],   α rational, b != 0
///
/// which squares to α·I, and its recognizer.

#include "matpoly/errors.hpp"
#include "matpoly/rational.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace matpoly {

class Quaternion {
public:
    Quaternion() : w_(0), x_(0), y_(0), z_(0) {}
    Quaternion(Rational w, Rational x, Rational y, Rational z)
        : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}
    Quaternion(const Rational& w) : Quaternion(w, Rational(0), Rational(0), Rational(0)) {}
    Quaternion(long long w) : Quaternion(Rational(w)) {}

    static Quaternion unit_i() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
    static Quaternion unit_j() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
    static Quaternion unit_k() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }

    const Rational& w() const { return w_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const Rational& z() const { return z_; }

    bool is_zero() const { return w_.is_zero() && x_.is_zero() && y_.is_zero() && z_.is_zero(); }

    /// Lies in the rational center.
    bool is_rational() const { return x_.is_zero() && y_.is_zero() && z_.is_zero(); }

    Rational as_rational() const {
        if (!is_rational()) throw std::domain_error("quaternion is not central");
        return w_;
    }

    Quaternion conjugate() const { return {w_, -x_, -y_, -z_}; }

    /// Reduced norm w^2 + x^2 + y^2 + z^2; zero only for the zero element.
    Rational norm() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }

    Quaternion operator-() const { return {-w_, -x_, -y_, -z_}; }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w_ + b.w_, a.x_ + b.x_, a.y_ + b.y_, a.z_ + b.z_};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w_ - b.w_, a.x_ - b.x_, a.y_ - b.y_, a.z_ - b.z_};
    }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
                a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
                a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
                a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
    }

    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

    Quaternion inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero quaternion");
        Rational n = norm();
        Quaternion c = conjugate();
        return {c.w_ / n, c.x_ / n, c.y_ / n, c.z_ / n};
    }

    /// Text form "w+x*i+y*j+z*k" with zero components omitted; "0" for zero.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        auto emit = [&](const Rational& c, const char* sym) {
            if (c.is_zero()) return;
            Rational mag = c.abs();
            if (first) {
                if (c.sign() < 0) out += "-";
                first = false;
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            if (sym[0] == '\0') {
                out += mag.str();
            } else {
                if (!mag.is_one()) out += mag.str() + "*";
                out += sym;
            }
        };
        emit(w_, "");
        emit(x_, "i");
        emit(y_, "j");
        emit(z_, "k");
        return out;
    }

    /// Parses the str() grammar: signed terms `rat`, `rat*i|j|k`, or bare
    /// `i|j|k`.
    static Quaternion parse(std::string_view text) {
        std::size_t pos = 0;
        auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
        auto parse_uint = [&]() -> BigInt {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw ParseError("expected digits", start);
            return BigInt(std::string(text.substr(start, pos - start)));
        };
        Quaternion result;
        skip_ws();
        if (pos == text.size()) throw ParseError("empty quaternion", pos);
        bool first = true;
        while (true) {
            skip_ws();
            if (pos == text.size()) break;
            int sign = 1;
            if (text[pos] == '+' || text[pos] == '-') {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-' between terms", pos);
            }
            first = false;
            Rational coef(1);
            bool have_coef = false;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                BigInt num = parse_uint();
                BigInt den(1);
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    std::size_t dpos = pos;
                    den = parse_uint();
                    if (den == 0) throw ParseError("zero denominator", dpos);
                }
                coef = Rational(num, den);
                have_coef = true;
                skip_ws();
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    skip_ws();
                }
            }
            char sym = '\0';
            if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
                sym = text[pos];
                ++pos;
            }
            if (!have_coef && sym == '\0') throw ParseError("expected term", pos);
            if (sign < 0) coef = -coef;
            switch (sym) {
                case '\0': result.w_ += coef; break;
                case 'i': result.x_ += coef; break;
                case 'j': result.y_ += coef; break;
                case 'k': result.z_ += coef; break;
            }
        }
        return result;
    }

private:
    Rational w_, x_, y_, z_;
};

/// 2x2 matrix over the quaternions, row-major.
struct QuatMatrix2 {
    std::array<Quaternion, 4> e;

    Quaternion& at(std::size_t i, std::size_t j) { return e[i * 2 + j]; }
    const Quaternion& at(std::size_t i, std::size_t j) const { return e[i * 2 + j]; }

    static QuatMatrix2 scalar(const Rational& c) {
        QuatMatrix2 m;
        m.at(0, 0) = Quaternion(c);
        m.at(1, 1) = Quaternion(c);
        return m;
    }

    friend QuatMatrix2 operator*(const QuatMatrix2& a, const QuatMatrix2& b) {
        QuatMatrix2 r;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                r.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
        return r;
    }

    friend bool operator==(const QuatMatrix2& a, const QuatMatrix2& b) { return a.e == b.e; }
};

/// The square-central form at (a, b, α):
/// [[a, b], [-b^{-1}(a^2 - α), -b^{-1} a b]]; squares to α·I.
inline QuatMatrix2 build_square_central(const Quaternion& a, const Quaternion& b,
                                        const Rational& alpha) {
    if (b.is_zero()) throw std::domain_error("build_square_central: b must be invertible");
    Quaternion binv = b.inverse();
    QuatMatrix2 m;
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = -(binv * (a * a - Quaternion(alpha)));
    m.at(1, 1) = -(binv * a * b);
    return m;
}

struct SquareCentralCheck {
    bool is_form = false;
    std::optional<Rational> alpha;
};

/// Recognizes the square-central form for matrices with invertible
/// top-right entry: α := a^2 + bc must be central (rational) and the
/// bottom-right entry must equal -b^{-1} a b; the bottom-left equation
/// c = -b^{-1}(a^2 - α) then holds identically.
inline SquareCentralCheck verify_square_central_form(const QuatMatrix2& m) {
    const Quaternion& a = m.at(0, 0);
    const Quaternion& b = m.at(0, 1);
    const Quaternion& c = m.at(1, 0);
    const Quaternion& d = m.at(1, 1);
    if (b.is_zero())
        throw std::domain_error("verify_square_central_form: top-right entry must be invertible");
    SquareCentralCheck result;
    Quaternion alpha = a * a + b * c;
    if (!alpha.is_rational()) return result;
    if (d != -(b.inverse() * a * b)) return result;
    result.is_form = true;
    result.alpha = alpha.as_rational();
    return result;
}

} // namespace matpoly
