#pragma once

/// Polynomials in noncommuting variables x1..xm with rational
/// coefficients: formal sums of words, stored sparsely with like terms
/// combined and zero terms dropped. Words are kept explicitly (not as
/// permutation indices) so that products and powers of multilinear
/// polynomials live in the same representation.
///
/// Canonical term order is length-then-lexicographic on the letter
/// sequences, which makes rendering deterministic.

#include "matpoly/errors.hpp"
#include "matpoly/matrix.hpp"
#include "matpoly/rng.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace matpoly {

/// A word in the free monoid: sequence of 1-based variable indices.
using Word = std::vector<unsigned>;

struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

class NcPolynomial {
public:
    using TermMap = std::map<Word, Rational, WordOrder>;

    explicit NcPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& [w, c] : terms_) d = std::max(d, w.size());
        return d;
    }

    void add_term(Word w, const Rational& coeff) {
        if (w.empty()) throw std::invalid_argument("empty word");
        for (unsigned v : w)
            if (v == 0 || v > num_vars_)
                throw std::invalid_argument("variable index " + std::to_string(v) +
                                            " out of range 1.." + std::to_string(num_vars_));
        if (coeff.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// True iff every word uses each of x1..xm exactly once.
    bool is_multilinear() const {
        for (const auto& [w, c] : terms_) {
            if (w.size() != num_vars_) return false;
            std::vector<bool> seen(num_vars_, false);
            for (unsigned v : w) {
                if (seen[v - 1]) return false;
                seen[v - 1] = true;
            }
        }
        return true;
    }

    NcPolynomial operator-() const {
        NcPolynomial r(num_vars_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) {
        a.check_same_vars(b);
        for (const auto& [w, c] : b.terms_) a.add_term(w, c);
        return a;
    }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) {
        a.check_same_vars(b);
        for (const auto& [w, c] : b.terms_) a.add_term(w, -c);
        return a;
    }

    /// Free-algebra product: words concatenate.
    friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
        a.check_same_vars(b);
        NcPolynomial r(a.num_vars_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(std::move(w), ca * cb);
            }
        return r;
    }

    NcPolynomial scale(const Rational& c) const {
        NcPolynomial r(num_vars_);
        if (c.is_zero()) return r;
        for (const auto& [w, k] : terms_) r.terms_.emplace(w, c * k);
        return r;
    }

    /// p^e by repeated free-algebra multiplication (term blowup accepted
    /// at desk scale). p^0 is not representable (no constant words).
    NcPolynomial pow(unsigned e) const {
        if (e == 0) throw std::invalid_argument("pow: exponent must be positive");
        NcPolynomial r = *this;
        for (unsigned k = 1; k < e; ++k) r = r * *this;
        return r;
    }

    friend bool operator==(const NcPolynomial& a, const NcPolynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

    /// Canonical text: terms in length-then-lex order, "x1*x2 - x2*x1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            Rational mag = c.abs();
            if (first) {
                if (c.sign() < 0) out += "-";
                first = false;
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            if (!mag.is_one()) out += mag.str() + "*";
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i > 0) out += "*";
                out += "x" + std::to_string(w[i]);
            }
        }
        return out;
    }

    /// Grammar: poly := ['+'|'-'] term (('+'|'-') term)*;
    ///          term := [coef '*']? var ('*' var)*;
    ///          coef := int | int '/' int;  var := 'x' digits.
    /// Reports the 0-based offset of the first offending character.
    static NcPolynomial parse(std::string_view text, std::size_t num_vars);

    /// parse() with the variable count inferred as the largest index used.
    static NcPolynomial parse_infer(std::string_view text) {
        std::size_t max_var = 1;
        for (std::size_t i = 0; i + 1 < text.size(); ++i) {
            if (text[i] != 'x' || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) continue;
            std::size_t j = i + 1;
            unsigned long long v = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                v = v * 10 + static_cast<unsigned long long>(text[j] - '0');
                ++j;
            }
            max_var = std::max<std::size_t>(max_var, v);
        }
        return parse(text, max_var);
    }

private:
    void check_same_vars(const NcPolynomial& o) const {
        if (num_vars_ != o.num_vars_)
            throw std::invalid_argument("polynomials over different variable counts");
    }

    std::size_t num_vars_;
    TermMap terms_;
};

inline NcPolynomial NcPolynomial::parse(std::string_view text, std::size_t num_vars) {
    NcPolynomial result(num_vars);
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto at_digit = [&] { return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); };
    auto parse_uint = [&]() -> unsigned long long {
        std::size_t start = pos;
        while (at_digit()) ++pos;
        if (pos == start) throw ParseError("expected digits", start);
        return std::stoull(std::string(text.substr(start, pos - start)));
    };
    auto parse_var = [&]() -> unsigned {
        if (pos >= text.size() || text[pos] != 'x')
            throw ParseError("expected variable", pos);
        std::size_t xpos = pos;
        ++pos;
        unsigned long long v = parse_uint();
        if (v == 0) throw ParseError("variable indices are 1-based", xpos);
        if (v > num_vars)
            throw ParseError("variable index " + std::to_string(v) + " exceeds variable count " +
                                 std::to_string(num_vars),
                             xpos);
        return static_cast<unsigned>(v);
    };

    skip_ws();
    if (pos == text.size()) throw ParseError("empty polynomial", pos);
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

        Rational coeff(1);
        if (at_digit()) {
            BigInt num(parse_uint());
            BigInt den(1);
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                std::size_t dpos = pos;
                den = BigInt(parse_uint());
                if (den == 0) throw ParseError("zero denominator", dpos);
            }
            coeff = Rational(num, den);
            skip_ws();
            if (pos >= text.size() || text[pos] != '*')
                throw ParseError("expected '*' after coefficient", pos);
            ++pos;
            skip_ws();
        }

        Word w;
        w.push_back(parse_var());
        for (;;) {
            skip_ws();
            if (pos >= text.size() || text[pos] != '*') break;
            ++pos;
            skip_ws();
            w.push_back(parse_var());
        }
        result.add_term(std::move(w), sign < 0 ? -coeff : coeff);
    }
    return result;
}

/// Exact evaluation p(args[0], ..., args[m-1]). All matrices must be
/// square of one size; the scalar field is fixed by the template.
template <typename S>
Matrix<S> evaluate(const NcPolynomial& p, const std::vector<Matrix<S>>& args) {
    if (args.size() != p.num_vars())
        throw std::invalid_argument("argument count does not match variable count");
    if (args.empty()) throw std::invalid_argument("evaluation needs at least one argument");
    const std::size_t n = args[0].rows();
    for (const auto& a : args)
        if (!a.is_square() || a.rows() != n)
            throw std::invalid_argument("arguments must be square matrices of equal size");
    Matrix<S> acc(n, n);
    for (const auto& [w, c] : p.terms()) {
        Matrix<S> prod = args[w[0] - 1];
        for (std::size_t i = 1; i < w.size(); ++i) prod = prod * args[w[i] - 1];
        acc += scalar_traits<S>::from_rational(c) * prod;
    }
    return acc;
}

template <typename S>
Matrix<S> evaluate(const NcPolynomial& p, std::initializer_list<Matrix<S>> args) {
    return evaluate(p, std::vector<Matrix<S>>(args));
}

namespace builtindetail {

inline int permutation_sign(const std::vector<unsigned>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

inline NcPolynomial standard_polynomial(std::size_t k) {
    NcPolynomial p(k);
    std::vector<unsigned> perm(k);
    std::iota(perm.begin(), perm.end(), 1u);
    do {
        p.add_term(Word(perm.begin(), perm.end()), Rational(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return p;
}

} // namespace builtindetail

inline std::vector<std::string> builtin_names() {
    return {"comm", "s2", "s3", "s4", "c4m"};
}

/// Catalog: comm = x1x2 - x2x1; s_k = standard polynomial of degree k;
/// c4m = [x1,x2][x3,x4] + [x3,x4][x1,x2], the multilinearization of [x,y]^2.
inline NcPolynomial builtin(std::string_view name) {
    if (name == "comm" || name == "s2") {
        NcPolynomial p(2);
        p.add_term({1, 2}, Rational(1));
        p.add_term({2, 1}, Rational(-1));
        return p;
    }
    if (name == "s3") return builtindetail::standard_polynomial(3);
    if (name == "s4") return builtindetail::standard_polynomial(4);
    if (name == "c4m") {
        NcPolynomial c12(4), c34(4);
        c12.add_term({1, 2}, Rational(1));
        c12.add_term({2, 1}, Rational(-1));
        c34.add_term({3, 4}, Rational(1));
        c34.add_term({4, 3}, Rational(-1));
        return c12 * c34 + c34 * c12;
    }
    throw std::invalid_argument("unknown builtin polynomial '" + std::string(name) + "'");
}

/// Builtin name, or else the grammar with the variable count inferred.
inline NcPolynomial polynomial_from_text(std::string_view text) {
    for (const auto& n : builtin_names())
        if (text == n) return builtin(n);
    return NcPolynomial::parse_infer(text);
}

/// Random multilinear polynomial: every word of S_m, integer coefficients
/// uniform in [-box, box]; zero coefficients drop out. May return the zero
/// polynomial; callers filter.
inline NcPolynomial random_multilinear(Rng& rng, std::size_t m, std::int64_t box) {
    NcPolynomial p(m);
    std::vector<unsigned> perm(m);
    std::iota(perm.begin(), perm.end(), 1u);
    do {
        Rational c = rng.integer_in_box(box);
        if (!c.is_zero()) p.add_term(Word(perm.begin(), perm.end()), c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return p;
}

} // namespace matpoly
