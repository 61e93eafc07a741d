#pragma once

/// Harmonic bases of the diagonal matrices over Q(ε_n):
///
///   e_k = diag{1, ε^k, ε^{2k}, ..., ε^{(n-1)k}}      (a DFT basis)
///   q_k = e_k with positions 0 and 1 swapped
///   r_k = e_k with positions 0 and 2 swapped          (n = 5 only)
///
/// together with the Hermitian-style pairing <u, v> = Σ u_i conj(v_i)
/// (conj sends ε to ε^{-1}), exact DFT decomposition of diagonal vectors,
/// and the n = 4 paired-spectrum test done on characteristic-polynomial
/// coefficients instead of eigenvalue extraction.

#include "matpoly/cyclotomic.hpp"
#include "matpoly/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace matpoly {

using DiagonalVector = std::vector<Cyclotomic>;

enum class HarmonicVariant { e, q, r };

struct HarmonicIndex {
    unsigned k = 0;
    HarmonicVariant variant = HarmonicVariant::e;
};

inline DiagonalVector harmonic_vector(unsigned n, const HarmonicIndex& idx) {
    if (n == 0) throw std::invalid_argument("harmonic_vector: order must be positive");
    if (idx.k >= n) throw std::invalid_argument("harmonic_vector: index k out of range");
    if (idx.variant == HarmonicVariant::r && n != 5)
        throw std::invalid_argument("harmonic_vector: the r basis is defined only for n = 5");
    DiagonalVector v;
    v.reserve(n);
    for (unsigned j = 0; j < n; ++j)
        v.push_back(Cyclotomic::root_of_unity(n, (j * idx.k) % n));
    if (idx.variant == HarmonicVariant::q) std::swap(v[0], v[1]);
    if (idx.variant == HarmonicVariant::r) std::swap(v[0], v[2]);
    return v;
}

/// <u, v> = Σ u_i conj(v_i), exact in Q(ε_n).
inline Cyclotomic pairing(const DiagonalVector& u, const DiagonalVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("pairing: length mismatch");
    Cyclotomic acc;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i].conjugate();
    return acc;
}

struct DftResult {
    std::vector<Cyclotomic> coeffs;  // h_0 .. h_{n-1}
    std::vector<unsigned> support;   // { s : h_s != 0 }
};

/// d = Σ h_s e_s with h_s = <d, e_s> / n; exact reconstruction.
inline DftResult dft_decompose(const DiagonalVector& d) {
    const unsigned n = static_cast<unsigned>(d.size());
    if (n == 0) throw std::invalid_argument("dft_decompose: empty vector");
    DftResult r;
    Cyclotomic inv_n(Rational(1, static_cast<long long>(n)));
    for (unsigned s = 0; s < n; ++s) {
        Cyclotomic h = pairing(d, harmonic_vector(n, {s, HarmonicVariant::e})) * inv_n;
        if (!h.is_zero()) r.support.push_back(s);
        r.coeffs.push_back(std::move(h));
    }
    return r;
}

/// Builds Σ c·(basis vector) and decomposes it in the e basis.
inline DftResult expand_in_e_basis(const std::vector<std::pair<Cyclotomic, HarmonicIndex>>& combo,
                                   unsigned n) {
    DiagonalVector d(n, Cyclotomic());
    for (const auto& [c, idx] : combo) {
        DiagonalVector v = harmonic_vector(n, idx);
        for (unsigned j = 0; j < n; ++j) d[j] += c * v[j];
    }
    return dft_decompose(d);
}

/// n = 4 only: true iff the spectrum has the paired form
/// (λ1, λ2, -λ1, -λ2), i.e. the characteristic polynomial is even
/// (zero coefficients on λ^3 and λ^1).
template <typename S>
bool spectrum_pattern_even(const Matrix<S>& a) {
    if (!a.is_square() || a.rows() != 4)
        throw std::invalid_argument("spectrum_pattern_even is defined for 4x4 matrices");
    std::vector<S> cp = char_poly(a);
    return cp[3].is_zero() && cp[1].is_zero();
}

/// True iff the multiset of entries is {c, c, -c, -c} for some c.
inline bool diag_is_double_plus_minus(const std::vector<Rational>& d) {
    if (d.size() != 4) return false;
    // Pick a candidate c, count matches of c and -c.
    for (const Rational& c : d) {
        std::size_t plus = 0, minus = 0;
        for (const Rational& x : d) {
            if (x == c) ++plus;
            if (x == -c) ++minus;
        }
        if (c.is_zero()) {
            if (plus == 4) return true;
        } else if (plus == 2 && minus == 2) {
            return true;
        }
    }
    return false;
}

} // namespace matpoly
