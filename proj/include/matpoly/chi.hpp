#pragma once

/// The cyclic shift χ on matrix units (both indices advance by 1 mod n)
/// and the map f built from it: each slot argument is replaced by a
/// t-weighted linear combination of the full χ-orbit of its unit. When
/// the base assignment has displacement sum 1 every nonzero monomial of f
/// lands on the superdiagonal-plus-corner cycle, so f's characteristic
/// polynomial is λ^n - α; when the base value is diagonal, f stays
/// diagonal and the rank of its differential in t lower-bounds the
/// dimension of the closure of its image.

#include "matpoly/matunits.hpp"
#include "matpoly/rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace matpoly {

/// χ^k: i -> i+k, j -> j+k, both modulo n with residues in 1..n.
inline MatrixUnit chi_shift(const MatrixUnit& u, long long k, unsigned n) {
    if (n == 0) throw std::invalid_argument("chi_shift: size must be positive");
    long long kk = k % static_cast<long long>(n);
    if (kk < 0) kk += n;
    auto shift = [&](unsigned v) {
        return static_cast<unsigned>((v - 1 + static_cast<unsigned long long>(kk)) % n) + 1;
    };
    return MatrixUnit{shift(u.row), shift(u.col)};
}

/// t_{k,l}: weight of shift k (0..n-1) in slot l (0..m-1).
template <typename S>
struct TParameters {
    std::size_t shifts = 0; // n
    std::size_t slots = 0;  // m
    std::vector<S> values;

    TParameters() = default;
    TParameters(std::size_t shifts_, std::size_t slots_)
        : shifts(shifts_), slots(slots_),
          values(shifts_ * slots_, scalar_traits<S>::zero()) {}

    S& at(std::size_t k, std::size_t l) { return values[k * slots + l]; }
    const S& at(std::size_t k, std::size_t l) const { return values[k * slots + l]; }
};

inline TParameters<Rational> random_integer_tparams(Rng& rng, std::size_t n, std::size_t m,
                                                    std::int64_t box) {
    TParameters<Rational> t(n, m);
    for (auto& v : t.values) v = rng.integer_in_box(box);
    return t;
}

/// Slot arguments of f at parameters t: A_l = Σ_k t_{k,l} · χ^k(a_l).
template <typename S>
std::vector<Matrix<S>> chi_orbit_arguments(const UnitAssignment& base, const TParameters<S>& t) {
    const unsigned n = base.n;
    if (t.shifts != n || t.slots != base.units.size())
        throw std::invalid_argument("t parameter block does not match (n, m)");
    std::vector<Matrix<S>> args;
    args.reserve(base.units.size());
    for (std::size_t l = 0; l < base.units.size(); ++l) {
        Matrix<S> a(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            MatrixUnit u = chi_shift(base.units[l], static_cast<long long>(k), n);
            a(u.row - 1, u.col - 1) += t.at(k, l);
        }
        args.push_back(std::move(a));
    }
    return args;
}

/// f(t) = p(Σ_k t_{k,1} χ^k(a_1), ..., Σ_k t_{k,m} χ^k(a_m)), exact.
template <typename S>
Matrix<S> build_f(const NcPolynomial& p, const UnitAssignment& base, const TParameters<S>& t) {
    if (!p.is_multilinear()) throw std::invalid_argument("build_f requires a multilinear polynomial");
    if (base.units.size() != p.num_vars())
        throw std::invalid_argument("base assignment length does not match variable count");
    return evaluate(p, chi_orbit_arguments(base, t));
}

template <typename S>
struct SpectrumCheck {
    bool holds = false; // char poly is λ^n - α
    S alpha = scalar_traits<S>::zero();
};

/// Checks char_poly(A) = λ^n - α; when that holds with α ≠ 0 the
/// eigenvalues are {c, cε, ..., cε^{n-1}} for any c with c^n = α.
/// Certified from coefficient structure alone, no root extraction.
template <typename S>
SpectrumCheck<S> verify_cyclic_spectrum(const Matrix<S>& a) {
    if (!a.is_square()) throw std::invalid_argument("verify_cyclic_spectrum: non-square input");
    std::vector<S> cp = char_poly(a);
    const std::size_t n = a.rows();
    SpectrumCheck<S> r;
    for (std::size_t k = 1; k < n; ++k)
        if (!cp[k].is_zero()) return r;
    r.holds = true;
    r.alpha = -cp[0];
    return r;
}

/// Superdiagonal-plus-corner positions (i, i+1) and (n, 1), 0-based pairs.
inline std::vector<std::pair<std::size_t, std::size_t>> cycle_support(unsigned n) {
    std::vector<std::pair<std::size_t, std::size_t>> s;
    for (unsigned i = 0; i + 1 < n; ++i) s.emplace_back(i, i + 1);
    s.emplace_back(n - 1, 0);
    return s;
}

/// Max over trials of the rank of the differential of t ↦ f(t) at a
/// random integer point: column (k, l) is f with slot l replaced by
/// χ^k(a_l) and the other slots at their t-combinations. Lower-bounds the
/// dimension of the closure of Image f. The base value must be diagonal
/// (possibly zero).
inline std::size_t f_differential_rank(const NcPolynomial& p, const UnitAssignment& base,
                                       unsigned trials, std::uint64_t seed,
                                       std::int64_t box = 10) {
    UnitValueClass base_class = classify_value(evaluate_on_units(p, base));
    if (base_class.kind == UnitValueKind::UnitMultiple)
        throw std::invalid_argument("f_differential_rank: base value must be diagonal");
    const unsigned n = base.n;
    const std::size_t m = base.units.size();
    std::size_t best = 0;
    for (unsigned trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        TParameters<Rational> t = random_integer_tparams(rng, n, m, box);
        std::vector<Matrix<Rational>> args = chi_orbit_arguments(base, t);
        Matrix<Rational> jac(static_cast<std::size_t>(n) * n, m * n);
        std::size_t col = 0;
        for (std::size_t l = 0; l < m; ++l)
            for (std::size_t k = 0; k < n; ++k, ++col) {
                std::vector<Matrix<Rational>> probe = args;
                probe[l] = unit_matrix<Rational>(chi_shift(base.units[l], static_cast<long long>(k), n), n);
                std::vector<Rational> column = vec(evaluate(p, probe));
                for (std::size_t r = 0; r < column.size(); ++r) jac(r, col) = column[r];
            }
        best = std::max(best, rank(jac));
    }
    return best;
}

} // namespace matpoly
