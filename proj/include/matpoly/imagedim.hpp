#pragma once

/// Image classification for multilinear polynomials on M_n and exact
/// lower bounds on the dimension of the Zariski closure of the image.
///
/// PI / Central are decided exactly from an exhaustive matrix-unit scan:
/// every value of a multilinear polynomial is a linear combination of
/// matrix-unit values, so "all unit values zero" certifies PI and "all
/// unit values scalar" certifies centrality. The dimension bound is the
/// rank of the differential of the evaluation map at seeded random
/// integer points; exact arithmetic makes each sampled rank an
/// unconditional lower bound (only tightness is probabilistic).

#include "matpoly/harmonic.hpp"
#include "matpoly/matunits.hpp"
#include "matpoly/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace matpoly {

enum class ImageClass { PI, Central, NonCentral };

inline std::string to_string(ImageClass c) {
    switch (c) {
        case ImageClass::PI: return "PI";
        case ImageClass::Central: return "Central";
        case ImageClass::NonCentral: return "NonCentral";
    }
    return "?";
}

struct ImageReport {
    ImageClass classification = ImageClass::PI;
    std::size_t dim_lower_bound = 0;
    std::optional<UnitAssignment> diag_nonscalar_witness;
    std::vector<Rational> diag_nonscalar_value;
    std::optional<bool> pattern_n4;
    bool exhaustive = true;
    std::vector<std::string> warnings;
};

/// Rank of the differential of (a_1, ..., a_m) ↦ p(a_1, ..., a_m) at
/// `point`: the n^2 x (m n^2) matrix whose column (l, (r, s)) is
/// vec(p(a_1, ..., e_rs at slot l, ..., a_m)). Lower-bounds the dimension
/// of the closure of Image p.
inline std::size_t differential_rank(const NcPolynomial& p,
                                     const std::vector<Matrix<Rational>>& point) {
    if (!p.is_multilinear())
        throw std::invalid_argument("differential_rank requires a multilinear polynomial");
    if (point.size() != p.num_vars())
        throw std::invalid_argument("point arity does not match variable count");
    if (p.is_zero()) return 0;
    const std::size_t n = point.at(0).rows();
    for (const auto& a : point)
        if (!a.is_square() || a.rows() != n)
            throw std::invalid_argument("point must consist of square matrices of equal size");
    const std::size_t m = point.size();
    Matrix<Rational> jac(n * n, m * n * n);
    std::size_t col = 0;
    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s, ++col) {
                std::vector<Matrix<Rational>> probe = point;
                probe[l] = unit_matrix<Rational>({static_cast<unsigned>(r) + 1,
                                                  static_cast<unsigned>(s) + 1},
                                                 static_cast<unsigned>(n));
                std::vector<Rational> column = vec(evaluate(p, probe));
                for (std::size_t row = 0; row < column.size(); ++row) jac(row, col) = column[row];
            }
    return rank(jac);
}

/// Full image classification. Verdicts are exact (exhaustive unit scan);
/// the dimension bound is the max differential rank over `trials` seeded
/// random integer points with entries in [-box, box]. For n = 4 the
/// report also notes whether every sampled value has the paired spectrum
/// (λ1, λ2, -λ1, -λ2).
inline ImageReport classify_image(const NcPolynomial& p, unsigned n, unsigned trials = 8,
                                  std::uint64_t seed = 0, std::int64_t box = 10,
                                  std::uint64_t scan_budget = 10'000'000,
                                  bool allow_sampling = false) {
    if (!p.is_multilinear())
        throw std::invalid_argument("classify_image requires a multilinear polynomial");
    ScanReport scan = scan_units(p, n, scan_budget, allow_sampling);

    ImageReport report;
    report.exhaustive = scan.exhaustive;
    if (!scan.exhaustive)
        report.warnings.push_back("scan-not-exhaustive");
    report.diag_nonscalar_witness = scan.diag_nonscalar_witness;
    report.diag_nonscalar_value = scan.diag_nonscalar_value;

    if (scan.all_zero()) {
        report.classification = ImageClass::PI;
        report.dim_lower_bound = 0;
        return report;
    }
    if (scan.all_scalar()) {
        report.classification = ImageClass::Central;
        report.dim_lower_bound = 1;
        return report;
    }

    report.classification = ImageClass::NonCentral;
    const std::size_t m = p.num_vars();
    std::size_t best = 0;
    bool pattern_all = true;
    for (unsigned trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        std::vector<Matrix<Rational>> point;
        point.reserve(m);
        for (std::size_t l = 0; l < m; ++l) point.push_back(random_integer_matrix(rng, n, box));
        best = std::max(best, differential_rank(p, point));
        if (n == 4 && !spectrum_pattern_even(evaluate(p, point))) pattern_all = false;
    }
    report.dim_lower_bound = best;
    if (n == 4) report.pattern_n4 = pattern_all;

    // Proved lower bounds for non-central multilinear polynomials; a
    // sampled rank below them is a sampling shortfall, never silent.
    if (n >= 4) {
        std::size_t bound = static_cast<std::size_t>(n) * n - n + (n >= 5 ? 3 : 2);
        if (best < bound) report.warnings.push_back("below-theorem-bound");
    }
    // n = 4: a diagonal unit value off the (c, c, -c, -c) pattern forces
    // an image of dimension at least 15.
    if (n == 4 && scan.diag_nonscalar_witness &&
        !diag_is_double_plus_minus(scan.diag_nonscalar_value) && best < 15)
        report.warnings.push_back("n4-pattern-bound-not-reached");
    return report;
}

} // namespace matpoly
