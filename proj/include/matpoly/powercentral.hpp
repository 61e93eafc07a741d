#pragma once

/// Power-centrality probing. p is ν-central when p^ν takes only scalar
/// values, ν minimal. p^ν is not multilinear, so unit scans cannot
/// certify its centrality; probes are therefore random evaluations with
/// an explicit Schwartz-Zippel failure bound, while NotCentral verdicts
/// carry an exact witness. Two proved filters cut the search space:
///
///   gcd filter    ν-central needs gcd(ν, n) > 1
///   order filter  a multilinear ν-central polynomial has ν = n exactly
///
/// and for n >= 4 there are no multilinear power-central polynomials at
/// all, so any ProbablyCentral outcome there is escalated to an error.

#include "matpoly/errors.hpp"
#include "matpoly/imagedim.hpp"
#include "matpoly/matunits.hpp"
#include "matpoly/rng.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace matpoly {

enum class ProbeKind { ProbablyCentral, NotCentral, Skipped };
enum class SkipReason { gcd_filter, thmC_filter };

struct ProbeVerdict {
    ProbeKind kind = ProbeKind::ProbablyCentral;
    unsigned trials = 0;

    /// ProbablyCentral: Schwartz-Zippel bound (deg(p^ν)+1 over box size)^trials.
    Rational failure_bound;

    /// NotCentral: point where p(point)^ν is not scalar, and that value.
    std::vector<Matrix<Rational>> witness_point;
    Matrix<Rational> witness_value;

    SkipReason skip_reason = SkipReason::gcd_filter;
};

/// Evaluates p at seeded random integer points in [-box, box], raises the
/// value to the ν-th power (evaluation is a ring homomorphism, so this is
/// the value of p^ν) and tests scalarity exactly.
inline ProbeVerdict power_central_probe(const NcPolynomial& p, unsigned n, unsigned nu,
                                        unsigned trials = 20, std::uint64_t seed = 0,
                                        std::int64_t box = 10) {
    if (nu == 0) throw std::invalid_argument("power_central_probe: nu must be >= 1");
    if (n == 0) throw std::invalid_argument("power_central_probe: matrix size must be positive");
    const std::size_t m = p.num_vars();
    for (unsigned trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        std::vector<Matrix<Rational>> point;
        point.reserve(m);
        for (std::size_t l = 0; l < m; ++l) point.push_back(random_integer_matrix(rng, n, box));
        Matrix<Rational> value = evaluate(p, point).pow(nu);
        if (!value.is_scalar()) {
            ProbeVerdict v;
            v.kind = ProbeKind::NotCentral;
            v.trials = trial + 1;
            v.witness_point = std::move(point);
            v.witness_value = std::move(value);
            return v;
        }
    }
    ProbeVerdict v;
    v.kind = ProbeKind::ProbablyCentral;
    v.trials = trials;
    Rational per_trial(static_cast<long long>(p.degree() * nu + 1), 2 * box + 1);
    v.failure_bound = per_trial.pow(trials);
    return v;
}

struct OrderSearchEntry {
    unsigned nu = 0;
    ProbeVerdict verdict;
};

struct OrderSearchResult {
    std::optional<unsigned> nu; // smallest ν with p^ν (probably) central
    std::vector<OrderSearchEntry> probes;
};

/// Smallest ν with p^ν central. ν = 1 (plain centrality) is decided
/// exactly by the unit scan; 2..nu_max go through the filters and the
/// probabilistic probe. With filters on, a multilinear p is only ever
/// probed at ν = n. For n >= 4 a ProbablyCentral probe contradicts the
/// no-multilinear-power-central theorem and throws TheoremContradiction.
inline OrderSearchResult order_search(const NcPolynomial& p, unsigned n, unsigned nu_max = 8,
                                      unsigned trials = 20, std::uint64_t seed = 0,
                                      std::int64_t box = 10, bool use_filters = true,
                                      std::uint64_t scan_budget = 10'000'000,
                                      bool allow_sampling = false) {
    if (!p.is_multilinear())
        throw std::invalid_argument("order_search requires a multilinear polynomial");
    ScanReport scan = scan_units(p, n, scan_budget, allow_sampling);
    if (scan.all_zero())
        throw std::invalid_argument("order_search: polynomial is PI on M_n");

    OrderSearchResult result;
    if (scan.all_scalar()) {
        result.nu = 1;
        return result;
    }

    for (unsigned nu = 2; nu <= nu_max; ++nu) {
        OrderSearchEntry entry;
        entry.nu = nu;
        if (use_filters && nu > n) {
            // Beyond n the order filter is decisive regardless of gcd.
            entry.verdict.kind = ProbeKind::Skipped;
            entry.verdict.skip_reason = SkipReason::thmC_filter;
        } else if (use_filters && std::gcd(nu, n) == 1) {
            entry.verdict.kind = ProbeKind::Skipped;
            entry.verdict.skip_reason = SkipReason::gcd_filter;
        } else if (use_filters && nu != n) {
            entry.verdict.kind = ProbeKind::Skipped;
            entry.verdict.skip_reason = SkipReason::thmC_filter;
        } else {
            entry.verdict = power_central_probe(p, n, nu, trials,
                                                derive_seed(seed, "order_search/" + std::to_string(nu)),
                                                box);
            if (entry.verdict.kind == ProbeKind::ProbablyCentral && n >= 4) {
                result.probes.push_back(entry);
                throw TheoremContradiction(
                    "multilinear polynomial probed power-central (nu = " + std::to_string(nu) +
                    ") on M_" + std::to_string(n) + "; no such polynomial exists for n >= 4");
            }
        }
        result.probes.push_back(entry);
        if (entry.verdict.kind == ProbeKind::ProbablyCentral) {
            result.nu = nu;
            return result;
        }
    }
    return result;
}

struct AnticommutationResult {
    bool all_scalar = true;
    unsigned trials = 0;

    /// First failing pair (point, alternate first slot) and w w' + w' w.
    std::vector<Matrix<Rational>> witness_point;
    Matrix<Rational> witness_alternate;
    Matrix<Rational> witness_value;
};

/// For random points differing only in slot 1, with values w and w',
/// tests whether w w' + w' w is scalar. Any 2-central polynomial linear
/// in x1 must pass: w + w' is again a value, and squares of values are
/// scalar, so the cross term is scalar too.
inline AnticommutationResult anticommutation_check(const NcPolynomial& p, unsigned n,
                                                   unsigned trials = 100, std::uint64_t seed = 0,
                                                   std::int64_t box = 10) {
    // Linearity in x1: every word uses it exactly once.
    for (const auto& [w, c] : p.terms()) {
        std::size_t uses = 0;
        for (unsigned v : w)
            if (v == 1) ++uses;
        if (uses != 1) throw std::invalid_argument("anticommutation_check requires p linear in x1");
    }
    const std::size_t m = p.num_vars();
    AnticommutationResult result;
    result.trials = trials;
    for (unsigned trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        std::vector<Matrix<Rational>> point;
        point.reserve(m);
        for (std::size_t l = 0; l < m; ++l) point.push_back(random_integer_matrix(rng, n, box));
        Matrix<Rational> alternate = random_integer_matrix(rng, n, box);
        Matrix<Rational> w = evaluate(p, point);
        std::vector<Matrix<Rational>> point2 = point;
        point2[0] = alternate;
        Matrix<Rational> w2 = evaluate(p, point2);
        Matrix<Rational> sym = w * w2 + w2 * w;
        if (!sym.is_scalar()) {
            result.all_scalar = false;
            result.witness_point = std::move(point);
            result.witness_alternate = std::move(alternate);
            result.witness_value = std::move(sym);
            return result;
        }
    }
    return result;
}

struct NoncommutingSlotWitness {
    std::size_t slot = 0; // 1-based
    std::vector<Matrix<Rational>> point;
    Matrix<Rational> alternate;
};

/// Searches seeded random points and per-slot alternates for values
/// p(..., a_i, ...) and p(..., a_i', ...) that do not commute. A witness
/// is expected whenever p has a value of degree n on M_n. Returns the
/// first witness found, or nothing within the budget of commutator tests.
inline std::optional<NoncommutingSlotWitness> find_noncommuting_slot(const NcPolynomial& p,
                                                                     unsigned n,
                                                                     std::uint64_t budget = 200,
                                                                     std::uint64_t seed = 0,
                                                                     std::int64_t box = 10) {
    const std::size_t m = p.num_vars();
    std::uint64_t used = 0;
    for (std::uint64_t round = 0; used < budget; ++round) {
        Rng rng(derive_seed(seed, round));
        std::vector<Matrix<Rational>> point;
        point.reserve(m);
        for (std::size_t l = 0; l < m; ++l) point.push_back(random_integer_matrix(rng, n, box));
        Matrix<Rational> v = evaluate(p, point);
        for (std::size_t slot = 0; slot < m && used < budget; ++slot) {
            Matrix<Rational> alternate = random_integer_matrix(rng, n, box);
            std::vector<Matrix<Rational>> point2 = point;
            point2[slot] = alternate;
            Matrix<Rational> v2 = evaluate(p, point2);
            ++used;
            if (!(v * v2 == v2 * v))
                return NoncommutingSlotWitness{slot + 1, point, alternate};
        }
    }
    return std::nullopt;
}

} // namespace matpoly
