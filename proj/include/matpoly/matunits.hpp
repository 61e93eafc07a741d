#pragma once

/// Multilinear polynomials on matrix-unit tuples. Products of matrix
/// units compose like directed edges (e_ab * e_cd = δ_bc * e_ad), so a
/// word evaluates by walking its index chain; a full evaluation is
/// therefore 0, a diagonal matrix, or a multiple of one off-diagonal
/// unit. classify_value aborts loudly if that trichotomy ever fails,
/// since that would mean the evaluator is broken.
///
/// iota(e_ij) = j - i, the displacement of the unit; it telescopes along
/// matching chains: a chain with product e_kl has displacement sum l - k.

#include "matpoly/errors.hpp"
#include "matpoly/ncpoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace matpoly {

/// e_{row,col}, 1-based.
struct MatrixUnit {
    unsigned row = 1, col = 1;
    friend bool operator==(const MatrixUnit&, const MatrixUnit&) = default;
};

struct UnitAssignment {
    std::vector<MatrixUnit> units;
    unsigned n = 0; // ambient matrix size

    friend bool operator==(const UnitAssignment&, const UnitAssignment&) = default;
};

template <typename S = Rational>
Matrix<S> unit_matrix(const MatrixUnit& u, unsigned n) {
    if (u.row == 0 || u.col == 0 || u.row > n || u.col > n)
        throw std::invalid_argument("matrix unit index out of range");
    Matrix<S> m(n, n);
    m(u.row - 1, u.col - 1) = scalar_traits<S>::one();
    return m;
}

/// Dense matrices of an assignment, for the generic evaluator.
template <typename S = Rational>
std::vector<Matrix<S>> unit_matrices(const UnitAssignment& a) {
    std::vector<Matrix<S>> ms;
    ms.reserve(a.units.size());
    for (const auto& u : a.units) ms.push_back(unit_matrix<S>(u, a.n));
    return ms;
}

/// Same value as evaluate(p, unit matrices) but per-word chain walking:
/// the product of a word of units is e_{first row, last col} when the
/// inner indices match, else zero.
inline Matrix<Rational> evaluate_on_units(const NcPolynomial& p, const UnitAssignment& a) {
    if (a.units.size() != p.num_vars())
        throw std::invalid_argument("assignment length does not match variable count");
    Matrix<Rational> acc(a.n, a.n);
    for (const auto& [w, c] : p.terms()) {
        const MatrixUnit& head = a.units[w[0] - 1];
        unsigned row = head.row, col = head.col;
        bool alive = true;
        for (std::size_t i = 1; i < w.size(); ++i) {
            const MatrixUnit& u = a.units[w[i] - 1];
            if (u.row != col) {
                alive = false;
                break;
            }
            col = u.col;
        }
        if (alive) acc(row - 1, col - 1) += c;
    }
    return acc;
}

enum class UnitValueKind { Zero, Diagonal, UnitMultiple };

struct UnitValueClass {
    UnitValueKind kind = UnitValueKind::Zero;
    std::vector<Rational> diag; // Diagonal
    Rational alpha;             // UnitMultiple
    unsigned i = 0, j = 0;      // UnitMultiple position, i != j

    /// Scalar matrices: zero, or diagonal with all entries equal.
    bool is_scalar() const {
        if (kind == UnitValueKind::Zero) return true;
        if (kind != UnitValueKind::Diagonal) return false;
        for (std::size_t k = 1; k < diag.size(); ++k)
            if (diag[k] != diag[0]) return false;
        return true;
    }
};

/// Classifies a matrix-unit evaluation; throws LemmaGraphViolation for
/// any other shape (an implementation bug, not a mathematical event).
inline UnitValueClass classify_value(const Matrix<Rational>& v) {
    if (!v.is_square()) throw std::invalid_argument("classify_value: non-square input");
    const std::size_t n = v.rows();
    std::size_t nonzero = 0, off_i = 0, off_j = 0;
    bool off_diag_seen = false, diag_seen = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (v(i, j).is_zero()) continue;
            ++nonzero;
            if (i == j) {
                diag_seen = true;
            } else {
                off_diag_seen = true;
                off_i = i;
                off_j = j;
            }
        }
    UnitValueClass c;
    if (nonzero == 0) {
        c.kind = UnitValueKind::Zero;
        return c;
    }
    if (!off_diag_seen) {
        c.kind = UnitValueKind::Diagonal;
        c.diag = v.diagonal();
        return c;
    }
    if (diag_seen || nonzero != 1)
        throw LemmaGraphViolation("matrix-unit value is neither zero, diagonal, nor a single unit multiple");
    c.kind = UnitValueKind::UnitMultiple;
    c.alpha = v(off_i, off_j);
    c.i = static_cast<unsigned>(off_i) + 1;
    c.j = static_cast<unsigned>(off_j) + 1;
    return c;
}

/// Displacement of a unit under the artifact convention iota(e_ij) = j - i.
inline long long iota(const MatrixUnit& u) {
    return static_cast<long long>(u.col) - static_cast<long long>(u.row);
}

inline long long iota_sum(const UnitAssignment& a) {
    long long s = 0;
    for (const auto& u : a.units) s += iota(u);
    return s;
}

/// Conjugation by the transposition (a b) as a permutation matrix:
/// every unit e_ij maps to e_{σ(i)σ(j)}. Values conjugate accordingly.
inline UnitAssignment conjugate_by_swap(UnitAssignment a, unsigned pos_a, unsigned pos_b) {
    auto swap_idx = [&](unsigned v) { return v == pos_a ? pos_b : (v == pos_b ? pos_a : v); };
    for (auto& u : a.units) {
        u.row = swap_idx(u.row);
        u.col = swap_idx(u.col);
    }
    return a;
}

struct ScanReport {
    std::uint64_t total = 0;
    std::uint64_t zero = 0;
    std::uint64_t diagonal = 0;
    std::uint64_t unit_multiple = 0;
    bool exhaustive = true;

    /// First assignment (in scan order) whose value is diagonal but not scalar.
    std::optional<UnitAssignment> diag_nonscalar_witness;
    std::vector<Rational> diag_nonscalar_value;

    /// First assignment achieving a nonzero multiple of e_ij, per (i, j).
    std::map<std::pair<unsigned, unsigned>, UnitAssignment> unit_witnesses;

    bool all_zero() const { return zero == total; }
    bool all_scalar() const { return unit_multiple == 0 && !diag_nonscalar_witness.has_value(); }
};

/// Deterministic scan over matrix-unit assignments in lexicographic order
/// on (i1, j1, ..., im, jm). Exhaustive when n^(2m) <= budget; otherwise
/// requires allow_sampling and visits a fixed-stride subset, flagged
/// non-exhaustive. First witness in scan order wins.
inline ScanReport scan_units(const NcPolynomial& p, unsigned n,
                             std::uint64_t budget = 10'000'000, bool allow_sampling = false) {
    if (!p.is_multilinear())
        throw std::invalid_argument("scan_units requires a multilinear polynomial");
    if (n == 0) throw std::invalid_argument("matrix size must be positive");
    if (budget == 0) throw std::invalid_argument("scan budget must be positive");
    const std::size_t m = p.num_vars();

    std::uint64_t total = 1;
    bool overflow = false;
    for (std::size_t d = 0; d < 2 * m; ++d) {
        if (total > UINT64_MAX / n) {
            overflow = true;
            break;
        }
        total *= n;
    }
    std::uint64_t stride = 1;
    bool exhaustive = true;
    if (overflow || total > budget) {
        if (!allow_sampling)
            throw std::invalid_argument("scan budget exceeded; pass allow_sampling for a partial scan");
        exhaustive = false;
        if (overflow) throw std::invalid_argument("scan space too large to enumerate");
        stride = (total + budget - 1) / budget;
    }

    ScanReport report;
    report.exhaustive = exhaustive;
    UnitAssignment a;
    a.n = n;
    a.units.resize(m);
    for (std::uint64_t index = 0; index < total; index += stride) {
        std::uint64_t rem = index;
        for (std::size_t d = 2 * m; d-- > 0;) {
            unsigned digit = static_cast<unsigned>(rem % n);
            rem /= n;
            if (d % 2 == 0)
                a.units[d / 2].row = digit + 1;
            else
                a.units[d / 2].col = digit + 1;
        }
        Matrix<Rational> value = evaluate_on_units(p, a);
        UnitValueClass cls = classify_value(value);
        ++report.total;
        switch (cls.kind) {
            case UnitValueKind::Zero:
                ++report.zero;
                break;
            case UnitValueKind::Diagonal:
                ++report.diagonal;
                if (!cls.is_scalar() && !report.diag_nonscalar_witness) {
                    report.diag_nonscalar_witness = a;
                    report.diag_nonscalar_value = cls.diag;
                }
                break;
            case UnitValueKind::UnitMultiple:
                ++report.unit_multiple;
                report.unit_witnesses.try_emplace({cls.i, cls.j}, a);
                break;
        }
    }
    return report;
}

} // namespace matpoly
