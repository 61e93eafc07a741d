#pragma once

/// JSON serialization of reports and exact values. Scalars serialize as
/// their text forms ("p/q", "1/2 - 1/2*e") so output is exact and
/// byte-stable; nlohmann::json orders keys, so identical inputs give
/// identical bytes.

#include "matpoly/chi.hpp"
#include "matpoly/harmonic.hpp"
#include "matpoly/imagedim.hpp"
#include "matpoly/matunits.hpp"
#include "matpoly/powercentral.hpp"
#include "matpoly/quaternion.hpp"

#include <json.hpp>

namespace matpoly {

using nlohmann::json;

inline void to_json(json& j, const Rational& r) { j = r.str(); }
inline void to_json(json& j, const Cyclotomic& c) { j = c.str(); }
inline void to_json(json& j, const Quaternion& q) { j = q.str(); }

template <typename S>
void to_json(json& j, const Matrix<S>& m) {
    j = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
        j.push_back(std::move(row));
    }
}

inline void to_json(json& j, const MatrixUnit& u) { j = json::array({u.row, u.col}); }

inline void to_json(json& j, const UnitAssignment& a) {
    j = json::array();
    for (const auto& u : a.units) j.push_back(u);
}

inline void to_json(json& j, const QuatMatrix2& m) {
    j = json::array({json::array({m.at(0, 0), m.at(0, 1)}),
                     json::array({m.at(1, 0), m.at(1, 1)})});
}

inline void to_json(json& j, const ScanReport& r) {
    j = json{{"total", r.total},
             {"zero", r.zero},
             {"diagonal", r.diagonal},
             {"unit_multiple", r.unit_multiple},
             {"exhaustive", r.exhaustive}};
    if (r.diag_nonscalar_witness) {
        j["diag_nonscalar_witness"] = json{{"units", *r.diag_nonscalar_witness},
                                           {"value", r.diag_nonscalar_value}};
    } else {
        j["diag_nonscalar_witness"] = nullptr;
    }
}

inline void to_json(json& j, const ImageReport& r) {
    j = json{{"classification", to_string(r.classification)},
             {"dim_lower_bound", r.dim_lower_bound},
             {"exhaustive", r.exhaustive}};
    if (r.diag_nonscalar_witness) {
        j["diag_nonscalar_witness"] = json{{"units", *r.diag_nonscalar_witness},
                                           {"value", r.diag_nonscalar_value}};
    } else {
        j["diag_nonscalar_witness"] = nullptr;
    }
    if (r.pattern_n4)
        j["pattern_n4"] = *r.pattern_n4;
    else
        j["pattern_n4"] = nullptr;
}

inline void to_json(json& j, const ProbeVerdict& v) {
    switch (v.kind) {
        case ProbeKind::ProbablyCentral:
            j = json{{"kind", "probably_central"},
                     {"trials", v.trials},
                     {"failure_bound", v.failure_bound}};
            break;
        case ProbeKind::NotCentral:
            j = json{{"kind", "not_central"},
                     {"trials", v.trials},
                     {"witness_point", v.witness_point},
                     {"witness_value", v.witness_value}};
            break;
        case ProbeKind::Skipped:
            j = json{{"kind", "skipped"},
                     {"reason", v.skip_reason == SkipReason::gcd_filter ? "gcd_filter" : "thmC_filter"}};
            break;
    }
}

inline void to_json(json& j, const OrderSearchResult& r) {
    j = json::object();
    if (r.nu)
        j["nu"] = *r.nu;
    else
        j["nu"] = nullptr;
    json probes = json::array();
    for (const auto& e : r.probes) {
        json entry;
        to_json(entry, e.verdict);
        entry["nu"] = e.nu;
        probes.push_back(std::move(entry));
    }
    j["probes"] = std::move(probes);
}

inline void to_json(json& j, const DftResult& r) {
    j = json{{"coefficients", r.coeffs}, {"support", r.support}};
}

} // namespace matpoly
