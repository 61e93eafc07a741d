#include "matpoly/chi.hpp"
#include "matpoly/powercentral.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace matpoly;

TEST_CASE("power_central_probe: commutator squared on M_2 vs M_3") {
    NcPolynomial comm = builtin("comm");
    ProbeVerdict v2 = power_central_probe(comm, 2, 2);
    CHECK(v2.kind == ProbeKind::ProbablyCentral);
    CHECK(v2.failure_bound == Rational(5, 21).pow(20));

    ProbeVerdict v3 = power_central_probe(comm, 3, 2);
    CHECK(v3.kind == ProbeKind::NotCentral);
    REQUIRE(v3.witness_point.size() == 2);
    // the witness value really is p(point)^2 and really is non-scalar
    Matrix<Rational> check = evaluate(comm, v3.witness_point).pow(2);
    CHECK(check == v3.witness_value);
    CHECK_FALSE(check.is_scalar());

    CHECK(power_central_probe(comm, 3, 3).kind == ProbeKind::NotCentral);
}

TEST_CASE("order_search: comm on M_2 -> 2, c4m on M_2 -> 1") {
    OrderSearchResult comm2 = order_search(builtin("comm"), 2);
    REQUIRE(comm2.nu.has_value());
    CHECK(*comm2.nu == 2);

    OrderSearchResult c4m2 = order_search(builtin("c4m"), 2);
    REQUIRE(c4m2.nu.has_value());
    CHECK(*c4m2.nu == 1);
    CHECK(c4m2.probes.empty()); // decided exactly by the unit scan
}

TEST_CASE("order_search: comm on M_4 -> none, with the documented skip reasons") {
    OrderSearchResult r = order_search(builtin("comm"), 4);
    CHECK_FALSE(r.nu.has_value());
    REQUIRE(r.probes.size() == 7); // nu = 2..8
    for (const auto& e : r.probes) {
        switch (e.nu) {
            case 3:
                CHECK(e.verdict.kind == ProbeKind::Skipped);
                CHECK(e.verdict.skip_reason == SkipReason::gcd_filter);
                break;
            case 4:
                CHECK(e.verdict.kind == ProbeKind::NotCentral);
                break;
            default: // 2, 5, 6, 7, 8
                CHECK(e.verdict.kind == ProbeKind::Skipped);
                CHECK(e.verdict.skip_reason == SkipReason::thmC_filter);
                break;
        }
    }
}

TEST_CASE("order_search rejects PI input") {
    CHECK_THROWS_AS(order_search(builtin("s4"), 2), std::invalid_argument);
}

TEST_CASE("minimality: every probed proper divisor of the result was NotCentral") {
    OrderSearchResult r = order_search(builtin("comm"), 2, 8, 20, 0, 10, /*use_filters=*/false);
    REQUIRE(r.nu.has_value());
    unsigned nu = *r.nu;
    CHECK(nu == 2);
    for (const auto& e : r.probes)
        if (e.nu < nu && nu % e.nu == 0)
            CHECK(e.verdict.kind == ProbeKind::NotCentral);
}

TEST_CASE("filter soundness: disabling filters never finds an order the filters missed") {
    NcPolynomial comm = builtin("comm");
    for (unsigned n : {2u, 3u, 4u}) {
        auto run = [&](bool filters) {
            try {
                return order_search(comm, n, 8, 20, 0, 10, filters).nu;
            } catch (const TheoremContradiction&) {
                return std::optional<unsigned>{};
            }
        };
        CHECK(run(true) == run(false));
    }
}

TEST_CASE("anticommutation: the worked unit example on M_2") {
    // w = comm(e11, e12) = e12, w' = comm(e21, e12) = e22 - e11,
    // and w w' + w' w = 0.
    NcPolynomial comm = builtin("comm");
    Matrix<Rational> e11(2, 2), e12(2, 2), e21(2, 2);
    e11(0, 0) = Rational(1);
    e12(0, 1) = Rational(1);
    e21(1, 0) = Rational(1);
    Matrix<Rational> w = evaluate(comm, {e11, e12});
    Matrix<Rational> w2 = evaluate(comm, {e21, e12});
    CHECK(w == e12);
    Matrix<Rational> expect(2, 2);
    expect(0, 0) = Rational(-1);
    expect(1, 1) = Rational(1);
    CHECK(w2 == expect);
    CHECK((w * w2 + w2 * w).is_zero());
}

TEST_CASE("anticommutation_check: scalar on M_2, witness on M_3") {
    NcPolynomial comm = builtin("comm");
    AnticommutationResult m2 = anticommutation_check(comm, 2, 100, 0);
    CHECK(m2.all_scalar);

    AnticommutationResult m3 = anticommutation_check(comm, 3, 100, 0);
    CHECK_FALSE(m3.all_scalar);
    REQUIRE(m3.witness_point.size() == 2);
    // reproduce the witness
    Matrix<Rational> w = evaluate(comm, m3.witness_point);
    std::vector<Matrix<Rational>> alt = m3.witness_point;
    alt[0] = m3.witness_alternate;
    Matrix<Rational> w2 = evaluate(comm, alt);
    CHECK(w * w2 + w2 * w == m3.witness_value);
    CHECK_FALSE(m3.witness_value.is_scalar());
}

TEST_CASE("anticommutation_check requires linearity in x1") {
    CHECK_THROWS_AS(anticommutation_check(NcPolynomial::parse("x1*x1", 1), 2, 10, 0),
                    std::invalid_argument);
}

TEST_CASE("find_noncommuting_slot: witnesses for x1 and comm, none for c4m on M_2") {
    NcPolynomial x1(1);
    x1.add_term({1}, Rational(1));
    auto w1 = find_noncommuting_slot(x1, 2, 200, 0);
    REQUIRE(w1.has_value());
    CHECK(w1->slot == 1);
    {
        Matrix<Rational> v = evaluate(x1, w1->point);
        std::vector<Matrix<Rational>> alt = w1->point;
        alt[w1->slot - 1] = w1->alternate;
        Matrix<Rational> v2 = evaluate(x1, alt);
        CHECK_FALSE(v * v2 == v2 * v);
    }

    auto w2 = find_noncommuting_slot(builtin("comm"), 2, 200, 0);
    CHECK(w2.has_value());

    // every value of c4m on M_2 is scalar; scalars always commute
    auto w3 = find_noncommuting_slot(builtin("c4m"), 2, 60, 0);
    CHECK_FALSE(w3.has_value());
}

TEST_CASE("tau-argument: original and index-swapped f cannot both be 1-dimensional") {
    NcPolynomial c4m = builtin("c4m");
    UnitAssignment base{{{1, 2}, {2, 1}, {1, 3}, {3, 1}}, 4};
    UnitValueClass cls = classify_value(evaluate_on_units(c4m, base));
    REQUIRE(cls.kind == UnitValueKind::Diagonal);
    REQUIRE_FALSE(cls.is_scalar());
    UnitAssignment swapped = conjugate_by_swap(base, 1, 2);
    std::size_t d0 = f_differential_rank(c4m, base, 4, 0);
    std::size_t d1 = f_differential_rank(c4m, swapped, 4, 0);
    CHECK(std::max(d0, d1) >= 2);
}
