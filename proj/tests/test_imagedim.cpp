#include "matpoly/imagedim.hpp"
#include "matpoly/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace matpoly;

namespace {

// Test-local oracle for the fixed-spectrum variety dimension: the rank of
// the linearized conjugation map g ↦ g d g^{-1} at a random invertible g,
// for d diagonal with distinct entries. Expected n^2 - n.
std::size_t conjugation_orbit_rank(unsigned n, Rng& rng) {
    Matrix<Rational> g = random_invertible_matrix(rng, n, 5);
    Matrix<Rational> gi = inverse(g);
    Matrix<Rational> d(n, n);
    for (unsigned i = 0; i < n; ++i) d(i, i) = Rational(static_cast<long long>(i) + 1);
    Matrix<Rational> jac(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(n) * n);
    std::size_t col = 0;
    for (unsigned r = 0; r < n; ++r)
        for (unsigned s = 0; s < n; ++s, ++col) {
            Matrix<Rational> h(n, n);
            h(r, s) = Rational(1);
            Matrix<Rational> deriv = h * d * gi - g * d * gi * h * gi;
            std::vector<Rational> column = vec(deriv);
            for (std::size_t row = 0; row < column.size(); ++row) jac(row, col) = column[row];
        }
    return rank(jac);
}

} // namespace

TEST_CASE("differential_rank: examples") {
    NcPolynomial comm = builtin("comm");
    Rng rng(derive_seed(23, "diffrank"));
    Matrix<Rational> a1 = random_integer_matrix(rng, 2, 10);
    Matrix<Rational> a2 = random_integer_matrix(rng, 2, 10);
    CHECK(differential_rank(comm, {a1, a2}) == 3); // dim sl_2

    // Degenerate point: slot 1 at the identity collapses the differential
    // to h ↦ [h, a2].
    CHECK(differential_rank(comm, {Matrix<Rational>::identity(2), a2}) == 2);

    NcPolynomial zero(2);
    CHECK(differential_rank(zero, {a1, a2}) == 0);
}

TEST_CASE("classify_image: catalog examples") {
    ImageReport comm2 = classify_image(builtin("comm"), 2);
    CHECK(comm2.classification == ImageClass::NonCentral);
    CHECK(comm2.dim_lower_bound == 3);
    CHECK(comm2.exhaustive);

    ImageReport s42 = classify_image(builtin("s4"), 2);
    CHECK(s42.classification == ImageClass::PI);
    CHECK(s42.dim_lower_bound == 0);

    ImageReport c4m2 = classify_image(builtin("c4m"), 2);
    CHECK(c4m2.classification == ImageClass::Central);
    CHECK(c4m2.dim_lower_bound == 1);
}

TEST_CASE("classify_image soundness: random values never contradict the verdict") {
    Rng gen(derive_seed(23, "soundness"));
    for (unsigned n : {2u, 3u}) {
        for (int sample = 0; sample < 20; ++sample) {
            NcPolynomial p = random_multilinear(gen, 3, 2);
            if (p.is_zero()) {
                --sample;
                continue;
            }
            ImageReport rep = classify_image(p, n, 2, derive_seed(23, sample));
            bool saw_nonscalar = false;
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<Matrix<Rational>> point;
                for (std::size_t l = 0; l < 3; ++l) point.push_back(random_integer_matrix(gen, n, 5));
                Matrix<Rational> value = evaluate(p, point);
                if (rep.classification == ImageClass::PI) CHECK(value.is_zero());
                if (rep.classification == ImageClass::Central) CHECK(value.is_scalar());
                if (!value.is_scalar()) saw_nonscalar = true;
            }
            if (rep.classification == ImageClass::NonCentral) CHECK(saw_nonscalar);
        }
    }
}

TEST_CASE("theorem bounds are met at the catalog points (no warnings)") {
    ImageReport comm4 = classify_image(builtin("comm"), 4);
    CHECK(comm4.dim_lower_bound >= 14);
    CHECK(comm4.warnings.empty());

    ImageReport comm5 = classify_image(builtin("comm"), 5);
    CHECK(comm5.dim_lower_bound >= 23);
    CHECK(comm5.warnings.empty());
}

TEST_CASE("n=4 pattern bookkeeping") {
    ImageReport c4m4 = classify_image(builtin("c4m"), 4);
    REQUIRE(c4m4.diag_nonscalar_witness.has_value());
    CHECK_FALSE(diag_is_double_plus_minus(c4m4.diag_nonscalar_value));
    CHECK(c4m4.dim_lower_bound >= 15); // pattern contrapositive
    CHECK(c4m4.warnings.empty());
    REQUIRE(c4m4.pattern_n4.has_value());

    ImageReport comm4 = classify_image(builtin("comm"), 4);
    REQUIRE(comm4.pattern_n4.has_value());
}

TEST_CASE("fixed-spectrum variety has dimension n^2 - n") {
    Rng rng(derive_seed(23, "orbit"));
    for (unsigned n : {3u, 4u, 5u})
        CHECK(conjugation_orbit_rank(n, rng) == static_cast<std::size_t>(n) * n - n);
}

TEST_CASE("sampling shortfall is reported, never silent") {
    // box = 0 makes every sampled point the zero tuple, so the sampled
    // rank cannot reach the proved bounds and the report must say so.
    ImageReport r = classify_image(builtin("comm"), 4, 2, 0, /*box=*/0);
    CHECK(r.classification == ImageClass::NonCentral);
    CHECK(r.dim_lower_bound == 0);
    bool below = false, pattern = false;
    for (const auto& w : r.warnings) {
        if (w == "below-theorem-bound") below = true;
        if (w == "n4-pattern-bound-not-reached") pattern = true;
    }
    CHECK(below);
    CHECK(pattern); // diag(1,-1,0,0) is a unit value off the paired pattern
}

TEST_CASE("classify_image validates input") {
    CHECK_THROWS_AS(classify_image(NcPolynomial::parse("x1*x1", 1), 2), std::invalid_argument);
}
