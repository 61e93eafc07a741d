#include "matpoly/chi.hpp"
#include "matpoly/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace matpoly;

TEST_CASE("chi_shift: examples and wraparound") {
    CHECK(chi_shift({1, 2}, 1, 8) == MatrixUnit{2, 3});
    CHECK(chi_shift({5, 7}, 1, 8) == MatrixUnit{6, 8});
    CHECK(chi_shift({3, 1}, 1, 3) == MatrixUnit{1, 2});
    CHECK(chi_shift({2, 3}, -1, 3) == MatrixUnit{1, 2});
    // chi^n is the identity
    for (unsigned n = 2; n <= 8; ++n)
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j)
                CHECK(chi_shift({i, j}, n, n) == MatrixUnit{i, j});
}

TEST_CASE("build_f: closed form for comm on M_2 at (e12, e21)") {
    NcPolynomial comm = builtin("comm");
    UnitAssignment base{{{1, 2}, {2, 1}}, 2};
    Rng rng(derive_seed(17, "buildf"));
    for (int trial = 0; trial < 20; ++trial) {
        TParameters<Rational> t = random_integer_tparams(rng, 2, 2, 10);
        Matrix<Rational> f = build_f(comm, base, t);
        // f = (t_{0,1} t_{0,2} - t_{1,1} t_{1,2}) diag(1, -1)
        Rational c = t.at(0, 0) * t.at(0, 1) - t.at(1, 0) * t.at(1, 1);
        Matrix<Rational> expect(2, 2);
        expect(0, 0) = c;
        expect(1, 1) = -c;
        CHECK(f == expect);
    }
}

TEST_CASE("build_f: zero parameters give the zero matrix") {
    NcPolynomial comm = builtin("comm");
    UnitAssignment base{{{1, 2}, {2, 1}}, 3};
    CHECK(build_f(comm, base, TParameters<Rational>(3, 2)).is_zero());
}

TEST_CASE("build_f: displacement-1 bases land on the cycle support") {
    NcPolynomial comm = builtin("comm");
    Rng rng(derive_seed(17, "support"));
    for (unsigned n : {3u, 4u, 5u}) {
        // iota_sum = 2 + (-1) = 1
        UnitAssignment base{{{1, 3}, {2, 1}}, n};
        REQUIRE(iota_sum(base) == 1);
        for (int trial = 0; trial < 50; ++trial) {
            TParameters<Rational> t = random_integer_tparams(rng, n, 2, 10);
            Matrix<Rational> f = build_f(comm, base, t);
            auto support = cycle_support(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    bool on_cycle = false;
                    for (auto [r, s] : support)
                        if (r == i && s == j) on_cycle = true;
                    if (!on_cycle) CHECK(f(i, j).is_zero());
                }
        }
    }
}

TEST_CASE("build_f: diagonal bases stay diagonal for all t") {
    Rng rng(derive_seed(17, "diag"));
    NcPolynomial comm = builtin("comm");
    UnitAssignment base{{{1, 2}, {2, 1}}, 4};
    NcPolynomial c4m = builtin("c4m");
    UnitAssignment base4{{{1, 2}, {2, 1}, {1, 3}, {3, 1}}, 4};
    for (int trial = 0; trial < 50; ++trial) {
        CHECK(build_f(comm, base, random_integer_tparams(rng, 4, 2, 10)).is_diagonal());
        CHECK(build_f(c4m, base4, random_integer_tparams(rng, 4, 4, 10)).is_diagonal());
    }
}

TEST_CASE("verify_cyclic_spectrum: weighted 3-cycle, identity, zero") {
    Matrix<Rational> cyc(3, 3);
    cyc(0, 1) = Rational(2);
    cyc(1, 2) = Rational(-3);
    cyc(2, 0) = Rational(5);
    SpectrumCheck<Rational> sc = verify_cyclic_spectrum(cyc);
    CHECK(sc.holds);
    CHECK(sc.alpha == Rational(-30)); // t1 t2 t3

    CHECK_FALSE(verify_cyclic_spectrum(Matrix<Rational>::identity(3)).holds);

    SpectrumCheck<Rational> z = verify_cyclic_spectrum(Matrix<Rational>(3, 3));
    CHECK(z.holds);
    CHECK(z.alpha.is_zero());
}

TEST_CASE("cyclic spectrum holds for build_f at generic t") {
    NcPolynomial comm = builtin("comm");
    Rng rng(derive_seed(17, "spectrum-trials"));
    for (unsigned n : {3u, 4u, 5u, 6u}) {
        UnitAssignment base{{{1, 2}, {2, 2}}, n};
        unsigned valid = 0;
        for (int trial = 0; trial < 20; ++trial) {
            TParameters<Rational> t = random_integer_tparams(rng, n, 2, 10);
            Matrix<Rational> f = build_f(comm, base, t);
            bool starred = true;
            Rational prod(1);
            for (auto [i, j] : cycle_support(n)) {
                if (f(i, j).is_zero()) starred = false;
                prod *= f(i, j);
            }
            if (!starred) continue;
            ++valid;
            SpectrumCheck<Rational> sc = verify_cyclic_spectrum(f);
            CHECK(sc.holds);
            CHECK(sc.alpha == prod);
        }
        CHECK(valid > 0);
    }
}

TEST_CASE("f_differential_rank: examples") {
    NcPolynomial comm = builtin("comm");
    UnitAssignment base{{{1, 2}, {2, 1}}, 2};
    CHECK(f_differential_rank(comm, base, 4, 0) == 1);

    NcPolynomial zero(2);
    CHECK(f_differential_rank(zero, base, 2, 0) == 0);

    NcPolynomial c4m = builtin("c4m");
    UnitAssignment base4{{{1, 2}, {2, 1}, {1, 3}, {3, 1}}, 4};
    CHECK(f_differential_rank(c4m, base4, 4, 0) >= 2);
}

TEST_CASE("f_differential_rank rejects unit-multiple bases") {
    NcPolynomial comm = builtin("comm");
    UnitAssignment base{{{1, 1}, {1, 2}}, 2}; // value e12
    CHECK_THROWS_AS(f_differential_rank(comm, base, 1, 0), std::invalid_argument);
}
