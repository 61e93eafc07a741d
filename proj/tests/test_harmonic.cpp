#include "matpoly/harmonic.hpp"
#include "matpoly/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace matpoly;

namespace {

Cyclotomic eps(unsigned n, long long k) { return Cyclotomic::root_of_unity(n).pow(k); }

// Independent coefficient oracle: h_s = (1/n) Σ_j d_j ε^{-js}, written as
// a bare sum (no pairing(), no harmonic_vector()).
Cyclotomic dft_oracle(const DiagonalVector& d, unsigned s) {
    unsigned n = static_cast<unsigned>(d.size());
    Cyclotomic acc;
    for (unsigned j = 0; j < n; ++j)
        acc += d[j] * eps(n, -static_cast<long long>(j) * s);
    return acc * Cyclotomic(Rational(1, n));
}

} // namespace

TEST_CASE("harmonic vectors: e, q, r") {
    Cyclotomic i = Cyclotomic::root_of_unity(4);
    Cyclotomic one(Rational(1));
    DiagonalVector e1 = harmonic_vector(4, {1, HarmonicVariant::e});
    CHECK(e1 == DiagonalVector{one, i, -one, -i});
    DiagonalVector q1 = harmonic_vector(4, {1, HarmonicVariant::q});
    CHECK(q1 == DiagonalVector{i, one, -one, -i});
    DiagonalVector r1 = harmonic_vector(5, {1, HarmonicVariant::r});
    CHECK(r1 == DiagonalVector{eps(5, 2), eps(5, 1), one, eps(5, 3), eps(5, 4)});
    CHECK_THROWS_AS(harmonic_vector(4, {1, HarmonicVariant::r}), std::invalid_argument);
}

TEST_CASE("pairing: examples on M_4") {
    auto e = [&](unsigned k) { return harmonic_vector(4, {k, HarmonicVariant::e}); };
    auto q = [&](unsigned k) { return harmonic_vector(4, {k, HarmonicVariant::q}); };
    CHECK(pairing(e(1), e(1)) == Cyclotomic(Rational(4)));
    CHECK(pairing(e(1), e(2)).is_zero());
    // <q1, e2> = (i - 1)(1 - i^{-2}) = -2 + 2i
    Cyclotomic i = Cyclotomic::root_of_unity(4);
    CHECK(pairing(q(1), e(2)) == Cyclotomic(Rational(-2)) + Cyclotomic(Rational(2)) * i);
}

TEST_CASE("orthogonality: <e_k, e_s> = n delta_ks") {
    for (unsigned n : {3u, 4u, 5u, 6u, 7u})
        for (unsigned k = 0; k < n; ++k)
            for (unsigned s = 0; s < n; ++s) {
                Cyclotomic v = pairing(harmonic_vector(n, {k, HarmonicVariant::e}),
                                       harmonic_vector(n, {s, HarmonicVariant::e}));
                CHECK(v == (k == s ? Cyclotomic(Rational(n)) : Cyclotomic()));
            }
}

TEST_CASE("swapped-basis pairing identity with diagonal correction") {
    Cyclotomic one(Rational(1));
    for (unsigned n : {4u, 5u, 7u})
        for (unsigned k = 0; k < n; ++k)
            for (unsigned s = 0; s < n; ++s) {
                Cyclotomic lhs = pairing(harmonic_vector(n, {k, HarmonicVariant::q}),
                                         harmonic_vector(n, {s, HarmonicVariant::e}));
                Cyclotomic rhs = (eps(n, k) - one) * (one - eps(n, -(long long)s));
                if (k == s) rhs += Cyclotomic(Rational(n));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("r-basis pairing identity for n = 5, k != s") {
    Cyclotomic one(Rational(1));
    unsigned n = 5;
    for (unsigned k = 0; k < n; ++k)
        for (unsigned s = 0; s < n; ++s) {
            if (k == s) continue;
            Cyclotomic lhs = pairing(harmonic_vector(n, {k, HarmonicVariant::r}),
                                     harmonic_vector(n, {s, HarmonicVariant::e}));
            CHECK(lhs == (eps(n, 2 * k) - one) * (one - eps(n, -2 * (long long)s)));
        }
}

TEST_CASE("dft_decompose: examples") {
    Cyclotomic c(Rational(3, 2));
    DftResult constant = dft_decompose({c, c, c, c});
    CHECK(constant.support == std::vector<unsigned>{0});
    CHECK(constant.coeffs[0] == c);

    DftResult pure = dft_decompose(harmonic_vector(4, {1, HarmonicVariant::e}));
    CHECK(pure.support == std::vector<unsigned>{1});
    CHECK(pure.coeffs[1] == Cyclotomic(Rational(1)));

    // (c, c, -c, -c): support {1, 3}, h1 = c(1-i)/2, h3 = c(1+i)/2
    DiagonalVector d{c, c, -c, -c};
    DftResult r = dft_decompose(d);
    CHECK(r.support == std::vector<unsigned>{1, 3});
    Cyclotomic i = Cyclotomic::root_of_unity(4);
    Cyclotomic half(Rational(1, 2));
    CHECK(r.coeffs[1] == c * (Cyclotomic(Rational(1)) - i) * half);
    CHECK(r.coeffs[3] == c * (Cyclotomic(Rational(1)) + i) * half);
    for (unsigned s = 0; s < 4; ++s) CHECK(r.coeffs[s] == dft_oracle(d, s));
}

TEST_CASE("dft reconstruction is exact on random rational diagonals") {
    Rng rng(derive_seed(19, "dft"));
    for (unsigned n : {4u, 5u}) {
        for (int trial = 0; trial < 100; ++trial) {
            DiagonalVector d;
            for (unsigned j = 0; j < n; ++j)
                d.push_back(Cyclotomic(Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 4))));
            DftResult r = dft_decompose(d);
            for (unsigned s = 0; s < n; ++s) CHECK(r.coeffs[s] == dft_oracle(d, s));
            DiagonalVector back(n, Cyclotomic());
            for (unsigned s = 0; s < n; ++s) {
                DiagonalVector es = harmonic_vector(n, {s, HarmonicVariant::e});
                for (unsigned j = 0; j < n; ++j) back[j] += r.coeffs[s] * es[j];
            }
            CHECK(back == d);
        }
    }
}

TEST_CASE("expand_in_e_basis: the three displayed n = 4 expansions") {
    unsigned n = 4;
    Cyclotomic i = Cyclotomic::root_of_unity(n);
    Cyclotomic one(Rational(1)), half(Rational(1, 2));
    Rng rng(derive_seed(19, "expand"));
    for (int trial = 0; trial < 10; ++trial) {
        Cyclotomic alpha(Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 4)));
        Cyclotomic beta(Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 4)));

        DftResult r = expand_in_e_basis({{alpha, {1, HarmonicVariant::q}},
                                         {beta, {2, HarmonicVariant::q}}},
                                        n);
        CHECK(r.coeffs[0].is_zero());
        CHECK(r.coeffs[1] == half * alpha - half * (one + i) * beta);
        CHECK(r.coeffs[2] == half * (i - one) * alpha);
        CHECK(r.coeffs[3] == half * i * alpha + half * (i - one) * beta);
    }

    // diag(x, -x, y, -y) = (x-y)(1+i)/4 e1 + (x+y)/2 e2 + (x-y)(1-i)/4 e3
    for (int trial = 0; trial < 10; ++trial) {
        Cyclotomic x(Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 4)));
        Cyclotomic y(Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 4)));
        DftResult r = dft_decompose({x, -x, y, -y});
        Cyclotomic quarter(Rational(1, 4));
        CHECK(r.coeffs[0].is_zero());
        CHECK(r.coeffs[1] == (x - y) * (one + i) * quarter);
        CHECK(r.coeffs[2] == (x + y) * half);
        CHECK(r.coeffs[3] == (x - y) * (one - i) * quarter);
    }

    // alpha e1 alone
    Cyclotomic alpha(Rational(5, 3));
    DftResult r = expand_in_e_basis({{alpha, {1, HarmonicVariant::e}}}, n);
    CHECK(r.support == std::vector<unsigned>{1});
    CHECK(r.coeffs[1] == alpha);
}

TEST_CASE("spectrum_pattern_even: examples") {
    auto diag4 = [](long long a, long long b, long long c, long long d) {
        Matrix<Rational> m(4, 4);
        m(0, 0) = Rational(a);
        m(1, 1) = Rational(b);
        m(2, 2) = Rational(c);
        m(3, 3) = Rational(d);
        return m;
    };
    Matrix<Rational> m = diag4(1, 2, -1, -2);
    CHECK(spectrum_pattern_even(m));
    CHECK(char_poly(m) == std::vector<Rational>{Rational(4), Rational(0), Rational(-5), Rational(0), Rational(1)});
    CHECK_FALSE(spectrum_pattern_even(diag4(1, 1, 1, -1)));
    CHECK_FALSE(spectrum_pattern_even(diag4(2, 0, 0, 0)));
    CHECK_THROWS_AS(spectrum_pattern_even(Matrix<Rational>::identity(3)), std::invalid_argument);
}

TEST_CASE("spectrum_pattern_even cross-check on random diagonals") {
    Rng rng(derive_seed(19, "pattern"));
    // paired spectra in any position order -> true
    for (int trial = 0; trial < 200; ++trial) {
        Rational l1(rng.uniform_int(-9, 9)), l2(rng.uniform_int(-9, 9));
        std::vector<Rational> entries{l1, l2, -l1, -l2};
        for (int s = 0; s < 8; ++s)
            std::swap(entries[static_cast<std::size_t>(rng.uniform_int(0, 3))],
                      entries[static_cast<std::size_t>(rng.uniform_int(0, 3))]);
        Matrix<Rational> m(4, 4);
        for (std::size_t k = 0; k < 4; ++k) m(k, k) = entries[k];
        CHECK(spectrum_pattern_even(m));
        // and the DFT side: no e_0 component (the trace vanishes)
        DiagonalVector d(entries.begin(), entries.end());
        CHECK(dft_decompose(d).coeffs[0].is_zero());
    }
    // generic spectra (odd elementary symmetric functions nonzero) -> false
    int done = 0;
    while (done < 200) {
        std::vector<Rational> e;
        for (int k = 0; k < 4; ++k) e.push_back(Rational(rng.uniform_int(-9, 9)));
        Rational e1 = e[0] + e[1] + e[2] + e[3];
        Rational e3 = e[0] * e[1] * e[2] + e[0] * e[1] * e[3] + e[0] * e[2] * e[3] + e[1] * e[2] * e[3];
        if (e1.is_zero() && e3.is_zero()) continue; // accidentally paired
        Matrix<Rational> m(4, 4);
        for (std::size_t k = 0; k < 4; ++k) m(k, k) = e[k];
        CHECK_FALSE(spectrum_pattern_even(m));
        ++done;
    }
}

TEST_CASE("diag_is_double_plus_minus") {
    CHECK(diag_is_double_plus_minus({Rational(3), Rational(-3), Rational(3), Rational(-3)}));
    CHECK(diag_is_double_plus_minus({Rational(0), Rational(0), Rational(0), Rational(0)}));
    CHECK_FALSE(diag_is_double_plus_minus({Rational(2), Rational(0), Rational(0), Rational(0)}));
    CHECK_FALSE(diag_is_double_plus_minus({Rational(1), Rational(2), Rational(-1), Rational(-2)}));
}
