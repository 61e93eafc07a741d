#pragma once

/// Glue between the exact scalar types and generic linear algebra:
/// zero/one constants and the canonical embedding of Q.

#include "matpoly/cyclotomic.hpp"
#include "matpoly/rational.hpp"

namespace matpoly {

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct scalar_traits<Cyclotomic> {
    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return Cyclotomic(Rational(1)); }
    static Cyclotomic from_rational(const Rational& r) { return Cyclotomic(r); }
};

} // namespace matpoly
