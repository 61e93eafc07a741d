#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matpoly {

/// Syntax error in a polynomial or scalar text, with the 0-based offset of
/// the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A matrix-unit evaluation of a multilinear polynomial came out neither
/// zero, nor diagonal, nor a multiple of a single off-diagonal unit.
/// This cannot happen mathematically; it signals a bug in the evaluator.
class LemmaGraphViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A probe reported an outcome that a proved theorem rules out
/// (e.g. a multilinear power-central polynomial on M_n with n >= 4).
/// Signals an implementation bug, never a mathematical event.
class TheoremContradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace matpoly
