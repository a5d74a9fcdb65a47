#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "evalcode/gf.hpp"
#include "evalcode/monomial.hpp"
#include "evalcode/polynomial.hpp"

namespace evalcode {

/// t1, ..., ts.
std::vector<std::string> default_variable_names(std::size_t s);

/// Where a piece of text came from, for error positions.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/**
 * Field element literal: sums and products of decimal integers (reduced mod p),
 * the generator `a`, powers `a^n` and parenthesised sub-expressions, with an
 * optional leading sign. Throws ParseError with the position of the offending
 * character.
 */
Elem parse_element(std::string_view text, const FiniteField& field, SourcePos origin = {});

/// Integers 0..p-1 for prime fields; a polynomial in `a` such as "2*a^2+a+1" otherwise.
std::string format_element(const FiniteField& field, Elem x);

/**
 * Polynomial in the named variables (default t1..ts). Juxtaposition multiplies,
 * so "2t1t2^2" and "2*t1*t2^2" are the same polynomial. The symbol `a` is the
 * field generator and cannot be a variable name in an extension field.
 */
Polynomial parse_polynomial(std::string_view text, const FieldPtr& field, std::size_t nvars,
                            const std::vector<std::string>& names = {}, SourcePos origin = {});

/// Splits on ';' and parses each non-blank piece.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const FieldPtr& field, std::size_t nvars,
                                              const std::vector<std::string>& names = {});

/// Terms largest first under `order`. Prime-field coefficients above p/2 print as negatives.
std::string format_polynomial(const Polynomial& f, const MonomialOrder& order = {},
                              const std::vector<std::string>& names = {});

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names = {});

/// F_q from its order and an optional modulus polynomial in `a` (e.g. "a^2+a+1").
/// Throws Error when q is not a prime power or the modulus does not fit.
FieldPtr make_field(std::uint64_t q, std::string_view modulus = {});

}  // namespace evalcode
