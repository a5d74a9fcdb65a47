#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evalcode/gf.hpp"
#include "evalcode/monomial.hpp"

namespace evalcode {

struct Term {
  Monomial mono;
  Elem coeff;

  bool operator==(const Term&) const noexcept = default;
};

/**
 * Sparse polynomial in K[t_1, ..., t_s] over a finite field.
 *
 * The term list is kept in a canonical order (lexicographically descending
 * exponent vectors) with no zero coefficients, so equality is structural and
 * independent of any monomial order. Order-dependent questions (leading term,
 * division) take the order as an argument.
 */
class Polynomial {
 public:
  Polynomial(FieldPtr field, std::size_t nvars);

  static Polynomial constant(FieldPtr field, std::size_t nvars, Elem value);
  static Polynomial from_monomial(FieldPtr field, const Monomial& mono, Elem coeff = 1);
  static Polynomial variable(FieldPtr field, std::size_t nvars, std::size_t index);
  /// Combines repeated monomials and drops zero coefficients.
  static Polynomial from_terms(FieldPtr field, std::size_t nvars, std::vector<Term> terms);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  bool is_squarefree() const noexcept;
  Elem coefficient(const Monomial& mono) const noexcept;

  /// The order-maximal term; throws std::invalid_argument on the zero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;
  const Monomial& leading_monomial(const MonomialOrder& order) const { return leading_term(order).mono; }
  /// Terms sorted by the order, largest first.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;
  /// Scaled so that the leading coefficient is 1.
  Polynomial monic(const MonomialOrder& order) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(Elem c) const;
  Polynomial times(const Monomial& mono, Elem c = 1) const;
  Polynomial pow(unsigned n) const;

  Elem evaluate(std::span<const Elem> point) const;

  bool operator==(const Polynomial& other) const noexcept;

 private:
  void check_ring(const Polynomial& other) const;

  FieldPtr field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Evaluates with FieldElement coordinates, checking fields and dimension.
FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/**
 * Multivariate division: f = sum q_i g_i + r with no term of r divisible by
 * any in(g_i). Divisors are tried in sequence order and the leading term of
 * the running dividend is always the one reduced.
 */
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order);

}  // namespace evalcode
