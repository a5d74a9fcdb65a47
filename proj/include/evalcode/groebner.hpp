#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evalcode/monomial.hpp"
#include "evalcode/polynomial.hpp"

namespace evalcode {

/// Standard monomials of a zero-dimensional ideal, ascending in the ideal's order.
struct Footprint {
  std::vector<Monomial> monomials;
  /// per_degree[d] = number of standard monomials of total degree d.
  std::vector<std::size_t> per_degree;

  std::size_t size() const noexcept { return monomials.size(); }
  /// Number of standard monomials of degree at most d.
  std::size_t count_up_to(int d) const noexcept;
  /// Largest degree of a standard monomial (-1 when empty).
  int max_degree() const noexcept { return static_cast<int>(per_degree.size()) - 1; }
};

/**
 * Reduced Gröbner basis: monic generators sorted ascending by leading
 * monomial. The zero ideal has no generators; the unit ideal is {1}.
 */
class GroebnerBasis {
 public:
  /// Wraps generators that already form a reduced Gröbner basis (not checked).
  GroebnerBasis(FieldPtr field, std::size_t nvars, MonomialOrder order, std::vector<Polynomial> reduced);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::span<const Polynomial> generators() const noexcept { return gens_; }
  std::span<const Monomial> initial_gens() const noexcept { return leads_; }

  bool is_zero_ideal() const noexcept { return gens_.empty(); }
  bool is_unit_ideal() const noexcept { return unit_; }
  /// Every variable has a pure power among the initial generators.
  bool is_zero_dimensional() const noexcept { return zero_dim_; }

  /// True iff no initial generator divides m.
  bool is_standard(const Monomial& m) const noexcept;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

 private:
  FieldPtr field_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<Monomial> leads_;
  std::vector<std::vector<Term>> ascending_;
  bool unit_ = false;
  bool zero_dim_ = false;
};

/// Reduced Gröbner basis of the ideal generated by `gens` (zero polynomials ignored).
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order);
GroebnerBasis buchberger(std::span<const Polynomial> gens, const FieldPtr& field, std::size_t nvars,
                         const MonomialOrder& order);

/// Buchberger's criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Throws std::invalid_argument for ideals that are not zero-dimensional.
Footprint standard_monomials(const GroebnerBasis& gb);
std::size_t affine_hilbert_function(const GroebnerBasis& gb, int d);
std::size_t degree_zero_dim(const GroebnerBasis& gb);
/// Least d with H(d) = degree.
int regularity_index(const GroebnerBasis& gb);

/**
 * Number of monomials divisible by none of the generators of the monomial
 * ideal (initial_gens, extra), counted over the box bounded by the pure powers.
 */
std::size_t monomial_ideal_degree(std::span<const Monomial> initial_gens, std::span<const Monomial> extra,
                                  std::size_t s);

/// d_1...d_s - (d_1-a_1)...(d_s-a_s); requires a_i < d_i.
std::uint64_t box_degree(std::span<const unsigned> d, std::span<const unsigned> a);

}  // namespace evalcode
