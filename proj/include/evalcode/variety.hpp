#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evalcode/groebner.hpp"
#include "evalcode/polynomial.hpp"

namespace evalcode {

/// Default cap on enumerated points or scanned candidates.
inline constexpr std::size_t kDefaultPointCap = 1'000'000;

/**
 * Ordered list of distinct points of A^s over F_q. Code coordinates follow
 * the point order. Projective sets hold normalized representatives whose
 * first nonzero coordinate is 1.
 */
class PointSet {
 public:
  PointSet(FieldPtr field, std::size_t s, bool projective = false);
  /// Checks dimensions, field codes, distinctness and (if projective) normalization.
  PointSet(FieldPtr field, std::size_t s, std::vector<std::vector<Elem>> points, bool projective = false);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return s_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return size() == 0; }
  bool is_projective() const noexcept { return projective_; }
  std::span<const Elem> operator[](std::size_t i) const noexcept { return {coords_.data() + i * s_, s_}; }
  /// Row-major coordinates, size() * dimension() entries.
  std::span<const Elem> coordinates() const noexcept { return coords_; }
  /// Variable names carried over from a point file (empty means t1..ts).
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  void set_variable_names(std::vector<std::string> names);

  /// Appends without the distinctness check; used by enumerators that already guarantee it.
  void push_unchecked(std::span<const Elem> p);

 private:
  FieldPtr field_;
  std::size_t s_;
  bool projective_;
  std::size_t count_ = 0;
  std::vector<Elem> coords_;
  std::vector<std::string> names_;
};

/// (F_q^*)^s in element enumeration order (last coordinate fastest).
PointSet torus(const FieldPtr& field, std::size_t s, std::size_t cap = kDefaultPointCap);
/// F_q^s in element enumeration order.
PointSet affine_space(const FieldPtr& field, std::size_t s, std::size_t cap = kDefaultPointCap);

/// Reduced Gröbner basis of I(X) by Buchberger–Möller interpolation.
GroebnerBasis vanishing_ideal(const PointSet& X, const MonomialOrder& order = {});

/// Points of X where every polynomial of F vanishes, in X's order.
PointSet zero_set(std::span<const Polynomial> F, const PointSet& X);

/// deg S/(I(X), F), or 0 when that ideal is the whole ring.
std::size_t count_zeros_degree_method(const GroebnerBasis& gbI, std::span<const Polynomial> F);

/// Gröbner basis of (t_1^q - t_1, ..., t_s^q - t_s, G); throws Error when V(G) is empty.
GroebnerBasis variety_ideal_nullstellensatz(std::span<const Polynomial> G, const FieldPtr& field, std::size_t s,
                                            const MonomialOrder& order = {});

/// Normalized projective zeros of homogeneous G in P^{s-1}, by exhaustive scan.
PointSet projective_variety_points(std::span<const Polynomial> G, const FieldPtr& field, std::size_t s,
                                   std::size_t cap = kDefaultPointCap);

/// Affine points of F_q^s where all of G vanish, by exhaustive scan.
PointSet affine_variety_points(std::span<const Polynomial> G, const FieldPtr& field, std::size_t s,
                               std::size_t cap = kDefaultPointCap);

/**
 * Point file: a header line `q=<int> s=<int> [modulus=<poly in a>] [projective]
 * [vars=x,y,...]`, then one point per line as comma-separated element
 * literals. `#` starts a comment; blank lines are ignored.
 */
PointSet read_point_file(std::istream& in);
PointSet read_point_file(const std::string& path);
std::string write_point_file(const PointSet& X);

}  // namespace evalcode
