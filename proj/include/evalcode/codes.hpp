#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evalcode/groebner.hpp"
#include "evalcode/linalg.hpp"
#include "evalcode/variety.hpp"

namespace evalcode {

/**
 * Evaluation code L_X on a point set. The basis is standardized: monic, all
 * monomials standard for I(X), leading monomials strictly decreasing. Row i
 * of the generator matrix is basis[i] evaluated at the points in order.
 */
class EvaluationCode {
 public:
  EvaluationCode(PointSet points, GroebnerBasis ideal, std::vector<Polynomial> std_basis);

  const PointSet& points() const noexcept { return points_; }
  const GroebnerBasis& ideal() const noexcept { return ideal_; }
  const MonomialOrder& order() const noexcept { return ideal_.order(); }
  const FieldPtr& field() const noexcept { return points_.field(); }
  std::size_t length() const noexcept { return points_.size(); }
  std::size_t dimension() const noexcept { return basis_.size(); }
  std::size_t nvars() const noexcept { return points_.dimension(); }
  std::span<const Polynomial> basis() const noexcept { return basis_; }
  std::span<const Monomial> leading_monomials() const noexcept { return leads_; }
  const Matrix& generator_matrix() const noexcept { return generator_; }
  /// Standard monomials of I(X), computed once.
  const Footprint& footprint() const noexcept { return footprint_; }
  const std::vector<std::string>& variable_names() const noexcept { return points_.variable_names(); }

 private:
  PointSet points_;
  GroebnerBasis ideal_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leads_;
  Matrix generator_;
  Footprint footprint_;
};

/// Evaluations of each polynomial at each point (rows = polynomials).
Matrix evaluation_matrix(std::span<const Polynomial> polys, const PointSet& X);

/**
 * Normal forms modulo gbI, then Gaussian elimination over the monomials taken
 * in decreasing order. Returns a monic basis with strictly decreasing,
 * pairwise distinct leading monomials; zero remainders disappear.
 */
std::vector<Polynomial> standardize(std::span<const Polynomial> basis, const GroebnerBasis& gbI);

/// Builds L_X for the span of `basis`; throws Error for the zero code.
EvaluationCode evaluation_code(const PointSet& X, std::span<const Polynomial> basis, const MonomialOrder& order = {});
EvaluationCode evaluation_code(const PointSet& X, std::span<const Polynomial> basis, const GroebnerBasis& gbI);

/// C_X(d): standard monomials of degree <= d. The order must be graded.
EvaluationCode rm_code(const PointSet& X, int d, const MonomialOrder& order = {});
EvaluationCode rm_code(const PointSet& X, int d, const GroebnerBasis& gbI);

/// Squarefree monomials of degree exactly d on the torus (F_q^*)^s.
EvaluationCode toric_hypersimplex_code(std::uint32_t q, std::size_t s, int d, const MonomialOrder& order = {});
/// Squarefree monomials of degree at most d on the torus.
EvaluationCode squarefree_code(std::uint32_t q, std::size_t s, int d, const MonomialOrder& order = {});
/// Monomials t^a for the given exponent vectors on the torus.
EvaluationCode generalized_toric_code(std::uint32_t q, std::size_t s, std::span<const std::vector<unsigned>> exponents,
                                      const MonomialOrder& order = {});
/// All degree-d monomials evaluated at normalized projective representatives.
EvaluationCode projective_rm_code(const PointSet& X, int d, const MonomialOrder& order = {});

}  // namespace evalcode
