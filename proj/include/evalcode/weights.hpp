#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evalcode/codes.hpp"

namespace evalcode {

enum class WeightStatus { exact, lower_bound, upper_bound, budget_exceeded };
std::string to_string(WeightStatus status);

/// Result of a generalized Hamming weight computation.
struct WeightReport {
  std::size_t r = 0;
  std::uint64_t value = 0;
  WeightStatus status = WeightStatus::exact;
  /// Footprint lower bound fp_r when it was computed.
  std::optional<std::uint64_t> fp;
  /// r polynomials spanning a subcode of minimum support (first in enumeration order).
  std::vector<Polynomial> witness;
  /// Candidates examined.
  std::uint64_t searched = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Re-check every n-th candidate through the Gröbner degree count (0 disables).
  std::uint64_t verify_every = 0;
  bool with_footprint = true;
};

/**
 * delta_r by the degree formula: over one canonical representative F of each
 * r-dimensional subspace of the standardized basis, m minus the largest
 * number of common zeros of F in X. Past the budget the best value so far is
 * reported as an upper bound; under a non-graded order the result is always
 * labelled an upper bound.
 */
WeightReport ghw(const EvaluationCode& code, std::size_t r, const SearchOptions& options = {});

/// All r = 1..k.
std::vector<WeightReport> weight_hierarchy(const EvaluationCode& code, const SearchOptions& options = {});

/**
 * Smallest support of an r-dimensional subcode, using only the generator
 * matrix. Throws BudgetExceeded when the subspace count exceeds the budget.
 */
std::uint64_t ghw_bruteforce(const FiniteField& field, const Matrix& generator, std::size_t r,
                             std::uint64_t budget = kDefaultBudget);
std::uint64_t ghw_bruteforce(const EvaluationCode& code, std::size_t r, std::uint64_t budget = kDefaultBudget);

/**
 * Minimum distance of C_X(d). For d >= 2 only monic standard polynomials with
 * a degree-d leading monomial are searched, once the previous degree's
 * distance exceeds 1; otherwise the distance is 1.
 */
WeightReport min_distance_recursive(const PointSet& X, int d, const MonomialOrder& order = {},
                                    const SearchOptions& options = {});
WeightReport min_distance_recursive(const PointSet& X, int d, const GroebnerBasis& gbI,
                                    const SearchOptions& options = {});
/// Distances for d = 1..max_degree, each level reusing the previous one.
std::vector<WeightReport> min_distance_profile(const PointSet& X, int max_degree, const GroebnerBasis& gbI,
                                               const SearchOptions& options = {});

/**
 * fp_r = deg S/I - max deg S/(in(I), N) over r-subsets N of `leads`, computed
 * over the footprint. Throws BudgetExceeded past `budget` subsets.
 */
std::uint64_t footprint_bound(const Footprint& footprint, std::span<const Monomial> leads, std::size_t r,
                              std::uint64_t budget = kDefaultBudget);
std::uint64_t footprint_bound(const EvaluationCode& code, std::size_t r, std::uint64_t budget = kDefaultBudget);
/// fp_I(d, r): the subsets range over standard monomials of degree <= d.
std::uint64_t rm_footprint(const PointSet& X, int d, std::size_t r, const MonomialOrder& order = {});
std::uint64_t rm_footprint(const GroebnerBasis& gbI, int d, std::size_t r, std::uint64_t budget = kDefaultBudget);
/// rho_I(d, r) on the torus of F_q^s: subsets of squarefree monomials of degree <= d.
std::uint64_t squarefree_footprint(std::uint32_t q, std::size_t s, int d, std::size_t r,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace evalcode
