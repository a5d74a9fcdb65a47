#pragma once

#include <cstddef>
#include <cstdint>

#include "evalcode/polynomial.hpp"

namespace evalcode {

/// Binomial coefficient with overflow check.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Minimum distance of the toric code of the degree-d hypersimplex (1 <= d <= s, s >= 2, q >= 2).
std::uint64_t toric_min_distance_formula(std::uint64_t q, std::size_t s, int d);
/// C(s, d) for q >= 3, and 1 for q = 2.
std::uint64_t toric_dimension_formula(std::uint64_t q, std::size_t s, int d);

/// (q-2)^d (q-1)^(s-d); q >= 3, 1 <= d <= s.
std::uint64_t squarefree_min_distance_formula(std::uint64_t q, std::size_t s, int d);
/// (q-2)^d (q-1)^(s-d-1) q when d < s, (q-2)^(s-1) (q-1) when d = s.
std::uint64_t squarefree_delta2_formula(std::uint64_t q, std::size_t s, int d);
/// C(s,0) + ... + C(s,d).
std::uint64_t squarefree_dimension_formula(std::uint64_t q, std::size_t s, int d);

enum class MaxZerosKind {
  /// Squarefree f of degree at most d, 1 <= d <= s.
  squarefree_any,
  /// Squarefree homogeneous f of degree d with s/2 < d < s.
  squarefree_homog_high_d,
};

struct MaxZeros {
  std::uint64_t bound;
  /// A polynomial reaching the bound on the torus (F_q^*)^s.
  Polynomial extremal;
};

/// Sharp upper bound on the zeros in the torus of the given polynomial class; q >= 3.
MaxZeros max_zeros_bound(const FieldPtr& field, std::size_t s, int d, MaxZerosKind kind);

}  // namespace evalcode
