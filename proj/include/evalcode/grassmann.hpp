#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "evalcode/gf.hpp"
#include "evalcode/linalg.hpp"

namespace evalcode {

/// Number of r-dimensional subspaces of F_q^k; nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> gaussian_binomial(std::uint64_t q, std::size_t k, std::size_t r);

/**
 * Streams the canonical reduced row echelon r x k matrices over F_q, one per
 * r-dimensional subspace. Pivot sets run through the r-combinations of the
 * columns in lexicographic order; within a pivot set the free entries count
 * up like an odometer (last entry fastest) in element code order. The
 * position in this stream is the subspace's global index.
 */
class GrassmannEnumerator {
 public:
  /// Requires 1 <= r <= k and a subspace count that fits in 64 bits.
  GrassmannEnumerator(std::uint32_t q, std::size_t k, std::size_t r);

  std::uint64_t count() const noexcept { return total_; }
  /// Positions the enumerator at a global index (count() means exhausted).
  void seek(std::uint64_t index);
  std::uint64_t index() const noexcept { return index_; }
  bool done() const noexcept { return index_ >= total_; }
  /// Current matrix; valid while !done().
  const Matrix& current() const noexcept { return matrix_; }
  /// Pivot columns of the current matrix.
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  void next();

 private:
  void load_block();
  void write_free();

  std::uint32_t q_;
  std::size_t k_, r_;
  std::uint64_t total_ = 0, index_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;  // pivot sets
  std::vector<std::uint64_t> block_start_;
  std::size_t block_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;  // (row, col) of free entries
  std::vector<Elem> digits_;
  Matrix matrix_;
};

}  // namespace evalcode
