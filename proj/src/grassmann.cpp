#include "evalcode/grassmann.hpp"

#include <algorithm>
#include <stdexcept>

namespace evalcode {

std::optional<std::uint64_t> gaussian_binomial(std::uint64_t q, std::size_t k, std::size_t r) {
  if (r > k) return 0;
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  // Saturating arithmetic; UINT64_MAX marks overflow.
  constexpr std::uint64_t kOver = UINT64_MAX;
  const auto mul = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t c;
    return (a == kOver || b == kOver || __builtin_mul_overflow(a, b, &c)) && a != 0 && b != 0 ? kOver : a * b;
  };
  const auto add = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t c;
    return a == kOver || b == kOver || __builtin_add_overflow(a, b, &c) ? kOver : c;
  };
  // [n, j]_q = [n-1, j-1]_q + q^j [n-1, j]_q, updated in place.
  std::vector<std::uint64_t> row(r + 1, 0);
  row[0] = 1;
  for (std::size_t n = 1; n <= k; ++n) {
    for (std::size_t j = std::min(n, r); j >= 1; --j) {
      std::uint64_t qj = 1;
      for (std::size_t t = 0; t < j; ++t) qj = mul(qj, q);
      row[j] = add(mul(qj, row[j]), row[j - 1]);
    }
  }
  if (row[r] == kOver) return std::nullopt;
  return row[r];
}

GrassmannEnumerator::GrassmannEnumerator(std::uint32_t q, std::size_t k, std::size_t r) : q_(q), k_(k), r_(r) {
  if (r < 1 || r > k) throw std::invalid_argument("subspace dimension must satisfy 1 <= r <= k");
  std::vector<std::size_t> comb(r);
  for (std::size_t i = 0; i < r; ++i) comb[i] = i;
  std::uint64_t start = 0;
  for (;;) {
    std::uint64_t free_count = 0;
    for (std::size_t i = 0; i < r; ++i) {
      // Columns right of pivot i that are not pivots themselves.
      free_count += (k - 1 - comb[i]) - (r - 1 - i);
    }
    std::uint64_t size = 1;
    for (std::uint64_t t = 0; t < free_count; ++t) {
      if (__builtin_mul_overflow(size, std::uint64_t{q}, &size)) throw std::overflow_error("too many subspaces");
    }
    blocks_.push_back(comb);
    block_start_.push_back(start);
    if (__builtin_add_overflow(start, size, &start)) throw std::overflow_error("too many subspaces");
    std::size_t i = r;
    while (i > 0 && comb[i - 1] == k - r + (i - 1)) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < r; ++j) comb[j] = comb[j - 1] + 1;
  }
  total_ = start;
  block_start_.push_back(total_);
  seek(0);
}

void GrassmannEnumerator::load_block() {
  pivots_ = blocks_[block_];
  free_.clear();
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t c = pivots_[i] + 1; c < k_; ++c) {
      if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) free_.emplace_back(i, c);
    }
  }
  matrix_ = Matrix(r_, k_);
  for (std::size_t i = 0; i < r_; ++i) matrix_(i, pivots_[i]) = 1;
}

void GrassmannEnumerator::write_free() {
  for (std::size_t f = 0; f < free_.size(); ++f) matrix_(free_[f].first, free_[f].second) = digits_[f];
}

void GrassmannEnumerator::seek(std::uint64_t index) {
  index_ = std::min(index, total_);
  if (done()) return;
  block_ = static_cast<std::size_t>(std::upper_bound(block_start_.begin(), block_start_.end(), index_) -
                                    block_start_.begin()) - 1;
  load_block();
  digits_.assign(free_.size(), 0);
  std::uint64_t rest = index_ - block_start_[block_];
  for (std::size_t f = free_.size(); f-- > 0;) {
    digits_[f] = static_cast<Elem>(rest % q_);
    rest /= q_;
  }
  write_free();
}

void GrassmannEnumerator::next() {
  if (done()) return;
  ++index_;
  if (done()) return;
  std::size_t f = free_.size();
  while (f > 0) {
    --f;
    if (++digits_[f] < q_) {
      matrix_(free_[f].first, free_[f].second) = digits_[f];
      return;
    }
    digits_[f] = 0;
    matrix_(free_[f].first, free_[f].second) = 0;
  }
  ++block_;
  load_block();
  digits_.assign(free_.size(), 0);
}

}  // namespace evalcode
