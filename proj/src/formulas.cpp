#include "evalcode/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace evalcode {

namespace {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t c;
  if (__builtin_mul_overflow(a, b, &c)) throw std::overflow_error("formula value does not fit in 64 bits");
  return c;
}

std::uint64_t power(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = mul(r, base);
  return r;
}

void check_range(std::size_t s, int d) {
  if (d < 1 || static_cast<std::size_t>(d) > s) throw std::invalid_argument("degree must satisfy 1 <= d <= s");
}

void check_q(std::uint64_t q, std::uint64_t min) {
  if (q < min) throw std::invalid_argument("q must be at least " + std::to_string(min));
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i; divide first where possible to delay overflow.
    const std::uint64_t g = std::gcd(r, i);
    r = mul(r / g, (n - k + i) / (i / g));
  }
  return r;
}

std::uint64_t toric_min_distance_formula(std::uint64_t q, std::size_t s, int d) {
  check_q(q, 2);
  check_range(s, d);
  if (s < 2) throw std::invalid_argument("the hypersimplex needs s >= 2");
  const auto ud = static_cast<std::size_t>(d);
  if (q == 2) return 1;
  if (ud == s) return power(q - 1, s);
  if (2 * ud <= s) return mul(power(q - 2, ud), power(q - 1, s - ud));
  return mul(power(q - 2, s - ud), power(q - 1, ud));
}

std::uint64_t toric_dimension_formula(std::uint64_t q, std::size_t s, int d) {
  check_q(q, 2);
  check_range(s, d);
  return q == 2 ? 1 : binomial(s, static_cast<std::uint64_t>(d));
}

std::uint64_t squarefree_min_distance_formula(std::uint64_t q, std::size_t s, int d) {
  check_q(q, 3);
  check_range(s, d);
  const auto ud = static_cast<std::size_t>(d);
  return mul(power(q - 2, ud), power(q - 1, s - ud));
}

std::uint64_t squarefree_delta2_formula(std::uint64_t q, std::size_t s, int d) {
  check_q(q, 3);
  check_range(s, d);
  const auto ud = static_cast<std::size_t>(d);
  if (ud == s) return mul(power(q - 2, s - 1), q - 1);
  return mul(mul(power(q - 2, ud), power(q - 1, s - ud - 1)), q);
}

std::uint64_t squarefree_dimension_formula(std::uint64_t q, std::size_t s, int d) {
  check_q(q, 3);
  check_range(s, d);
  std::uint64_t n = 0;
  for (int i = 0; i <= d; ++i) n += binomial(s, static_cast<std::uint64_t>(i));
  return n;
}

MaxZeros max_zeros_bound(const FieldPtr& field, std::size_t s, int d, MaxZerosKind kind) {
  const std::uint64_t q = field->order();
  check_q(q, 3);
  check_range(s, d);
  const auto ud = static_cast<std::size_t>(d);
  const std::uint64_t torus = power(q - 1, s);
  const auto var = [&](std::size_t i) { return Polynomial::variable(field, s, i); };
  const Polynomial one = Polynomial::constant(field, s, 1);
  Polynomial f = one;
  if (kind == MaxZerosKind::squarefree_any) {
    for (std::size_t i = 0; i < ud; ++i) f = f * (var(i) - one);
    return {torus - mul(power(q - 2, ud), power(q - 1, s - ud)), f};
  }
  if (!(2 * ud > s && ud < s)) throw std::invalid_argument("this bound needs s/2 < d < s");
  // g_k = (t1 - t2)...(t_{2k-1} - t_{2k}) t_{2k+1}...t_{k+d} with k = s - d.
  const std::size_t k = s - ud;
  for (std::size_t i = 0; i < k; ++i) f = f * (var(2 * i) - var(2 * i + 1));
  for (std::size_t i = 2 * k; i < k + ud; ++i) f = f * var(i);
  return {torus - mul(power(q - 2, s - ud), power(q - 1, ud)), f};
}

}  // namespace evalcode
