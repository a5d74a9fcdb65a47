#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evalcode {

/// Raw element code: the residue coefficients packed base p, sum c_i * p^i,
/// where c_i is the coefficient of a^i. 0 and 1 are the field's zero and one.
using Elem = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/**
 * The finite field F_q, q = p^e, realised as F_p[a]/(modulus) when e > 1.
 *
 * Instances are immutable and always handled through FieldPtr. Arithmetic is
 * exposed on raw Elem codes so that the polynomial and code layers can keep
 * their data in flat integer arrays; FieldElement is the value-typed wrapper
 * for API users.
 */
class FiniteField {
 public:
  /// Builds F_{p^e}. Without a modulus a built-in one is used for e > 1.
  /// Modulus coefficients are listed lowest degree first and must be monic.
  static FieldPtr make(std::uint32_t p, unsigned e = 1,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Builds F_q for a prime power q (built-in modulus when q is not prime).
  static FieldPtr of_order(std::uint32_t q);

  /// Built-in modulus for (p, e), lowest degree first; nullopt when none ships.
  static std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p, unsigned e);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return e_ == 1; }
  /// e+1 coefficients, lowest degree first; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  /// The generator symbol `a` (requires e > 1).
  Elem generator() const;
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t value) const noexcept;

  Elem add(Elem x, Elem y) const noexcept {
    if (e_ == 1) {
      const Elem s = x + y;
      return s >= p_ ? s - p_ : s;
    }
    return add_table_.empty() ? add_slow(x, y) : add_table_[x * q_ + y];
  }
  Elem neg(Elem x) const noexcept {
    if (e_ == 1) return x == 0 ? 0 : p_ - x;
    return neg_table_[x];
  }
  Elem sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }
  Elem mul(Elem x, Elem y) const noexcept {
    if (e_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(x) * y % p_);
    return mul_table_.empty() ? mul_slow(x, y) : mul_table_[x * q_ + y];
  }
  /// Multiplicative inverse; throws std::domain_error on zero.
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  /// Any integer exponent; negative exponents go through the inverse.
  Elem pow(Elem x, std::int64_t n) const;

  /// Residue coefficients of an element, highest power of `a` first (e entries).
  std::vector<std::uint32_t> coefficients(Elem x) const;
  /// Inverse of coefficients(); entries are reduced mod p.
  Elem from_coefficients(std::span<const std::int64_t> high_first) const;

  /// All elements (or all units) in ascending code order. Code order is the
  /// lexicographic order of the high-first coefficient sequences.
  std::vector<Elem> elements(bool units_only = false) const;

  bool same_as(const FiniteField& other) const noexcept {
    return this == &other || (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
  }

  std::string name() const;

  /// True iff the monic polynomial (lowest degree first) is irreducible over F_p.
  static bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);
  static bool is_prime(std::uint64_t n) noexcept;

 private:
  FiniteField(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus);

  Elem add_slow(Elem x, Elem y) const noexcept;
  Elem mul_slow(Elem x, Elem y) const noexcept;

  std::uint32_t p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<Elem> neg_table_;
  std::vector<Elem> inv_table_;
};

/// Element of a finite field with value semantics.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem code);
  static FieldElement from_int(const FieldPtr& field, std::int64_t value) {
    return {field, field->from_int(value)};
  }

  const FieldPtr& field() const noexcept { return field_; }
  Elem code() const noexcept { return code_; }
  std::vector<std::uint32_t> coefficients() const { return field_->coefficients(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(code_)}; }
  FieldElement inverse() const { return {field_, field_->inv(code_)}; }
  FieldElement pow(std::int64_t n) const { return {field_, field_->pow(code_, n)}; }

  bool operator==(const FieldElement& o) const noexcept {
    return code_ == o.code_ && field_->same_as(*o.field_);
  }

 private:
  void check_same_field(const FieldElement& o) const;

  FieldPtr field_;
  Elem code_;
};

/// Field elements in the deterministic enumeration order.
std::vector<FieldElement> enumerate_elements(const FieldPtr& field, bool units_only = false);

}  // namespace evalcode
