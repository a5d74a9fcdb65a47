#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evalcode {

/// Largest number of variables a polynomial ring may have.
inline constexpr std::size_t kMaxVariables = 12;

/// Exponent vector t^a = t_1^{a_1} ... t_s^{a_s} with inline storage.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial from_exponents(std::span<const unsigned> exponents);
  /// t_i (zero based index).
  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;
  /// Index of the variable when this is a pure power t_i^k with k >= 1.
  std::ptrdiff_t pure_power_variable() const noexcept;
  std::vector<unsigned> exponents() const { return {exp_.begin(), exp_.begin() + nvars_}; }

  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other | *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;

  bool operator==(const Monomial& other) const noexcept = default;
  /// Lexicographic on exponent vectors (t_1 most significant). Canonical storage order only.
  std::strong_ordering lex_compare(const Monomial& other) const noexcept;

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

enum class OrderKind { lex, grlex, grevlex };

/// Monomial order with variable precedence t_1 > t_2 > ... > t_s.
class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static MonomialOrder grlex() { return MonomialOrder(OrderKind::grlex); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  /// Accepts "lex", "grlex", "grevlex".
  static MonomialOrder parse(std::string_view name);

  OrderKind kind() const noexcept { return kind_; }
  bool is_graded() const noexcept { return kind_ != OrderKind::lex; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    if (kind_ != OrderKind::lex && a.degree() != b.degree()) return a.degree() <=> b.degree();
    if (kind_ == OrderKind::grevlex) {
      for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    }
    return a.lex_compare(b);
  }
  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const noexcept = default;

 private:
  OrderKind kind_ = OrderKind::grevlex;
};

/// Three-way comparison that rejects monomials from rings of different size.
std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b);

enum class DegreeMode { exact_degree, up_to_degree };

/// Squarefree monomials of degree d (or <= d) in s variables, ordered by degree
/// and then lexicographically descending within a degree.
std::vector<Monomial> squarefree_monomials(std::size_t s, int d, DegreeMode mode);

/// All monomials of degree exactly d (or <= d) in s variables, same ordering.
std::vector<Monomial> monomials_of_degree(std::size_t s, unsigned d, DegreeMode mode);

}  // namespace evalcode

template <>
struct std::hash<evalcode::Monomial> {
  std::size_t operator()(const evalcode::Monomial& m) const noexcept { return m.hash(); }
};
