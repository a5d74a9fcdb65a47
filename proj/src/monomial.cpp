#include "evalcode/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace evalcode {

namespace {

void check_nvars(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

std::uint16_t checked_exponent(std::uint64_t e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("monomial exponent overflow");
  return static_cast<std::uint16_t>(e);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_nvars(nvars);
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) {
  check_nvars(exponents.size());
  nvars_ = static_cast<std::uint8_t>(exponents.size());
  std::size_t i = 0;
  for (const unsigned e : exponents) {
    exp_[i++] = checked_exponent(e);
    degree_ += e;
  }
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    m.exp_[i] = checked_exponent(exponents[i]);
    m.degree_ += exponents[i];
  }
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m(nvars);
  m.exp_[index] = checked_exponent(power);
  m.degree_ = power;
  return m;
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exp_.begin(), exp_.begin() + nvars_, [](std::uint16_t e) { return e <= 1; });
}

std::ptrdiff_t Monomial::pure_power_variable() const noexcept {
  std::ptrdiff_t found = -1;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<std::ptrdiff_t>(i);
  }
  return found;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("monomials from different rings");
  Monomial m(*this);
  for (std::size_t i = 0; i < nvars_; ++i) m.exp_[i] = checked_exponent(std::uint64_t{exp_[i]} + other.exp_[i]);
  m.degree_ = degree_ + other.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (nvars_ != other.nvars_ || !other.divides(*this)) throw std::invalid_argument("monomial division is not exact");
  Monomial m(*this);
  for (std::size_t i = 0; i < nvars_; ++i) m.exp_[i] = static_cast<std::uint16_t>(exp_[i] - other.exp_[i]);
  m.degree_ = degree_ - other.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    m.exp_[i] = std::max(exp_[i], other.exp_[i]);
    m.degree_ += m.exp_[i];
  }
  return m;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial m(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    m.exp_[i] = std::min(exp_[i], other.exp_[i]);
    m.degree_ += m.exp_[i];
  }
  return m;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

std::strong_ordering Monomial::lex_compare(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] != other.exp_[i]) return exp_[i] <=> other.exp_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exp_[i];
  return h;
}

MonomialOrder MonomialOrder::parse(std::string_view name) {
  if (name == "lex") return lex();
  if (name == "grlex") return grlex();
  if (name == "grevlex") return grevlex();
  throw std::invalid_argument("unknown monomial order '" + std::string(name) + "' (expected lex, grlex or grevlex)");
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::grlex:
      return "grlex";
    case OrderKind::grevlex:
      return "grevlex";
  }
  return "?";
}

std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("cannot compare monomials with different variable counts");
  return order.compare(a, b);
}

namespace {

void collect_degree(std::size_t s, unsigned d, unsigned cap, std::vector<Monomial>& out) {
  // Lexicographically descending enumeration of exponent vectors summing to d.
  std::vector<unsigned> a(s, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == s) {
      if (left <= cap) {
        a[i] = left;
        out.push_back(Monomial::from_exponents(a));
      }
      return;
    }
    for (unsigned e = std::min(left, cap) + 1; e-- > 0;) {
      a[i] = e;
      self(self, i + 1, left - e);
    }
    a[i] = 0;
  };
  if (s == 0) {
    if (d == 0) out.emplace_back(0);
    return;
  }
  rec(rec, 0, d);
}

}  // namespace

std::vector<Monomial> squarefree_monomials(std::size_t s, int d, DegreeMode mode) {
  if (d < 0 || static_cast<std::size_t>(d) > s) {
    throw std::invalid_argument("squarefree degree must satisfy 0 <= d <= s");
  }
  check_nvars(s);
  std::vector<Monomial> out;
  const unsigned lo = mode == DegreeMode::exact_degree ? static_cast<unsigned>(d) : 0;
  for (unsigned k = lo; k <= static_cast<unsigned>(d); ++k) collect_degree(s, k, 1, out);
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t s, unsigned d, DegreeMode mode) {
  check_nvars(s);
  std::vector<Monomial> out;
  const unsigned lo = mode == DegreeMode::exact_degree ? d : 0;
  for (unsigned k = lo; k <= d; ++k) collect_degree(s, k, k, out);
  return out;
}

}  // namespace evalcode
