#include "evalcode/gf.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace evalcode {

namespace {

// Conway polynomials, lowest degree first.
const std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>>& builtin_table() {
  static const std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

// Dense polynomials over F_p, lowest degree first, used only for the modulus checks.
using DensePoly = std::vector<std::uint32_t>;

void trim(DensePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t x, std::uint32_t p) {
  std::int64_t a = x, b = p, u = 1, v = 0;
  while (b != 0) {
    const std::int64_t t = a / b;
    a -= t * b;
    std::swap(a, b);
    u -= t * v;
    std::swap(u, v);
  }
  u %= static_cast<std::int64_t>(p);
  if (u < 0) u += p;
  return static_cast<std::uint32_t>(u);
}

// Remainder of f modulo a monic g over F_p.
DensePoly poly_mod(DensePoly f, const DensePoly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = lead * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

}  // namespace

bool FiniteField::is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool FiniteField::is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const std::size_t e = monic.size() - 1;
  if (e == 1) return true;
  const DensePoly f(monic.begin(), monic.end());
  // Trial division by every monic polynomial of degree 1..e/2.
  for (std::size_t deg = 1; deg <= e / 2; ++deg) {
    std::vector<std::uint32_t> low(deg, 0);
    while (true) {
      DensePoly g(low);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < deg && ++low[i] == p) low[i++] = 0;
      if (i == deg) break;
    }
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> FiniteField::builtin_modulus(std::uint32_t p, unsigned e) {
  const auto& table = builtin_table();
  const auto it = table.find({p, e});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

FieldPtr FiniteField::make(std::uint32_t p, unsigned e, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw std::invalid_argument("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > (e == 1 ? 0x7FFFFFFFull : 0x10000ull)) {
      throw std::invalid_argument("field order p^e is too large for this library");
    }
  }
  std::vector<std::uint32_t> mod;
  if (e > 1) {
    if (modulus) {
      mod = *modulus;
      for (auto& c : mod) c %= p;
    } else {
      auto builtin = builtin_modulus(p, e);
      if (!builtin) {
        throw std::invalid_argument("no built-in modulus for F_" + std::to_string(p) + "^" + std::to_string(e) +
                                    "; supply one explicitly");
      }
      mod = std::move(*builtin);
    }
    if (mod.size() != e + 1 || mod.back() != 1) {
      throw std::invalid_argument("modulus must be a monic polynomial of degree " + std::to_string(e));
    }
    if (!is_irreducible(p, mod)) throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
  } else if (modulus && !modulus->empty()) {
    throw std::invalid_argument("prime fields take no modulus");
  }
  return FieldPtr(new FiniteField(p, e, std::move(mod)));
}

FieldPtr FiniteField::of_order(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make(p, e);
}

FiniteField::FiniteField(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < e; ++i) q_ *= p;
  if (e_ == 1) return;
  neg_table_.resize(q_);
  for (Elem x = 0; x < q_; ++x) {
    Elem r = 0, scale = 1, rest = x;
    for (unsigned i = 0; i < e_; ++i) {
      const Elem c = rest % p_;
      rest /= p_;
      r += ((p_ - c) % p_) * scale;
      scale *= p_;
    }
    neg_table_[x] = r;
  }
  if (q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem x = 0; x < q_; ++x) {
      for (Elem y = 0; y < q_; ++y) {
        add_table_[x * q_ + y] = static_cast<std::uint16_t>(add_slow(x, y));
        mul_table_[x * q_ + y] = static_cast<std::uint16_t>(mul_slow(x, y));
      }
    }
  }
  inv_table_.assign(q_, 0);
  for (Elem x = 1; x < q_; ++x) {
    if (inv_table_[x] != 0) continue;
    const Elem y = pow(x, static_cast<std::int64_t>(q_) - 2);
    inv_table_[x] = y;
    inv_table_[y] = x;
  }
}

Elem FiniteField::add_slow(Elem x, Elem y) const noexcept {
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return r;
}

Elem FiniteField::mul_slow(Elem x, Elem y) const noexcept {
  std::vector<std::uint64_t> a(e_), b(e_), prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    a[i] = x % p_;
    b[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  for (unsigned i = 0; i < e_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  }
  // a^e = -(m_0 + m_1 a + ... + m_{e-1} a^{e-1})
  for (std::size_t k = prod.size(); k-- > e_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < e_; ++i) {
      prod[k - e_ + i] = (prod[k - e_ + i] + c * (p_ - modulus_[i])) % p_;
    }
  }
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    r += static_cast<Elem>(prod[i]) * scale;
    scale *= p_;
  }
  return r;
}

Elem FiniteField::generator() const {
  if (e_ == 1) throw std::invalid_argument("the generator symbol `a` is undefined in the prime field " + name());
  return p_;
}

Elem FiniteField::from_int(std::int64_t value) const noexcept {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem FiniteField::inv(Elem x) const {
  if (x == 0) throw std::domain_error("inverse of zero in " + name());
  if (e_ == 1) return inv_mod_p(x, p_);
  return inv_table_[x];
}

Elem FiniteField::pow(Elem x, std::int64_t n) const {
  if (n < 0) {
    x = inv(x);
    n = -n;
  }
  Elem result = 1;
  while (n > 0) {
    if (n & 1) result = mul(result, x);
    x = mul(x, x);
    n >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> FiniteField::coefficients(Elem x) const {
  std::vector<std::uint32_t> low(e_);
  for (unsigned i = 0; i < e_; ++i) {
    low[i] = x % p_;
    x /= p_;
  }
  return {low.rbegin(), low.rend()};
}

Elem FiniteField::from_coefficients(std::span<const std::int64_t> high_first) const {
  if (high_first.size() != e_) throw std::invalid_argument("expected " + std::to_string(e_) + " coefficients");
  Elem r = 0;
  for (const std::int64_t c : high_first) r = r * p_ + from_int(c);
  return r;
}

std::vector<Elem> FiniteField::elements(bool units_only) const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (Elem x = units_only ? 1 : 0; x < q_; ++x) out.push_back(x);
  return out;
}

std::string FiniteField::name() const {
  std::ostringstream os;
  os << "F_" << q_;
  return os.str();
}

FieldElement::FieldElement(FieldPtr field, Elem code) : field_(std::move(field)), code_(code) {
  if (!field_) throw std::invalid_argument("field element without a field");
  if (code_ >= field_->order()) throw std::invalid_argument("element code out of range for " + field_->name());
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!field_->same_as(*o.field_)) {
    throw std::invalid_argument("mixed-field operands: " + field_->name() + " and " + o.field_->name());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  return {field_, field_->add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  return {field_, field_->sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  return {field_, field_->mul(code_, o.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_field(o);
  return {field_, field_->div(code_, o.code_)};
}

std::vector<FieldElement> enumerate_elements(const FieldPtr& field, bool units_only) {
  std::vector<FieldElement> out;
  for (const Elem x : field->elements(units_only)) out.emplace_back(field, x);
  return out;
}

}  // namespace evalcode
