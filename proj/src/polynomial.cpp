#include "evalcode/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordered.hpp"

namespace evalcode {

namespace {

bool canonical_before(const Term& a, const Term& b) { return a.mono.lex_compare(b.mono) > 0; }

}  // namespace

Polynomial::Polynomial(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {
  if (!field_) throw std::invalid_argument("polynomial without a field");
  if (nvars_ > kMaxVariables) throw std::invalid_argument("too many variables");
}

Polynomial Polynomial::constant(FieldPtr field, std::size_t nvars, Elem value) {
  Polynomial f(std::move(field), nvars);
  if (value != 0) f.terms_.push_back({Monomial(nvars), value});
  return f;
}

Polynomial Polynomial::from_monomial(FieldPtr field, const Monomial& mono, Elem coeff) {
  Polynomial f(std::move(field), mono.nvars());
  if (coeff != 0) f.terms_.push_back({mono, coeff});
  return f;
}

Polynomial Polynomial::variable(FieldPtr field, std::size_t nvars, std::size_t index) {
  return from_monomial(std::move(field), Monomial::variable(nvars, index));
}

Polynomial Polynomial::from_terms(FieldPtr field, std::size_t nvars, std::vector<Term> terms) {
  Polynomial f(std::move(field), nvars);
  for (const auto& t : terms) {
    if (t.mono.nvars() != nvars) throw std::invalid_argument("term has the wrong number of variables");
    if (t.coeff >= f.field_->order()) throw std::invalid_argument("coefficient code out of range");
  }
  std::sort(terms.begin(), terms.end(), canonical_before);
  for (const auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff = f.field_->add(f.terms_.back().coeff, t.coeff);
    } else {
      f.terms_.push_back(t);
    }
  }
  std::erase_if(f.terms_, [](const Term& t) { return t.coeff == 0; });
  return f;
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

bool Polynomial::is_squarefree() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.is_squarefree(); });
}

Elem Polynomial::coefficient(const Monomial& mono) const noexcept {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{mono, 0}, canonical_before);
  return it != terms_.end() && it->mono == mono ? it->coeff : 0;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::invalid_argument("the zero polynomial has no leading term");
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.greater(t.mono, best->mono)) best = &t;
  }
  return *best;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
  auto v = detail::ascending(*this, order);
  std::reverse(v.begin(), v.end());
  return v;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading_term(order).coeff));
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (nvars_ != other.nvars_ || !field_->same_as(*other.field_)) {
    throw std::invalid_argument("polynomials belong to different rings");
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_ring(other);
  Polynomial r(field_, nvars_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    const auto cmp = terms_[i].mono.lex_compare(other.terms_[j].mono);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(other.terms_[j++]);
    } else {
      const Elem s = field_->add(terms_[i].coeff, other.terms_[j].coeff);
      if (s != 0) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  r.terms_.insert(r.terms_.end(), other.terms_.begin() + static_cast<std::ptrdiff_t>(j), other.terms_.end());
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = field_->neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) prod.push_back({a.mono * b.mono, field_->mul(a.coeff, b.coeff)});
  }
  return from_terms(field_, nvars_, std::move(prod));
}

Polynomial Polynomial::scaled(Elem c) const {
  Polynomial r(field_, nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field_->mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times(const Monomial& mono, Elem c) const {
  Polynomial r(field_, nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the lexicographic order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * mono, field_->mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(field_, nvars_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Elem Polynomial::evaluate(std::span<const Elem> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("point has the wrong dimension");
  const FiniteField& k = *field_;
  Elem sum = 0;
  for (const auto& t : terms_) {
    Elem v = t.coeff;
    for (std::size_t i = 0; i < nvars_ && v != 0; ++i) {
      if (t.mono[i] != 0) v = k.mul(v, k.pow(point[i], t.mono[i]));
    }
    sum = k.add(sum, v);
  }
  return sum;
}

bool Polynomial::operator==(const Polynomial& other) const noexcept {
  return nvars_ == other.nvars_ && field_->same_as(*other.field_) && terms_ == other.terms_;
}

FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point) {
  std::vector<Elem> raw;
  raw.reserve(point.size());
  for (const auto& x : point) {
    if (!x.field()->same_as(*f.field())) throw std::invalid_argument("point coordinate from a different field");
    raw.push_back(x.code());
  }
  return {f.field(), f.evaluate(raw)};
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order) {
  const FiniteField& k = *f.field();
  std::vector<detail::TermVec> gs;
  gs.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.nvars() != f.nvars() || !g.field()->same_as(k)) throw std::invalid_argument("divisor from a different ring");
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    gs.push_back(detail::ascending(g, order));
  }
  std::vector<std::vector<Term>> quot(divisors.size());
  std::vector<Term> rem;
  detail::TermVec p = detail::ascending(f, order), scratch;
  while (!p.empty()) {
    const Term lt = p.back();
    bool reduced = false;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const Term& lg = gs[i].back();
      if (!lg.mono.divides(lt.mono)) continue;
      const Monomial m = lt.mono / lg.mono;
      const Elem c = k.div(lt.coeff, lg.coeff);
      quot[i].push_back({m, c});
      p.pop_back();
      detail::sub_mul(p, c, m, gs[i], true, k, order, scratch);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      p.pop_back();
    }
  }
  DivisionResult result{{}, Polynomial::from_terms(f.field(), f.nvars(), std::move(rem))};
  for (auto& q : quot) result.quotients.push_back(Polynomial::from_terms(f.field(), f.nvars(), std::move(q)));
  return result;
}

}  // namespace evalcode
