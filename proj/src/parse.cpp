#include "evalcode/parse.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "evalcode/error.hpp"

namespace evalcode {

std::vector<std::string> default_variable_names(std::size_t s) {
  std::vector<std::string> names;
  names.reserve(s);
  for (std::size_t i = 1; i <= s; ++i) names.push_back("t" + std::to_string(i));
  return names;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, FieldPtr field, std::size_t nvars, const std::vector<std::string>& names,
         SourcePos origin)
      : text_(text), field_(std::move(field)), nvars_(nvars), names_(names), origin_(origin) {
    if (names_.empty()) names_ = default_variable_names(nvars_);
    if (names_.size() != nvars_) throw std::invalid_argument("variable name count does not match the ring");
    for (const auto& n : names_) {
      if (n.empty() || !ident_start(n[0])) throw std::invalid_argument("invalid variable name '" + n + "'");
      if (n == "a" && !field_->is_prime_field()) {
        throw std::invalid_argument("'a' names the field generator and cannot be a variable");
      }
    }
  }

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial f = sum();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  Polynomial sum() {
    Polynomial acc(field_, nvars_);
    bool negate = false;
    skip_space();
    if (peek('+') || peek('-')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    for (;;) {
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      skip_space();
      if (!(peek('+') || peek('-'))) break;
      negate = text_[pos_] == '-';
      ++pos_;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (!at_end() && (digit(text_[pos_]) || ident_start(text_[pos_]) || text_[pos_] == '(')) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    skip_space();
    if (at_end()) fail("expected a number, variable or '('");
    const char c = text_[pos_];
    std::vector<Polynomial> atoms;
    if (digit(c)) {
      atoms.push_back(Polynomial::constant(field_, nvars_, integer()));
    } else if (c == '(') {
      ++pos_;
      atoms.push_back(sum());
      skip_space();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    } else if (ident_start(c)) {
      atoms = identifier();
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    Polynomial acc = Polynomial::constant(field_, nvars_, 1);
    for (std::size_t i = 0; i + 1 < atoms.size(); ++i) acc = acc * atoms[i];
    Polynomial last = std::move(atoms.back());
    skip_space();
    if (peek('^')) {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      if (at_end() || !digit(text_[pos_])) fail("expected an exponent after '^'");
      std::uint64_t n = 0;
      while (!at_end() && digit(text_[pos_])) {
        n = n * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (n > 1000000000ull) fail_at(at, "exponent too large");
        ++pos_;
      }
      try {
        if (last.is_constant()) {
          const Elem base = last.is_zero() ? 0 : last.terms()[0].coeff;
          last = Polynomial::constant(field_, nvars_, field_->pow(base, static_cast<std::int64_t>(n)));
        } else {
          last = last.pow(static_cast<unsigned>(n));
        }
      } catch (const std::exception& e) {
        fail_at(at, e.what());
      }
    }
    return acc * last;
  }

  Elem integer() {
    const std::uint32_t p = field_->characteristic();
    std::uint64_t v = 0;
    while (!at_end() && digit(text_[pos_])) {
      v = (v * 10 + static_cast<unsigned>(text_[pos_] - '0')) % p;
      ++pos_;
    }
    return field_->from_int(static_cast<std::int64_t>(v));
  }

  // An identifier is a run of variable names (and `a`) written without '*'.
  std::vector<Polynomial> identifier() {
    const std::size_t start = pos_;
    while (!at_end() && ident_char(text_[pos_])) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    std::vector<Polynomial> atoms;
    std::size_t i = 0;
    while (i < word.size()) {
      std::size_t best_len = 0;
      Polynomial best(field_, nvars_);
      for (std::size_t v = 0; v < names_.size(); ++v) {
        const auto& n = names_[v];
        if (n.size() > best_len && word.substr(i, n.size()) == n) {
          best_len = n.size();
          best = Polynomial::variable(field_, nvars_, v);
        }
      }
      if (best_len == 0 && word[i] == 'a' && !field_->is_prime_field()) {
        best_len = 1;
        best = Polynomial::constant(field_, nvars_, field_->generator());
      }
      if (best_len == 0) {
        // Trailing digits after a name are a coefficient written on the wrong side.
        std::size_t j = i;
        while (j < word.size() && ident_char(word[j])) ++j;
        if (word[i] == 'a' && field_->is_prime_field()) {
          fail_at(start + i, "the generator 'a' only exists in extension fields");
        }
        fail_at(start + i, "unknown variable '" + std::string(word.substr(i, j - i)) + "'");
      }
      atoms.push_back(std::move(best));
      i += best_len;
    }
    return atoms;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return !at_end() && text_[pos_] == c; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    std::size_t line = origin_.line, col = origin_.column;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  std::string_view text_;
  FieldPtr field_;
  std::size_t nvars_;
  std::vector<std::string> names_;
  SourcePos origin_;
  std::size_t pos_ = 0;
};

// Non-owning FieldPtr for callers that only hold a reference.
FieldPtr borrow(const FiniteField& field) { return FieldPtr(FieldPtr{}, &field); }

std::string coefficient_text(const FiniteField& field, Elem c) {
  const std::string s = format_element(field, c);
  return s.find('+') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

Elem parse_element(std::string_view text, const FiniteField& field, SourcePos origin) {
  Parser parser(text, borrow(field), 0, {}, origin);
  const Polynomial f = parser.parse();
  return f.is_zero() ? 0 : f.terms()[0].coeff;
}

std::string format_element(const FiniteField& field, Elem x) {
  if (field.is_prime_field()) return std::to_string(x);
  if (x == 0) return "0";
  const auto coeffs = field.coefficients(x);
  const std::size_t e = coeffs.size();
  std::string out;
  for (std::size_t i = 0; i < e; ++i) {
    const std::uint32_t c = coeffs[i];
    if (c == 0) continue;
    const std::size_t power = e - 1 - i;
    if (!out.empty()) out += '+';
    if (power == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "a";
    if (power > 1) out += "^" + std::to_string(power);
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, const FieldPtr& field, std::size_t nvars,
                            const std::vector<std::string>& names, SourcePos origin) {
  Parser parser(text, field, nvars, names, origin);
  return parser.parse();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const FieldPtr& field, std::size_t nvars,
                                              const std::vector<std::string>& names) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos) {
      out.push_back(parse_polynomial(piece, field, nvars, names, SourcePos{1, start + 1}));
    }
    start = end + 1;
  }
  return out;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  const auto vars = names.empty() ? default_variable_names(m.nvars()) : names;
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string format_polynomial(const Polynomial& f, const MonomialOrder& order, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  const FiniteField& k = *f.field();
  const std::uint32_t p = k.characteristic();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.sorted_terms(order)) {
    Elem c = t.coeff;
    bool negative = false;
    if (c < p && p > 2 && c > p / 2) {
      negative = true;
      c = p - c;
    }
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      out << coefficient_text(k, c);
    } else {
      if (c != 1) out << coefficient_text(k, c) << '*';
      out << format_monomial(t.mono, names);
    }
  }
  return out.str();
}

FieldPtr make_field(std::uint64_t q, std::string_view modulus) {
  std::uint64_t p = 0;
  for (std::uint64_t c = 2; c * c <= q; ++c) {
    if (q % c == 0) {
      p = c;
      break;
    }
  }
  if (p == 0) p = q;
  unsigned e = 0;
  std::uint64_t r = q;
  for (; p > 1 && r % p == 0; r /= p) ++e;
  if (q < 2 || r != 1) throw Error("q=" + std::to_string(q) + " is not a prime power");
  if (p >= (std::uint64_t{1} << 31)) throw Error("characteristic must be below 2^31");
  const auto p32 = static_cast<std::uint32_t>(p);
  if (modulus.find_first_not_of(" \t") == std::string_view::npos) return FiniteField::make(p32, e);
  const Polynomial mp = parse_polynomial(modulus, FiniteField::make(p32), 1, {"a"});
  if (mp.degree() != static_cast<int>(e)) throw Error("modulus degree does not match q");
  std::vector<std::uint32_t> coeffs(e + 1, 0);
  for (const auto& t : mp.terms()) coeffs[t.mono[0]] = t.coeff;
  return FiniteField::make(p32, e, coeffs);
}

}  // namespace evalcode
