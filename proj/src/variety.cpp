#include "evalcode/variety.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "evalcode/error.hpp"
#include "evalcode/parallel.hpp"
#include "evalcode/parse.hpp"

namespace evalcode {

namespace {

struct SpanHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::size_t h = 0;
    for (const Elem x : v) h = h * 1000003u ^ x;
    return h;
  }
};

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::size_t cap) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    n *= base;
    if (n > cap) throw Error("point set would exceed the cap of " + std::to_string(cap) + " points");
  }
  return n;
}

// Cartesian power of `values`, last coordinate fastest.
PointSet product_set(const FieldPtr& field, std::size_t s, const std::vector<Elem>& values, std::size_t cap) {
  checked_power(values.size(), s, cap);
  PointSet X(field, s);
  if (values.empty()) return X;
  std::vector<std::size_t> idx(s, 0);
  std::vector<Elem> p(s);
  for (;;) {
    for (std::size_t i = 0; i < s; ++i) p[i] = values[idx[i]];
    X.push_unchecked(p);
    std::size_t i = s;
    while (i > 0 && ++idx[i - 1] == values.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return X;
}

bool vanishes_everywhere(std::span<const Polynomial> F, std::span<const Elem> p) {
  return std::all_of(F.begin(), F.end(), [&](const Polynomial& f) { return f.evaluate(p) == 0; });
}

void check_ring(std::span<const Polynomial> F, const FiniteField& field, std::size_t s) {
  for (const auto& f : F) {
    if (f.nvars() != s || !f.field()->same_as(field)) throw std::invalid_argument("polynomial from a different ring");
  }
}

// Scan of a candidate stream in parallel chunks, merged back in candidate order.
template <class Candidate>
PointSet scan(const FieldPtr& field, std::size_t s, bool projective, std::size_t n, std::span<const Polynomial> G,
              Candidate&& candidate) {
  const std::size_t chunks = chunk_count(n, 4096);
  std::vector<std::vector<Elem>> found(chunks);
  parallel_chunks(n, 4096, [&](std::size_t lo, std::size_t hi, std::size_t w) {
    std::vector<Elem> p(s);
    for (std::size_t i = lo; i < hi; ++i) {
      candidate(i, p);
      if (vanishes_everywhere(G, p)) found[w].insert(found[w].end(), p.begin(), p.end());
    }
  });
  PointSet X(field, s, projective);
  for (const auto& part : found) {
    for (std::size_t i = 0; i + s <= part.size() && s > 0; i += s) X.push_unchecked({part.data() + i, s});
  }
  return X;
}

}  // namespace

PointSet::PointSet(FieldPtr field, std::size_t s, bool projective)
    : field_(std::move(field)), s_(s), projective_(projective) {
  if (!field_) throw std::invalid_argument("point set without a field");
  if (s_ > kMaxVariables) throw std::invalid_argument("too many coordinates");
}

PointSet::PointSet(FieldPtr field, std::size_t s, std::vector<std::vector<Elem>> points, bool projective)
    : PointSet(std::move(field), s, projective) {
  std::unordered_set<std::vector<Elem>, SpanHash> seen;
  for (auto& p : points) {
    if (p.size() != s_) throw std::invalid_argument("point has the wrong dimension");
    for (const Elem x : p) {
      if (x >= field_->order()) throw std::invalid_argument("coordinate is not a field element");
    }
    if (projective_) {
      const auto nz = std::find_if(p.begin(), p.end(), [](Elem x) { return x != 0; });
      if (nz == p.end()) throw std::invalid_argument("the zero vector is not a projective point");
      if (*nz != 1) throw std::invalid_argument("projective point is not normalized (first nonzero entry must be 1)");
    }
    if (!seen.insert(p).second) throw std::invalid_argument("points are not distinct");
    push_unchecked(p);
  }
}

void PointSet::set_variable_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != s_) throw std::invalid_argument("variable name count does not match s");
  names_ = std::move(names);
}

void PointSet::push_unchecked(std::span<const Elem> p) {
  coords_.insert(coords_.end(), p.begin(), p.end());
  ++count_;
}

PointSet torus(const FieldPtr& field, std::size_t s, std::size_t cap) {
  return product_set(field, s, field->elements(true), cap);
}

PointSet affine_space(const FieldPtr& field, std::size_t s, std::size_t cap) {
  return product_set(field, s, field->elements(false), cap);
}

GroebnerBasis vanishing_ideal(const PointSet& X, const MonomialOrder& order) {
  if (X.empty()) throw std::invalid_argument("vanishing ideal of an empty point set");
  const FiniteField& k = *X.field();
  const std::size_t m = X.size(), s = X.dimension();
  const auto less = [&](const Monomial& a, const Monomial& b) { return order.less(a, b); };

  // A full grid A_1 x ... x A_s has I(X) = (prod_{a in A_i} (t_i - a)).
  std::vector<std::vector<Elem>> axes(s);
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < m; ++i) axes[j].push_back(X[i][j]);
    std::sort(axes[j].begin(), axes[j].end());
    axes[j].erase(std::unique(axes[j].begin(), axes[j].end()), axes[j].end());
  }
  std::size_t grid = 1;
  for (const auto& a : axes) grid = grid > m ? grid : grid * a.size();
  if (grid == m) {
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < s; ++j) {
      Polynomial g = Polynomial::constant(X.field(), s, 1);
      for (const Elem a : axes[j]) g = g * (Polynomial::variable(X.field(), s, j) - Polynomial::constant(X.field(), s, a));
      gens.push_back(std::move(g));
    }
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& f, const Polynomial& g) {
      return order.less(f.leading_monomial(order), g.leading_monomial(order));
    });
    return GroebnerBasis(X.field(), s, order, std::move(gens));
  }

  // Candidates, each with the standard monomial and variable it came from.
  std::map<Monomial, std::pair<std::size_t, std::size_t>, decltype(less)> candidates(less);
  std::vector<Monomial> standard;
  std::vector<std::vector<Elem>> raw_eval;  // evaluation vector of each standard monomial
  std::vector<std::vector<Elem>> rows;      // echelon rows of reduced evaluation vectors
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Elem>> combos;  // rows[i] = eval of sum combos[i][j] * standard[j]
  std::vector<Polynomial> gens;
  std::vector<Monomial> leads;

  candidates.emplace(Monomial(s), std::make_pair(SIZE_MAX, SIZE_MAX));
  while (!candidates.empty()) {
    const auto it = candidates.begin();
    const Monomial t = it->first;
    const auto [parent, var] = it->second;
    candidates.erase(it);

    std::vector<Elem> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = parent == SIZE_MAX ? 1 : k.mul(raw_eval[parent][i], X[i][var]);
    const std::vector<Elem> raw = v;
    std::vector<Elem> combo(standard.size() + 1, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Elem a = v[pivots[r]];
      if (a == 0) continue;
      const Elem na = k.neg(a);
      for (std::size_t i = 0; i < m; ++i) {
        if (rows[r][i] != 0) v[i] = k.add(v[i], k.mul(na, rows[r][i]));
      }
      for (std::size_t j = 0; j < combos[r].size(); ++j) {
        if (combos[r][j] != 0) combo[j] = k.add(combo[j], k.mul(na, combos[r][j]));
      }
    }
    const auto piv = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    if (piv == v.end()) {
      // t + sum combo_j standard_j vanishes on X and has leading monomial t.
      std::vector<Term> terms{{t, 1}};
      for (std::size_t j = 0; j < standard.size(); ++j) {
        if (combo[j] != 0) terms.push_back({standard[j], combo[j]});
      }
      gens.push_back(Polynomial::from_terms(X.field(), s, std::move(terms)));
      leads.push_back(t);
      for (auto c = candidates.begin(); c != candidates.end();) {
        c = t.divides(c->first) ? candidates.erase(c) : std::next(c);
      }
      continue;
    }
    const Elem inv = k.inv(*piv);
    for (auto& x : v) x = k.mul(x, inv);
    combo.back() = 1;
    for (auto& x : combo) x = k.mul(x, inv);
    pivots.push_back(static_cast<std::size_t>(piv - v.begin()));
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    standard.push_back(t);
    raw_eval.push_back(raw);
    for (std::size_t i = 0; i < s; ++i) {
      Monomial c = t * Monomial::variable(s, i);
      if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(c); })) continue;
      candidates.emplace(c, std::make_pair(standard.size() - 1, i));
    }
  }
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(order), b.leading_monomial(order));
  });
  return GroebnerBasis(X.field(), s, order, std::move(gens));
}

PointSet zero_set(std::span<const Polynomial> F, const PointSet& X) {
  check_ring(F, *X.field(), X.dimension());
  PointSet out = scan(X.field(), X.dimension(), X.is_projective(), X.size(), F,
                      [&](std::size_t i, std::vector<Elem>& p) { std::copy(X[i].begin(), X[i].end(), p.begin()); });
  out.set_variable_names(X.variable_names());
  return out;
}

std::size_t count_zeros_degree_method(const GroebnerBasis& gbI, std::span<const Polynomial> F) {
  check_ring(F, *gbI.field(), gbI.nvars());
  std::vector<Polynomial> gens(gbI.generators().begin(), gbI.generators().end());
  gens.insert(gens.end(), F.begin(), F.end());
  const GroebnerBasis gb = buchberger(gens, gbI.field(), gbI.nvars(), gbI.order());
  if (gb.is_unit_ideal()) return 0;
  return degree_zero_dim(gb);
}

GroebnerBasis variety_ideal_nullstellensatz(std::span<const Polynomial> G, const FieldPtr& field, std::size_t s,
                                            const MonomialOrder& order) {
  check_ring(G, *field, s);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < s; ++i) {
    gens.push_back(Polynomial::from_terms(
        field, s, {{Monomial::variable(s, i, field->order()), 1}, {Monomial::variable(s, i), field->neg(1)}}));
  }
  gens.insert(gens.end(), G.begin(), G.end());
  GroebnerBasis gb = buchberger(gens, field, s, order);
  if (gb.is_unit_ideal()) throw Error("the system has no zeros in A^s; its ideal is the whole ring");
  return gb;
}

PointSet affine_variety_points(std::span<const Polynomial> G, const FieldPtr& field, std::size_t s, std::size_t cap) {
  check_ring(G, *field, s);
  const std::uint64_t q = field->order();
  const std::uint64_t n = checked_power(q, s, cap);
  return scan(field, s, false, n, G, [&](std::size_t idx, std::vector<Elem>& p) {
    for (std::size_t i = s; i-- > 0;) {
      p[i] = static_cast<Elem>(idx % q);
      idx /= q;
    }
  });
}

PointSet projective_variety_points(std::span<const Polynomial> G, const FieldPtr& field, std::size_t s,
                                   std::size_t cap) {
  check_ring(G, *field, s);
  if (s == 0) throw std::invalid_argument("projective space needs at least one coordinate");
  for (const auto& g : G) {
    if (g.is_zero() || !g.is_homogeneous()) throw std::invalid_argument("projective systems need nonzero homogeneous polynomials");
  }
  const std::uint64_t q = field->order();
  // Block j holds tuples (0,...,0,1,*,...,*) with s-1-j free coordinates.
  std::vector<std::uint64_t> block_start{0};
  for (std::size_t j = 0; j < s; ++j) block_start.push_back(block_start.back() + checked_power(q, s - 1 - j, cap));
  if (block_start.back() > cap) throw Error("projective scan would exceed the cap of " + std::to_string(cap) + " points");
  return scan(field, s, true, block_start.back(), G, [&](std::size_t idx, std::vector<Elem>& p) {
    const std::size_t j =
        static_cast<std::size_t>(std::upper_bound(block_start.begin(), block_start.end(), idx) - block_start.begin()) - 1;
    std::uint64_t rest = idx - block_start[j];
    std::fill(p.begin(), p.end(), 0);
    p[j] = 1;
    for (std::size_t i = s; i-- > j + 1;) {
      p[i] = static_cast<Elem>(rest % q);
      rest /= q;
    }
  });
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string modulus_text(const FiniteField& k) {
  const FieldPtr prime = FiniteField::make(k.characteristic());
  std::vector<Term> terms;
  for (std::size_t i = 0; i < k.modulus().size(); ++i) {
    terms.push_back({Monomial::variable(1, 0, static_cast<unsigned>(i)), k.modulus()[i]});
  }
  std::string s = format_polynomial(Polynomial::from_terms(prime, 1, std::move(terms)), MonomialOrder::lex(), {"a"});
  std::erase(s, ' ');
  return s;
}

}  // namespace

PointSet read_point_file(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::vector<Elem>> points;
  bool projective = false;
  std::size_t s = 0;
  FieldPtr field;
  std::vector<std::string> names;
  std::unordered_set<std::vector<Elem>, SpanHash> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!field) {
      std::istringstream tokens(line);
      std::string tok;
      std::optional<std::uint64_t> q;
      std::optional<std::size_t> dim;
      std::optional<std::string> modulus;
      while (tokens >> tok) {
        const auto col = line.find(tok) + 1;
        const auto eq = tok.find('=');
        const std::string key = tok.substr(0, eq);
        const std::string value = eq == std::string::npos ? "" : tok.substr(eq + 1);
        try {
          if (key == "projective" && eq == std::string::npos) {
            projective = true;
          } else if (key == "q" && !value.empty()) {
            q = std::stoull(value);
          } else if (key == "s" && !value.empty()) {
            dim = std::stoul(value);
          } else if (key == "modulus" && !value.empty()) {
            modulus = value;
          } else if (key == "vars" && !value.empty()) {
            names = split(value, ',');
          } else {
            throw ParseError("unknown header entry '" + tok + "'", lineno, col);
          }
        } catch (const std::logic_error&) {
          throw ParseError("malformed header entry '" + tok + "'", lineno, col);
        }
      }
      if (!q || !dim) throw ParseError("header must give q=<int> and s=<int>", lineno, 1);
      try {
        field = make_field(*q, modulus.value_or(""));
      } catch (const std::exception& ex) {
        throw ParseError(ex.what(), lineno, modulus ? line.find("modulus=") + 9 : 1);
      }
      s = *dim;
      if (!names.empty() && names.size() != s) throw ParseError("vars= must name exactly s variables", lineno, 1);
      continue;
    }
    std::vector<Elem> p;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t end = line.find(',', start);
      if (end == std::string::npos) end = line.size();
      const std::string piece = line.substr(start, end - start);
      if (piece.find_first_not_of(" \t\r") == std::string::npos) throw ParseError("empty coordinate", lineno, start + 1);
      p.push_back(parse_element(piece, *field, SourcePos{lineno, start + 1}));
      start = end + 1;
    }
    if (p.size() != s) {
      throw ParseError("expected " + std::to_string(s) + " coordinates, found " + std::to_string(p.size()), lineno, 1);
    }
    if (projective) {
      const auto nz = std::find_if(p.begin(), p.end(), [](Elem x) { return x != 0; });
      if (nz == p.end()) throw ParseError("the zero vector is not a projective point", lineno, 1);
      const Elem inv = field->inv(*nz);
      for (auto& x : p) x = field->mul(x, inv);
    }
    if (!seen.insert(p).second) throw ParseError("duplicate point", lineno, 1);
    points.push_back(std::move(p));
  }
  if (!field) throw ParseError("missing header line", lineno + 1, 1);
  PointSet result(field, s, std::move(points), projective);
  result.set_variable_names(names);
  return result;
}

PointSet read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open point file '" + path + "'");
  return read_point_file(in);
}

std::string write_point_file(const PointSet& X) {
  std::ostringstream out;
  const FiniteField& k = *X.field();
  out << "q=" << k.order() << " s=" << X.dimension();
  if (!k.is_prime_field()) out << " modulus=" << modulus_text(k);
  if (X.is_projective()) out << " projective";
  if (!X.variable_names().empty()) {
    out << " vars=";
    for (std::size_t i = 0; i < X.variable_names().size(); ++i) out << (i ? "," : "") << X.variable_names()[i];
  }
  out << '\n';
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = 0; j < X.dimension(); ++j) out << (j ? "," : "") << format_element(k, X[i][j]);
    out << '\n';
  }
  return out.str();
}

}  // namespace evalcode
