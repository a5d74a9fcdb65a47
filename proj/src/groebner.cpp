#include "evalcode/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "evalcode/error.hpp"
#include "ordered.hpp"

namespace evalcode {

namespace {

using detail::TermVec;

constexpr std::size_t kFootprintCap = 20'000'000;

// Full reduction of p (ascending) by monic generators given ascending. Returns the ascending remainder.
TermVec reduce(TermVec p, const std::vector<const TermVec*>& gens, const FiniteField& k,
               const MonomialOrder& order) {
  TermVec rem, scratch;
  while (!p.empty()) {
    const Term lt = p.back();
    const TermVec* hit = nullptr;
    for (const TermVec* g : gens) {
      if (g->back().mono.divides(lt.mono)) {
        hit = g;
        break;
      }
    }
    p.pop_back();
    if (hit == nullptr) {
      rem.push_back(lt);
    } else {
      const Elem c = k.div(lt.coeff, hit->back().coeff);
      detail::sub_mul(p, c, lt.mono / hit->back().mono, *hit, true, k, order, scratch);
    }
  }
  std::reverse(rem.begin(), rem.end());
  return rem;
}

void make_monic(TermVec& v, const FiniteField& k) {
  if (v.empty() || v.back().coeff == 1) return;
  const Elem c = k.inv(v.back().coeff);
  for (auto& t : v) t.coeff = k.mul(t.coeff, c);
}

TermVec s_polynomial(const TermVec& f, const TermVec& g, const FiniteField& k, const MonomialOrder& order) {
  const Monomial l = f.back().mono.lcm(g.back().mono);
  TermVec out, scratch;
  // Both are monic: S = (l/lf) f - (l/lg) g; leading terms cancel.
  out.reserve(f.size());
  const Monomial mf = l / f.back().mono;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) out.push_back({f[i].mono * mf, f[i].coeff});
  detail::sub_mul(out, k.one(), l / g.back().mono, g, true, k, order, scratch);
  return out;
}

Polynomial to_polynomial(const FieldPtr& field, std::size_t nvars, TermVec terms) {
  return Polynomial::from_terms(field, nvars, std::move(terms));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

std::size_t Footprint::count_up_to(int d) const noexcept {
  std::size_t n = 0;
  for (int i = 0; i <= d && i < static_cast<int>(per_degree.size()); ++i) n += per_degree[static_cast<std::size_t>(i)];
  return n;
}

GroebnerBasis::GroebnerBasis(FieldPtr field, std::size_t nvars, MonomialOrder order, std::vector<Polynomial> reduced)
    : field_(std::move(field)), nvars_(nvars), order_(order), gens_(std::move(reduced)) {
  std::vector<bool> covered(nvars_, false);
  for (const auto& g : gens_) {
    if (g.nvars() != nvars_ || !g.field()->same_as(*field_)) throw std::invalid_argument("generator from a different ring");
    if (g.is_zero()) throw std::invalid_argument("zero generator in a Gröbner basis");
    leads_.push_back(g.leading_monomial(order_));
    ascending_.push_back(detail::ascending(g, order_));
    const auto v = leads_.back().pure_power_variable();
    if (v >= 0) covered[static_cast<std::size_t>(v)] = true;
    if (leads_.back().is_one()) unit_ = true;
  }
  zero_dim_ = unit_ || std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool GroebnerBasis::is_standard(const Monomial& m) const noexcept {
  return std::none_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return l.divides(m); });
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (f.nvars() != nvars_ || !f.field()->same_as(*field_)) throw std::invalid_argument("polynomial from a different ring");
  std::vector<const TermVec*> gens;
  for (const auto& g : ascending_) gens.push_back(&g);
  return to_polynomial(field_, nvars_, reduce(detail::ascending(f, order_), gens, *field_, order_));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs at least one generator to fix the ring");
  return buchberger(gens, gens.front().field(), gens.front().nvars(), order);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const FieldPtr& field, std::size_t nvars,
                         const MonomialOrder& order) {
  const FiniteField& k = *field;
  std::vector<TermVec> basis;
  for (const auto& g : gens) {
    if (g.nvars() != nvars || !g.field()->same_as(k)) throw std::invalid_argument("generators from different rings");
    if (g.is_zero()) continue;
    TermVec v = detail::ascending(g, order);
    make_monic(v, k);
    basis.push_back(std::move(v));
  }
  const auto unit = [&] {
    return GroebnerBasis(field, nvars, order, {Polynomial::constant(field, nvars, 1)});
  };
  if (std::any_of(basis.begin(), basis.end(), [](const TermVec& v) { return v.back().mono.is_one(); })) return unit();

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_set;
  const auto add_pair = [&](std::size_t i, std::size_t j) {
    pending.push_back({i, j, basis[i].back().mono.lcm(basis[j].back().mono)});
    pending_set.insert({i, j});
  };
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) add_pair(i, j);
  }

  std::vector<const TermVec*> view;
  while (!pending.empty()) {
    // Normal strategy: smallest lcm degree, ties by pair indices.
    auto best = pending.begin();
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      if (it->lcm.degree() < best->lcm.degree() ||
          (it->lcm.degree() == best->lcm.degree() && std::tie(it->i, it->j) < std::tie(best->i, best->j))) {
        best = it;
      }
    }
    const Pair pr = *best;
    pending.erase(best);
    pending_set.erase({pr.i, pr.j});

    const Monomial& li = basis[pr.i].back().mono;
    const Monomial& lj = basis[pr.j].back().mono;
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t m = 0; m < basis.size() && !chain; ++m) {
      if (m == pr.i || m == pr.j || !basis[m].back().mono.divides(pr.lcm)) continue;
      const auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending_set.contains(key(pr.i, m)) && !pending_set.contains(key(pr.j, m));
    }
    if (chain) continue;

    view.clear();
    for (const auto& b : basis) view.push_back(&b);
    TermVec r = reduce(s_polynomial(basis[pr.i], basis[pr.j], k, order), view, k, order);
    if (r.empty()) continue;
    if (r.back().mono.is_one()) return unit();
    make_monic(r, k);
    basis.push_back(std::move(r));
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) add_pair(i, basis.size() - 1);
  }

  // Minimize: drop generators whose lead is divisible by another kept lead.
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
      if (i == j) continue;
      const Monomial& a = basis[j].back().mono;
      const Monomial& b = basis[i].back().mono;
      if (a.divides(b) && (a != b || j < i)) drop = true;
    }
    if (!drop) kept.push_back(i);
  }
  // Inter-reduce the tails.
  std::vector<Polynomial> reduced;
  for (const std::size_t i : kept) {
    view.clear();
    for (const std::size_t j : kept) {
      if (j != i) view.push_back(&basis[j]);
    }
    TermVec tail(basis[i].begin(), basis[i].end() - 1);
    TermVec r = reduce(std::move(tail), view, k, order);
    r.push_back(basis[i].back());
    reduced.push_back(to_polynomial(field, nvars, std::move(r)));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(order), b.leading_monomial(order));
  });
  return GroebnerBasis(field, nvars, order, std::move(reduced));
}

bool is_groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order) {
  std::vector<TermVec> basis;
  FieldPtr field;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    field = g.field();
    TermVec v = detail::ascending(g, order);
    make_monic(v, *field);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return true;
  std::vector<const TermVec*> view;
  for (const auto& b : basis) view.push_back(&b);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!reduce(s_polynomial(basis[i], basis[j], *field, order), view, *field, order).empty()) return false;
    }
  }
  return true;
}

Footprint standard_monomials(const GroebnerBasis& gb) {
  if (!gb.is_zero_dimensional()) throw std::invalid_argument("the ideal is not zero-dimensional; its footprint is infinite");
  Footprint fp;
  if (gb.is_unit_ideal()) return fp;
  const std::size_t s = gb.nvars();
  std::unordered_set<Monomial> seen;
  std::vector<Monomial> frontier{Monomial(s)};
  seen.insert(frontier.front());
  // Breadth-first closure: every divisor of a standard monomial is standard,
  // so each standard monomial of degree d+1 is t_i times one of degree d.
  while (!frontier.empty()) {
    fp.per_degree.push_back(frontier.size());
    fp.monomials.insert(fp.monomials.end(), frontier.begin(), frontier.end());
    if (fp.monomials.size() > kFootprintCap) throw Error("footprint exceeds the supported size");
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      for (std::size_t i = 0; i < s; ++i) {
        Monomial c = m * Monomial::variable(s, i);
        if (gb.is_standard(c) && seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  std::sort(fp.monomials.begin(), fp.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return gb.order().less(a, b); });
  return fp;
}

std::size_t affine_hilbert_function(const GroebnerBasis& gb, int d) {
  if (d < 0) return 0;
  return standard_monomials(gb).count_up_to(d);
}

std::size_t degree_zero_dim(const GroebnerBasis& gb) { return standard_monomials(gb).size(); }

int regularity_index(const GroebnerBasis& gb) { return std::max(0, standard_monomials(gb).max_degree()); }

std::size_t monomial_ideal_degree(std::span<const Monomial> initial_gens, std::span<const Monomial> extra,
                                  std::size_t s) {
  std::vector<Monomial> gens(initial_gens.begin(), initial_gens.end());
  gens.insert(gens.end(), extra.begin(), extra.end());
  std::vector<unsigned> bound(s, 0);
  for (const auto& g : gens) {
    if (g.nvars() != s) throw std::invalid_argument("monomial has the wrong number of variables");
    if (g.is_one()) return 0;
    const auto v = g.pure_power_variable();
    if (v >= 0) {
      auto& b = bound[static_cast<std::size_t>(v)];
      b = b == 0 ? g.degree() : std::min(b, g.degree());
    }
  }
  std::uint64_t box = 1;
  for (const unsigned b : bound) {
    if (b == 0) throw std::invalid_argument("monomial ideal is not zero-dimensional");
    box *= b;
    if (box > 500'000'000ull) throw Error("monomial box too large to sieve");
  }
  // Generators with some exponent at or past the bound cannot divide anything in the box.
  std::vector<Monomial> inside;
  for (const auto& g : gens) {
    bool fits = true;
    for (std::size_t i = 0; i < s && fits; ++i) fits = g[i] < bound[i];
    if (fits) inside.push_back(g);
  }
  std::vector<unsigned> a(s, 0);
  std::size_t count = 0;
  for (;;) {
    const Monomial m = Monomial::from_exponents(a);
    if (std::none_of(inside.begin(), inside.end(), [&](const Monomial& g) { return g.divides(m); })) ++count;
    std::size_t i = 0;
    while (i < s && ++a[i] == bound[i]) a[i++] = 0;
    if (i == s) break;
  }
  return count;
}

std::uint64_t box_degree(std::span<const unsigned> d, std::span<const unsigned> a) {
  if (d.size() != a.size()) throw std::invalid_argument("box and exponent vectors differ in length");
  std::uint64_t full = 1, rest = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (a[i] >= d[i]) throw std::invalid_argument("t^a lies in the box ideal (a_i >= d_i)");
    if (__builtin_mul_overflow(full, std::uint64_t{d[i]}, &full)) throw std::overflow_error("box degree overflow");
    rest *= d[i] - a[i];
  }
  return full - rest;
}

}  // namespace evalcode
