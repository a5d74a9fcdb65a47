#pragma once

// Random instance generators and independent oracles. The oracles use only
// field arithmetic and plain loops, never the ideal or search machinery.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "evalcode/codes.hpp"
#include "evalcode/linalg.hpp"
#include "evalcode/polynomial.hpp"
#include "evalcode/variety.hpp"

namespace support {

using namespace evalcode;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed2020);
  return gen;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

/// min(count, q^s) distinct random points of F_q^s, in random order.
inline PointSet random_points(const FieldPtr& k, std::size_t s, std::size_t count) {
  std::size_t all = 1;
  for (std::size_t i = 0; i < s && all < count; ++i) all *= k->order();
  count = std::min(count, all);
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> pts;
  while (pts.size() < count) {
    std::vector<Elem> p(s);
    for (auto& c : p) c = static_cast<Elem>(uniform(0, k->order() - 1));
    if (seen.insert(p).second) pts.push_back(p);
  }
  return PointSet(k, s, pts);
}

inline Monomial random_monomial(std::size_t s, unsigned max_deg) {
  std::vector<unsigned> e(s, 0);
  const unsigned d = static_cast<unsigned>(uniform(0, max_deg));
  for (unsigned i = 0; i < d; ++i) ++e[uniform(0, s - 1)];
  return Monomial::from_exponents(e);
}

/// A nonzero polynomial with at most `max_terms` terms.
inline Polynomial random_poly(const FieldPtr& k, std::size_t s, unsigned max_deg, std::size_t max_terms) {
  while (true) {
    std::vector<Term> terms;
    const std::size_t n = uniform(1, max_terms);
    for (std::size_t i = 0; i < n; ++i) {
      terms.push_back({random_monomial(s, max_deg), static_cast<Elem>(uniform(1, k->order() - 1))});
    }
    Polynomial f = Polynomial::from_terms(k, s, terms);
    if (!f.is_zero()) return f;
  }
}

/// Points of X where all of F vanish, by direct evaluation.
inline std::size_t oracle_zeros(std::span<const Polynomial> F, const PointSet& X) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    bool all = true;
    for (const auto& f : F) all = all && f.evaluate(X[i]) == 0;
    n += all;
  }
  return n;
}

/// Gaussian elimination on a copy of the rows.
inline std::size_t oracle_rank(const FiniteField& k, std::vector<std::vector<Elem>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Elem inv = k.inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const Elem f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = k.sub(rows[i][j], k.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

/**
 * delta_r as the least |J| such that the codewords supported inside J form a
 * space of dimension >= r, i.e. k - rank(G restricted to the other columns) >= r.
 * Exponential in the length; meant for m <= 18.
 */
inline std::uint64_t oracle_ghw(const FiniteField& k, const Matrix& g, std::size_t r) {
  const std::size_t m = g.cols(), dim = g.rows();
  std::uint64_t best = m;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const auto size = static_cast<std::uint64_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    std::vector<std::vector<Elem>> rows(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (!(mask >> j & 1)) rows[i].push_back(g(i, j));
      }
    }
    const std::size_t rk = size == m ? 0 : oracle_rank(k, rows);
    if (dim - rk >= r) best = size;
  }
  return best;
}

/// Monomials t^e with e_i < box_i divisible by no generator.
inline std::size_t oracle_box_count(const std::vector<unsigned>& box, const std::vector<Monomial>& gens) {
  std::size_t count = 0;
  std::vector<unsigned> e(box.size(), 0);
  while (true) {
    const Monomial m = Monomial::from_exponents(e);
    count += std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == box[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
  return count;
}

inline std::vector<std::uint64_t> powers(std::uint64_t b, std::size_t n) {
  std::vector<std::uint64_t> p(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) p[i] = p[i - 1] * b;
  return p;
}

}  // namespace support
