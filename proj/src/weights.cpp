#include "evalcode/weights.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "evalcode/error.hpp"
#include "evalcode/grassmann.hpp"
#include "evalcode/parallel.hpp"

namespace evalcode {

std::string to_string(WeightStatus status) {
  switch (status) {
    case WeightStatus::exact:
      return "exact";
    case WeightStatus::lower_bound:
      return "lower_bound";
    case WeightStatus::upper_bound:
      return "upper_bound";
    case WeightStatus::budget_exceeded:
      return "budget_exceeded";
  }
  return "?";
}

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (const auto w : b) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

// Best candidate of a search: most common zeros, earliest index on ties.
struct Best {
  std::size_t zeros = 0;
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  bool found = false;

  void offer(std::size_t z, std::uint64_t i) {
    if (!found || z > zeros || (z == zeros && i < index)) {
      zeros = z;
      index = i;
      found = true;
    }
  }
};

void atomic_max(std::atomic<std::size_t>& a, std::size_t v) {
  std::size_t cur = a.load();
  while (v > cur && !a.compare_exchange_weak(cur, v)) {
  }
}

// Evaluates combinations of the standardized basis through a table of monomial values per point.
class DegreeKernel {
 public:
  explicit DegreeKernel(const EvaluationCode& code) : k_(*code.field()), m_(code.length()), kdim_(code.dimension()) {
    std::unordered_map<Monomial, std::size_t> index;
    for (const auto& b : code.basis()) {
      for (const auto& t : b.terms()) {
        if (index.emplace(t.mono, monos_.size()).second) monos_.push_back(t.mono);
      }
    }
    nm_ = monos_.size();
    basis_.assign(kdim_ * nm_, 0);
    for (std::size_t j = 0; j < kdim_; ++j) {
      for (const auto& t : code.basis()[j].terms()) basis_[j * nm_ + index.at(t.mono)] = t.coeff;
    }
    values_.assign(m_ * nm_, 0);
    const PointSet& X = code.points();
    for (std::size_t p = 0; p < m_; ++p) {
      for (std::size_t u = 0; u < nm_; ++u) {
        Elem v = 1;
        for (std::size_t i = 0; i < X.dimension(); ++i) {
          if (monos_[u][i] != 0) v = k_.mul(v, k_.pow(X[p][i], monos_[u][i]));
        }
        values_[p * nm_ + u] = v;
      }
    }
  }

  // Sparse coefficient rows (monomial index, coefficient) of the r polynomials M * basis.
  void combine(const Matrix& M, std::vector<std::vector<std::pair<std::size_t, Elem>>>& rows) const {
    rows.resize(M.rows());
    std::vector<Elem> dense(nm_);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      std::fill(dense.begin(), dense.end(), 0);
      for (std::size_t j = 0; j < kdim_; ++j) {
        const Elem c = M(i, j);
        if (c == 0) continue;
        for (std::size_t u = 0; u < nm_; ++u) {
          if (basis_[j * nm_ + u] != 0) dense[u] = k_.add(dense[u], k_.mul(c, basis_[j * nm_ + u]));
        }
      }
      rows[i].clear();
      for (std::size_t u = 0; u < nm_; ++u) {
        if (dense[u] != 0) rows[i].emplace_back(u, dense[u]);
      }
    }
  }

  // Common zeros in X; gives up (returning a value below `need`) once `need` is out of reach.
  std::size_t common_zeros(const std::vector<std::vector<std::pair<std::size_t, Elem>>>& rows, std::size_t need) const {
    std::size_t zeros = 0;
    for (std::size_t p = 0; p < m_; ++p) {
      if (zeros + (m_ - p) < need) return zeros;
      const Elem* val = values_.data() + p * nm_;
      bool vanish = true;
      for (const auto& row : rows) {
        Elem s = 0;
        for (const auto& [u, c] : row) s = k_.add(s, k_.mul(c, val[u]));
        if (s != 0) {
          vanish = false;
          break;
        }
      }
      if (vanish) ++zeros;
    }
    return zeros;
  }

 private:
  const FiniteField& k_;
  std::size_t m_, kdim_, nm_ = 0;
  std::vector<Monomial> monos_;
  std::vector<Elem> basis_;   // kdim x nm
  std::vector<Elem> values_;  // m x nm
};

std::vector<Polynomial> combinations(const EvaluationCode& code, const Matrix& M) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Polynomial f(code.field(), code.nvars());
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (M(i, j) != 0) f = f + code.basis()[j].scaled(M(i, j));
    }
    out.push_back(std::move(f));
  }
  return out;
}

void check_r(std::size_t r, std::size_t k) {
  if (r < 1 || r > k) {
    throw std::invalid_argument("r must satisfy 1 <= r <= k (k = " + std::to_string(k) + ", r = " + std::to_string(r) + ")");
  }
}

}  // namespace

WeightReport ghw(const EvaluationCode& code, std::size_t r, const SearchOptions& options) {
  check_r(r, code.dimension());
  const std::uint32_t q = code.field()->order();
  GrassmannEnumerator proto(q, code.dimension(), r);
  const std::uint64_t total = proto.count();
  const std::uint64_t limit = std::min(total, options.budget);
  const DegreeKernel kernel(code);
  const std::size_t m = code.length();

  std::vector<Best> bests(chunk_count(limit, 64));
  std::atomic<std::size_t> global{0};
  parallel_chunks(limit, 64, [&](std::uint64_t lo, std::uint64_t hi, std::size_t w) {
    GrassmannEnumerator e(q, code.dimension(), r);
    e.seek(lo);
    std::vector<std::vector<std::pair<std::size_t, Elem>>> rows;
    Best& best = bests[w];
    for (std::uint64_t i = lo; i < hi; ++i, e.next()) {
      kernel.combine(e.current(), rows);
      const bool verify = options.verify_every != 0 && i % options.verify_every == 0;
      const std::size_t need = verify ? 0 : std::max(best.found ? best.zeros + 1 : 0, global.load());
      const std::size_t z = kernel.common_zeros(rows, need);
      if (verify) {
        const auto F = combinations(code, e.current());
        const std::size_t expect = count_zeros_degree_method(code.ideal(), F);
        if (expect != z) throw std::logic_error("degree count disagrees with direct evaluation");
      }
      if (z >= need) {
        best.offer(z, i);
        atomic_max(global, z);
      }
    }
  });
  Best best;
  for (const auto& b : bests) {
    if (b.found) best.offer(b.zeros, b.index);
  }
  WeightReport report;
  report.r = r;
  report.searched = limit;
  report.value = m - best.zeros;
  const bool complete = limit == total;
  report.status = complete && code.order().is_graded() ? WeightStatus::exact : WeightStatus::upper_bound;
  if (best.found) {
    GrassmannEnumerator e(q, code.dimension(), r);
    e.seek(best.index);
    report.witness = combinations(code, e.current());
  }
  if (options.with_footprint) {
    try {
      report.fp = footprint_bound(code, r, options.budget);
    } catch (const BudgetExceeded&) {
    }
  }
  return report;
}

std::vector<WeightReport> weight_hierarchy(const EvaluationCode& code, const SearchOptions& options) {
  std::vector<WeightReport> out;
  for (std::size_t r = 1; r <= code.dimension(); ++r) out.push_back(ghw(code, r, options));
  return out;
}

std::uint64_t ghw_bruteforce(const FiniteField& field, const Matrix& generator, std::size_t r, std::uint64_t budget) {
  std::vector<std::size_t> piv;
  const Matrix G = row_reduce(field, generator, &piv);
  const std::size_t k = G.rows(), m = G.cols();
  check_r(r, k);
  const std::uint32_t q = field.order();
  GrassmannEnumerator proto(q, k, r);
  if (proto.count() > budget) {
    throw BudgetExceeded(std::to_string(proto.count()) + " subspaces exceed the budget of " + std::to_string(budget));
  }
  const std::size_t words = (m + 63) / 64;

  // Supports of all q^k codewords when that table is small enough.
  std::vector<std::uint64_t> table;
  std::uint64_t qk = 1;
  bool tabulate = true;
  for (std::size_t j = 0; j < k && tabulate; ++j) {
    if (__builtin_mul_overflow(qk, std::uint64_t{q}, &qk) || qk * words > (1u << 24)) tabulate = false;
  }
  std::vector<std::uint64_t> qpow(k, 1);
  for (std::size_t j = 1; j < k; ++j) qpow[j] = qpow[j - 1] * q;
  if (tabulate) {
    table.assign(qk * words, 0);
    std::vector<std::vector<Elem>> stack(k + 1, std::vector<Elem>(m, 0));
    auto rec = [&](auto&& self, std::size_t j, std::uint64_t idx) -> void {
      if (j == k) {
        for (std::size_t c = 0; c < m; ++c) {
          if (stack[j][c] != 0) table[idx * words + c / 64] |= std::uint64_t{1} << (c % 64);
        }
        return;
      }
      for (Elem a = 0; a < q; ++a) {
        for (std::size_t c = 0; c < m; ++c) stack[j + 1][c] = field.add(stack[j][c], field.mul(a, G(j, c)));
        self(self, j + 1, idx + a * qpow[j]);
      }
    };
    rec(rec, 0, 0);
  }

  const std::uint64_t total = proto.count();
  std::vector<std::size_t> bests(chunk_count(total, 256), m + 1);
  parallel_chunks(total, 256, [&](std::uint64_t lo, std::uint64_t hi, std::size_t w) {
    GrassmannEnumerator e(q, k, r);
    e.seek(lo);
    Bits acc(words);
    std::vector<Elem> cw(m);
    std::size_t best = m + 1;
    for (std::uint64_t i = lo; i < hi; ++i, e.next()) {
      std::fill(acc.begin(), acc.end(), 0);
      const Matrix& M = e.current();
      for (std::size_t row = 0; row < r; ++row) {
        if (tabulate) {
          std::uint64_t idx = 0;
          for (std::size_t j = 0; j < k; ++j) idx += M(row, j) * qpow[j];
          for (std::size_t t = 0; t < words; ++t) acc[t] |= table[idx * words + t];
        } else {
          std::fill(cw.begin(), cw.end(), 0);
          for (std::size_t j = 0; j < k; ++j) {
            if (M(row, j) == 0) continue;
            for (std::size_t c = 0; c < m; ++c) cw[c] = field.add(cw[c], field.mul(M(row, j), G(j, c)));
          }
          for (std::size_t c = 0; c < m; ++c) {
            if (cw[c] != 0) acc[c / 64] |= std::uint64_t{1} << (c % 64);
          }
        }
      }
      best = std::min(best, popcount(acc));
    }
    bests[w] = best;
  });
  return *std::min_element(bests.begin(), bests.end());
}

std::uint64_t ghw_bruteforce(const EvaluationCode& code, std::size_t r, std::uint64_t budget) {
  return ghw_bruteforce(*code.field(), code.generator_matrix(), r, budget);
}

namespace {

// Minimum weight over monic standard polynomials whose leading monomial has degree exactly d.
WeightReport search_degree(const PointSet& X, int d, const Footprint& fp,
                           const SearchOptions& options) {
  const FiniteField& k = *X.field();
  const std::uint32_t q = k.order();
  const std::size_t m = X.size();
  // fp.monomials is ascending in a graded order, so everything before a degree-d
  // monomial has degree <= d.
  std::vector<std::size_t> leads;
  for (std::size_t i = 0; i < fp.size(); ++i) {
    if (static_cast<int>(fp.monomials[i].degree()) == d) leads.push_back(i);
  }
  std::vector<std::vector<Elem>> values;
  const std::size_t upto = leads.empty() ? 0 : leads.back() + 1;
  for (std::size_t i = 0; i < upto; ++i) {
    const Polynomial mono = Polynomial::from_monomial(X.field(), fp.monomials[i]);
    std::vector<Elem> v(m);
    for (std::size_t p = 0; p < m; ++p) v[p] = mono.evaluate(X[p]);
    values.push_back(std::move(v));
  }
  // Block b: lead fp.monomials[leads[b]] with q^{leads[b]} tails.
  std::vector<std::uint64_t> start{0};
  bool truncated = false;
  for (const std::size_t l : leads) {
    std::uint64_t n = 1;
    for (std::size_t t = 0; t < l && !truncated; ++t) truncated = __builtin_mul_overflow(n, std::uint64_t{q}, &n);
    std::uint64_t next = 0;
    if (truncated || __builtin_add_overflow(start.back(), n, &next)) {
      truncated = true;
      next = std::numeric_limits<std::uint64_t>::max();
    }
    start.push_back(next);
    if (truncated) break;
  }
  const std::uint64_t total = start.back();
  const std::uint64_t limit = std::min(total, options.budget);
  truncated = truncated || limit < total;

  const auto decode = [&](std::uint64_t idx, std::size_t& block, std::vector<Elem>& digits) {
    block = static_cast<std::size_t>(std::upper_bound(start.begin(), start.end(), idx) - start.begin()) - 1;
    digits.assign(leads[block], 0);
    std::uint64_t rest = idx - start[block];
    for (std::size_t t = digits.size(); t-- > 0;) {
      digits[t] = static_cast<Elem>(rest % q);
      rest /= q;
    }
  };

  std::vector<Best> bests(chunk_count(limit, 1024));
  parallel_chunks(limit, 1024, [&](std::uint64_t lo, std::uint64_t hi, std::size_t w) {
    std::size_t block = 0;
    std::vector<Elem> digits;
    std::vector<Elem> cur(m);
    Best& best = bests[w];
    const auto rebuild = [&] {
      cur = values[leads[block]];
      for (std::size_t t = 0; t < digits.size(); ++t) {
        if (digits[t] == 0) continue;
        for (std::size_t p = 0; p < m; ++p) cur[p] = k.add(cur[p], k.mul(digits[t], values[t][p]));
      }
    };
    if (lo < hi) {
      decode(lo, block, digits);
      rebuild();
    }
    for (std::uint64_t i = lo; i < hi; ++i) {
      const auto z = static_cast<std::size_t>(std::count(cur.begin(), cur.end(), Elem{0}));
      best.offer(z, i);
      if (i + 1 == hi) break;
      // Odometer step, updating the evaluation vector by the change in each digit.
      std::size_t t = digits.size();
      bool carried_out = true;
      while (t > 0) {
        --t;
        const Elem old = digits[t];
        const Elem now = old + 1 < q ? old + 1 : 0;
        digits[t] = now;
        const Elem delta = k.sub(now, old);
        for (std::size_t p = 0; p < m; ++p) cur[p] = k.add(cur[p], k.mul(delta, values[t][p]));
        if (now != 0) {
          carried_out = false;
          break;
        }
      }
      if (carried_out) {
        ++block;
        digits.assign(leads[block], 0);
        rebuild();
      }
    }
  });
  Best best;
  for (const auto& b : bests) {
    if (b.found) best.offer(b.zeros, b.index);
  }
  WeightReport report;
  report.r = 1;
  report.searched = limit;
  report.status = truncated ? WeightStatus::upper_bound : WeightStatus::exact;
  report.value = m - best.zeros;
  if (best.found) {
    std::size_t block = 0;
    std::vector<Elem> digits;
    decode(best.index, block, digits);
    std::vector<Term> terms{{fp.monomials[leads[block]], 1}};
    for (std::size_t t = 0; t < digits.size(); ++t) terms.push_back({fp.monomials[t], digits[t]});
    report.witness.push_back(Polynomial::from_terms(X.field(), X.dimension(), std::move(terms)));
  }
  return report;
}

}  // namespace

std::vector<WeightReport> min_distance_profile(const PointSet& X, int max_degree, const GroebnerBasis& gbI,
                                               const SearchOptions& options) {
  if (!gbI.order().is_graded()) throw std::invalid_argument("the recursive minimum distance needs a graded order");
  if (max_degree < 1) throw std::invalid_argument("degree must be at least 1");
  SearchOptions base = options;
  base.with_footprint = false;
  std::vector<WeightReport> out;
  out.push_back(ghw(rm_code(X, 1, gbI), 1, base));
  const Footprint fp = standard_monomials(gbI);
  for (int d = 2; d <= max_degree; ++d) {
    const WeightReport& prev = out.back();
    if (prev.value <= 1 || fp.max_degree() < d) {
      WeightReport same = prev;
      same.searched = 0;
      out.push_back(std::move(same));
      continue;
    }
    out.push_back(search_degree(X, d, fp, base));
  }
  return out;
}

WeightReport min_distance_recursive(const PointSet& X, int d, const GroebnerBasis& gbI, const SearchOptions& options) {
  return min_distance_profile(X, d, gbI, options).back();
}

WeightReport min_distance_recursive(const PointSet& X, int d, const MonomialOrder& order, const SearchOptions& options) {
  if (!order.is_graded()) throw std::invalid_argument("the recursive minimum distance needs a graded order");
  return min_distance_recursive(X, d, vanishing_ideal(X, order), options);
}

std::uint64_t footprint_bound(const Footprint& footprint, std::span<const Monomial> leads, std::size_t r,
                              std::uint64_t budget) {
  check_r(r, leads.size());
  const std::size_t n = footprint.size(), words = (n + 63) / 64;
  // shadow[l] = footprint monomials divisible by leads[l]; fp_r is the smallest union of r shadows.
  std::vector<Bits> shadow(leads.size(), Bits(words, 0));
  for (std::size_t l = 0; l < leads.size(); ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      if (leads[l].divides(footprint.monomials[i])) shadow[l][i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  std::size_t best = n + 1;
  std::uint64_t visited = 0;
  std::vector<Bits> stack(r + 1, Bits(words, 0));
  auto dfs = [&](auto&& self, std::size_t from, std::size_t depth) -> void {
    if (depth == r) {
      best = std::min(best, popcount(stack[depth]));
      return;
    }
    for (std::size_t l = from; l + (r - depth) <= leads.size(); ++l) {
      if (++visited > budget) throw BudgetExceeded("footprint search exceeds the budget of " + std::to_string(budget));
      for (std::size_t t = 0; t < words; ++t) stack[depth + 1][t] = stack[depth][t] | shadow[l][t];
      // Unions only grow, so a branch already at the best size cannot improve.
      if (popcount(stack[depth + 1]) >= best) continue;
      self(self, l + 1, depth + 1);
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

std::uint64_t footprint_bound(const EvaluationCode& code, std::size_t r, std::uint64_t budget) {
  return footprint_bound(code.footprint(), code.leading_monomials(), r, budget);
}

std::uint64_t rm_footprint(const GroebnerBasis& gbI, int d, std::size_t r, std::uint64_t budget) {
  if (!gbI.order().is_graded()) throw std::invalid_argument("fp_I(d, r) needs a graded order");
  const Footprint fp = standard_monomials(gbI);
  std::vector<Monomial> leads;
  for (const auto& m : fp.monomials) {
    if (static_cast<int>(m.degree()) <= d) leads.push_back(m);
  }
  return footprint_bound(fp, leads, r, budget);
}

std::uint64_t rm_footprint(const PointSet& X, int d, std::size_t r, const MonomialOrder& order) {
  return rm_footprint(vanishing_ideal(X, order), d, r);
}

std::uint64_t squarefree_footprint(std::uint32_t q, std::size_t s, int d, std::size_t r, std::uint64_t budget) {
  if (q < 3) throw std::invalid_argument("the squarefree footprint needs q >= 3");
  if (d < 0 || static_cast<std::size_t>(d) > s) throw std::invalid_argument("degree must satisfy 0 <= d <= s");
  // Footprint of I(T): the box of exponents 0..q-2 in every variable.
  Footprint box;
  std::vector<unsigned> a(s, 0);
  for (;;) {
    box.monomials.push_back(Monomial::from_exponents(a));
    std::size_t i = 0;
    while (i < s && ++a[i] == q - 1) a[i++] = 0;
    if (i == s) break;
    if (box.monomials.size() > 20'000'000) throw Error("torus footprint too large");
  }
  const auto leads = squarefree_monomials(s, d, DegreeMode::up_to_degree);
  return footprint_bound(box, leads, r, budget);
}

}  // namespace evalcode
