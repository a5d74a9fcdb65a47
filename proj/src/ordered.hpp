#pragma once

// Working representation for the reduction engines: terms sorted ascending
// by a monomial order, so the leading term sits at back() and pops in O(1).

#include <algorithm>
#include <vector>

#include "evalcode/polynomial.hpp"

namespace evalcode::detail {

using TermVec = std::vector<Term>;

inline TermVec ascending(const Polynomial& f, const MonomialOrder& order) {
  TermVec v(f.terms().begin(), f.terms().end());
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return order.less(a.mono, b.mono); });
  return v;
}

/// p <- p - c * mono * g, where g's leading term is skipped when `skip_lead` is set
/// (the caller has already cancelled it against p's leading term).
inline void sub_mul(TermVec& p, Elem c, const Monomial& mono, const TermVec& g, bool skip_lead,
                    const FiniteField& field, const MonomialOrder& order, TermVec& scratch) {
  scratch.clear();
  scratch.reserve(p.size() + g.size());
  const Elem negc = field.neg(c);
  const std::size_t gend = skip_lead ? g.size() - 1 : g.size();
  std::size_t i = 0, j = 0;
  while (i < p.size() && j < gend) {
    const Monomial m = g[j].mono * mono;
    const auto cmp = order.compare(p[i].mono, m);
    if (cmp < 0) {
      scratch.push_back(p[i++]);
    } else if (cmp > 0) {
      scratch.push_back({m, field.mul(negc, g[j].coeff)});
      ++j;
    } else {
      const Elem s = field.add(p[i].coeff, field.mul(negc, g[j].coeff));
      if (s != 0) scratch.push_back({p[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) scratch.push_back(p[i]);
  for (; j < gend; ++j) scratch.push_back({g[j].mono * mono, field.mul(negc, g[j].coeff)});
  p.swap(scratch);
}

}  // namespace evalcode::detail
