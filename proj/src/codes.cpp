#include "evalcode/codes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "evalcode/error.hpp"

namespace evalcode {

EvaluationCode::EvaluationCode(PointSet points, GroebnerBasis ideal, std::vector<Polynomial> std_basis)
    : points_(std::move(points)), ideal_(std::move(ideal)), basis_(std::move(std_basis)) {
  for (const auto& b : basis_) leads_.push_back(b.leading_monomial(ideal_.order()));
  generator_ = evaluation_matrix(basis_, points_);
  footprint_ = standard_monomials(ideal_);
}

Matrix evaluation_matrix(std::span<const Polynomial> polys, const PointSet& X) {
  Matrix g(polys.size(), X.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = 0; j < X.size(); ++j) g(i, j) = polys[i].evaluate(X[j]);
  }
  return g;
}

std::vector<Polynomial> standardize(std::span<const Polynomial> basis, const GroebnerBasis& gbI) {
  if (!gbI.is_zero_dimensional()) throw std::invalid_argument("standardization needs a zero-dimensional ideal");
  const MonomialOrder& order = gbI.order();
  const FiniteField& k = *gbI.field();
  std::vector<Polynomial> nf;
  for (const auto& f : basis) nf.push_back(gbI.normal_form(f));

  const auto greater = [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); };
  std::map<Monomial, std::size_t, decltype(greater)> column(greater);
  for (const auto& f : nf) {
    for (const auto& t : f.terms()) column.emplace(t.mono, 0);
  }
  std::vector<Monomial> monos;
  for (auto& [mono, idx] : column) {
    idx = monos.size();
    monos.push_back(mono);
  }
  Matrix a(nf.size(), monos.size());
  for (std::size_t i = 0; i < nf.size(); ++i) {
    for (const auto& t : nf[i].terms()) a(i, column.at(t.mono)) = t.coeff;
  }

  // Forward elimination only, so a basis with distinct leads keeps its tails.
  std::size_t r = 0;
  const std::size_t n = a.rows(), m = a.cols();
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) continue;
    // Rotate so the remaining rows keep their relative order.
    for (std::size_t i = p; i > r; --i) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a(i, j), a(i - 1, j));
    }
    const Elem inv = k.inv(a(r, c));
    for (std::size_t j = c; j < m; ++j) a(r, j) = k.mul(a(r, j), inv);
    for (std::size_t i = r + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Elem f = k.neg(a(i, c));
      for (std::size_t j = c; j < m; ++j) {
        if (a(r, j) != 0) a(i, j) = k.add(a(i, j), k.mul(f, a(r, j)));
      }
    }
    ++r;
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < m; ++j) {
      if (a(i, j) != 0) terms.push_back({monos[j], a(i, j)});
    }
    out.push_back(Polynomial::from_terms(gbI.field(), gbI.nvars(), std::move(terms)));
  }
  return out;
}

EvaluationCode evaluation_code(const PointSet& X, std::span<const Polynomial> basis, const MonomialOrder& order) {
  return evaluation_code(X, basis, vanishing_ideal(X, order));
}

EvaluationCode evaluation_code(const PointSet& X, std::span<const Polynomial> basis, const GroebnerBasis& gbI) {
  if (X.empty()) throw std::invalid_argument("evaluation code on an empty point set");
  for (const auto& f : basis) {
    if (f.nvars() != X.dimension() || !f.field()->same_as(*X.field())) {
      throw std::invalid_argument("basis polynomial from a different ring");
    }
  }
  std::vector<Polynomial> std_basis = standardize(basis, gbI);
  if (std_basis.empty()) throw Error("the basis evaluates to the zero code");
  EvaluationCode code(X, gbI, std::move(std_basis));
  const FiniteField& k = *X.field();
  const Matrix original = evaluation_matrix(basis, X);
  if (rank(k, code.generator_matrix()) != code.dimension() ||
      !same_row_space(k, original, code.generator_matrix())) {
    throw std::logic_error("standardized basis does not span the original code");
  }
  return code;
}

EvaluationCode rm_code(const PointSet& X, int d, const MonomialOrder& order) {
  if (!order.is_graded()) {
    throw std::invalid_argument("Reed-Muller-type codes need a graded order; use evaluation_code for bounds under " +
                                order.name());
  }
  return rm_code(X, d, vanishing_ideal(X, order));
}

EvaluationCode rm_code(const PointSet& X, int d, const GroebnerBasis& gbI) {
  if (!gbI.order().is_graded()) throw std::invalid_argument("Reed-Muller-type codes need a graded order");
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  std::vector<Polynomial> basis;
  for (const auto& m : standard_monomials(gbI).monomials) {
    if (static_cast<int>(m.degree()) <= d) basis.push_back(Polynomial::from_monomial(X.field(), m));
  }
  return evaluation_code(X, basis, gbI);
}

namespace {

EvaluationCode torus_code(std::uint32_t q, std::size_t s, const std::vector<Monomial>& monos,
                          const MonomialOrder& order) {
  const FieldPtr field = FiniteField::of_order(q);
  const PointSet T = torus(field, s);
  std::vector<Polynomial> basis;
  for (const auto& m : monos) basis.push_back(Polynomial::from_monomial(field, m));
  return evaluation_code(T, basis, order);
}

void check_degree(std::size_t s, int d) {
  if (d < 1 || static_cast<std::size_t>(d) > s) throw std::invalid_argument("degree must satisfy 1 <= d <= s");
}

}  // namespace

EvaluationCode toric_hypersimplex_code(std::uint32_t q, std::size_t s, int d, const MonomialOrder& order) {
  check_degree(s, d);
  return torus_code(q, s, squarefree_monomials(s, d, DegreeMode::exact_degree), order);
}

EvaluationCode squarefree_code(std::uint32_t q, std::size_t s, int d, const MonomialOrder& order) {
  check_degree(s, d);
  return torus_code(q, s, squarefree_monomials(s, d, DegreeMode::up_to_degree), order);
}

EvaluationCode generalized_toric_code(std::uint32_t q, std::size_t s, std::span<const std::vector<unsigned>> exponents,
                                      const MonomialOrder& order) {
  std::vector<Monomial> monos;
  for (const auto& a : exponents) {
    if (a.size() != s) throw std::invalid_argument("exponent vector has the wrong length");
    monos.push_back(Monomial::from_exponents(a));
  }
  return torus_code(q, s, monos, order);
}

EvaluationCode projective_rm_code(const PointSet& X, int d, const MonomialOrder& order) {
  if (!X.is_projective()) throw std::invalid_argument("projective codes need normalized projective points");
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  std::vector<Polynomial> basis;
  for (const auto& m : monomials_of_degree(X.dimension(), static_cast<unsigned>(d), DegreeMode::exact_degree)) {
    basis.push_back(Polynomial::from_monomial(X.field(), m));
  }
  return evaluation_code(X, basis, order);
}

}  // namespace evalcode
