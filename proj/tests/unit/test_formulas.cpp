#include "doctest.h"

#include "evalcode/codes.hpp"
#include "evalcode/formulas.hpp"
#include "evalcode/grassmann.hpp"
#include "evalcode/weights.hpp"
#include "support.hpp"

using namespace evalcode;

namespace {

SearchOptions no_fp() {
  SearchOptions o;
  o.with_footprint = false;
  return o;
}

/// Largest zero count on the torus over every nonzero polynomial spanned by `monos`.
std::size_t oracle_max_zeros(const FieldPtr& k, const std::vector<Monomial>& monos, const PointSet& T) {
  const std::size_t q = k->order(), n = monos.size();
  std::vector<Elem> coef(n, 0);
  std::size_t best = 0;
  while (true) {
    std::size_t i = 0;
    while (i < n && ++coef[i] == q) coef[i++] = 0;
    if (i == n) break;
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j) {
      if (coef[j] != 0) terms.push_back({monos[j], coef[j]});
    }
    const Polynomial f = Polynomial::from_terms(k, T.dimension(), terms);
    best = std::max(best, support::oracle_zeros(std::span<const Polynomial>(&f, 1), T));
  }
  return best;
}

}  // namespace

TEST_SUITE("formulas") {

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(62, 31) == 465428353255261088ull);
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
  for (std::uint64_t n = 1; n < 30; ++n) {
    for (std::uint64_t k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST_CASE("formula preconditions") {
  CHECK_THROWS_AS(toric_min_distance_formula(3, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(toric_min_distance_formula(3, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(toric_min_distance_formula(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(squarefree_min_distance_formula(2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(squarefree_delta2_formula(3, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(max_zeros_bound(FiniteField::make(5), 4, 2, MaxZerosKind::squarefree_homog_high_d),
                  std::invalid_argument);
  CHECK_THROWS_AS(max_zeros_bound(FiniteField::make(2), 3, 1, MaxZerosKind::squarefree_any), std::invalid_argument);
}

TEST_CASE("toric hypersimplex codes match the closed forms") {
  CHECK(toric_min_distance_formula(3, 4, 1) == 8);
  CHECK(toric_min_distance_formula(3, 4, 2) == 4);
  CHECK(toric_min_distance_formula(3, 4, 3) == 8);
  CHECK(toric_min_distance_formula(3, 4, 4) == 16);
  for (const std::uint32_t q : {2u, 3u, 4u, 5u}) {
    for (std::size_t s = 2; s <= 4; ++s) {
      if (support::powers(q - 1, s)[s] > 81) continue;
      for (int d = 1; d <= static_cast<int>(s); ++d) {
        const EvaluationCode c = toric_hypersimplex_code(q, s, d);
        CHECK(c.dimension() == toric_dimension_formula(q, s, d));
        if (*gaussian_binomial(q, c.dimension(), 1) > 200000) continue;
        const WeightReport w = ghw(c, 1, no_fp());
        CHECK(w.status == WeightStatus::exact);
        CHECK_MESSAGE(w.value == toric_min_distance_formula(q, s, d), "q=", q, " s=", s, " d=", d);
        if (c.length() <= 16) CHECK(w.value == support::oracle_ghw(*c.field(), c.generator_matrix(), 1));
      }
    }
  }
}

TEST_CASE("squarefree codes match the closed forms") {
  for (const std::uint32_t q : {3u, 4u, 5u}) {
    for (std::size_t s = 1; s <= 4; ++s) {
      if (support::powers(q - 1, s)[s] > 81) continue;
      for (int d = 1; d <= static_cast<int>(s); ++d) {
        const EvaluationCode c = squarefree_code(q, s, d);
        CHECK(c.dimension() == squarefree_dimension_formula(q, s, d));
        if (*gaussian_binomial(q, c.dimension(), 1) <= 200000) {
          CHECK(ghw(c, 1, no_fp()).value == squarefree_min_distance_formula(q, s, d));
        }
        if (c.dimension() >= 2 && *gaussian_binomial(q, c.dimension(), 2) <= 200000) {
          const std::uint64_t d2 = ghw(c, 2, no_fp()).value;
          CHECK_MESSAGE(d2 == squarefree_delta2_formula(q, s, d), "q=", q, " s=", s, " d=", d);
          if (c.length() <= 16) CHECK(d2 == support::oracle_ghw(*c.field(), c.generator_matrix(), 2));
        }
      }
    }
  }
}

TEST_CASE("maximum zero counts are attained and never exceeded") {
  for (const std::uint32_t q : {3u, 4u}) {
    const FieldPtr k = FiniteField::of_order(q);
    for (std::size_t s = 1; s <= 3; ++s) {
      const PointSet T = torus(k, s);
      for (int d = 1; d <= static_cast<int>(s); ++d) {
        const MaxZeros mz = max_zeros_bound(k, s, d, MaxZerosKind::squarefree_any);
        CHECK(support::oracle_zeros(std::span<const Polynomial>(&mz.extremal, 1), T) == mz.bound);
        CHECK(mz.extremal.degree() <= d);
        const auto monos = squarefree_monomials(s, d, DegreeMode::up_to_degree);
        if (support::powers(q, monos.size())[monos.size()] <= 20000) CHECK(oracle_max_zeros(k, monos, T) == mz.bound);
      }
    }
  }
  for (const std::uint32_t q : {3u, 4u, 5u}) {
    const FieldPtr k = FiniteField::of_order(q);
    for (std::size_t s = 3; s <= 5; ++s) {
      if (support::powers(q - 1, s)[s] > 1024) continue;
      const PointSet T = torus(k, s);
      for (int d = static_cast<int>(s / 2) + 1; d < static_cast<int>(s); ++d) {
        const MaxZeros mz = max_zeros_bound(k, s, d, MaxZerosKind::squarefree_homog_high_d);
        CHECK(support::oracle_zeros(std::span<const Polynomial>(&mz.extremal, 1), T) == mz.bound);
        for (const auto& t : mz.extremal.terms()) CHECK((t.mono.is_squarefree() && t.mono.degree() == unsigned(d)));
        const auto monos = squarefree_monomials(s, d, DegreeMode::exact_degree);
        if (support::powers(q, monos.size())[monos.size()] <= 20000) CHECK(oracle_max_zeros(k, monos, T) == mz.bound);
      }
    }
  }
}

TEST_CASE("zeros of a product of differences on the torus") {
  for (const std::uint32_t q : {3u, 4u}) {
    const FieldPtr k = FiniteField::of_order(q);
    for (std::size_t s = 2; s <= 6; ++s) {
      const PointSet T = torus(k, s);
      const auto p1 = support::powers(q - 1, s), p2 = support::powers(q - 2, s);
      for (std::size_t n = 1; 2 * n <= s; ++n) {
        Polynomial f = Polynomial::constant(k, s, 1);
        for (std::size_t i = 0; i < n; ++i) f = f * (Polynomial::variable(k, s, 2 * i) - Polynomial::variable(k, s, 2 * i + 1));
        CHECK(support::oracle_zeros(std::span<const Polynomial>(&f, 1), T) == p1[s] - p2[n] * p1[s - n]);
      }
    }
  }
}

}
