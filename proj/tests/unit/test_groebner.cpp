#include "doctest.h"

#include "evalcode/groebner.hpp"
#include "evalcode/parse.hpp"
#include "evalcode/variety.hpp"
#include "support.hpp"

using namespace evalcode;

namespace {

std::vector<Polynomial> L(const char* text, const FieldPtr& k, std::size_t s,
                          const std::vector<std::string>& names = {}) {
  return parse_polynomial_list(text, k, s, names);
}

bool is_reduced(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.generators().size(); ++i) {
    const auto& g = gb.generators()[i];
    if (g.leading_term(gb.order()).coeff != 1) return false;
    for (std::size_t j = 0; j < gb.generators().size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g.terms()) {
        if (gb.initial_gens()[j].divides(t.mono)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("torus generators are their own reduced basis") {
  for (const std::uint32_t q : {3u, 4u, 5u, 7u}) {
    const FieldPtr k = FiniteField::of_order(q);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < 3; ++i) {
      gens.push_back(Polynomial::from_monomial(k, Monomial::variable(3, i, q - 1)) - Polynomial::constant(k, 3, 1));
    }
    CHECK(is_groebner_basis(gens, MonomialOrder::grevlex()));
    const GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex());
    CHECK(gb.generators().size() == 3);
    for (const auto& g : gens) CHECK(std::find(gb.generators().begin(), gb.generators().end(), g) != gb.generators().end());
  }
}

TEST_CASE("ideal of a single point") {
  const FieldPtr k = FiniteField::make(7);
  const GroebnerBasis gb = buchberger(L("t1 - 3; t2 + 1; t1*t2 - t2 + 2*t1 + 3", k, 2), MonomialOrder::grevlex());
  CHECK(gb.generators().size() == 2);
  CHECK(gb.contains(L("t1 - 3", k, 2)[0]));
  CHECK(gb.contains(L("t2 - 6", k, 2)[0]));
  const Footprint fp = standard_monomials(gb);
  CHECK(fp.size() == 1);
  CHECK(degree_zero_dim(gb) == 1);
  CHECK(regularity_index(gb) == 0);
}

TEST_CASE("unit and zero ideals") {
  const FieldPtr k = FiniteField::make(5);
  const GroebnerBasis unit = buchberger(L("t1; t1 - 1", k, 2), MonomialOrder::grevlex());
  CHECK(unit.is_unit_ideal());
  CHECK(unit.generators().size() == 1);
  CHECK(degree_zero_dim(unit) == 0);
  const GroebnerBasis zero = buchberger(std::vector<Polynomial>{Polynomial(k, 2)}, k, 2, MonomialOrder::grevlex());
  CHECK(zero.is_zero_ideal());
  CHECK_FALSE(zero.is_zero_dimensional());
  CHECK_THROWS_AS(standard_monomials(zero), std::invalid_argument);
  const GroebnerBasis line = buchberger(L("t1 - t2", k, 2), MonomialOrder::grevlex());
  CHECK_FALSE(line.is_zero_dimensional());
  CHECK_THROWS_AS(degree_zero_dim(line), std::invalid_argument);
  CHECK_THROWS_AS(affine_hilbert_function(line, 2), std::invalid_argument);
}

TEST_CASE("five points in A^2 over F_3") {
  const FieldPtr k = FiniteField::make(3);
  const GroebnerBasis gb = buchberger(L("t1^2 - t1; t2^3 - t2; t1*t2^2 - t1*t2", k, 2), MonomialOrder::grevlex());
  CHECK(standard_monomials(gb).size() == 5);
  CHECK(affine_hilbert_function(gb, 1) == 3);
  CHECK(affine_hilbert_function(gb, 2) == 5);
  CHECK(affine_hilbert_function(gb, 0) == 1);
}

TEST_CASE("random point sets: Groebner basis of I(X) recovers |X|") {
  for (const std::uint32_t q : {3u, 4u, 5u}) {
    const FieldPtr k = FiniteField::of_order(q);
    for (int trial = 0; trial < 10; ++trial) {
      const PointSet X = support::random_points(k, 2, support::uniform(1, q * q - 1));
      std::vector<Polynomial> gens;
      // Field equations plus the interpolated generators, shuffled: same ideal again.
      for (std::size_t i = 0; i < 2; ++i) {
        Polynomial f = Polynomial::from_monomial(k, Monomial::variable(2, i, q)) - Polynomial::variable(k, 2, i);
        gens.push_back(f);
      }
      const GroebnerBasis from_points = vanishing_ideal(X);
      for (const auto& g : from_points.generators()) gens.push_back(g);
      std::shuffle(gens.begin(), gens.end(), support::rng());
      const GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex());
      CHECK(degree_zero_dim(gb) == X.size());
      CHECK(gb.generators().size() == from_points.generators().size());
      CHECK(is_reduced(gb));
    }
  }
}

TEST_CASE("Buchberger output is a reduced Groebner basis on random ideals") {
  for (const auto& ord : {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex()}) {
    for (const std::uint32_t q : {3u, 4u, 5u}) {
      const FieldPtr k = FiniteField::of_order(q);
      for (int trial = 0; trial < 15; ++trial) {
        std::vector<Polynomial> gens;
        for (int j = 0; j < 3; ++j) gens.push_back(support::random_poly(k, 3, 3, 3));
        for (std::size_t i = 0; i < 3; ++i) {
          gens.push_back(Polynomial::from_monomial(k, Monomial::variable(3, i, q)) - Polynomial::variable(k, 3, i));
        }
        const GroebnerBasis gb = buchberger(gens, ord);
        CHECK(is_groebner_basis(gb.generators(), ord));
        CHECK(is_reduced(gb));
        CHECK(gb.is_zero_dimensional());
        for (const auto& g : gens) CHECK(gb.contains(g));
        // Same ideal regardless of generator order.
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), support::rng());
        const GroebnerBasis again = buchberger(shuffled, ord);
        CHECK(std::equal(gb.generators().begin(), gb.generators().end(), again.generators().begin(),
                         again.generators().end()));
      }
    }
  }
}

TEST_CASE("normal forms") {
  const FieldPtr k = FiniteField::make(5);
  const GroebnerBasis gb = vanishing_ideal(torus(k, 2));
  const Polynomial f = parse_polynomial("t1^2*t2^4", k, 2);
  CHECK(normal_form(f, gb) == parse_polynomial("t1^2", k, 2));
  for (const auto& g : gb.generators()) CHECK(normal_form(g, gb).is_zero());
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial h = support::random_poly(k, 2, 12, 8);
    const Polynomial r = normal_form(h, gb);
    CHECK(normal_form(r, gb) == r);
    for (const auto& t : r.terms()) CHECK(gb.is_standard(t.mono));
  }
}

TEST_CASE("footprints, Hilbert function, degree and regularity") {
  const FieldPtr k = FiniteField::make(5);
  const GroebnerBasis gb = vanishing_ideal(torus(k, 2));
  const Footprint fp = standard_monomials(gb);
  CHECK(fp.size() == 16);
  for (const auto& m : fp.monomials) CHECK((m[0] <= 3 && m[1] <= 3));
  std::vector<std::size_t> h;
  for (int d = 1; d <= 6; ++d) h.push_back(affine_hilbert_function(gb, d));
  CHECK(h == std::vector<std::size_t>{3, 6, 10, 13, 15, 16});
  CHECK(regularity_index(gb) == 6);
  CHECK(fp.max_degree() == 6);

  // Closure under division and membership by the initial generators.
  for (const auto& m : fp.monomials) {
    for (std::size_t i = 0; i < 2; ++i) {
      if (m[i] == 0) continue;
      const Monomial down = m / Monomial::variable(2, i);
      CHECK(std::find(fp.monomials.begin(), fp.monomials.end(), down) != fp.monomials.end());
    }
  }
  for (unsigned a = 0; a < 8; ++a) {
    for (unsigned b = 0; b < 8; ++b) {
      const Monomial m{a, b};
      const bool member = std::find(fp.monomials.begin(), fp.monomials.end(), m) != fp.monomials.end();
      CHECK(member == gb.is_standard(m));
    }
  }
}

TEST_CASE("Hilbert function is non-decreasing and reaches |X| at the regularity index") {
  for (const std::uint32_t q : {3u, 4u, 5u}) {
    const FieldPtr k = FiniteField::of_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      const PointSet X = support::random_points(k, 3, support::uniform(1, 20));
      const GroebnerBasis gb = vanishing_ideal(X);
      const int reg = regularity_index(gb);
      CHECK(degree_zero_dim(gb) == X.size());
      std::size_t prev = 0;
      for (int d = 0; d <= reg + 1; ++d) {
        const std::size_t h = affine_hilbert_function(gb, d);
        CHECK(h >= prev);
        CHECK((h == X.size()) == (d >= reg));
        prev = h;
      }
    }
  }
}

TEST_CASE("monomial ideal degree and box degree") {
  const std::vector<Monomial> box44{{4, 0}, {0, 4}};
  const std::vector<Monomial> n11{{1, 1}};
  CHECK(monomial_ideal_degree(box44, n11, 2) == 7);
  CHECK(monomial_ideal_degree(box44, {}, 2) == 16);
  const std::vector<Monomial> box23{{2, 0}, {0, 3}};
  const std::vector<Monomial> n10{{1, 0}};
  CHECK(monomial_ideal_degree(box23, n10, 2) == 3);
  const unsigned d44[] = {4, 4}, a11[] = {1, 1}, a00[] = {0, 0};
  CHECK(box_degree(d44, a11) == 7);
  CHECK(box_degree(d44, a00) == 0);
  const unsigned a40[] = {4, 0};
  CHECK_THROWS_AS(box_degree(d44, a40), std::invalid_argument);
  const std::vector<Monomial> not_zero_dim{{2, 0}};
  CHECK_THROWS_AS(monomial_ideal_degree(not_zero_dim, n11, 2), std::invalid_argument);

  // Squarefree t^a inside the (q-1)-box: (q-1)^s - (q-2)^d (q-1)^(s-d).
  for (unsigned q = 3; q <= 5; ++q) {
    for (std::size_t s = 1; s <= 4; ++s) {
      for (std::size_t d = 0; d <= s; ++d) {
        std::vector<unsigned> box(s, q - 1), a(s, 0);
        for (std::size_t i = 0; i < d; ++i) a[i] = 1;
        const auto pq1 = support::powers(q - 1, s), pq2 = support::powers(q - 2, s);
        CHECK(box_degree(box, a) == pq1[s] - pq2[d] * pq1[s - d]);
      }
    }
  }
}

TEST_CASE("box degree agrees with the sieve on all boxes up to 10^4") {
  std::size_t checked = 0;
  for (unsigned d1 = 1; d1 <= 12; ++d1) {
    for (unsigned d2 = 1; d2 <= 12; ++d2) {
      for (unsigned d3 = 1; d3 <= 8 && d1 * d2 * d3 <= 10000; ++d3) {
        const std::vector<unsigned> d{d1, d2, d3};
        const std::vector<Monomial> box{Monomial{d1, 0, 0}, Monomial{0, d2, 0}, Monomial{0, 0, d3}};
        const std::vector<unsigned> a{static_cast<unsigned>(support::uniform(0, d1 - 1)),
                                      static_cast<unsigned>(support::uniform(0, d2 - 1)),
                                      static_cast<unsigned>(support::uniform(0, d3 - 1))};
        const std::vector<Monomial> extra{Monomial::from_exponents(a)};
        const auto sieve = monomial_ideal_degree(box, extra, 3);
        CHECK(box_degree(d, a) == sieve);
        CHECK(sieve == support::oracle_box_count(d, {box[0], box[1], box[2], extra[0]}));
        ++checked;
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("monomial ideal degree matches a direct count on random ideals") {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t s = support::uniform(1, 4);
    std::vector<unsigned> box(s);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < s; ++i) {
      box[i] = static_cast<unsigned>(support::uniform(1, 6));
      gens.push_back(Monomial::variable(s, i, box[i]));
    }
    std::vector<Monomial> extra;
    for (std::size_t j = support::uniform(0, 4); j > 0; --j) extra.push_back(support::random_monomial(s, 6));
    std::vector<Monomial> all = gens;
    all.insert(all.end(), extra.begin(), extra.end());
    CHECK(monomial_ideal_degree(gens, extra, s) == support::oracle_box_count(box, all));
  }
}

}
