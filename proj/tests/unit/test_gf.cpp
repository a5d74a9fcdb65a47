#include "doctest.h"

#include "evalcode/error.hpp"
#include "evalcode/gf.hpp"
#include "evalcode/parse.hpp"

using namespace evalcode;

TEST_SUITE("gf") {

TEST_CASE("field construction") {
  const FieldPtr f3 = FiniteField::make(3);
  CHECK(f3->order() == 3);
  CHECK(f3->is_prime_field());
  CHECK(f3->modulus().empty());

  const FieldPtr f4 = FiniteField::make(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  CHECK(f4->order() == 4);

  // a^2 + a + 2 over F_5: no roots, so irreducible in degree 2.
  for (std::uint32_t x = 0; x < 5; ++x) CHECK((x * x + x + 2) % 5 != 0);
  const FieldPtr f25 = FiniteField::make(5, 2, std::vector<std::uint32_t>{2, 1, 1});
  CHECK(f25->order() == 25);
  CHECK(f25->modulus() == std::vector<std::uint32_t>{2, 1, 1});
}

TEST_CASE("built-in moduli") {
  for (const std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 49u, 64u, 81u, 121u, 125u}) {
    const FieldPtr k = FiniteField::of_order(q);
    CHECK(k->order() == q);
    CHECK(FiniteField::is_irreducible(k->characteristic(), k->modulus()));
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(FiniteField::make(4), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::make(3, 1, std::vector<std::uint32_t>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::make(17, 3), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::of_order(12), std::invalid_argument);
}

TEST_CASE("arithmetic examples") {
  const FieldPtr f3 = FiniteField::make(3);
  CHECK(f3->add(2, 2) == 1);
  const FieldPtr f4 = FiniteField::make(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  const Elem a = f4->generator();
  CHECK(f4->mul(a, a) == f4->add(a, 1));
  const FieldPtr f5 = FiniteField::make(5);
  for (Elem x = 1; x < 5; ++x) CHECK(f5->pow(x, 4) == 1);
  CHECK(f5->pow(2, -1) == 3);
  CHECK_THROWS_AS(f5->inv(0), std::domain_error);
  CHECK_THROWS_AS(f5->div(1, 0), std::domain_error);
}

TEST_CASE("FieldElement wrapper") {
  const FieldPtr f7 = FiniteField::make(7);
  const auto x = FieldElement::from_int(f7, 3);
  const auto y = FieldElement::from_int(f7, -1);
  CHECK((x + y).code() == 2);
  CHECK((x * y).code() == 4);
  CHECK((x / x).code() == 1);
  CHECK((-x).code() == 4);
  CHECK(x.pow(6).code() == 1);
  CHECK(x.inverse().code() == 5);
  const auto z = FieldElement::from_int(FiniteField::make(5), 1);
  CHECK_THROWS_AS(x + z, std::invalid_argument);
  CHECK_THROWS_AS(FieldElement(f7, 7), std::invalid_argument);
}

TEST_CASE("field axioms, exhaustive for q <= 27") {
  for (const std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u}) {
    CAPTURE(q);
    const FieldPtr k = FiniteField::of_order(q);
    bool ok = true;
    for (Elem x = 0; x < q; ++x) {
      ok = ok && k->add(x, k->neg(x)) == 0 && k->pow(x, q) == x;
      if (x != 0) ok = ok && k->mul(x, k->inv(x)) == 1 && k->pow(x, q - 1) == 1;
      for (Elem y = 0; y < q; ++y) {
        ok = ok && k->add(x, y) == k->add(y, x) && k->mul(x, y) == k->mul(y, x);
        for (Elem z = 0; z < q; ++z) {
          ok = ok && k->add(k->add(x, y), z) == k->add(x, k->add(y, z));
          ok = ok && k->mul(k->mul(x, y), z) == k->mul(x, k->mul(y, z));
          ok = ok && k->mul(x, k->add(y, z)) == k->add(k->mul(x, y), k->mul(x, z));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("element parsing") {
  const FieldPtr f3 = FiniteField::make(3);
  CHECK(parse_element("2", *f3) == 2);
  CHECK(parse_element("-1", *f3) == 2);
  CHECK(parse_element("7", *f3) == 1);
  CHECK(parse_element("2*(1+1)", *f3) == 1);

  const FieldPtr f25 = FiniteField::make(5, 2, std::vector<std::uint32_t>{2, 1, 1});
  const Elem a = f25->generator();
  CHECK(parse_element("a^2+1", *f25) == f25->add(f25->mul(a, a), 1));
  // a^2 = -a - 2 under this modulus.
  CHECK(parse_element("a^2+1", *f25) == parse_element("4*a+4", *f25));
  CHECK(parse_element("(a+1)*(a-1)", *f25) == f25->sub(f25->mul(a, a), 1));

  CHECK_THROWS_AS(parse_element("a", *f3), ParseError);
  CHECK_THROWS_AS(parse_element("2+", *f3), ParseError);
  CHECK_THROWS_AS(parse_element("", *f3), ParseError);
  try {
    parse_element("1+*2", *f3, SourcePos{4, 10});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() >= 10);
  }
}

TEST_CASE("format/parse round trip over every built-in field element") {
  for (const std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u, 49u, 64u, 81u, 121u, 125u}) {
    const FieldPtr k = FiniteField::of_order(q);
    bool ok = true;
    for (const Elem x : k->elements()) ok = ok && parse_element(format_element(*k, x), *k) == x;
    CHECK_MESSAGE(ok, "q = " << q);
  }
}

TEST_CASE("element enumeration") {
  CHECK(FiniteField::make(3)->elements(true) == std::vector<Elem>{1, 2});
  CHECK(FiniteField::of_order(4)->elements().size() == 4);
  const FieldPtr f25 = FiniteField::of_order(25);
  const auto units = f25->elements(true);
  CHECK(units.size() == 24);
  std::vector<std::vector<std::uint32_t>> coeffs;
  for (const Elem x : f25->elements()) coeffs.push_back(f25->coefficients(x));
  CHECK(std::is_sorted(coeffs.begin(), coeffs.end()));
  CHECK(std::adjacent_find(coeffs.begin(), coeffs.end()) == coeffs.end());
}

TEST_CASE("make_field from q and modulus text") {
  CHECK(make_field(9)->order() == 9);
  CHECK(make_field(4, "a^2+a+1")->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK_THROWS_AS(make_field(6), Error);
  CHECK_THROWS_AS(make_field(4, "a^3+a+1"), Error);
}

}
