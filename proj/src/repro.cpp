#include "evalcode/repro.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "evalcode/codes.hpp"
#include "evalcode/formulas.hpp"
#include "evalcode/parse.hpp"
#include "evalcode/variety.hpp"
#include "evalcode/weights.hpp"

namespace evalcode {

bool ReproResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReproCheck& c) { return c.pass; });
}

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

struct Recorder {
  ReproResult& result;

  void check(const std::string& name, const std::string& expected, const std::string& actual) {
    result.checks.push_back({name, expected, actual, expected == actual});
  }
  template <class T>
  void check(const std::string& name, const T& expected, const T& actual) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    check(name, e.str(), a.str());
  }
  void check_set(const std::string& name, std::vector<std::string> expected, std::vector<std::string> actual) {
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    check(name, "{" + join(expected, ", ") + "}", "{" + join(actual, ", ") + "}");
  }
};

std::vector<std::string> formatted(std::span<const Polynomial> polys, const MonomialOrder& order,
                                   const std::vector<std::string>& names = {}) {
  std::vector<std::string> out;
  for (const auto& f : polys) out.push_back(format_polynomial(f, order, names));
  return out;
}

PointSet points_f3(const std::vector<std::vector<int>>& pts) {
  const FieldPtr f3 = FiniteField::make(3);
  std::vector<std::vector<Elem>> coords;
  for (const auto& p : pts) {
    std::vector<Elem> c;
    for (const int x : p) c.push_back(f3->from_int(x));
    coords.push_back(c);
  }
  return PointSet(f3, pts.front().size(), coords);
}

const std::vector<std::vector<int>> kTenPoints = {{1, 0, 0}, {1, 0, 1}, {1, 0, -1}, {1, 1, 0}, {1, 1, 1},
                                                   {1, 1, -1}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, -1}};
const std::vector<std::vector<int>> kTwelvePoints = {{1, 0, 0}, {1, 0, 1},  {1, 0, -1}, {1, 1, 0},
                                                      {1, 1, 1}, {1, 1, -1}, {0, 0, 0},  {0, 0, 1},
                                                      {0, 0, -1}, {0, 1, 0}, {0, 1, 1},  {0, 1, -1}};

SearchOptions quiet() {
  SearchOptions o;
  o.with_footprint = false;
  return o;
}

std::uint64_t delta(const EvaluationCode& code, std::size_t r) { return ghw(code, r, quiet()).value; }

void transforming(Recorder& rec) {
  const FieldPtr f5 = FiniteField::make(5);
  const PointSet T = torus(f5, 2);
  const auto basis = parse_polynomial_list("1; t1^3; t1*t2^2; t2^3; t1*t2; t1^2*t2^4", f5, 2);
  const EvaluationCode code = evaluation_code(T, basis);
  rec.check_set("standardized basis", {"1", "t1^3", "t1*t2^2", "t2^3", "t1*t2", "t1^2"},
                formatted(code.basis(), code.order()));
  rec.check("length m", std::size_t{16}, code.length());
  rec.check("dimension k", std::size_t{6}, code.dimension());
  const WeightReport r1 = ghw(code, 1);
  rec.check("delta_1", std::uint64_t{8}, r1.value);
  rec.check("fp_1", std::uint64_t{4}, r1.fp.value_or(0));
}

void five_points(Recorder& rec) {
  const PointSet X = points_f3({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, -1}});
  const GroebnerBasis gb = vanishing_ideal(X);
  rec.check_set("I(X) generators", {"t1^2 - t1", "t2^3 - t2", "t1*t2^2 - t1*t2"}, formatted(gb.generators(), gb.order()));
  const std::vector<std::vector<std::uint64_t>> expected = {{2, 4, 5}, {1, 2, 3, 4, 5}};
  for (int d = 1; d <= 2; ++d) {
    const EvaluationCode code = rm_code(X, d, gb);
    rec.check("k(" + std::to_string(d) + ")", expected[d - 1].size(), code.dimension());
    std::vector<std::uint64_t> deltas;
    for (const auto& w : weight_hierarchy(code, quiet())) deltas.push_back(w.value);
    rec.check("delta_r, d=" + std::to_string(d), join(expected[d - 1]), join(deltas));
  }
}

void lexdiv(Recorder& rec) {
  const FieldPtr k = FiniteField::make(32003);
  const std::vector<std::string> names{"x", "y"};
  const Polynomial f = parse_polynomial("x^2 - y^3 + y", k, 2, names);
  const auto divisors = parse_polynomial_list("y^40 - y^2 + 1; x - y^8", k, 2, names);
  const auto lex = MonomialOrder::lex();
  const DivisionResult r = divide(f, divisors, lex);
  rec.check("remainder under lex x > y", std::string("y^16 - y^3 + y"), format_polynomial(r.remainder, lex, names));
  rec.check("remainder degree exceeds deg f", std::string("16 > 3"),
            std::to_string(r.remainder.degree()) + " > " + std::to_string(f.degree()));
}

void twelve_points(Recorder& rec) {
  const PointSet X = points_f3(kTwelvePoints);
  const GroebnerBasis gb = vanishing_ideal(X);
  rec.check("deg S/I(X)", std::size_t{12}, degree_zero_dim(gb));
  rec.check("regularity index", 4, regularity_index(gb));
  std::vector<std::uint64_t> deltas;
  for (const auto& w : min_distance_profile(X, 4, gb)) deltas.push_back(w.value);
  rec.check("delta(C_X(d)), d=1..4", std::string("6,3,2,1"), join(deltas));
}

void torus_f5_table(Recorder& rec) {
  const PointSet T = torus(FiniteField::make(5), 2);
  const GroebnerBasis gb = vanishing_ideal(T);
  std::vector<std::size_t> h;
  for (int d = 1; d <= 6; ++d) h.push_back(affine_hilbert_function(gb, d));
  rec.check("H(d), d=1..6", std::string("3,6,10,13,15,16"), join(h));
  const std::vector<std::string> expected = {"12,8,4,3,2,1", "15,11,7,4,3,2", "16,12,8,6,4,3"};
  for (std::size_t r = 1; r <= 3; ++r) {
    std::vector<std::uint64_t> fp;
    for (int d = 1; d <= 6; ++d) fp.push_back(rm_footprint(gb, d, r));
    rec.check("fp(d," + std::to_string(r) + "), d=1..6", expected[r - 1], join(fp));
  }
}

EvaluationCode homogeneous_code(const PointSet& X, const GroebnerBasis& gb, int d) {
  std::vector<Polynomial> basis;
  for (const auto& m : monomials_of_degree(X.dimension(), static_cast<unsigned>(d), DegreeMode::exact_degree)) {
    basis.push_back(Polynomial::from_monomial(X.field(), m));
  }
  return evaluation_code(X, basis, gb);
}

void ten_points(Recorder& rec) {
  const PointSet X = points_f3(kTenPoints);
  const GroebnerBasis gb = vanishing_ideal(X);
  rec.check_set("I(X) generators",
                {"t2^2 - t2", "t1^2 - t1", "t3^3 - t3", "t1*t2*t3 - t1*t2 - t1*t3 - t2*t3 + t1 + t2 + t3 - 1"},
                formatted(gb.generators(), gb.order()));
  rec.check_set("standardized basis of S_2", {"t2", "t1*t2", "t1*t3", "t3^2", "t2*t3", "t1"},
                formatted(homogeneous_code(X, gb, 2).basis(), gb.order()));
  std::vector<std::uint64_t> d1;
  for (int d = 1; d <= 3; ++d) d1.push_back(delta(homogeneous_code(X, gb, d), 1));
  rec.check("delta_1, d=1..3", std::string("6,3,1"), join(d1));
  for (int d = 2; d <= 3; ++d) {
    rec.check("delta_2, d=" + std::to_string(d), std::uint64_t(9 + d - 2), delta(homogeneous_code(X, gb, d), 2));
  }
  // The same values with the roles of r and d exchanged: delta_r of S_1 for r = 2, 3.
  const EvaluationCode c1 = homogeneous_code(X, gb, 1);
  rec.check("delta_r, d=1, r=2..3", std::string("9,10"), join(std::vector<std::uint64_t>{delta(c1, 2), delta(c1, 3)}));
}

void hermitian(Recorder& rec) {
  const FieldPtr f25 = FiniteField::make(5, 2);
  const std::vector<std::string> names{"x", "y"};
  const std::vector<Polynomial> g{parse_polynomial("y^5 + y - x^6", f25, 2, names)};
  const GroebnerBasis gb = variety_ideal_nullstellensatz(g, f25, 2);
  rec.check("|X| = deg S/(x^25-x, y^25-y, g)", std::size_t{125}, degree_zero_dim(gb));
  PointSet X = affine_variety_points(g, f25, 2);
  X.set_variable_names(names);
  rec.check("|X| by enumeration", std::size_t{125}, X.size());
  const EvaluationCode c1 = rm_code(X, 1, gb);
  rec.check("C_X(1) [n,k,d]", std::string("[125,3,119]"),
            "[" + join(std::vector<std::uint64_t>{c1.length(), c1.dimension(), delta(c1, 1)}) + "]");
  rec.check("dim C_X(4)", std::size_t{15}, affine_hilbert_function(gb, 4));
  rec.check("fp(4,1)", std::uint64_t{40}, rm_footprint(gb, 4, 1));
  rec.check("fp(4,7)", std::uint64_t{97}, rm_footprint(gb, 4, 7));
}

GroebnerBasis elliptic_ideal(std::uint32_t q, PointSet* X) {
  const FieldPtr k = FiniteField::make(q);
  const std::vector<std::string> names{"x", "y"};
  const std::vector<Polynomial> f{parse_polynomial("y^2 - x^3 + x", k, 2, names)};
  if (X) {
    *X = affine_variety_points(f, k, 2);
    X->set_variable_names(names);
  }
  return variety_ideal_nullstellensatz(f, k, 2);
}

void elliptic_5(Recorder& rec) {
  PointSet X(FiniteField::make(5), 2);
  const GroebnerBasis gb = elliptic_ideal(5, &X);
  const EvaluationCode c = rm_code(X, 1, gb);
  const WeightReport w = ghw(c, 1);
  rec.check("C_X(1) [n,k,d]", std::string("[7,3,4]"),
            "[" + join(std::vector<std::uint64_t>{c.length(), c.dimension(), w.value}) + "]");
  rec.check("fp(1,1)", std::uint64_t{4}, w.fp.value_or(0));
}

void elliptic_71(Recorder& rec) {
  const FieldPtr k = FiniteField::make(71);
  const std::vector<std::string> names{"x", "y"};
  const Polynomial f = parse_polynomial("y^2 - x^3 + x", k, 2, names);
  const GroebnerBasis plane(k, 2, MonomialOrder::grevlex(), parse_polynomial_list("x^71 - x; y^71 - y", k, 2, names));
  rec.check("|V(f)| = deg S/(I(A^2), f)", std::size_t{71}, count_zeros_degree_method(plane, std::vector{f}));
  // Initial-ideal bound under lex with y > x: variables listed (y, x).
  const std::vector<std::string> yx{"y", "x"};
  const auto lex = MonomialOrder::lex();
  const auto gens = parse_polynomial_list("x^71 - x; y^71 - y", k, 2, yx);
  std::vector<Monomial> init;
  for (const auto& g : gens) init.push_back(g.leading_monomial(lex));
  const Monomial in_f = parse_polynomial("y^2 - x^3 + x", k, 2, yx).leading_monomial(lex);
  rec.check("deg S/(in(I(A^2)), in(f)) under lex y > x", std::size_t{142},
            monomial_ideal_degree(init, std::vector{in_f}, 2));
  PointSet X(k, 2);
  const GroebnerBasis gb = elliptic_ideal(71, &X);
  const EvaluationCode c = rm_code(X, 1, gb);
  rec.check("C_X(1) [n,k,d]", std::string("[71,3,68]"),
            "[" + join(std::vector<std::uint64_t>{c.length(), c.dimension(), delta(c, 1)}) + "]");
}

void elliptic_199(Recorder& rec) {
  const GroebnerBasis gb = elliptic_ideal(199, nullptr);
  rec.check("length", std::size_t{199}, degree_zero_dim(gb));
  rec.check("dim C_X(10)", std::size_t{30}, affine_hilbert_function(gb, 10));
  rec.check("fp(10,1)", std::uint64_t{57}, rm_footprint(gb, 10, 1));
}

void cox(Recorder& rec) {
  const FieldPtr f4 = FiniteField::make(2, 2);
  const std::vector<std::string> names{"x", "y", "z"};
  const std::vector<Polynomial> g{parse_polynomial("y^3 + x*z^2 + x^2*z", f4, 3, names)};
  PointSet X = projective_variety_points(g, f4, 3);
  X.set_variable_names(names);
  const EvaluationCode c = projective_rm_code(X, 1);
  rec.check("[n,k,d] of L = S_1", std::string("[9,3,6]"),
            "[" + join(std::vector<std::uint64_t>{c.length(), c.dimension(), delta(c, 1)}) + "]");
}

void toric_s4_q3(Recorder& rec) {
  std::vector<std::uint64_t> k, formula, brute, degree;
  std::size_t m = 0;
  for (int d = 1; d <= 4; ++d) {
    const EvaluationCode c = toric_hypersimplex_code(3, 4, d);
    m = c.length();
    k.push_back(c.dimension());
    formula.push_back(toric_min_distance_formula(3, 4, d));
    brute.push_back(ghw_bruteforce(c, 1));
    degree.push_back(delta(c, 1));
  }
  rec.check("length m", std::size_t{16}, m);
  rec.check("k, d=1..4", std::string("4,6,4,1"), join(k));
  rec.check("delta closed form, d=1..4", std::string("8,4,8,16"), join(formula));
  rec.check("delta brute force, d=1..4", std::string("8,4,8,16"), join(brute));
  rec.check("delta degree method, d=1..4", std::string("8,4,8,16"), join(degree));
}

struct Fixture {
  const char* id;
  const char* title;
  void (*run)(Recorder&);
};

const Fixture kFixtures[] = {
    {"transforming", "generalized toric code on the F_5 torus, standardized", transforming},
    {"5points", "five points in A^2 over F_3", five_points},
    {"lexdiv", "division with remainder of larger degree under lex", lexdiv},
    {"12points", "twelve points in A^3 over F_3, recursive minimum distance", twelve_points},
    {"torus-f5-table", "Hilbert function and footprints of the F_5 torus in A^2", torus_f5_table},
    {"10points", "ten points in A^3 over F_3 with L = S_d", ten_points},
    {"hermitian", "Hermitian curve y^5 + y - x^6 over F_25", hermitian},
    {"elliptic-5", "elliptic curve y^2 - x^3 + x over F_5", elliptic_5},
    {"elliptic-71", "elliptic curve y^2 - x^3 + x over F_71", elliptic_71},
    {"elliptic-199-fp", "elliptic curve over F_199, degree 10 footprint", elliptic_199},
    {"cox", "projective curve y^3 + xz^2 + x^2z over F_4", cox},
    {"toric-s4-q3", "toric hypersimplex codes, q = 3, s = 4", toric_s4_q3},
};

}  // namespace

std::vector<std::string> repro_ids() {
  std::vector<std::string> ids;
  for (const auto& f : kFixtures) ids.emplace_back(f.id);
  return ids;
}

ReproResult run_repro(const std::string& id) {
  for (const auto& f : kFixtures) {
    if (id != f.id) continue;
    ReproResult result{f.id, f.title, {}, 0};
    Recorder rec{result};
    const auto t0 = std::chrono::steady_clock::now();
    f.run(rec);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
  }
  throw std::invalid_argument("unknown example id '" + id + "'");
}

}  // namespace evalcode
