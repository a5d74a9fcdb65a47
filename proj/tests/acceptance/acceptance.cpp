// Acceptance gate. Each criterion prints one line:
//   criterion N: PASS|FAIL (seconds) summary
// Usage: acceptance [--criterion N]   (no argument runs all thirteen)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "evalcode/codes.hpp"
#include "evalcode/error.hpp"
#include "evalcode/formulas.hpp"
#include "evalcode/grassmann.hpp"
#include "evalcode/parse.hpp"
#include "evalcode/repro.hpp"
#include "evalcode/variety.hpp"
#include "evalcode/weights.hpp"

using namespace evalcode;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 20) failures.push_back(what);
    }
  }
};

std::mt19937_64& rng() {
  static std::mt19937_64 gen(20200415);
  return gen;
}

std::size_t uniform(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng()); }

PointSet random_points(const FieldPtr& k, std::size_t s, std::size_t count) {
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> pts;
  while (pts.size() < count) {
    std::vector<Elem> p(s);
    for (auto& c : p) c = static_cast<Elem>(uniform(0, k->order() - 1));
    if (seen.insert(p).second) pts.push_back(p);
  }
  return PointSet(k, s, pts);
}

Polynomial random_poly(const FieldPtr& k, std::size_t s, unsigned max_deg, std::size_t max_terms) {
  while (true) {
    std::vector<Term> terms;
    for (std::size_t i = uniform(1, max_terms); i > 0; --i) {
      std::vector<unsigned> e(s, 0);
      for (unsigned d = static_cast<unsigned>(uniform(0, max_deg)); d > 0; --d) ++e[uniform(0, s - 1)];
      terms.push_back({Monomial::from_exponents(e), static_cast<Elem>(uniform(1, k->order() - 1))});
    }
    Polynomial f = Polynomial::from_terms(k, s, terms);
    if (!f.is_zero()) return f;
  }
}

std::size_t direct_zeros(std::span<const Polynomial> F, const PointSet& X) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    bool all = true;
    for (const auto& f : F) all = all && f.evaluate(X[i]) == 0;
    n += all;
  }
  return n;
}

SearchOptions no_fp() {
  SearchOptions o;
  o.with_footprint = false;
  return o;
}

Outcome fixtures(std::initializer_list<const char*> ids) {
  Outcome out;
  std::ostringstream summary;
  for (const char* id : ids) {
    const ReproResult r = run_repro(id);
    summary << (summary.tellp() ? ", " : "") << id << ' ' << (r.pass() ? "ok" : "mismatch");
    for (const auto& c : r.checks) {
      out.expect(c.pass, std::string(id) + ": " + c.name + " expected " + c.expected + ", got " + c.actual);
    }
  }
  out.summary = summary.str();
  return out;
}

Outcome c10_property_suite() {
  Outcome out;
  std::size_t instances = 0, proper = 0;
  for (const std::uint32_t q : {3u, 4u, 5u}) {
    const FieldPtr k = FiniteField::of_order(q);
    for (const std::size_t s : {2u, 3u}) {
      for (int trial = 0; trial < 40; ++trial) {
        const std::size_t max_points = std::min<std::size_t>(30, static_cast<std::size_t>(std::pow(q, s)));
        const PointSet X = random_points(k, s, uniform(1, max_points));
        const GroebnerBasis gb = vanishing_ideal(X);
        out.expect(degree_zero_dim(gb) == X.size(), "deg S/I(X) != |X|");
        std::vector<Polynomial> F;
        for (std::size_t j = uniform(1, 3); j > 0; --j) F.push_back(random_poly(k, s, 4, 4));
        const std::size_t zeros = direct_zeros(F, X);
        const std::size_t by_degree = count_zeros_degree_method(gb, F);
        out.expect(zeros == by_degree, "|V_X(F)| = " + std::to_string(zeros) + " but degree method gave " +
                                           std::to_string(by_degree));
        std::vector<Monomial> inF;
        for (const auto& f : F) inF.push_back(f.leading_monomial(gb.order()));
        const std::size_t middle = monomial_ideal_degree(gb.initial_gens(), inF, s);
        out.expect(by_degree <= middle && middle <= X.size(), "footprint sandwich violated");
        const bool inside = std::all_of(F.begin(), F.end(), [&](const Polynomial& f) { return gb.contains(f); });
        if (!inside) {
          ++proper;
          out.expect(by_degree < X.size(), "no strict drop for F outside I(X)");
        }
        ++instances;
      }
    }
  }
  out.expect(instances >= 200, "too few instances");
  out.summary = std::to_string(instances) + " instances (" + std::to_string(proper) + " with F outside I(X))";
  return out;
}

PointSet f3_points(const std::vector<std::vector<int>>& pts) {
  const FieldPtr k = FiniteField::make(3);
  std::vector<std::vector<Elem>> c;
  for (const auto& p : pts) {
    c.emplace_back();
    for (const int x : p) c.back().push_back(k->from_int(x));
  }
  return PointSet(k, pts[0].size(), c);
}

EvaluationCode homogeneous_code(const PointSet& X, const GroebnerBasis& gb, int d) {
  std::vector<Polynomial> basis;
  for (const auto& m : monomials_of_degree(X.dimension(), static_cast<unsigned>(d), DegreeMode::exact_degree)) {
    basis.push_back(Polynomial::from_monomial(X.field(), m));
  }
  return evaluation_code(X, basis, gb);
}

/// Worked-example codes plus the toric and squarefree families, labelled.
std::vector<std::pair<std::string, EvaluationCode>> fixture_matrix() {
  std::vector<std::pair<std::string, EvaluationCode>> codes;
  const PointSet five = f3_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, -1}});
  for (int d = 1; d <= 2; ++d) codes.emplace_back("5points d=" + std::to_string(d), rm_code(five, d));
  const PointSet twelve = f3_points({{1, 0, 0}, {1, 0, 1}, {1, 0, -1}, {1, 1, 0}, {1, 1, 1}, {1, 1, -1},
                                     {0, 0, 0}, {0, 0, 1}, {0, 0, -1}, {0, 1, 0}, {0, 1, 1}, {0, 1, -1}});
  for (int d = 1; d <= 4; ++d) codes.emplace_back("12points d=" + std::to_string(d), rm_code(twelve, d));
  const PointSet ten = f3_points({{1, 0, 0}, {1, 0, 1}, {1, 0, -1}, {1, 1, 0}, {1, 1, 1},
                                  {1, 1, -1}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, -1}});
  const GroebnerBasis gb10 = vanishing_ideal(ten);
  for (int d = 1; d <= 3; ++d) codes.emplace_back("10points S_" + std::to_string(d), homogeneous_code(ten, gb10, d));
  const FieldPtr f5 = FiniteField::make(5);
  codes.emplace_back("transforming", evaluation_code(torus(f5, 2), parse_polynomial_list(
                                                                       "1; t1^3; t1*t2^2; t2^3; t1*t2; t1^2*t2^4", f5, 2)));
  for (int d = 1; d <= 6; ++d) codes.emplace_back("F5 torus d=" + std::to_string(d), rm_code(torus(f5, 2), d));
  const PointSet E5 = affine_variety_points(parse_polynomial_list("y^2 - x^3 + x", f5, 2, {"x", "y"}), f5, 2);
  for (int d = 1; d <= 3; ++d) codes.emplace_back("elliptic F5 d=" + std::to_string(d), rm_code(E5, d));
  const FieldPtr f4 = FiniteField::of_order(4);
  const PointSet cox = projective_variety_points(parse_polynomial_list("y^3 + x*z^2 + x^2*z", f4, 3, {"x", "y", "z"}), f4, 3);
  codes.emplace_back("cox d=1", projective_rm_code(cox, 1));
  for (int d = 1; d <= 4; ++d) codes.emplace_back("toric q=3 s=4 d=" + std::to_string(d), toric_hypersimplex_code(3, 4, d));
  for (const std::uint32_t q : {3u, 4u}) {
    for (std::size_t s = 2; s <= 3; ++s) {
      for (int d = 1; d <= static_cast<int>(s); ++d) {
        const std::string tag = " q=" + std::to_string(q) + " s=" + std::to_string(s) + " d=" + std::to_string(d);
        codes.emplace_back("toric" + tag, toric_hypersimplex_code(q, s, d));
        codes.emplace_back("squarefree" + tag, squarefree_code(q, s, d));
      }
    }
  }
  return codes;
}

Outcome c11_oracle_equivalence() {
  Outcome out;
  std::size_t tested = 0, pairs = 0;
  for (const auto& [name, code] : fixture_matrix()) {
    double qk = 1;
    for (std::size_t i = 0; i < code.dimension(); ++i) qk *= code.field()->order();
    if (qk > 2187) continue;
    ++tested;
    for (std::size_t r = 1; r <= code.dimension(); ++r) {
      const WeightReport w = ghw(code, r, no_fp());
      const std::uint64_t brute = ghw_bruteforce(code, r);
      out.expect(w.status == WeightStatus::exact && w.value == brute,
                 name + " r=" + std::to_string(r) + ": degree method " + std::to_string(w.value) + " (" +
                     to_string(w.status) + "), matrix " + std::to_string(brute));
      ++pairs;
    }
  }
  out.summary = std::to_string(tested) + " codes, " + std::to_string(pairs) + " (code, r) pairs";
  return out;
}

Outcome c12_closed_forms() {
  Outcome out;
  constexpr std::uint64_t budget = 2'000'000;
  std::size_t compared = 0, skipped = 0;
  const auto wei = [&](const std::string& name, const EvaluationCode& c, std::vector<std::uint64_t>& known) {
    for (std::size_t r = known.size() + 1; r <= c.dimension(); ++r) {
      const auto count = gaussian_binomial(c.field()->order(), c.dimension(), r);
      if (!count || *count > budget) break;
      known.push_back(ghw_bruteforce(c, r, budget));
    }
    for (std::size_t r = 1; r <= known.size(); ++r) {
      const std::uint64_t d = known[r - 1];
      out.expect(r <= d && d <= c.length() - c.dimension() + r, name + ": Wei bound fails at r=" + std::to_string(r));
      if (r > 1) out.expect(d > known[r - 2], name + ": hierarchy not strict at r=" + std::to_string(r));
    }
  };
  for (const std::uint32_t q : {3u, 4u}) {
    for (std::size_t s = 2; s <= 4; ++s) {
      for (int d = 1; d <= static_cast<int>(s); ++d) {
        const std::string tag = " q=" + std::to_string(q) + " s=" + std::to_string(s) + " d=" + std::to_string(d);
        const EvaluationCode toric = toric_hypersimplex_code(q, s, d);
        std::vector<std::uint64_t> th;
        try {
          th.push_back(ghw_bruteforce(toric, 1, budget));
          out.expect(th[0] == toric_min_distance_formula(q, s, d),
                     "toric" + tag + ": brute force " + std::to_string(th[0]) + ", formula " +
                         std::to_string(toric_min_distance_formula(q, s, d)));
          out.expect(toric.dimension() == toric_dimension_formula(q, s, d), "toric" + tag + ": dimension");
          ++compared;
        } catch (const BudgetExceeded&) {
          ++skipped;
        }
        wei("toric" + tag, toric, th);

        const EvaluationCode sq = squarefree_code(q, s, d);
        std::vector<std::uint64_t> sh;
        try {
          sh.push_back(ghw_bruteforce(sq, 1, budget));
          out.expect(sh[0] == squarefree_min_distance_formula(q, s, d), "squarefree" + tag + ": delta_1 " +
                                                                            std::to_string(sh[0]));
          ++compared;
          sh.push_back(ghw_bruteforce(sq, 2, budget));
          out.expect(sh[1] == squarefree_delta2_formula(q, s, d), "squarefree" + tag + ": delta_2 " +
                                                                       std::to_string(sh[1]));
          ++compared;
        } catch (const BudgetExceeded&) {
          ++skipped;
        }
        wei("squarefree" + tag, sq, sh);
      }
    }
  }
  out.summary = std::to_string(compared) + " formula values matched by brute force, " + std::to_string(skipped) +
                " beyond the budget";
  return out;
}

Outcome c13_division() {
  Outcome out = fixtures({"lexdiv"});
  const auto grevlex = MonomialOrder::grevlex();
  std::size_t trials = 0;
  for (const std::uint32_t q : {3u, 5u, 7u, 32003u}) {
    const FieldPtr k = FiniteField::of_order(q);
    for (int t = 0; t < 100; ++t, ++trials) {
      const std::size_t s = uniform(1, 4);
      const Polynomial f = random_poly(k, s, 8, 8);
      std::vector<Polynomial> divs;
      for (std::size_t j = uniform(1, 4); j > 0; --j) divs.push_back(random_poly(k, s, 5, 4));
      const DivisionResult r = divide(f, divs, grevlex);
      out.expect(r.remainder.degree() <= f.degree(), "grevlex remainder degree exceeds deg f");
      Polynomial back = r.remainder;
      for (std::size_t i = 0; i < divs.size(); ++i) back = back + r.quotients[i] * divs[i];
      out.expect(back == f, "division does not recompose f");
    }
  }
  out.summary += ", " + std::to_string(trials) + " random grevlex divisions";
  return out;
}

const std::vector<std::function<Outcome()>> kCriteria = {
    [] { return fixtures({"5points"}); },
    [] { return fixtures({"12points"}); },
    [] { return fixtures({"torus-f5-table"}); },
    [] { return fixtures({"transforming"}); },
    [] { return fixtures({"10points"}); },
    [] { return fixtures({"hermitian"}); },
    [] { return fixtures({"elliptic-71", "elliptic-5", "elliptic-199-fp"}); },
    [] { return fixtures({"cox"}); },
    [] { return fixtures({"toric-s4-q3"}); },
    c10_property_suite,
    c11_oracle_equivalence,
    c12_closed_forms,
    c13_division,
};

bool run(std::size_t n) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = kCriteria[n - 1]();
  } catch (const std::exception& e) {
    out.pass = false;
    out.summary = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion %zu: %s (%.2f s) %s\n", n, out.pass ? "PASS" : "FAIL", secs, out.summary.c_str());
  for (const auto& f : out.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return out.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> which;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const long n = std::strtol(argv[++i], nullptr, 10);
      if (n < 1 || n > static_cast<long>(kCriteria.size())) {
        std::fprintf(stderr, "criterion must be 1..%zu\n", kCriteria.size());
        return 1;
      }
      which.push_back(static_cast<std::size_t>(n));
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 1;
    }
  }
  if (which.empty()) {
    for (std::size_t n = 1; n <= kCriteria.size(); ++n) which.push_back(n);
  }
  bool ok = true;
  for (const std::size_t n : which) ok = run(n) && ok;
  return ok ? 0 : 1;
}
