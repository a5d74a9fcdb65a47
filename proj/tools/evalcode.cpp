#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "evalcode/codes.hpp"
#include "evalcode/error.hpp"
#include "evalcode/formulas.hpp"
#include "evalcode/grassmann.hpp"
#include "evalcode/io.hpp"
#include "evalcode/parallel.hpp"
#include "evalcode/parse.hpp"
#include "evalcode/repro.hpp"
#include "evalcode/variety.hpp"
#include "evalcode/weights.hpp"

using namespace evalcode;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

/// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::pair<std::uint64_t, std::size_t> parse_q_s(const std::string& text, const char* flag) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw CLI::ValidationError(flag, "expected q,s");
  try {
    return {std::stoull(parts[0]), std::stoul(parts[1])};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError(flag, "expected q,s");
  }
}

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

struct Common {
  bool json = false;
  std::size_t threads = 0;
};

/// Point set and code inputs shared by params, ghw and footprint.
struct CodeInput {
  std::string points, torus, affine, basis, order = "grevlex", modulus, vars;
  std::optional<int> degree;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option_group("points", "point set");
    g->add_option("--points", points, "point file");
    g->add_option("--torus", torus, "the torus (F_q^*)^s, given as q,s");
    g->add_option("--affine", affine, "the affine space F_q^s, given as q,s");
    g->require_option(1);
    auto* l = cmd->add_option_group("space", "polynomial space L");
    l->add_option("--basis", basis, "spanning polynomials separated by ';'");
    l->add_option("--degree", degree, "C_X(d): standard monomials of degree <= d");
    l->require_option(1);
    cmd->add_option("--order", order, "monomial order")->check(CLI::IsMember({"grevlex", "grlex", "lex"}));
    cmd->add_option("--modulus", modulus, "modulus polynomial in a for --torus/--affine extension fields");
    cmd->add_option("--vars", vars, "comma-separated variable names");
  }

  PointSet point_set() const {
    std::optional<PointSet> X;
    if (!points.empty()) {
      X = read_point_file(points);
    } else {
      const bool is_torus = !torus.empty();
      const auto [q, s] = parse_q_s(is_torus ? torus : affine, is_torus ? "--torus" : "--affine");
      const FieldPtr k = make_field(q, modulus);
      X = is_torus ? evalcode::torus(k, s) : affine_space(k, s);
    }
    if (!vars.empty()) X->set_variable_names(split(vars, ','));
    return *X;
  }

  std::vector<std::string> names(const PointSet& X) const {
    return X.variable_names().empty() ? default_variable_names(X.dimension()) : X.variable_names();
  }

  EvaluationCode code(const PointSet& X) const {
    const auto ord = MonomialOrder::parse(order);
    if (degree) {
      return X.is_projective() ? projective_rm_code(X, *degree, ord) : rm_code(X, *degree, ord);
    }
    const auto polys = parse_polynomial_list(basis, X.field(), X.dimension(), names(X));
    return evaluation_code(X, polys, ord);
  }
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_params(const Common& common, const CodeInput& in, const std::string& tsv) {
  const PointSet X = in.point_set();
  const EvaluationCode code = in.code(X);
  if (!tsv.empty()) {
    std::ofstream out(tsv);
    if (!(out << generator_tsv(code))) throw Error("cannot write " + tsv);
  }
  if (common.json) {
    print_json(code_metadata(code));
    return 0;
  }
  std::vector<std::string> basis, leads;
  for (const auto& b : code.basis()) basis.push_back(format_polynomial(b, code.order(), in.names(X)));
  for (const auto& m : code.leading_monomials()) leads.push_back(format_monomial(m, in.names(X)));
  Table t({"quantity", "value"});
  t.add({"q", std::to_string(code.field()->order())});
  t.add({"length m", std::to_string(code.length())});
  t.add({"dimension k", std::to_string(code.dimension())});
  t.add({"order", code.order().name()});
  t.add({"basis", join(basis)});
  t.add({"leading monomials", join(leads)});
  t.print(std::cout);
  return 0;
}

struct GhwArgs {
  std::optional<std::size_t> r;
  std::string method = "degree";
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t verify = 0;
  bool strict = false;
};

int cmd_ghw(const Common& common, const CodeInput& in, const GhwArgs& args) {
  const PointSet X = in.point_set();
  const EvaluationCode code = in.code(X);
  const auto names = in.names(X);
  std::vector<std::size_t> rs;
  if (args.r) {
    rs.push_back(*args.r);
  } else {
    for (std::size_t r = 1; r <= code.dimension(); ++r) rs.push_back(r);
  }
  SearchOptions opts;
  opts.budget = args.budget;
  opts.verify_every = args.verify;
  int status = 0;
  json out = json::array();
  Table table({"r", "delta_r", "status", "fp_r", "matrix", "searched"});
  for (const std::size_t r : rs) {
    std::optional<WeightReport> report;
    std::optional<std::uint64_t> matrix;
    bool over_budget = false;
    if (args.method != "matrix") {
      report = ghw(code, r, opts);
      const auto total = gaussian_binomial(code.field()->order(), code.dimension(), r);
      if (!total || report->searched < *total) over_budget = true;
    }
    if (args.method != "degree") {
      try {
        matrix = ghw_bruteforce(code, r, args.budget);
      } catch (const BudgetExceeded&) {
        over_budget = true;
      }
    }
    if (!report) {
      report.emplace();
      report->r = r;
      report->status = matrix ? WeightStatus::exact : WeightStatus::budget_exceeded;
      report->value = matrix.value_or(0);
    }
    json j = to_json(*report, code.order(), names);
    if (args.method == "both") j["matrix"] = matrix ? json(*matrix) : json(nullptr);
    out.push_back(j);
    table.add({std::to_string(r), std::to_string(report->value), to_string(report->status),
               report->fp ? std::to_string(*report->fp) : "-", matrix ? std::to_string(*matrix) : "-",
               std::to_string(report->searched)});
    if (args.method == "both" && matrix && report->status == WeightStatus::exact && *matrix != report->value) {
      std::cerr << "error: degree method gives " << report->value << " but the generator matrix gives " << *matrix
                << " for r = " << r << '\n';
      status = kExitMismatch;
    }
    if (over_budget && args.strict && status == 0) status = kExitBudget;
  }
  if (common.json) {
    print_json(args.r ? out[0] : out);
  } else {
    table.print(std::cout);
  }
  return status;
}

int cmd_footprint(const Common& common, const CodeInput& in, std::size_t r, std::uint64_t budget, bool strict) {
  const PointSet X = in.point_set();
  std::optional<std::uint64_t> fp;
  try {
    if (in.degree && !X.is_projective()) {
      fp = rm_footprint(vanishing_ideal(X, MonomialOrder::parse(in.order)), *in.degree, r, budget);
    } else {
      fp = footprint_bound(in.code(X), r, budget);
    }
  } catch (const BudgetExceeded&) {
  }
  const std::string status = fp ? "exact" : "budget_exceeded";
  if (common.json) {
    print_json({{"r", r}, {"fp", fp ? json(*fp) : json(nullptr)}, {"status", status}});
  } else {
    Table t({"r", "fp_r", "status"});
    t.add({std::to_string(r), fp ? std::to_string(*fp) : "-", status});
    t.print(std::cout);
  }
  return !fp && strict ? kExitBudget : 0;
}

struct FormulaArgs {
  std::uint32_t q = 0;
  std::size_t s = 0;
  int d = 0;
  std::size_t r = 1;
  bool verify = false;
  std::uint64_t budget = kDefaultBudget;
  bool strict = false;
};

int cmd_formula(const Common& common, const FormulaArgs& a, bool toric) {
  if (toric && a.r != 1) throw std::invalid_argument("toric hypersimplex codes have a closed form only for r = 1");
  if (!toric && a.r != 1 && a.r != 2) throw std::invalid_argument("squarefree codes have closed forms for r = 1, 2");
  const std::uint64_t m = [&] {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < a.s; ++i) n *= a.q - 1;
    return n;
  }();
  const std::uint64_t k = toric ? toric_dimension_formula(a.q, a.s, a.d) : squarefree_dimension_formula(a.q, a.s, a.d);
  const std::uint64_t delta = toric ? toric_min_distance_formula(a.q, a.s, a.d)
                              : a.r == 1 ? squarefree_min_distance_formula(a.q, a.s, a.d)
                                         : squarefree_delta2_formula(a.q, a.s, a.d);
  json j = {{"family", toric ? "toric" : "squarefree"}, {"q", a.q}, {"s", a.s}, {"d", a.d},
            {"r", a.r},  {"length", m},      {"dimension", k}, {"delta", delta}};
  Table t({"quantity", "formula", "computed"});
  int status = 0;
  std::string computed_k = "-", computed_delta = "-", brute = "-";
  if (a.verify) {
    const EvaluationCode code = toric ? toric_hypersimplex_code(a.q, a.s, a.d) : squarefree_code(a.q, a.s, a.d);
    computed_k = std::to_string(code.dimension());
    j["verified"] = {{"dimension", code.dimension()}};
    if (code.dimension() != k) status = kExitMismatch;
    if (a.r <= code.dimension()) {
      SearchOptions opts;
      opts.budget = a.budget;
      opts.with_footprint = false;
      const WeightReport w = ghw(code, a.r, opts);
      computed_delta = std::to_string(w.value) + " (" + to_string(w.status) + ")";
      j["verified"]["degree_method"] = to_json(w, code.order());
      if (w.status == WeightStatus::exact && w.value != delta) status = kExitMismatch;
      if (w.status != WeightStatus::exact && a.strict && status == 0) status = kExitBudget;
      try {
        const std::uint64_t b = ghw_bruteforce(code, a.r, a.budget);
        brute = std::to_string(b);
        j["verified"]["matrix"] = b;
        if (b != delta) status = kExitMismatch;
      } catch (const BudgetExceeded&) {
        j["verified"]["matrix"] = nullptr;
        if (a.strict && status == 0) status = kExitBudget;
      }
    }
  }
  if (common.json) {
    print_json(j);
  } else {
    t.add({"length m", std::to_string(m), a.verify ? std::to_string(m) : "-"});
    t.add({"dimension k", std::to_string(k), computed_k});
    t.add({"delta_" + std::to_string(a.r), std::to_string(delta), computed_delta});
    if (a.verify) t.add({"delta_" + std::to_string(a.r) + " (matrix)", std::to_string(delta), brute});
    t.print(std::cout);
  }
  if (status == kExitMismatch) std::cerr << "error: closed form and computation disagree\n";
  return status;
}

struct PointsArgs {
  std::uint64_t q = 0;
  std::size_t s = 0;
  std::string system, modulus, vars, order = "grevlex";
  bool projective = false, ideal = false, list = false;
};

int cmd_points(const Common& common, const PointsArgs& a) {
  const FieldPtr k = make_field(a.q, a.modulus);
  const auto names = a.vars.empty() ? default_variable_names(a.s) : split(a.vars, ',');
  if (names.size() != a.s) throw std::invalid_argument("--vars must name exactly s variables");
  const auto G = parse_polynomial_list(a.system, k, a.s, names);
  if (a.ideal && a.projective) throw std::invalid_argument("--ideal applies to affine systems only");
  PointSet X = a.projective ? projective_variety_points(G, k, a.s) : affine_variety_points(G, k, a.s);
  X.set_variable_names(names);
  std::optional<GroebnerBasis> gb;
  int status = 0;
  if (!a.projective && !X.empty()) {
    gb = variety_ideal_nullstellensatz(G, k, a.s, MonomialOrder::parse(a.order));
    if (degree_zero_dim(*gb) != X.size()) {
      std::cerr << "error: enumeration finds " << X.size() << " points but deg S/I is " << degree_zero_dim(*gb) << '\n';
      status = kExitMismatch;
    }
  }
  if (common.json) {
    json j = {{"count", X.size()}, {"projective", a.projective}};
    if (a.list) {
      j["points"] = json::array();
      for (std::size_t i = 0; i < X.size(); ++i) {
        json p = json::array();
        for (const Elem e : X[i]) p.push_back(format_element(*k, e));
        j["points"].push_back(p);
      }
    }
    if (a.ideal) {
      j["ideal"] = json::array();
      if (gb) {
        for (const auto& g : gb->generators()) j["ideal"].push_back(format_polynomial(g, gb->order(), names));
      } else {
        j["ideal"].push_back("1");
      }
    }
    print_json(j);
    return status;
  }
  std::cout << "points: " << X.size() << '\n';
  if (a.ideal) {
    std::cout << "ideal:\n";
    if (gb) {
      for (const auto& g : gb->generators()) std::cout << "  " << format_polynomial(g, gb->order(), names) << '\n';
    } else {
      std::cout << "  1\n";
    }
  }
  if (a.list) std::cout << write_point_file(X);
  return status;
}

int cmd_repro(const Common& common, const std::string& example) {
  const std::vector<std::string> ids = example.empty() ? repro_ids() : std::vector<std::string>{example};
  if (!example.empty()) {
    const auto all = repro_ids();
    if (std::find(all.begin(), all.end(), example) == all.end()) {
      throw std::invalid_argument("unknown example id '" + example + "'; known: " + join(all));
    }
  }
  bool ok = true;
  json out = json::array();
  Table summary({"example", "checks", "seconds", "result"});
  Table details({"example", "check", "expected", "computed", "result"});
  for (const auto& id : ids) {
    const ReproResult res = run_repro(id);
    ok = ok && res.pass();
    std::size_t passed = 0;
    json checks = json::array();
    for (const auto& c : res.checks) {
      passed += c.pass;
      checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
      details.add({id, c.name, c.expected, c.actual, c.pass ? "PASS" : "FAIL"});
    }
    out.push_back({{"id", res.id}, {"title", res.title}, {"pass", res.pass()}, {"seconds", res.seconds}, {"checks", checks}});
    std::ostringstream secs;
    secs.precision(2);
    secs << std::fixed << res.seconds;
    summary.add({id, std::to_string(passed) + "/" + std::to_string(res.checks.size()), secs.str(),
                 res.pass() ? "PASS" : "FAIL"});
  }
  if (common.json) {
    print_json(out);
  } else {
    details.print(std::cout);
    std::cout << '\n';
    summary.print(std::cout);
  }
  return ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluation codes over finite fields: parameters, generalized Hamming weights and footprints"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "machine-readable JSON output");
  app.add_option("--threads", common.threads, "worker threads (default: EVALCODE_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  CodeInput params_in, ghw_in, fp_in;
  auto* params = app.add_subcommand("params", "length, dimension and standardized basis of a code");
  params_in.attach(params);
  std::string tsv;
  params->add_option("--tsv", tsv, "also write the generator matrix as TSV to this file");

  auto* ghw_cmd = app.add_subcommand("ghw", "generalized Hamming weights");
  ghw_in.attach(ghw_cmd);
  GhwArgs ghw_args;
  ghw_cmd->add_option("--r", ghw_args.r, "weight index (default: all r = 1..k)")->check(CLI::PositiveNumber);
  ghw_cmd->add_option("--method", ghw_args.method, "search method")
      ->check(CLI::IsMember({"degree", "matrix", "both"}));
  ghw_cmd->add_option("--budget", ghw_args.budget, "maximum subspaces to examine");
  ghw_cmd->add_option("--verify", ghw_args.verify, "re-check every n-th candidate through a Groebner count");
  ghw_cmd->add_flag("--strict", ghw_args.strict, "exit 3 when the budget truncates the search");

  auto* fp_cmd = app.add_subcommand("footprint", "footprint lower bound fp_r");
  fp_in.attach(fp_cmd);
  std::size_t fp_r = 1;
  std::uint64_t fp_budget = kDefaultBudget;
  bool fp_strict = false;
  fp_cmd->add_option("--r", fp_r, "weight index")->check(CLI::PositiveNumber);
  fp_cmd->add_option("--budget", fp_budget, "maximum subsets to examine");
  fp_cmd->add_flag("--strict", fp_strict, "exit 3 when the budget is exceeded");

  FormulaArgs toric_args, sf_args;
  auto add_formula = [&](const char* name, const char* help, FormulaArgs& a) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--q", a.q, "field size")->required();
    cmd->add_option("--s", a.s, "number of variables")->required();
    cmd->add_option("--d", a.d, "degree")->required();
    cmd->add_option("--r", a.r, "weight index");
    cmd->add_flag("--verify", a.verify, "also compute the code and compare");
    cmd->add_option("--budget", a.budget, "maximum subspaces to examine when verifying");
    cmd->add_flag("--strict", a.strict, "exit 3 when verification is truncated by the budget");
    return cmd;
  };
  auto* toric_cmd = add_formula("toric", "closed forms for toric hypersimplex codes", toric_args);
  auto* sf_cmd = add_formula("squarefree", "closed forms for squarefree evaluation codes", sf_args);

  PointsArgs pts;
  auto* points_cmd = app.add_subcommand("points", "zeros of a polynomial system over F_q");
  points_cmd->add_option("--q", pts.q, "field size")->required();
  points_cmd->add_option("--s", pts.s, "number of variables")->required();
  points_cmd->add_option("--system", pts.system, "polynomials separated by ';'")->required();
  points_cmd->add_option("--modulus", pts.modulus, "modulus polynomial in a for extension fields");
  points_cmd->add_option("--vars", pts.vars, "comma-separated variable names");
  points_cmd->add_option("--order", pts.order, "monomial order for --ideal")
      ->check(CLI::IsMember({"grevlex", "grlex", "lex"}));
  points_cmd->add_flag("--projective", pts.projective, "zeros in projective space P^{s-1}");
  points_cmd->add_flag("--ideal", pts.ideal, "print the reduced Groebner basis of the vanishing ideal");
  points_cmd->add_flag("--list", pts.list, "print the points in point-file format");

  auto* repro = app.add_subcommand("repro", "reproduce the worked examples");
  std::string example;
  bool all = false;
  auto* ex_opt = repro->add_option("--example", example, "example id");
  auto* all_opt = repro->add_flag("--all", all, "run every example");
  ex_opt->excludes(all_opt);
  repro->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (common.threads) set_thread_count(common.threads);

  try {
    if (params->parsed()) return cmd_params(common, params_in, tsv);
    if (ghw_cmd->parsed()) return cmd_ghw(common, ghw_in, ghw_args);
    if (fp_cmd->parsed()) return cmd_footprint(common, fp_in, fp_r, fp_budget, fp_strict);
    if (toric_cmd->parsed()) return cmd_formula(common, toric_args, true);
    if (sf_cmd->parsed()) return cmd_formula(common, sf_args, false);
    if (points_cmd->parsed()) return cmd_points(common, pts);
    if (repro->parsed()) return cmd_repro(common, example);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
