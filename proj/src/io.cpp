#include "evalcode/io.hpp"

#include <sstream>

#include "evalcode/error.hpp"
#include "evalcode/parse.hpp"

namespace evalcode {

nlohmann::json to_json(const WeightReport& report, const MonomialOrder& order, const std::vector<std::string>& names) {
  nlohmann::json j;
  j["r"] = report.r;
  j["value"] = report.value;
  j["status"] = to_string(report.status);
  j["fp"] = report.fp ? nlohmann::json(*report.fp) : nlohmann::json(nullptr);
  j["witness"] = nlohmann::json::array();
  for (const auto& f : report.witness) j["witness"].push_back(format_polynomial(f, order, names));
  j["searched"] = report.searched;
  return j;
}

nlohmann::json code_metadata(const EvaluationCode& code) {
  nlohmann::json j;
  j["length"] = code.length();
  j["dimension"] = code.dimension();
  j["order"] = code.order().name();
  j["q"] = code.field()->order();
  j["basis"] = nlohmann::json::array();
  for (const auto& b : code.basis()) j["basis"].push_back(format_polynomial(b, code.order(), code.variable_names()));
  j["leading_monomials"] = nlohmann::json::array();
  for (const auto& m : code.leading_monomials()) j["leading_monomials"].push_back(format_monomial(m, code.variable_names()));
  return j;
}

std::string generator_tsv(const FiniteField& field, const Matrix& g) {
  std::ostringstream out;
  out << g.rows() << ' ' << g.cols() << ' ' << field.order() << '\n';
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) out << (j ? "\t" : "") << format_element(field, g(i, j));
    out << '\n';
  }
  return out.str();
}

std::string generator_tsv(const EvaluationCode& code) { return generator_tsv(*code.field(), code.generator_matrix()); }

Matrix read_generator_tsv(std::istream& in, const FiniteField& field) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) throw ParseError("missing 'k m q' header", 1, 1);
  std::istringstream header(line);
  std::size_t k = 0, m = 0;
  std::uint64_t q = 0;
  if (!(header >> k >> m >> q)) throw ParseError("malformed 'k m q' header", 1, 1);
  if (q != field.order()) throw ParseError("header q does not match the field", 1, 1);
  Matrix g(0, m);
  while (g.rows() < k && std::getline(in, line)) {
    ++lineno;
    std::vector<Elem> row;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t end = line.find('\t', start);
      if (end == std::string::npos) end = line.size();
      row.push_back(parse_element(line.substr(start, end - start), field, SourcePos{lineno, start + 1}));
      start = end + 1;
    }
    if (row.size() != m) throw ParseError("expected " + std::to_string(m) + " entries", lineno, 1);
    g.append_row(row);
  }
  if (g.rows() != k) throw ParseError("expected " + std::to_string(k) + " rows", lineno, 1);
  return g;
}

}  // namespace evalcode
