#pragma once

#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

#include "evalcode/codes.hpp"
#include "evalcode/weights.hpp"

namespace evalcode {

/// {"r", "value", "status", "fp", "witness": [poly strings], "searched"}; fp is null when not computed.
nlohmann::json to_json(const WeightReport& report, const MonomialOrder& order = {},
                       const std::vector<std::string>& names = {});

/// {"length", "dimension", "order", "basis": [poly strings]} plus "q" and "leading_monomials".
nlohmann::json code_metadata(const EvaluationCode& code);

/// Header line "k m q", then one tab-separated row of element literals per basis polynomial.
std::string generator_tsv(const EvaluationCode& code);
std::string generator_tsv(const FiniteField& field, const Matrix& g);
/// Reads the TSV form back; the header q must match the field.
Matrix read_generator_tsv(std::istream& in, const FiniteField& field);

}  // namespace evalcode
