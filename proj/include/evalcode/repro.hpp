#pragma once

#include <string>
#include <vector>

namespace evalcode {

/// One expected-versus-computed comparison inside a fixture.
struct ReproCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ReproResult {
  std::string id;
  std::string title;
  std::vector<ReproCheck> checks;
  double seconds = 0;

  bool pass() const;
};

/// Fixture identifiers in their canonical order.
std::vector<std::string> repro_ids();

/// Runs one fixture; throws std::invalid_argument for an unknown id.
ReproResult run_repro(const std::string& id);

}  // namespace evalcode
