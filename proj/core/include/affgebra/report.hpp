#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace affgebra {

/// A falsified identity instance: which law, the witness inputs in evaluation
/// order, and the two sides that were supposed to agree.
struct Counterexample {
  std::string identity;
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one axiom suite. A suite either passes, or stops at the first
/// counterexample in sample order. Exact arithmetic means each verified
/// instance is a proof of that instance; `checks` counts them.
struct AxiomReport {
  std::string suite;
  std::size_t checks = 0;
  std::optional<Counterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
  nlohmann::json to_json() const;
};

std::ostream& operator<<(std::ostream& os, const AxiomReport& report);

}  // namespace affgebra
