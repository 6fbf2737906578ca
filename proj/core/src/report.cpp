#include "affgebra/report.hpp"

#include <nlohmann/json.hpp>

namespace affgebra {

nlohmann::json AxiomReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["checks"] = checks;
  j["passed"] = passed();
  if (counterexample) {
    j["counterexample"] = {
        {"identity", counterexample->identity},
        {"inputs", counterexample->inputs},
        {"lhs", counterexample->lhs},
        {"rhs", counterexample->rhs},
    };
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

std::ostream& operator<<(std::ostream& os, const AxiomReport& report) {
  os << report.suite << ": " << (report.passed() ? "pass" : "FAIL") << " (" << report.checks
     << " checks)";
  if (report.counterexample) {
    os << " counterexample at " << report.counterexample->identity;
  }
  return os;
}

}  // namespace affgebra
