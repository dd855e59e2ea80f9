#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace clonekit {

using FormulaArgs = std::map<std::string, double>;

// A closed-form fidelity (or probability / machine parameter / constraint
// predicate) with its literature citation.  Out-of-domain arguments raise
// std::invalid_argument; evaluation never extrapolates.
struct FidelityFormula {
  std::string id;
  std::vector<std::string> params;
  std::string kind;  // fidelity | probability | parameter | predicate
  std::string citation;
  bool conjectured = false;
  std::function<double(const FormulaArgs&)> eval;
};

const std::vector<FidelityFormula>& registry();

const FidelityFormula& formula(const std::string& id);
double eval_formula(const std::string& id, const FormulaArgs& args);

// univ < pc < real < fourier for 1->2 cloning in dimension d > 2.
bool ordering_chain_holds(int d);

}  // namespace clonekit
