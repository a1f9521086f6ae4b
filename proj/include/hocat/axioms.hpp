#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace hocat {

// One axiom's exhaustive sweep: how many instances were checked, how
// many failed, and the first failing instance spelled out.
struct AxiomCheck {
  std::string axiom;
  int checked = 0;
  int failures = 0;
  std::string first;

  bool pass() const { return failures == 0; }
};

// Shared result shape for the pseudofunctor, transformation and model
// axiom checkers: structural problems short-circuit the axiom sweeps,
// notes carry non-failing remarks such as short-circuit explanations.
struct AxiomReport {
  std::vector<std::string> problems;  // structural: sizes, boundaries, ranges
  std::vector<AxiomCheck> axioms;
  std::vector<std::string> notes;

  bool ok() const {
    if (!problems.empty()) return false;
    return std::all_of(axioms.begin(), axioms.end(),
                       [](const AxiomCheck& a) { return a.pass(); });
  }

  const AxiomCheck* axiom(const std::string& name) const {
    for (const auto& a : axioms)
      if (a.axiom == name) return &a;
    return nullptr;
  }

  std::vector<std::string> lines() const {
    std::vector<std::string> out;
    for (const auto& p : problems) out.push_back("problem: " + p);
    for (const auto& a : axioms) {
      if (a.pass())
        out.push_back(a.axiom + ": ok, " + std::to_string(a.checked) +
                      " instance(s)");
      else
        out.push_back(a.axiom + ": " + std::to_string(a.failures) + " of " +
                      std::to_string(a.checked) +
                      " instance(s) failing, first: " + a.first);
    }
    for (const auto& n : notes) out.push_back("note: " + n);
    return out;
  }
};

// Collects failing instances for one axiom; keeps the first description.
struct AxiomRun {
  AxiomCheck check;

  explicit AxiomRun(std::string name) { check.axiom = std::move(name); }

  void instance(bool pass, const std::string& desc) {
    ++check.checked;
    if (pass) return;
    if (check.failures == 0) check.first = desc;
    ++check.failures;
  }
};

}  // namespace hocat
