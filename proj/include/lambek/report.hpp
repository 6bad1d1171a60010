#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambek {

// One violated condition plus the tuple of names that witnesses it.
struct Violation {
  std::string condition;
  std::vector<std::string> witness;
};

struct CheckReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }

  void fail(std::string condition, std::vector<std::string> witness) {
    violations.push_back({std::move(condition), std::move(witness)});
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
  void merge(const CheckReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lambek
