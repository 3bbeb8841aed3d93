// Problem-file loading and report serialization for the CLI: a JSON schema
// for states/observables/auxiliary states with complex numbers written as
// [re, im] pairs, plus CSV/JSON emitters that carry every number at 12
// significant digits in both formats.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uncert/bounds.hpp"
#include "uncert/hilbert.hpp"

namespace uncert {

struct ProblemFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parsed problem file.  Norm and Hermiticity are enforced on load; failures
// surface as ProblemFileError with the offending entry named.
struct ProblemFile {
  std::size_t dim = 0;
  QuantumState state;
  std::map<std::string, Observable> observables; // at least "A" and "B"
  std::map<std::string, QuantumState> aux;       // may be empty
  std::optional<double> lambda;
  std::vector<Relation> relations; // empty = default set
  bool relations_given = false;
};

ProblemFile load_problem_file(const std::string& path);
ProblemFile parse_problem_json(const std::string& text);

// Formats a double with 12 significant digits; the same string feeds both
// CSV and JSON output so the two formats carry identical values.
std::string format_value(double x);

// Value of format_value(x) parsed back, i.e. x rounded to 12 significant
// digits.
double rounded_value(double x);

} // namespace uncert
