#include "uncert/problem_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace uncert {

namespace {

using nlohmann::json;

cplx parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ProblemFileError(where + ": complex numbers must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

CVec parse_vector(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim)
    throw ProblemFileError(where + ": expected " + std::to_string(dim) +
                           " complex entries");
  CVec v;
  v.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i)
    v.push_back(parse_complex(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

QuantumState parse_state(const json& j, std::size_t dim, const std::string& where) {
  CVec v = parse_vector(j, dim, where);
  const double n = norm(v);
  if (std::abs(n - 1.0) > kStateNormTol)
    throw ProblemFileError(where + ": state is not normalized (norm = " +
                           std::to_string(n) + ")");
  return QuantumState(std::move(v));
}

Observable parse_observable(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim)
    throw ProblemFileError(where + ": expected a " + std::to_string(dim) + "x" +
                           std::to_string(dim) + " matrix");
  std::vector<cplx> entries;
  entries.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::string row_where = where + " row " + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != dim)
      throw ProblemFileError(row_where + ": expected " + std::to_string(dim) +
                             " entries");
    for (std::size_t c = 0; c < dim; ++c)
      entries.push_back(
          parse_complex(j[r][c], row_where + " col " + std::to_string(c)));
  }
  Matrix m(dim, std::move(entries));
  if (!m.is_hermitian())
    throw ProblemFileError(where + ": matrix is not Hermitian (max |M - M^dagger| = " +
                           std::to_string((m - m.adjoint()).max_abs()) + ")");
  return Observable(std::move(m));
}

} // namespace

ProblemFile parse_problem_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProblemFileError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ProblemFileError("top-level JSON value must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
    throw ProblemFileError("missing or invalid \"dim\"");
  const std::size_t dim = doc["dim"].get<std::size_t>();
  if (dim < 2) throw ProblemFileError("\"dim\" must be >= 2");

  if (!doc.contains("state")) throw ProblemFileError("missing \"state\"");
  if (!doc.contains("observables") || !doc["observables"].is_object())
    throw ProblemFileError("missing or invalid \"observables\"");

  std::map<std::string, Observable> observables;
  for (const auto& [name, value] : doc["observables"].items())
    observables.emplace(name, parse_observable(value, dim, "observable " + name));
  if (!observables.count("A") || !observables.count("B"))
    throw ProblemFileError("\"observables\" must contain at least \"A\" and \"B\"");

  std::map<std::string, QuantumState> aux;
  if (doc.contains("aux")) {
    if (!doc["aux"].is_object()) throw ProblemFileError("\"aux\" must be an object");
    for (const auto& [name, value] : doc["aux"].items())
      aux.emplace(name, parse_state(value, dim, "aux state " + name));
  }

  std::optional<double> lambda;
  if (doc.contains("lambda")) {
    if (!doc["lambda"].is_number())
      throw ProblemFileError("\"lambda\" must be a number");
    lambda = doc["lambda"].get<double>();
    if (!(*lambda > 0.0)) throw ProblemFileError("\"lambda\" must be positive");
  }

  std::vector<Relation> relations;
  bool relations_given = false;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array())
      throw ProblemFileError("\"relations\" must be an array of relation ids");
    relations_given = true;
    for (const auto& r : doc["relations"]) {
      if (!r.is_string())
        throw ProblemFileError("\"relations\" entries must be strings");
      const auto rel = relation_from_name(r.get<std::string>());
      if (!rel)
        throw ProblemFileError("unknown relation id \"" + r.get<std::string>() + "\"");
      relations.push_back(*rel);
    }
  }

  return ProblemFile{dim,
                     parse_state(doc["state"], dim, "state"),
                     std::move(observables),
                     std::move(aux),
                     lambda,
                     std::move(relations),
                     relations_given};
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemFileError("cannot open problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_json(buf.str());
}

std::string format_value(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double rounded_value(double x) {
  return std::strtod(format_value(x).c_str(), nullptr);
}

} // namespace uncert
