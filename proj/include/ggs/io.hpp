// Copyright 2026 The ggstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON and text formats, plus the short names accepted in place of files.
//
//   matrix: {"d": int, "entries": [[[re, im], ...], ...]}
//   graph:  {"n": int, "edges": [[u, v], ...]}           (0-based vertices)
//   state:  {"n": int, "d": int, "amps": [[re, im], ...]} (qudit 0 most significant)
//
// Requires nlohmann/json.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ggs/codes.hpp"
#include "ggs/core.hpp"
#include "ggs/graph.hpp"
#include "ggs/hadamard.hpp"
#include "ggs/state.hpp"
#include "ggs/symmetry.hpp"

namespace ggs::io {

using Json = nlohmann::ordered_json;

/// Input that could not be read or does not follow the file format. Kept
/// apart from ggs::Error, which reports well-formed but invalid objects.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rounds to 12 significant digits so that printed output does not depend
/// on the last few bits of a computation.
inline double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

/// Matrix and amplitude entries below 1e-12 in modulus are roundoff and are
/// printed as exact zeros.
inline Json complex_json(Complex z) {
  constexpr double kSnap = 1e-12;
  const double re = std::abs(z.real()) < kSnap ? 0.0 : round12(z.real());
  const double im = std::abs(z.imag()) < kSnap ? 0.0 : round12(z.imag());
  return Json::array({re, im});
}

inline Json matrix_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json hadamard_json(const HadamardMatrix& h) {
  return Json{{"d", h.d()}, {"entries", matrix_json(h.entries())}};
}

inline Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

inline Json state_json(const StateVector& s) {
  Json amps = Json::array();
  for (Eigen::Index k = 0; k < s.size(); ++k) amps.push_back(complex_json(s[k]));
  return Json{{"n", s.n()}, {"d", s.d()}, {"amps", std::move(amps)}};
}

inline Json doubles_json(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(std::abs(x) < 1e-12 ? 0.0 : round12(x));
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

namespace detail {

inline Complex complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("complex number must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

inline int int_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(std::string("missing integer field '") + key + "'");
  }
  return j[key].get<int>();
}

inline const Json& array_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("missing array field '") + key + "'");
  }
  return j[key];
}

/// Splits "name:param" at the first colon.
inline std::pair<std::string, std::string> split_name(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

inline double number_from(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("bad parameter in '" + spec + "'");
  }
  if (used != text.size()) throw ParseError("bad parameter in '" + spec + "'");
  return v;
}

inline int int_from(const std::string& text, const std::string& spec) {
  const double v = number_from(text, spec);
  if (std::floor(v) != v) throw ParseError("integer parameter expected in '" + spec + "'");
  return static_cast<int>(v);
}

}  // namespace detail

/// Dense d x d complex matrix from the matrix format; no Hadamard checks.
inline CMatrix matrix_from_json(const Json& j) {
  const int d = detail::int_field(j, "d");
  const Json& rows = detail::array_field(j, "entries");
  if (d < 1 || static_cast<int>(rows.size()) != d) throw ParseError("entries must have d rows");
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != d) {
      throw ParseError("row " + std::to_string(i) + " must have d entries");
    }
    for (int k = 0; k < d; ++k) m(i, k) = detail::complex_from(rows[i][k]);
  }
  return m;
}

inline bool is_hadamard_name(const std::string& spec) {
  const auto [name, param] = detail::split_name(spec);
  return name == "fourier" || name == "h_alpha" || name == "h_d6" || name == "qutrit_h2" ||
         name.rfind("tilde_", 0) == 0;
}

/// Catalog name (`fourier:4`, `h_alpha:0.6283185307`, `h_d6`, `tilde_c`,
/// `qutrit_h2`) or a path to a matrix file.
inline HadamardMatrix load_hadamard(const std::string& spec, double tol = kTol) {
  if (is_hadamard_name(spec)) {
    const auto [name, param] = detail::split_name(spec);
    if (name == "fourier" || name == "h_alpha") {
      if (param.empty()) throw ParseError("'" + name + "' needs a parameter, e.g. " + name + ":4");
      return catalog(name, detail::number_from(param, spec));
    }
    if (!param.empty()) throw ParseError("'" + name + "' takes no parameter");
    return catalog(name);
  }
  return validate(matrix_from_json(parse_json_text(read_file(spec), spec)), false, tol);
}

inline Graph graph_from_json(const Json& j) {
  const int n = detail::int_field(j, "n");
  std::vector<Edge> edges;
  for (const Json& e : detail::array_field(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("edge must be [u, v]");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::build(n, std::move(edges));
}

inline bool is_graph_name(const std::string& spec) {
  const auto [name, param] = detail::split_name(spec);
  return name == "triangle" || name == "star" || name == "line" || name == "cycle" ||
         name == "complete" || name == "empty";
}

/// Family name (`triangle`, `star:5`, `line:3`, `cycle:4`, `complete:4`,
/// `empty:2`) or a path to a graph file.
inline Graph load_graph(const std::string& spec) {
  if (is_graph_name(spec)) {
    const auto [name, param] = detail::split_name(spec);
    if (name == "triangle") {
      if (!param.empty() && param != "3") throw ParseError("triangle takes no size");
      return family(name, 3);
    }
    if (param.empty()) throw ParseError("'" + name + "' needs a size, e.g. " + name + ":4");
    return family(name, detail::int_from(param, spec));
  }
  return graph_from_json(parse_json_text(read_file(spec), spec));
}

inline StateVector state_from_json(const Json& j) {
  const int n = detail::int_field(j, "n");
  const int d = detail::int_field(j, "d");
  const Json& amps = detail::array_field(j, "amps");
  if (n < 1 || d < 1) throw ParseError("state needs n >= 1 and d >= 1");
  const auto size = checked_pow(d, n, kMaxAmplitudes);
  if (amps.size() != size) throw ParseError("amps must have d^n entries");
  CVector v(static_cast<Eigen::Index>(size));
  for (std::size_t k = 0; k < size; ++k) v[static_cast<Eigen::Index>(k)] = detail::complex_from(amps[k]);
  return StateVector(n, d, std::move(v));
}

inline ClassicalCode load_classical_code(const std::string& path, int d) {
  return parse_classical_code(read_file(path), d);
}

/// Single-qudit operator: `I`, `X`, `Z`, `xz:a:b` (X^a Z^b), or a matrix file.
inline CMatrix load_operator(const std::string& spec, int d) {
  if (spec == "I") return CMatrix::Identity(d, d);
  if (spec == "X") return weyl(d, 1, 0);
  if (spec == "Z") return weyl(d, 0, 1);
  if (spec.rfind("xz:", 0) == 0) {
    const std::string rest = spec.substr(3);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw ParseError("expected xz:a:b");
    const int a = detail::int_from(rest.substr(0, colon), spec);
    const int b = detail::int_from(rest.substr(colon + 1), spec);
    if (a < 0 || b < 0) throw ParseError("exponents must be non-negative");
    return weyl(d, a % d, b % d);
  }
  CMatrix m = matrix_from_json(parse_json_text(read_file(spec), spec));
  if (m.rows() != d) throw Error(ErrorCode::DimensionMismatch, "operator is not " + std::to_string(d) + "x" + std::to_string(d));
  return m;
}

}  // namespace ggs::io
