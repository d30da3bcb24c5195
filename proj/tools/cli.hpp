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

// Command-line front end. Results go to `out` as JSON (or key: value lines
// with --text), diagnostics to `err`. Exit status 0 on success, 1 on a
// domain error (the error code is also printed as JSON), 2 on bad usage or
// unreadable input.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ggs/ggs.hpp"
#include "ggs/io.hpp"

namespace ggs::cli {

using io::Json;

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw io::ParseError("bad integer list '" + text + "'");
    }
    if (used != item.size()) throw io::ParseError("bad integer list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw io::ParseError("empty integer list");
  return out;
}

inline Json permutation_json(const Permutation& p) { return Json(p.map()); }

inline Json phases_json(const DiagonalUnitary& d) {
  Json out = Json::array();
  for (int i = 0; i < d.d(); ++i) out.push_back(io::complex_json(d[i]));
  return out;
}

inline Json witness_json(const EquivalenceWitness& w) {
  return Json{{"kind", std::string(to_string(w.kind))},
              {"p1", permutation_json(w.p1)},
              {"d1", phases_json(w.d1)},
              {"p2", permutation_json(w.p2)},
              {"d2", phases_json(w.d2)}};
}

/// Haar-random d x d unitary from the QR decomposition of a Ginibre matrix.
inline CMatrix random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

inline double rdm_deviation(const StateVector& s, int site) {
  const int keep[] = {site};
  const DensityMatrix rho = reduced_density(s, keep);
  const CMatrix mixed = CMatrix::Identity(s.d(), s.d()) / static_cast<double>(s.d());
  return max_abs(rho.mat - mixed);
}

inline void write_text(const Json& j, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

}  // namespace detail

struct Options {
  double tol = kTol;
  std::optional<std::uint64_t> seed;
  bool text = false;
};

inline Json cmd_validate(const std::string& h_spec, const Options& o) {
  const HadamardMatrix h = io::load_hadamard(h_spec, o.tol);
  return Json{{"valid", true}, {"symmetric", h.symmetric()}, {"dephased", h.dephased()}};
}

inline Json cmd_equiv(const std::string& a, const std::string& b, bool p_equiv, const Options& o) {
  const HadamardMatrix h1 = io::load_hadamard(a, o.tol);
  const HadamardMatrix h2 = io::load_hadamard(b, o.tol);
  const auto kind = p_equiv ? EquivalenceKind::PEquiv : EquivalenceKind::General;
  const auto w = find_equivalence(h1, h2, kind, o.tol);
  Json out{{"equivalent", w.has_value()}, {"kind", std::string(to_string(kind))}};
  if (w) {
    out["witness"] = detail::witness_json(*w);
    out["residual"] = io::round12(witness_residual(*w, h1, h2));
  }
  return out;
}

inline Json cmd_symmetries(const std::string& h_spec, const Options& o) {
  const HadamardMatrix h = io::load_hadamard(h_spec, o.tol);
  const auto syms = s_symmetries(h, o.tol);
  Json list = Json::array();
  for (const auto& w : syms) {
    list.push_back(Json{{"p", detail::permutation_json(w.p1)},
                        {"d", detail::phases_json(w.d1)},
                        {"ch_conjugation_residual", io::round12(ch_conjugation_residual(h, w))}});
  }
  return Json{{"d", h.d()}, {"count", syms.size()}, {"symmetries", std::move(list)}};
}

inline Json cmd_state(const std::string& g_spec, const std::string& h_spec,
                      const std::optional<std::string>& digits,
                      const std::optional<std::string>& out_path, const Options& o) {
  const Graph g = io::load_graph(g_spec);
  const HadamardMatrix h = io::load_hadamard(h_spec, o.tol);
  std::optional<std::vector<int>> input;
  if (digits) input = detail::parse_int_list(*digits);
  const Json state = io::state_json(graph_state(g, h, input));
  if (!out_path) return state;
  std::ofstream file(*out_path);
  if (!file) throw io::ParseError("cannot write '" + *out_path + "'");
  file << state.dump() << '\n';
  return Json{{"written", *out_path}, {"n", g.n()}, {"d", h.d()}};
}

inline Json cmd_invariant(const std::string& g_spec, const std::string& h_spec, bool want_i6,
                          const std::optional<std::string>& schmidt_part,
                          const std::optional<int>& rdm_site, const Options& o) {
  const Graph g = io::load_graph(g_spec);
  const HadamardMatrix h = io::load_hadamard(h_spec, o.tol);
  const bool all = !want_i6 && !schmidt_part && !rdm_site;
  if (rdm_site && (*rdm_site < 0 || *rdm_site >= g.n())) {
    throw Error(ErrorCode::BadSite, "site " + std::to_string(*rdm_site));
  }
  const std::vector<int> part = schmidt_part ? detail::parse_int_list(*schmidt_part) : std::vector<int>{0};
  const bool do_i6 = want_i6 || (all && g.n() >= 3);
  const bool do_schmidt = schmidt_part.has_value() || (all && g.n() >= 2);
  std::vector<int> rdm_sites;
  if (rdm_site) {
    rdm_sites.push_back(*rdm_site);
  } else if (all) {
    for (int q = 0; q < g.n(); ++q) rdm_sites.push_back(q);
  }

  struct Values {
    double i6 = 0.0;
    std::vector<double> spectrum;
    double rdm = 0.0;
  };
  auto evaluate = [&](const StateVector& s) {
    Values v;
    if (do_i6) v.i6 = i6(s, o.tol);
    if (do_schmidt) v.spectrum = schmidt_spectrum(s, part, o.tol);
    for (int q : rdm_sites) v.rdm = std::max(v.rdm, detail::rdm_deviation(s, q));
    return v;
  };

  const StateVector psi = graph_state(g, h);
  const Values base = evaluate(psi);
  Json out = Json::object();
  if (do_i6) out["i6"] = io::round12(base.i6);
  if (do_schmidt) {
    int rank = 0;
    for (double x : base.spectrum) rank += x > o.tol;
    out["schmidt"] = Json{{"part", part}, {"spectrum", io::doubles_json(base.spectrum)}, {"rank", rank}};
  }
  if (!rdm_sites.empty()) {
    out["rdm_maximally_mixed"] = base.rdm <= o.tol;
    out["rdm_deviation"] = io::round12(base.rdm);
  }
  if (o.seed) {
    std::mt19937_64 rng(*o.seed);
    std::vector<CMatrix> us;
    for (int q = 0; q < g.n(); ++q) us.push_back(detail::random_unitary(h.d(), rng));
    const Values moved = evaluate(apply_each(us, psi));
    double diff = std::abs(moved.i6 - base.i6);
    for (std::size_t k = 0; k < base.spectrum.size(); ++k) {
      diff = std::max(diff, std::abs(moved.spectrum[k] - base.spectrum[k]));
    }
    diff = std::max(diff, std::abs(moved.rdm - base.rdm));
    out["lu_check"] = Json{{"seed", *o.seed},
                           {"max_difference", io::round12(diff)},
                           {"invariant", diff <= 1e-8}};
  }
  return out;
}

inline Json cmd_stabilizers(const std::string& g_spec, const std::string& h_spec, const Options& o) {
  const Graph g = io::load_graph(g_spec);
  const HadamardMatrix h = io::load_hadamard(h_spec, o.tol);
  const StateVector psi = graph_state(g, h);
  Json list = Json::array();
  bool all_fixed = true;
  const auto syms = s_symmetries(h, o.tol);
  for (std::size_t k = 0; k < syms.size(); ++k) {
    if (syms[k].p1.is_identity() && syms[k].d1.is_identity(o.tol)) continue;
    for (int a = 0; a < g.n(); ++a) {
      const StabilizerOperator op = stabilizer_from_symmetry(g, h, syms[k], a, o.tol);
      const StabilizerCheck check = verify_stabilizer(op, psi, o.tol);
      all_fixed = all_fixed && check.fixed;
      Json factors = Json::array();
      for (const auto& f : op.factors()) factors.push_back(io::matrix_json(f));
      list.push_back(Json{{"symmetry", k},
                          {"vertex", a},
                          {"factors", std::move(factors)},
                          {"fixed", check.fixed},
                          {"deviation", io::round12(check.deviation)}});
    }
  }
  return Json{{"n", g.n()}, {"d", h.d()}, {"count", list.size()}, {"all_fixed", all_fixed},
              {"generators", std::move(list)}};
}

inline Json cmd_peps_check(const std::string& g_spec, const std::string& h_spec, const Options& o) {
  const Graph g = io::load_graph(g_spec);
  const HadamardMatrix h = io::load_hadamard(h_spec, o.tol);
  const StateVector circuit = graph_state(g, h);
  const StateVector peps = peps_contract(g, h);
  std::vector<CMatrix> undo(g.n(), gamma(h, 0).matrix().adjoint());
  const double raw = std::abs(overlap(peps, circuit));
  const double corrected = std::abs(overlap(peps, apply_each(undo, circuit)));
  return Json{{"dephased", h.dephased()},
              {"fidelity", io::round12(raw)},
              {"fidelity_after_gamma0", io::round12(corrected)},
              {"passed", corrected >= 1.0 - o.tol}};
}

inline Json cmd_code(const std::string& g_spec, const std::string& h_spec, const std::string& classical,
                     const std::optional<int>& distance, bool enumerators, const Options& o) {
  const Graph g = io::load_graph(g_spec);
  const HadamardMatrix h = io::load_hadamard(h_spec, o.tol);
  const ClassicalCode c = io::load_classical_code(classical, h.d());
  const QuantumCode q = build_code(g, h, c, o.tol);
  Json out{{"n", q.n()}, {"K", q.dimension()}, {"gram_deviation", io::round12(q.gram_deviation)}};
  if (distance) {
    const DistanceResult r = kl_distance(q, *distance, o.tol);
    if (r.lower_bound_exceeded) {
      out["distance"] = nullptr;
      out["lower_bound_exceeded"] = r.value;
    } else {
      out["distance"] = r.value;
    }
  }
  if (enumerators) {
    const WeightEnumerators e = weight_enumerators(q);
    out["A"] = io::doubles_json(e.a);
    out["B"] = io::doubles_json(e.b);
  }
  return out;
}

inline Json cmd_decode_error(const std::string& g_spec, const std::string& h_spec, int site,
                             const std::string& op_spec, const Options& o) {
  const Graph g = io::load_graph(g_spec);
  const HadamardMatrix h = io::load_hadamard(h_spec, o.tol);
  const CMatrix e = io::load_operator(op_spec, h.d());
  const DecodedError r = decoded_error(g, h, {h.d(), site, e}, o.tol);
  Json out{{"site", site}, {"factorized", r.factorized}, {"residual", io::round12(r.residual)}};
  if (r.factorized) out["site_operator"] = io::matrix_json(r.site_operator);
  out["support"] = r.support;
  return out;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalised graph states over complex Hadamard matrices", "ggstate"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::uint64_t seed = 0;
  bool json_flag = false;
  app.add_option("--tol", o.tol, "Absolute tolerance")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "Seed for random local-unitary checks");
  auto* json_opt = app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--text", o.text, "key: value output")->excludes(json_opt);

  std::string h1;
  std::string h2;
  std::string graph;
  std::string hadamard;
  bool p_equiv = false;
  std::optional<std::string> digits;
  std::optional<std::string> out_path;
  bool want_i6 = false;
  std::optional<std::string> schmidt;
  std::optional<int> rdm;
  std::string classical;
  std::optional<int> distance;
  bool enumerators = false;
  int site = 0;
  std::string op;

  auto graph_and_h = [&](CLI::App* sub) {
    sub->add_option("--graph", graph, "Graph file or family name (star:5, cycle:4, triangle, ...)")->required();
    sub->add_option("--hadamard", hadamard, "Matrix file or catalog name (fourier:3, h_d6, ...)")->required();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check a complex Hadamard matrix");
  validate_cmd->add_option("H", h1, "Matrix file or catalog name")->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "Search for an equivalence H1 = D1 P1 H2 P2 D2");
  equiv_cmd->add_option("H1", h1)->required();
  equiv_cmd->add_option("H2", h2)->required();
  equiv_cmd->add_flag("--p-equiv", p_equiv, "Restrict to H1 = P D1 H2 D2 P^T");

  auto* sym_cmd = app.add_subcommand("symmetries", "List all (P, D) with P H D = H");
  sym_cmd->add_option("H", h1)->required();

  auto* state_cmd = app.add_subcommand("state", "Graph state (or encoded basis state) amplitudes");
  graph_and_h(state_cmd);
  state_cmd->add_option("--digits", digits, "Comma-separated input digits");
  state_cmd->add_option("--out", out_path, "Write the state file here");

  auto* inv_cmd = app.add_subcommand("invariant", "Local-unitary invariants of the graph state");
  graph_and_h(inv_cmd);
  inv_cmd->add_flag("--i6", want_i6, "Tr[(rho_01^{T_0})^3]");
  inv_cmd->add_option("--schmidt", schmidt, "Comma-separated sites of one side of the cut");
  inv_cmd->add_option("--rdm", rdm, "Site whose reduced state is compared with I/d");

  auto* stab_cmd = app.add_subcommand("stabilizers", "Local stabilizers from the symmetries of H");
  graph_and_h(stab_cmd);

  auto* peps_cmd = app.add_subcommand("peps-check", "Compare bond-network contraction with the circuit");
  graph_and_h(peps_cmd);

  auto* code_cmd = app.add_subcommand("code", "Quantum code from a classical code");
  graph_and_h(code_cmd);
  code_cmd->add_option("--classical", classical, "Classical code file")->required();
  code_cmd->add_option("--distance", distance, "Test errors up to this weight")->check(CLI::PositiveNumber);
  code_cmd->add_flag("--enumerators", enumerators, "Shor-Laflamme weight enumerators");

  auto* dec_cmd = app.add_subcommand("decode-error", "U^dag E U for a single-site error E");
  graph_and_h(dec_cmd);
  dec_cmd->add_option("--site", site, "Site of the error")->required();
  dec_cmd->add_option("--op", op, "I, X, Z, xz:a:b or a matrix file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }
  if (*seed_opt) o.seed = seed;

  Json result;
  try {
    if (*validate_cmd) {
      result = cmd_validate(h1, o);
    } else if (*equiv_cmd) {
      result = cmd_equiv(h1, h2, p_equiv, o);
    } else if (*sym_cmd) {
      result = cmd_symmetries(h1, o);
    } else if (*state_cmd) {
      result = cmd_state(graph, hadamard, digits, out_path, o);
    } else if (*inv_cmd) {
      result = cmd_invariant(graph, hadamard, want_i6, schmidt, rdm, o);
    } else if (*stab_cmd) {
      result = cmd_stabilizers(graph, hadamard, o);
    } else if (*peps_cmd) {
      result = cmd_peps_check(graph, hadamard, o);
    } else if (*code_cmd) {
      result = cmd_code(graph, hadamard, classical, distance, enumerators, o);
    } else if (*dec_cmd) {
      result = cmd_decode_error(graph, hadamard, site, op, o);
    }
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const Json j{{"error", std::string(to_string(e.code()))}, {"detail", e.detail()}};
    if (o.text) {
      detail::write_text(j, out);
    } else {
      out << j.dump() << '\n';
    }
    return 1;
  }
  if (o.text) {
    detail::write_text(result, out);
  } else {
    out << result.dump() << '\n';
  }
  return 0;
}

}  // namespace ggs::cli
