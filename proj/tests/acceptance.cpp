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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ggs/ggs.hpp"

namespace {

using namespace ggs;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<std::pair<std::string, HadamardMatrix>> catalog_matrices() {
  return {{"fourier:2", fourier(2)},  {"fourier:3", fourier(3)},       {"fourier:4", fourier(4)},
          {"fourier:5", fourier(5)},  {"fourier:6", fourier(6)},       {"h_alpha:0", h_alpha(0.0)},
          {"h_alpha:pi/5", h_alpha(kPi / 5)}, {"h_alpha:pi/2", h_alpha(kPi / 2)}, {"h_d6", catalog("h_d6")},
          {"tilde_a", catalog("tilde_a")}, {"tilde_b", catalog("tilde_b")}, {"tilde_c", catalog("tilde_c")},
          {"tilde_d", catalog("tilde_d")}, {"qutrit_h2", catalog("qutrit_h2")}};
}

std::vector<std::pair<std::string, Graph>> connected_graphs() {
  std::vector<std::pair<std::string, Graph>> out;
  for (int n = 2; n <= 5; ++n) {
    out.emplace_back("star:" + std::to_string(n), family("star", n));
    out.emplace_back("line:" + std::to_string(n), family("line", n));
    out.emplace_back("complete:" + std::to_string(n), family("complete", n));
  }
  for (int n = 3; n <= 5; ++n) out.emplace_back("cycle:" + std::to_string(n), family("cycle", n));
  out.emplace_back("triangle", family("triangle", 3));
  return out;
}

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(12);
  ss << x;
  return ss.str();
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

double fidelity(const CVector& a, const CVector& b) { return std::abs(a.normalized().dot(b.normalized())); }

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome ac1() {
  const double limit = 1.0;
  auto t0 = std::chrono::steady_clock::now();
  const double ghz_i6 = i6(ghz(3, 6));
  const double t_ghz = elapsed(t0);
  t0 = std::chrono::steady_clock::now();
  const double tri = i6(graph_state(family("triangle", 3), catalog("h_d6")));
  const double t_tri = elapsed(t0);
  const bool ok = std::abs(ghz_i6 - 0.0278) <= 5e-4 && std::abs(ghz_i6 - 1.0 / 36) <= 1e-12 &&
                  std::abs(tri - 0.0150) <= 5e-4 && t_ghz < limit && t_tri < limit;
  return {ok, "I6(GHZ_3,6)=" + fmt(ghz_i6) + " I6(triangle,h_d6)=" + fmt(tri) + " expected 0.0150"};
}

Outcome ac2() {
  const KrausTest h = kraus_commutation_test(catalog("h_d6"));
  bool ok = !h.pass && h.max_violation > 0.1;
  double worst = 0.0;
  for (int d = 2; d <= 5; ++d) {
    const KrausTest f = kraus_commutation_test(fourier(d));
    ok = ok && f.pass && f.max_violation <= 1e-9;
    worst = std::max(worst, f.max_violation);
  }
  return {ok, "h_d6 violation=" + fmt(h.max_violation) + " fourier worst=" + fmt(worst)};
}

ClassicalCode repetition4() { return ClassicalCode(3, 4, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}}); }

Outcome ac3() {
  const QuantumCode q = build_code(family("triangle", 3), h_alpha(kPi / 5), repetition4());
  const DistanceResult r = kl_distance(q, 3);
  const bool ok = q.dimension() == 4 && q.gram_deviation <= 1e-9 && !r.lower_bound_exceeded && r.value == 2;
  return {ok, "K=" + std::to_string(q.dimension()) + " gram_deviation=" + fmt(q.gram_deviation) +
                  " distance=" + std::to_string(r.value) + " expected 2"};
}

Outcome ac4() {
  const Graph tri = family("triangle", 3);
  const WeightEnumerators a = weight_enumerators(build_code(tri, h_alpha(kPi / 5), repetition4()));
  const WeightEnumerators f = weight_enumerators(build_code(tri, fourier(4), repetition4()));
  double diff = 0.0;
  for (std::size_t j = 0; j < a.a.size(); ++j) {
    diff = std::max({diff, std::abs(a.a[j] - f.a[j]), std::abs(a.b[j] - f.b[j])});
  }
  return {diff > 1e-6, "max enumerator difference=" + fmt(diff)};
}

Outcome ac5() {
  double worst = 0.0;
  int states = 0;
  for (const auto& [hn, h] : catalog_matrices()) {
    const CMatrix mixed = CMatrix::Identity(h.d(), h.d()) / static_cast<double>(h.d());
    for (const auto& [gn, g] : connected_graphs()) {
      const StateVector s = graph_state(g, h);
      ++states;
      for (int q = 0; q < g.n(); ++q) worst = std::max(worst, max_abs(reduced_density(s, {q}).mat - mixed));
    }
  }
  return {worst <= 1e-9, std::to_string(states) + " states, worst deviation=" + fmt(worst)};
}

Outcome ac6() {
  double worst = 1.0;
  for (const auto& [hn, h] : catalog_matrices()) {
    const int d = h.d();
    const CMatrix u = h.unitary();
    for (int n = 2; n <= 5; ++n) {
      CVector expected = CVector::Zero(graph_state(family("empty", n), h).size());
      for (int j = 0; j < d; ++j) {
        CVector term = CVector::Unit(d, j);
        for (int k = 1; k < n; ++k) term = kron(term, u.col(j));
        expected += term;
      }
      worst = std::min(worst, fidelity(expected, graph_state(family("star", n), h).amps()));
    }
    CVector line = CVector::Zero(d * d * d);
    for (int j = 0; j < d; ++j) line += kron(kron(u.col(j), CVector::Unit(d, j)), u.col(j));
    worst = std::min(worst, fidelity(line, graph_state(family("line", 3), h).amps()));
  }
  return {worst >= 1 - 1e-9, "worst overlap=" + fmt(worst)};
}

Outcome ac7() {
  double worst = 1.0;
  for (const auto& [hn, h] : catalog_matrices()) {
    std::vector<CMatrix> undo;
    for (const auto& [gn, g] : connected_graphs()) {
      undo.assign(g.n(), gamma(h, 0).matrix().adjoint());
      const StateVector circuit = apply_each(undo, graph_state(g, h));
      worst = std::min(worst, std::abs(overlap(peps_contract(g, h), circuit)));
    }
  }
  return {worst >= 1 - 1e-9, "worst fidelity=" + fmt(worst) + " (Gamma_0 removed for non-dephased H)"};
}

Outcome ac8() {
  double worst = 1.0;
  for (const auto& g : {family("triangle", 3), family("cycle", 4)}) {
    const StateVector a = graph_state(g, fourier(2));
    const StateVector merged = pair_qudits(reorder_qudits(tensor(a, a), interleave_permutation(g.n())));
    const StateVector direct = graph_state(g, tensor_product(fourier(2), fourier(2)));
    worst = std::min(worst, std::abs(overlap(direct, merged)));
  }
  return {worst >= 1 - 1e-9, "worst overlap=" + fmt(worst)};
}

Outcome ac9() {
  const HadamardMatrix c = catalog("tilde_c");
  const auto pw = find_equivalence(catalog("tilde_d"), c, EquivalenceKind::PEquiv);
  if (!pw) return {false, "no P-equivalence between tilde_d and tilde_c"};
  const LuWitness a = lu_witness_p_equiv(family("triangle", 3), c, *pw);
  const CMatrix cnot = Permutation({0, 1, 3, 2}).matrix();
  bool is_cnot = true;
  for (const auto& u : a.unitaries) is_cnot = is_cnot && max_abs(u - cnot) <= 1e-12;

  const Graph cyc = family("cycle", 4);
  const auto gw = find_equivalence(catalog("qutrit_h2"), fourier(3), EquivalenceKind::General);
  if (!gw) return {false, "no equivalence between qutrit_h2 and fourier(3)"};
  const LuWitness b = lu_witness_bipartite(cyc, *bipartition(cyc), fourier(3), *gw);
  const bool ok = a.overlap >= 1 - 1e-9 && b.overlap >= 1 - 1e-9 && is_cnot;
  return {ok, "p_equiv overlap=" + fmt(a.overlap) + (is_cnot ? " (CNOT on each site)" : " (not CNOT)") +
                  " bipartite overlap=" + fmt(b.overlap)};
}

Outcome ac10() {
  bool ok = true;
  int checked = 0;
  for (int d = 2; d <= 5; ++d) {
    const HadamardMatrix h = fourier(d);
    const PauliPair p = pauli_xz(d);
    std::vector<int> up(d);
    CVector z(d);
    for (int i = 0; i < d; ++i) {
      up[i] = (i + 1) % d;
      z[i] = root_of_unity(i, d);
    }
    const EquivalenceWitness w{EquivalenceKind::SSymmetry, Permutation(up), DiagonalUnitary(z),
                               Permutation::identity(d), DiagonalUnitary::identity(d)};
    for (const auto& [gn, g] : connected_graphs()) {
      const StateVector psi = graph_state(g, h);
      for (int a = 0; a < g.n(); ++a) {
        const StabilizerOperator op = stabilizer_from_symmetry(g, h, w, a);
        const auto nb = g.neighbors(a);
        for (int s = 0; s < g.n(); ++s) {
          CMatrix expected = CMatrix::Identity(d, d);
          if (s == a) expected = p.x.adjoint();
          if (std::find(nb.begin(), nb.end(), s) != nb.end()) expected = p.z;
          ok = ok && op.factors()[s] == expected;
        }
        ok = ok && verify_stabilizer(op, psi).fixed;
        ++checked;
      }
    }
  }
  const HadamardMatrix ha = h_alpha(kPi / 5);
  const EquivalenceWitness pd{EquivalenceKind::SSymmetry, Permutation({1, 0, 3, 2}),
                              DiagonalUnitary((CVector(4) << 1.0, 1.0, -1.0, -1.0).finished()),
                              Permutation::identity(4), DiagonalUnitary::identity(4)};
  const Graph tri = family("triangle", 3);
  const StateVector psi = graph_state(tri, ha);
  for (int a = 0; a < 3; ++a) ok = ok && verify_stabilizer(stabilizer_from_symmetry(tri, ha, pd, a), psi).fixed;
  return {ok, std::to_string(checked) + " Fourier generators plus 3 h_alpha generators"};
}

Outcome ac11() {
  const std::vector<HadamardMatrix> hs = {fourier(2), fourier(3), fourier(5), h_alpha(0.0), h_alpha(kPi / 5),
                                          catalog("tilde_a"), catalog("tilde_b"), catalog("tilde_c"),
                                          catalog("tilde_d")};
  double worst_i6 = 0.0;
  double worst_flat = 0.0;
  bool ranks = true;
  for (const auto& h : hs) {
    const StateVector s = graph_state(family("triangle", 3), h);
    const int d = h.d();
    worst_i6 = std::max(worst_i6, std::abs(i6(s) - 1.0 / (d * d)));
    for (int q = 0; q < 3; ++q) {
      const auto spec = schmidt_spectrum(s, {q});
      ranks = ranks && static_cast<int>(spec.size()) == d;
      for (double x : spec) worst_flat = std::max(worst_flat, std::abs(x - 1.0 / d));
    }
  }
  const double alpha = kPi / 5;
  const Complex s = std::polar(1.0, alpha / 2);
  const Complex t = std::polar(1.0, 3 * alpha / 2);
  auto cube = [](const CVector& v) { return kron(kron(v, v), v); };
  const CVector v0 = (CVector(4) << 1.0, 1.0, s, -s).finished();
  const CVector v1 = (CVector(4) << 1.0, 1.0, -s, s).finished();
  const CVector v2 = (CVector(4) << -1.0, 1.0, t, t).finished();
  const CVector v3 = (CVector(4) << 1.0, -1.0, t, t).finished();
  const CVector sum = cube(v0) + cube(v1) + std::polar(1.0, -3 * alpha / 2) * (cube(v2) + cube(v3));
  const double decomposition = fidelity(sum, graph_state(family("triangle", 3), h_alpha(alpha)).amps());
  const bool ok = ranks && worst_i6 <= 1e-6 && worst_flat <= 1e-6 && decomposition >= 1 - 1e-9;
  return {ok, "i6 deviation=" + fmt(worst_i6) + " spectrum deviation=" + fmt(worst_flat) +
                  " decomposition overlap=" + fmt(decomposition)};
}

Outcome ac12() {
  const GroundCheck a = hamiltonian_ground_check(family("triangle", 3), fourier(2));
  const GroundCheck b = hamiltonian_ground_check(family("cycle", 4), fourier(3));
  bool ok = true;
  for (const auto& c : {a, b}) {
    ok = ok && c.ground_dim == 1 && std::abs(c.gap - 1.0) <= 1e-9 && c.fidelity >= 1 - 1e-9;
  }
  return {ok, "gaps " + fmt(a.gap) + ", " + fmt(b.gap) + " fidelities " + fmt(a.fidelity) + ", " + fmt(b.fidelity)};
}

Outcome ac13() {
  const CMatrix f = controlled_h(fourier(3));
  const CMatrix q = controlled_h(catalog("qutrit_h2"));
  const double diff = max_abs(f * f - q);
  const double off = max_abs(q - CMatrix(q.diagonal().asDiagonal()));
  return {diff <= 1e-15 && off == 0.0, "||C_F^2 - C_H2||=" + fmt(diff)};
}

Outcome ac14() {
  double worst = 0.0;
  bool factorized = true;
  const Graph tri = family("triangle", 3);
  for (const auto& [hn, h] : catalog_matrices()) {
    const int d = h.d();
    CVector phases(d);
    for (int i = 0; i < d; ++i) phases[i] = std::polar(1.0, 0.37 * (i + 1) * (i + 2));
    const CMatrix e = phases.asDiagonal();
    const CMatrix expected = h.unitary().adjoint() * e * h.unitary();
    for (int site = 0; site < 3; ++site) {
      const DecodedError r = decoded_error(tri, h, {d, site, e});
      factorized = factorized && r.factorized;
      worst = std::max({worst, r.residual, max_abs(r.site_operator - expected)});
    }
  }
  return {factorized && worst <= 1e-9, "worst residual=" + fmt(worst)};
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> check;
    double seconds;  // runtime budget
  };
  const std::vector<Criterion> criteria = {
      {"AC1", ac1, 2.0},    {"AC2", ac2, 1.0},    {"AC3", ac3, 30.0},   {"AC4", ac4, 120.0},
      {"AC5", ac5, 60.0},   {"AC6", ac6, 60.0},   {"AC7", ac7, 60.0},   {"AC8", ac8, 60.0},
      {"AC9", ac9, 60.0},   {"AC10", ac10, 60.0}, {"AC11", ac11, 60.0}, {"AC12", ac12, 60.0},
      {"AC13", ac13, 60.0}, {"AC14", ac14, 60.0}};
  int failed = 0;
  for (const auto& [name, check, budget] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double took = elapsed(start);
    if (took > budget) {
      o.pass = false;
      o.detail += " over budget of " + fmt(budget) + " s";
    }
    failed += !o.pass;
    std::printf("%s %s (%.2f s) %s\n", name.c_str(), o.pass ? "PASS" : "FAIL", took, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
