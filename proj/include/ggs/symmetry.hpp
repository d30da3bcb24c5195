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

// Local symmetries of generalised graph states and explicit local-unitary
// maps between states built from equivalent Hadamard matrices.

#include <functional>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "ggs/core.hpp"
#include "ggs/graph.hpp"
#include "ggs/hadamard.hpp"
#include "ggs/state.hpp"

namespace ggs {

struct PauliPair {
  CMatrix x;  // X|i> = |i-1 mod d>
  CMatrix z;  // Z|i> = q^i |i>
};

inline PauliPair pauli_xz(int d) {
  if (d < 2) throw Error(ErrorCode::BadSize, "pauli_xz needs d >= 2");
  PauliPair p{CMatrix::Zero(d, d), CMatrix::Zero(d, d)};
  for (int i = 0; i < d; ++i) {
    p.x((i - 1 + d) % d, i) = 1.0;
    p.z(i, i) = root_of_unity(i, d);
  }
  return p;
}

/// Weyl operator X^a Z^b.
inline CMatrix weyl(int d, int a, int b) {
  const PauliPair p = pauli_xz(d);
  CMatrix out = CMatrix::Identity(d, d);
  for (int k = 0; k < a; ++k) out = out * p.x;
  for (int k = 0; k < b; ++k) out = out * p.z;
  return out;
}

/// Tensor product of single-qudit unitaries, one per site.
class StabilizerOperator {
 public:
  StabilizerOperator(int n, int d, std::vector<CMatrix> factors, double tol = kTol)
      : n_(n), d_(d), factors_(std::move(factors)) {
    if (static_cast<int>(factors_.size()) != n) {
      throw Error(ErrorCode::DimensionMismatch, "need one factor per site");
    }
    for (const auto& f : factors_) {
      if (f.rows() != d || f.cols() != d) throw Error(ErrorCode::DimensionMismatch, "factor shape");
      if (max_abs(f.adjoint() * f - CMatrix::Identity(d, d)) > tol) {
        throw Error(ErrorCode::InvalidWitness, "stabilizer factor is not unitary");
      }
    }
  }

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<CMatrix>& factors() const { return factors_; }

  StateVector apply(const StateVector& s) const {
    if (s.n() != n_ || s.d() != d_) throw Error(ErrorCode::DimensionMismatch, "state shape");
    return apply_each(factors_, s);
  }

 private:
  int n_;
  int d_;
  std::vector<CMatrix> factors_;
};

namespace detail {

inline void require_s_symmetry(const HadamardMatrix& h, const EquivalenceWitness& w, double tol) {
  if (w.kind != EquivalenceKind::SSymmetry || w.p1.d() != h.d() || w.d1.d() != h.d()) {
    throw Error(ErrorCode::InvalidWitness, "not an S-symmetry witness for this H");
  }
  const double r = witness_residual(w, h, h);
  if (r > tol) throw Error(ErrorCode::InvalidWitness, "P H D != H, residual " + std::to_string(r));
}

}  // namespace detail

/// P on vertex a and D on every neighbour of a.
inline StabilizerOperator stabilizer_from_symmetry(const Graph& g, const HadamardMatrix& h,
                                                   const EquivalenceWitness& w, int a,
                                                   double tol = kTol) {
  detail::require_s_symmetry(h, w, tol);
  if (a < 0 || a >= g.n()) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(a));
  std::vector<CMatrix> f(g.n(), CMatrix::Identity(h.d(), h.d()));
  f[a] = w.p1.matrix();
  for (int b : g.neighbors(a)) f[b] = w.d1.matrix();
  return StabilizerOperator(g.n(), h.d(), std::move(f));
}

struct StabilizerCheck {
  bool fixed = false;
  double deviation = 0.0;
};

inline StabilizerCheck verify_stabilizer(const StabilizerOperator& op, const StateVector& s,
                                         double tol = kTol) {
  const double dev = (op.apply(s).amps() - s.amps()).norm();
  return {dev <= tol, dev};
}

/// Dense d^2 x d^2 diagonal of C^H.
inline CMatrix controlled_h(const HadamardMatrix& h) {
  const int d = h.d();
  CVector diag(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) diag[i * d + j] = h(i, j);
  return diag.asDiagonal();
}

/// max |C^H - (P (x) D) C^H (P^T (x) I)| for an S-symmetry (P, D).
inline double ch_conjugation_residual(const HadamardMatrix& h, const EquivalenceWitness& w) {
  const int d = h.d();
  const CMatrix c = controlled_h(h);
  const CMatrix p = w.p1.matrix();
  const CMatrix id = CMatrix::Identity(d, d);
  const CMatrix left = Eigen::kroneckerProduct(p, w.d1.matrix());
  const CMatrix right = Eigen::kroneckerProduct(CMatrix(p.transpose()), id);
  return max_abs(c - left * c * right);
}

/// Per-site unitaries U_s with (U_0 (x) ... (x) U_{n-1}) psi_{G,source}
/// = psi_{G,target} up to global phase.
struct LuWitness {
  HadamardMatrix target;
  std::vector<CMatrix> unitaries;
  double overlap = 0.0;  // |<psi_target | U psi_source>|
};

namespace detail {

/// Site map: amp_target(i) = prod_s g_s(i_s) * amp_source(sigma_s(i_s)).
/// The unitary realising this has U(i, sigma(i)) = g(i).
inline CMatrix site_unitary(const std::vector<int>& sigma, const CVector& g) {
  const int d = static_cast<int>(sigma.size());
  CMatrix u = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) u(i, sigma[i]) = g[i];
  return u;
}

inline LuWitness finish_lu_witness(const Graph& g, const HadamardMatrix& source,
                                   HadamardMatrix target, std::vector<CMatrix> unitaries,
                                   double tol) {
  const StateVector from = graph_state(g, source);
  const StateVector to = graph_state(g, target);
  const double ov = std::abs(overlap(to, apply_each(unitaries, from)));
  if (ov < 1.0 - tol) {
    throw Error(ErrorCode::InvalidWitness, "local unitaries reach overlap " + std::to_string(ov));
  }
  return {std::move(target), std::move(unitaries), ov};
}

inline HadamardMatrix symmetric_target(const EquivalenceWitness& w, const HadamardMatrix& source,
                                       double tol) {
  if (!source.symmetric()) throw Error(ErrorCode::NotSymmetric, "source H is not symmetric");
  if (w.p1.d() != source.d() || w.p2.d() != source.d() || w.d1.d() != source.d() ||
      w.d2.d() != source.d()) {
    throw Error(ErrorCode::InvalidWitness, "witness dimension differs from H");
  }
  return validate(apply_witness(w, source.entries()), true, tol);
}

}  // namespace detail

/// Witness relating target = P D1 source D2 P^T. Works on any graph.
///
/// Writing j = P^{-1} i, an edge (s, t) with s < t contributes
/// D1[j_s] source(j_s, j_t) D2[j_t], so site s collects D1 once per edge where
/// it is the lower endpoint and D2 once per edge where it is the upper one,
/// plus the ratio of the two input columns target|0> / source|0>.
inline LuWitness lu_witness_p_equiv(const Graph& g, const HadamardMatrix& source,
                                    const EquivalenceWitness& w, double tol = kTol) {
  if (w.kind != EquivalenceKind::PEquiv || w.p2 != w.p1.inverse()) {
    throw Error(ErrorCode::InvalidWitness, "expected a P-equivalence witness");
  }
  HadamardMatrix target = detail::symmetric_target(w, source, tol);
  const int d = source.d();
  const Permutation inv = w.p1.inverse();
  std::vector<CMatrix> us;
  for (int s = 0; s < g.n(); ++s) {
    int lower = 0;
    int upper = 0;
    for (const auto& [a, b] : g.edges()) {
      if (a == s) ++lower;
      if (b == s) ++upper;
    }
    CVector f(d);
    for (int i = 0; i < d; ++i) {
      const int j = inv[i];
      f[i] = target(i, 0) / source(j, 0) * ipow(w.d1[j], lower) * ipow(w.d2[j], upper);
    }
    us.push_back(detail::site_unitary(inv.map(), f));
  }
  return detail::finish_lu_witness(g, source, std::move(target), std::move(us), tol);
}

/// Witness relating target = D1 P1 source P2 D2 on a bipartite graph.
///
/// Orient every edge from `parts.first` to `parts.second`. The entry
/// target(i_s, i_t) = D1[i_s] source(P1^{-1} i_s, P2 i_t) D2[i_t], so sites in
/// the first part relabel by P1^{-1} and collect D1, sites in the second
/// relabel by P2 and collect D2.
inline LuWitness lu_witness_bipartite(const Graph& g, const Bipartition& parts,
                                      const HadamardMatrix& source, const EquivalenceWitness& w,
                                      double tol = kTol) {
  std::vector<int> side(g.n(), -1);
  for (int v : parts.first) {
    if (v < 0 || v >= g.n() || side[v] != -1) throw Error(ErrorCode::NotBipartite, "bad part");
    side[v] = 0;
  }
  for (int v : parts.second) {
    if (v < 0 || v >= g.n() || side[v] != -1) throw Error(ErrorCode::NotBipartite, "bad part");
    side[v] = 1;
  }
  for (int v = 0; v < g.n(); ++v) {
    if (side[v] == -1) throw Error(ErrorCode::NotBipartite, "vertex " + std::to_string(v) + " unassigned");
  }
  for (const auto& [a, b] : g.edges()) {
    if (side[a] == side[b]) {
      throw Error(ErrorCode::NotBipartite,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") inside one part");
    }
  }
  if (w.kind != EquivalenceKind::General) {
    throw Error(ErrorCode::InvalidWitness, "expected a general equivalence witness");
  }
  HadamardMatrix target = detail::symmetric_target(w, source, tol);
  const int d = source.d();
  const Permutation p1_inv = w.p1.inverse();
  std::vector<CMatrix> us;
  for (int s = 0; s < g.n(); ++s) {
    const int deg = g.degree(s);
    const bool first = side[s] == 0;
    std::vector<int> sigma(d);
    CVector f(d);
    for (int i = 0; i < d; ++i) {
      sigma[i] = first ? p1_inv[i] : w.p2[i];
      const Complex weight = first ? w.d1[i] : w.d2[i];
      f[i] = target(i, 0) / source(sigma[i], 0) * ipow(weight, deg);
    }
    us.push_back(detail::site_unitary(sigma, f));
  }
  return detail::finish_lu_witness(g, source, std::move(target), std::move(us), tol);
}

}  // namespace ggs
