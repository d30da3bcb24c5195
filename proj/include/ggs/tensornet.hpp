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

// Projected-entangled-pair representation of generalised graph states: one
// unnormalised bond state C^H sum|ij> per edge, and at every site the copy
// projector sum_i |i><i i ... i| over its bond legs.

#include "ggs/core.hpp"
#include "ggs/graph.hpp"
#include "ggs/hadamard.hpp"
#include "ggs/state.hpp"

namespace ggs {

/// Two-qudit unnormalised state, amplitude h_{ij} at index i*d + j.
struct BondState {
  int d = 0;
  CVector amps;

  Complex operator()(int i, int j) const { return amps[i * d + j]; }
};

inline BondState bond_state(const HadamardMatrix& h) {
  const int d = h.d();
  BondState b{d, CVector(d * d)};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) b.amps[i * d + j] = h(i, j);
  return b;
}

/// Contracts the bond network of `g` and returns the normalised physical
/// state.
///
/// Site s carries the copy tensor A_s[i_s; x_1..x_m] = prod_k delta(i_s, x_k).
/// Contracting the legs (x, y) of bond (s, t) against A_s and A_t leaves the
/// factor bond(i_s, i_t) on the physical indices, so the network is evaluated
/// by absorbing bonds one at a time into a tensor over the physical indices
/// that starts as the all-ones copy tensor. A site of degree 0 has an empty
/// projector and keeps its uniform factor.
///
/// For a dephased H the result equals graph_state(g, h) up to global phase;
/// otherwise they differ by the local diagonal Gamma_0 on every site.
inline StateVector peps_contract(const Graph& g, const HadamardMatrix& h) {
  const int d = h.d();
  const int n = g.n();
  const auto size = checked_pow(d, n, kMaxAmplitudes);
  const BondState bond = bond_state(h);
  CVector t = CVector::Ones(static_cast<Eigen::Index>(size));

  std::vector<Eigen::Index> stride(n, 1);
  for (int q = n - 2; q >= 0; --q) stride[q] = stride[q + 1] * d;

  for (const auto& [s, u] : g.edges()) {
    for (Eigen::Index k = 0; k < t.size(); ++k) {
      const int is = static_cast<int>((k / stride[s]) % d);
      const int iu = static_cast<int>((k / stride[u]) % d);
      t[k] *= bond(is, iu);
    }
  }
  const double norm = t.norm();
  if (!(norm > 0.0)) throw Error(ErrorCode::NumericalResidue, "contraction vanished");
  return StateVector(n, d, t / norm);
}

}  // namespace ggs
