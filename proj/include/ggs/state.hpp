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

// Dense state vectors of n qudits of dimension d.
//
// Basis index convention (used everywhere, including file formats):
//   k = sum_q digit_q * d^(n-1-q), i.e. qudit 0 is the most significant digit.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ggs/core.hpp"
#include "ggs/graph.hpp"
#include "ggs/hadamard.hpp"

namespace ggs {

class StateVector {
 public:
  StateVector() = default;

  /// Throws DimensionMismatch when amps.size() != d^n. Normalisation is not
  /// enforced here; see `require_normalized`.
  StateVector(int n, int d, CVector amps) : n_(n), d_(d), amps_(std::move(amps)) {
    if (n < 1 || d < 1) throw Error(ErrorCode::BadSize, "need n >= 1 and d >= 1");
    const auto size = checked_pow(static_cast<std::size_t>(d), static_cast<std::size_t>(n),
                                  kMaxAmplitudes);
    if (static_cast<std::size_t>(amps_.size()) != size) {
      throw Error(ErrorCode::DimensionMismatch,
                  "expected " + std::to_string(size) + " amplitudes, got " +
                      std::to_string(amps_.size()));
    }
  }

  int n() const { return n_; }
  int d() const { return d_; }
  Eigen::Index size() const { return amps_.size(); }
  const CVector& amps() const { return amps_; }
  Complex operator[](Eigen::Index k) const { return amps_[k]; }

  double norm() const { return amps_.norm(); }

  bool is_normalized(double tol = kTol) const { return std::abs(norm() - 1.0) <= tol; }

  const StateVector& require_normalized(double tol = kTol) const {
    if (!is_normalized(tol)) {
      throw Error(ErrorCode::NotNormalized, "norm = " + std::to_string(norm()));
    }
    return *this;
  }

  StateVector normalized() const { return StateVector(n_, d_, amps_ / norm()); }

  /// d^(n-1-site)
  Eigen::Index stride(int site) const {
    Eigen::Index s = 1;
    for (int q = site + 1; q < n_; ++q) s *= d_;
    return s;
  }

  std::vector<int> digits(Eigen::Index k) const {
    std::vector<int> out(n_);
    for (int q = n_ - 1; q >= 0; --q) {
      out[q] = static_cast<int>(k % d_);
      k /= d_;
    }
    return out;
  }

  Eigen::Index index(std::span<const int> digits) const {
    Eigen::Index k = 0;
    for (int v : digits) k = k * d_ + v;
    return k;
  }

 private:
  int n_ = 0;
  int d_ = 0;
  CVector amps_;
};

/// A single-qudit operator on `site`. Need not be unitary.
struct LocalOperator {
  int d = 0;
  int site = 0;
  CMatrix matrix;
};

inline StateVector basis_state(int n, int d, std::span<const int> digits) {
  if (static_cast<int>(digits.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "need " + std::to_string(n) + " digits");
  }
  for (int v : digits) {
    if (v < 0 || v >= d) throw Error(ErrorCode::DigitOutOfRange, "digit " + std::to_string(v));
  }
  const auto size = checked_pow(d, n, kMaxAmplitudes);
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(size));
  Eigen::Index k = 0;
  for (int v : digits) k = k * d + v;
  amps[k] = 1.0;
  return StateVector(n, d, std::move(amps));
}

inline StateVector apply_local(const LocalOperator& op, const StateVector& s) {
  if (op.d != s.d() || op.matrix.rows() != s.d() || op.matrix.cols() != s.d()) {
    throw Error(ErrorCode::DimensionMismatch, "operator is not " + std::to_string(s.d()) + "x" +
                                                  std::to_string(s.d()));
  }
  if (op.site < 0 || op.site >= s.n()) {
    throw Error(ErrorCode::SiteOutOfRange, "site " + std::to_string(op.site));
  }
  const int d = s.d();
  const Eigen::Index stride = s.stride(op.site);
  const Eigen::Index block = stride * d;
  const CVector& in = s.amps();
  CVector out(in.size());
  for (Eigen::Index base = 0; base < in.size(); base += block) {
    for (Eigen::Index off = 0; off < stride; ++off) {
      const Eigen::Index k0 = base + off;
      for (int r = 0; r < d; ++r) {
        Complex acc = 0.0;
        for (int c = 0; c < d; ++c) acc += op.matrix(r, c) * in[k0 + c * stride];
        out[k0 + r * stride] = acc;
      }
    }
  }
  return StateVector(s.n(), d, std::move(out));
}

/// Applies per_site[q] to qudit q.
inline StateVector apply_each(const std::vector<CMatrix>& per_site, const StateVector& s) {
  if (static_cast<int>(per_site.size()) != s.n()) {
    throw Error(ErrorCode::DimensionMismatch, "need one operator per site");
  }
  StateVector out = s;
  for (int q = 0; q < s.n(); ++q) out = apply_local({s.d(), q, per_site[q]}, out);
  return out;
}

/// The generalised controlled-Z gate: |a_i a_j> -> h_{a_i a_j} |a_i a_j>.
inline StateVector apply_ch(const HadamardMatrix& h, const StateVector& s, int i, int j) {
  if (i == j) throw Error(ErrorCode::SameSite, "C^H needs two distinct sites");
  if (i < 0 || j < 0 || i >= s.n() || j >= s.n()) {
    throw Error(ErrorCode::SiteOutOfRange, "sites " + std::to_string(i) + "," + std::to_string(j));
  }
  if (h.d() != s.d()) throw Error(ErrorCode::DimensionMismatch, "H and state dimensions differ");
  if (!h.symmetric()) throw Error(ErrorCode::NotSymmetric, "C^H needs a symmetric H");
  const int d = s.d();
  const Eigen::Index si = s.stride(i);
  const Eigen::Index sj = s.stride(j);
  CVector out = s.amps();
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    const int ai = static_cast<int>((k / si) % d);
    const int aj = static_cast<int>((k / sj) % d);
    out[k] *= h(ai, aj);
  }
  return StateVector(s.n(), d, std::move(out));
}

/// Runs the encoding circuit on |digits>: H/sqrt(d) on every qudit, then C^H
/// on every edge. With no digits this is the generalised graph state.
inline StateVector graph_state(const Graph& g, const HadamardMatrix& h,
                               std::optional<std::vector<int>> input_digits = std::nullopt) {
  if (!h.symmetric()) throw Error(ErrorCode::NotSymmetric, "graph states need a symmetric H");
  const std::vector<int> digits = input_digits.value_or(std::vector<int>(g.n(), 0));
  if (static_cast<int>(digits.size()) != g.n()) {
    throw Error(ErrorCode::DimensionMismatch, "need " + std::to_string(g.n()) + " input digits");
  }
  StateVector s = basis_state(g.n(), h.d(), digits);
  const CMatrix u = h.unitary();
  for (int q = 0; q < g.n(); ++q) s = apply_local({h.d(), q, u}, s);
  for (const auto& [a, b] : g.edges()) s = apply_ch(h, s, a, b);
  return s;
}

inline StateVector ghz(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorCode::BadSize, "ghz needs n >= 1, d >= 1");
  const auto size = checked_pow(d, n, kMaxAmplitudes);
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(size));
  Eigen::Index diag_step = 0;
  for (int q = 0; q < n; ++q) diag_step = diag_step * d + 1;
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) amps[i * diag_step] = c;
  return StateVector(n, d, std::move(amps));
}

/// <a|b>
inline Complex overlap(const StateVector& a, const StateVector& b) {
  if (a.n() != b.n() || a.d() != b.d()) {
    throw Error(ErrorCode::DimensionMismatch, "states live in different spaces");
  }
  return a.amps().dot(b.amps());
}

/// Output qudit k is input qudit perm[k].
inline StateVector reorder_qudits(const StateVector& s, std::span<const int> perm) {
  const int n = s.n();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::BadPermutation, "permutation has wrong length");
  }
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw Error(ErrorCode::BadPermutation, "not a bijection");
    seen[p] = 1;
  }
  std::vector<Eigen::Index> in_stride(n);
  for (int q = 0; q < n; ++q) in_stride[q] = s.stride(q);
  CVector out(s.size());
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    // k enumerates output digits; gather from the input index
    Eigen::Index rem = k;
    Eigen::Index src = 0;
    for (int q = n - 1; q >= 0; --q) {
      const auto digit = rem % s.d();
      rem /= s.d();
      src += digit * in_stride[perm[q]];
    }
    out[k] = s[src];
  }
  return StateVector(n, s.d(), std::move(out));
}

/// |a> (x) |b> as an (na + nb)-qudit state; both must share d.
inline StateVector tensor(const StateVector& a, const StateVector& b) {
  if (a.d() != b.d()) throw Error(ErrorCode::DimensionMismatch, "tensor needs equal d");
  CVector amps(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) amps.segment(i * b.size(), b.size()) = a[i] * b.amps();
  return StateVector(a.n() + b.n(), a.d(), std::move(amps));
}

/// For a tensor product of two n-qudit states, the order that places the
/// k-th qudit of each factor next to each other: (0_a, 0_b, 1_a, 1_b, ...).
inline std::vector<int> interleave_permutation(int n) {
  std::vector<int> perm(2 * n);
  for (int k = 0; k < n; ++k) {
    perm[2 * k] = k;
    perm[2 * k + 1] = n + k;
  }
  return perm;
}

/// Reads a 2m-qudit state of dimension d as an m-qudit state of dimension d^2,
/// pairing qudits (0,1), (2,3), ... with the first of each pair most
/// significant.
inline StateVector pair_qudits(const StateVector& s) {
  if (s.n() % 2 != 0) throw Error(ErrorCode::BadSize, "odd number of qudits");
  return StateVector(s.n() / 2, s.d() * s.d(), s.amps());
}

/// Site-wise merge of two n-qudit states of dimensions da and db into one
/// n-qudit state of dimension da*db, digit (i_a, i_b) -> i_a * db + i_b.
inline StateVector merge_sitewise(const StateVector& a, const StateVector& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::DimensionMismatch, "different qudit counts");
  const int n = a.n();
  const int da = a.d();
  const int db = b.d();
  const int dm = da * db;
  const auto size = checked_pow(dm, n, kMaxAmplitudes);
  CVector amps(static_cast<Eigen::Index>(size));
  for (Eigen::Index k = 0; k < amps.size(); ++k) {
    Eigen::Index rem = k;
    Eigen::Index ia = 0;
    Eigen::Index ib = 0;
    Eigen::Index pa = 1;
    Eigen::Index pb = 1;
    for (int q = n - 1; q >= 0; --q) {
      const auto digit = rem % dm;
      rem /= dm;
      ia += (digit / db) * pa;
      ib += (digit % db) * pb;
      pa *= da;
      pb *= db;
    }
    amps[k] = a[ia] * b[ib];
  }
  return StateVector(n, dm, std::move(amps));
}

/// Dense matrix of the encoding circuit; column k is the circuit applied to
/// basis state k.
inline CMatrix encoding_unitary(const Graph& g, const HadamardMatrix& h) {
  const auto dim = checked_pow(h.d(), g.n(), kMaxDenseOperatorDim);
  CMatrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  StateVector probe = basis_state(g.n(), h.d(), std::vector<int>(g.n(), 0));
  for (Eigen::Index k = 0; k < u.cols(); ++k) u.col(k) = graph_state(g, h, probe.digits(k)).amps();
  return u;
}

struct GroundCheck {
  double ground_energy = 0.0;
  double gap = 0.0;
  int ground_dim = 0;
  double fidelity = 0.0;  // norm of the graph state's projection on the ground space
};

/// Builds -sum_i U |0_i><0_i| U^dag densely and diagonalises it.
inline GroundCheck hamiltonian_ground_check(const Graph& g, const HadamardMatrix& h) {
  const int d = h.d();
  const CMatrix u = encoding_unitary(g, h);
  const Eigen::Index dim = u.rows();
  const StateVector probe = basis_state(g.n(), d, std::vector<int>(g.n(), 0));
  CMatrix ham = CMatrix::Zero(dim, dim);
  for (int site = 0; site < g.n(); ++site) {
    CVector mask(dim);
    for (Eigen::Index k = 0; k < dim; ++k) mask[k] = probe.digits(k)[site] == 0 ? 1.0 : 0.0;
    ham -= u * mask.asDiagonal() * u.adjoint();
  }
  ham = (0.5 * (ham + ham.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(ham);
  const auto& values = eig.eigenvalues();
  constexpr double kCluster = 1e-8;
  GroundCheck out;
  out.ground_energy = values[0];
  out.ground_dim = 1;
  while (out.ground_dim < dim && values[out.ground_dim] - values[0] <= kCluster) ++out.ground_dim;
  out.gap = out.ground_dim < dim ? values[out.ground_dim] - values[0] : 0.0;
  const CVector psi = graph_state(g, h).amps();
  const CMatrix ground = eig.eigenvectors().leftCols(out.ground_dim);
  out.fidelity = (ground.adjoint() * psi).norm();
  return out;
}

}  // namespace ggs
