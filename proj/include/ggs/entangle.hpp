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

// Reduced states and local-unitary invariants.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ggs/core.hpp"
#include "ggs/hadamard.hpp"
#include "ggs/state.hpp"

namespace ggs {

struct DensityMatrix {
  std::vector<int> dims;
  CMatrix mat;

  Eigen::Index size() const { return mat.rows(); }
};

namespace detail {

inline void require_sorted_sites(std::span<const int> sites, int n, ErrorCode code) {
  for (std::size_t k = 0; k < sites.size(); ++k) {
    if (sites[k] < 0 || sites[k] >= n || (k > 0 && sites[k] <= sites[k - 1])) {
      throw Error(code, "site list must be strictly increasing within 0.." + std::to_string(n - 1));
    }
  }
}

/// Rows indexed by the kept digits, columns by the traced digits, both
/// big-endian in site order.
inline CMatrix split_amplitudes(const StateVector& s, std::span<const int> keep) {
  const int n = s.n();
  const int d = s.d();
  std::vector<char> kept(n, 0);
  for (int q : keep) kept[q] = 1;
  Eigen::Index rows = 1;
  for (std::size_t k = 0; k < keep.size(); ++k) rows *= d;
  const Eigen::Index cols = s.size() / rows;
  CMatrix m(rows, cols);
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    Eigen::Index rem = k;
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    Eigen::Index pr = 1;
    Eigen::Index pc = 1;
    for (int q = n - 1; q >= 0; --q) {
      const auto digit = rem % d;
      rem /= d;
      if (kept[q]) {
        r += digit * pr;
        pr *= d;
      } else {
        c += digit * pc;
        pc *= d;
      }
    }
    m(r, c) = s[k];
  }
  return m;
}

inline CMatrix hermitian_part(const CMatrix& a) { return 0.5 * (a + a.adjoint()); }

}  // namespace detail

/// Partial trace over every site not in `keep` (strictly increasing).
inline DensityMatrix reduced_density(const StateVector& s, std::span<const int> keep) {
  if (keep.empty()) throw Error(ErrorCode::EmptyKeep, "nothing to keep");
  detail::require_sorted_sites(keep, s.n(), ErrorCode::BadSite);
  const CMatrix m = detail::split_amplitudes(s, keep);
  return {std::vector<int>(keep.size(), s.d()), m * m.adjoint()};
}

inline DensityMatrix reduced_density(const StateVector& s, std::initializer_list<int> keep) {
  return reduced_density(s, std::span<const int>(keep.begin(), keep.size()));
}

/// Transposes the row and column digit of one tensor slot. The result is
/// Hermitian but generally not positive, hence a raw matrix.
inline CMatrix partial_transpose(const DensityMatrix& rho, int slot) {
  const int m = static_cast<int>(rho.dims.size());
  if (slot < 0 || slot >= m) throw Error(ErrorCode::BadSlot, "slot " + std::to_string(slot));
  Eigen::Index below = 1;  // product of dims after `slot`
  for (int k = slot + 1; k < m; ++k) below *= rho.dims[k];
  const Eigen::Index ds = rho.dims[slot];
  const Eigen::Index dim = rho.size();
  CMatrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const Eigen::Index rd = (r / below) % ds;
    for (Eigen::Index c = 0; c < dim; ++c) {
      const Eigen::Index cd = (c / below) % ds;
      const Eigen::Index r2 = r + (cd - rd) * below;
      const Eigen::Index c2 = c + (rd - cd) * below;
      out(r, c) = rho.mat(r2, c2);
    }
  }
  return out;
}

/// Tr[(rho_01^{T_0})^3]: sites 0 and 1 kept, transpose on slot 0.
inline double i6(const StateVector& s, double residue_tol = kTol) {
  if (s.n() < 3) throw Error(ErrorCode::TooFewSites, "I6 needs at least 3 qudits");
  const DensityMatrix rho = reduced_density(s, {0, 1});
  const CMatrix a = partial_transpose(rho, 0);
  const Complex t = (a * a * a).trace();
  if (std::abs(t.imag()) > residue_tol) {
    throw Error(ErrorCode::NumericalResidue, "imaginary part " + std::to_string(t.imag()));
  }
  return t.real();
}

/// Eigenvalues of the reduced state on `part`, descending. Roundoff
/// negatives no larger than `tol` are clamped to zero.
inline std::vector<double> schmidt_spectrum(const StateVector& s, std::span<const int> part,
                                            double tol = kTol) {
  if (part.empty() || static_cast<int>(part.size()) >= s.n()) {
    throw Error(ErrorCode::BadPartition, "need a proper nonempty subset");
  }
  detail::require_sorted_sites(part, s.n(), ErrorCode::BadPartition);
  const DensityMatrix rho = reduced_density(s, part);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(detail::hermitian_part(rho.mat),
                                             Eigen::EigenvaluesOnly);
  std::vector<double> out(eig.eigenvalues().data(),
                          eig.eigenvalues().data() + eig.eigenvalues().size());
  for (double& v : out) {
    if (v < 0.0 && v >= -tol) v = 0.0;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline std::vector<double> schmidt_spectrum(const StateVector& s, std::initializer_list<int> part,
                                            double tol = kTol) {
  return schmidt_spectrum(s, std::span<const int>(part.begin(), part.size()), tol);
}

struct KrausTest {
  bool pass = true;
  double max_violation = 0.0;
};

/// With H dephased and F_i = Gamma_i H Gamma_i, checks that all F_i^dag F_j
/// commute. Failure rules out local-unitary equivalence of the triangle
/// state to GHZ; passing is only a necessary condition.
inline KrausTest kraus_commutation_test(const HadamardMatrix& h, double tol = kTol) {
  const HadamardMatrix hd = dephase(h).matrix;
  const int d = hd.d();
  std::vector<CMatrix> f(d);
  for (int i = 0; i < d; ++i) {
    const CMatrix g = gamma(hd, i).matrix();
    f[i] = g * hd.entries() * g;
  }
  const Eigen::Index count = static_cast<Eigen::Index>(d) * d;
  // Products stacked vertically (rows) and horizontally (cols) so that all
  // G_p G_q and G_q G_p for one p come out of two dense products.
  CMatrix stacked(count * d, d);
  CMatrix side(d, count * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const CMatrix g = f[i].adjoint() * f[j];
      const Eigen::Index p = static_cast<Eigen::Index>(i) * d + j;
      stacked.middleRows(p * d, d) = g;
      side.middleCols(p * d, d) = g;
    }
  }
  KrausTest out;
  for (Eigen::Index p = 0; p < count; ++p) {
    const CMatrix gp = stacked.middleRows(p * d, d);
    const CMatrix left = gp * side;      // block q: G_p G_q
    const CMatrix right = stacked * gp;  // block q: G_q G_p
    for (Eigen::Index q = p + 1; q < count; ++q) {
      const double v = max_abs(left.middleCols(q * d, d) - right.middleRows(q * d, d));
      out.max_violation = std::max(out.max_violation, v);
    }
  }
  out.pass = out.max_violation <= tol;
  return out;
}

}  // namespace ggs
