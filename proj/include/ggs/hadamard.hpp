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

// Complex Hadamard matrices: validation, a small catalog, dephasing,
// tensor products, and brute-force equivalence / symmetry search.
//
// Permutations act on basis indices: P|i> = |map[i]>, so the matrix of P has
// a single 1 in row map[i] of column i. With that convention
//   (P M)_{ij}  = M_{map^-1(i), j}
//   (M P)_{ij}  = M_{i, map(j)}.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ggs/core.hpp"

namespace ggs {

class Permutation {
 public:
  Permutation() = default;

  /// Throws BadPermutation unless `map` is a bijection of {0..size-1}.
  explicit Permutation(std::vector<int> map) : map_(std::move(map)) {
    std::vector<char> seen(map_.size(), 0);
    for (int v : map_) {
      if (v < 0 || static_cast<std::size_t>(v) >= map_.size() || seen[v]) {
        throw Error(ErrorCode::BadPermutation, "map is not a bijection");
      }
      seen[v] = 1;
    }
  }

  static Permutation identity(int d) {
    std::vector<int> m(d);
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
  }

  /// Product of disjoint or overlapping transpositions, applied right to left.
  static Permutation swaps(int d, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> m(d);
    std::iota(m.begin(), m.end(), 0);
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
      for (int& v : m) {
        if (v == it->first) {
          v = it->second;
        } else if (v == it->second) {
          v = it->first;
        }
      }
    }
    return Permutation(std::move(m));
  }

  int d() const { return static_cast<int>(map_.size()); }
  int operator[](int i) const { return map_[i]; }
  const std::vector<int>& map() const { return map_; }

  Permutation inverse() const {
    std::vector<int> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<int>(i);
    return Permutation(std::move(inv));
  }

  /// (this * other)|i> = this|other[i]>.
  Permutation operator*(const Permutation& other) const {
    std::vector<int> m(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) m[i] = map_[other.map_[i]];
    return Permutation(std::move(m));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < map_.size(); ++i) {
      if (map_[i] != static_cast<int>(i)) return false;
    }
    return true;
  }

  CMatrix matrix() const {
    CMatrix p = CMatrix::Zero(d(), d());
    for (int i = 0; i < d(); ++i) p(map_[i], i) = 1.0;
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.map_ <=> b.map_;
  }

 private:
  std::vector<int> map_;
};

class DiagonalUnitary {
 public:
  DiagonalUnitary() = default;

  explicit DiagonalUnitary(CVector phases, double tol = kTol) : phases_(std::move(phases)) {
    for (Eigen::Index i = 0; i < phases_.size(); ++i) {
      if (std::abs(std::abs(phases_[i]) - 1.0) > tol) {
        throw Error(ErrorCode::NotUnimodular, "diagonal entry " + std::to_string(i) +
                                                  " has modulus " +
                                                  std::to_string(std::abs(phases_[i])));
      }
    }
  }

  static DiagonalUnitary identity(int d) { return DiagonalUnitary(CVector::Ones(d)); }

  int d() const { return static_cast<int>(phases_.size()); }
  Complex operator[](int i) const { return phases_[i]; }
  const CVector& phases() const { return phases_; }
  CMatrix matrix() const { return phases_.asDiagonal(); }

  DiagonalUnitary operator*(const DiagonalUnitary& other) const {
    return DiagonalUnitary(phases_.cwiseProduct(other.phases_));
  }

  bool is_identity(double tol = kTol) const {
    return (phases_ - CVector::Ones(phases_.size())).cwiseAbs().maxCoeff() <= tol;
  }

 private:
  CVector phases_;
};

/// A d x d matrix with unimodular entries and H^dagger H = d I. Only
/// obtainable through `validate` or the constructors below, so every instance
/// satisfies the invariants.
class HadamardMatrix {
 public:
  int d() const { return static_cast<int>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  Complex operator()(int i, int j) const { return entries_(i, j); }
  bool symmetric() const { return symmetric_; }
  bool dephased() const { return dephased_; }

  /// H / sqrt(d), the unitary used in circuits.
  CMatrix unitary() const { return entries_ / std::sqrt(static_cast<double>(d())); }

  friend HadamardMatrix validate(const CMatrix& entries, bool require_symmetric, double tol);

 private:
  CMatrix entries_;
  bool symmetric_ = false;
  bool dephased_ = false;
};

inline HadamardMatrix validate(const CMatrix& entries, bool require_symmetric = false,
                               double tol = kTol) {
  if (entries.rows() != entries.cols() || entries.rows() < 1) {
    throw Error(ErrorCode::NotSquare, "matrix must be square with d >= 1");
  }
  const auto d = entries.rows();
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (std::abs(std::abs(entries(i, j)) - 1.0) > tol) {
        throw Error(ErrorCode::NotUnimodular,
                    "|h[" + std::to_string(i) + "][" + std::to_string(j) +
                        "]| = " + std::to_string(std::abs(entries(i, j))));
      }
    }
  }
  const CMatrix gram = entries.adjoint() * entries;
  const double dev = max_abs(gram - static_cast<double>(d) * CMatrix::Identity(d, d));
  if (dev > tol * static_cast<double>(d)) {
    throw Error(ErrorCode::NotHadamard, "max |H^dag H - dI| = " + std::to_string(dev));
  }
  HadamardMatrix h;
  h.entries_ = entries;
  h.symmetric_ = max_abs(entries - entries.transpose()) <= tol;
  h.dephased_ = (entries.row(0).array() - 1.0).abs().maxCoeff() <= tol &&
                (entries.col(0).array() - 1.0).abs().maxCoeff() <= tol;
  if (require_symmetric && !h.symmetric_) {
    throw Error(ErrorCode::NotSymmetric, "H != H^T");
  }
  return h;
}

/// The d-point discrete Fourier matrix, entries q_d^{ij}.
inline HadamardMatrix fourier(int d) {
  if (d < 1) throw Error(ErrorCode::BadSize, "fourier needs d >= 1");
  CMatrix f(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) f(i, j) = root_of_unity(static_cast<long long>(i) * j, d);
  }
  return validate(f, true);
}

/// The one-parameter d = 4 family. alpha = 0 gives the real matrix tilde_a.
inline HadamardMatrix h_alpha(double alpha) {
  const Complex e = std::polar(1.0, alpha);
  CMatrix h(4, 4);
  h << 1, 1, 1, 1,
       1, 1, -1, -1,
       1, -1, e, -e,
       1, -1, -e, e;
  return validate(h, true);
}

namespace detail {

inline HadamardMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto d = static_cast<Eigen::Index>(rows.size());
  CMatrix m(d, d);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return validate(m, true);
}

}  // namespace detail

/// Named matrices. `param` is only read by h_alpha (alpha, defaults to 0)
/// and fourier (d).
inline HadamardMatrix catalog(const std::string& name, std::optional<double> param = std::nullopt) {
  constexpr Complex i{0.0, 1.0};
  if (name == "h_alpha") return h_alpha(param.value_or(0.0));
  if (name == "fourier") {
    if (!param || *param < 1 || std::floor(*param) != *param) {
      throw Error(ErrorCode::BadSize, "fourier needs an integer dimension parameter");
    }
    return fourier(static_cast<int>(*param));
  }
  if (name == "h_d6") {
    return detail::from_rows({{1, 1, 1, 1, 1, 1},
                              {1, -1, i, -i, -i, i},
                              {1, i, -1, i, -i, -i},
                              {1, -i, i, -1, i, -i},
                              {1, -i, -i, i, -1, i},
                              {1, i, -i, -i, i, -1}});
  }
  if (name == "tilde_a") {
    return detail::from_rows({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}});
  }
  if (name == "tilde_b") {
    return detail::from_rows({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, 1, -1}});
  }
  if (name == "tilde_c") {
    return detail::from_rows({{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}});
  }
  if (name == "tilde_d") {
    return detail::from_rows({{1, 1, 1, 1}, {1, -1, -1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}});
  }
  if (name == "qutrit_h2") {
    const Complex w = root_of_unity(1, 3);
    const Complex w2 = root_of_unity(2, 3);
    return detail::from_rows({{1, 1, 1}, {1, w2, w}, {1, w, w2}});
  }
  throw Error(ErrorCode::UnknownName, "no catalog matrix named '" + name + "'");
}

/// Gamma_i: the diagonal unitary whose diagonal is column i of H.
inline DiagonalUnitary gamma(const HadamardMatrix& h, int column) {
  if (column < 0 || column >= h.d()) {
    throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(column));
  }
  return DiagonalUnitary(h.entries().col(column));
}

struct Dephasing {
  DiagonalUnitary left;
  DiagonalUnitary right;
  HadamardMatrix matrix;  // left * H * right, first row and column exactly 1
};

/// Rows are divided by h_{i0}, then columns by the new h'_{0j}. The first row
/// and column of the result are set to exactly 1 so that dephasing a dephased
/// matrix is the identity bit for bit.
inline Dephasing dephase(const HadamardMatrix& h) {
  const int d = h.d();
  CVector left(d);
  for (int i = 0; i < d; ++i) left[i] = h(i, 0) == Complex(1.0) ? Complex(1.0) : 1.0 / h(i, 0);
  CMatrix m = left.asDiagonal() * h.entries();
  CVector right(d);
  for (int j = 0; j < d; ++j) right[j] = m(0, j) == Complex(1.0) ? Complex(1.0) : 1.0 / m(0, j);
  m = m * right.asDiagonal();
  m.row(0).setOnes();
  m.col(0).setOnes();
  return {DiagonalUnitary(left), DiagonalUnitary(right), validate(m)};
}

/// Kronecker product with index (i1, i2) -> i1 * d2 + i2.
inline HadamardMatrix tensor_product(const HadamardMatrix& a, const HadamardMatrix& b) {
  const int da = a.d();
  const int db = b.d();
  CMatrix m(da * db, da * db);
  for (int i1 = 0; i1 < da; ++i1)
    for (int j1 = 0; j1 < da; ++j1)
      for (int i2 = 0; i2 < db; ++i2)
        for (int j2 = 0; j2 < db; ++j2) m(i1 * db + i2, j1 * db + j2) = a(i1, j1) * b(i2, j2);
  return validate(m);
}

enum class EquivalenceKind { General, PEquiv, SSymmetry };

constexpr std::string_view to_string(EquivalenceKind k) {
  switch (k) {
    case EquivalenceKind::General: return "General";
    case EquivalenceKind::PEquiv: return "PEquiv";
    case EquivalenceKind::SSymmetry: return "SSymmetry";
  }
  return "?";
}

/// Certificate of a relation between two Hadamard matrices.
///   General:   target = D1 P1 source P2 D2
///   PEquiv:    target = P1 D1 source D2 P2, with P2 = P1^T
///   SSymmetry: P1 H D1 = H (p2 and d2 are identities)
struct EquivalenceWitness {
  EquivalenceKind kind = EquivalenceKind::General;
  Permutation p1;
  DiagonalUnitary d1;
  Permutation p2;
  DiagonalUnitary d2;
};

/// Evaluates the witness' defining expression on `source`: the matrix the
/// witness claims equals the target (General / PEquiv) or `source` itself
/// (SSymmetry).
inline CMatrix apply_witness(const EquivalenceWitness& w, const CMatrix& source) {
  switch (w.kind) {
    case EquivalenceKind::General:
      return w.d1.matrix() * w.p1.matrix() * source * w.p2.matrix() * w.d2.matrix();
    case EquivalenceKind::PEquiv:
      return w.p1.matrix() * w.d1.matrix() * source * w.d2.matrix() * w.p2.matrix();
    case EquivalenceKind::SSymmetry:
      return w.p1.matrix() * source * w.d1.matrix();
  }
  return source;
}

/// Residual of the defining equation for `target` (which for SSymmetry is
/// the matrix itself).
inline double witness_residual(const EquivalenceWitness& w, const HadamardMatrix& target,
                               const HadamardMatrix& source) {
  return max_abs(apply_witness(w, source.entries()) - target.entries());
}

namespace detail {

/// Tries to write ratio(i, j) = a_i b_j. Entries of `ratio` are unimodular by
/// construction so a and b are too.
template <typename RatioFn>
bool factor_rank_one(int d, RatioFn ratio, CVector& a, CVector& b, double tol) {
  a.resize(d);
  b.resize(d);
  const Complex r00 = ratio(0, 0);
  for (int j = 0; j < d; ++j) b[j] = ratio(0, j) / r00;
  for (int i = 0; i < d; ++i) a[i] = ratio(i, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (std::abs(ratio(i, j) - a[i] * b[j]) > tol) return false;
    }
  }
  return true;
}

inline void require_same_dim(const HadamardMatrix& a, const HadamardMatrix& b) {
  if (a.d() != b.d()) {
    throw Error(ErrorCode::DimensionMismatch,
                "d = " + std::to_string(a.d()) + " vs " + std::to_string(b.d()));
  }
}

}  // namespace detail

inline constexpr int kMaxGeneralSearchDim = 6;
inline constexpr int kMaxPermutationSearchDim = 8;

/// Searches for a witness that `target` is equivalent (General) or
/// P-equivalent to `source`. Diagonal factors are determined by the
/// permutations, so the search is over permutations only. General search
/// visits column permutations P2 in the outer loop and row permutations P1 in
/// the inner loop, both in lexicographic order of their maps; the first hit
/// is returned.
inline std::optional<EquivalenceWitness> find_equivalence(const HadamardMatrix& target,
                                                          const HadamardMatrix& source,
                                                          EquivalenceKind kind,
                                                          double tol = kTol) {
  detail::require_same_dim(target, source);
  const int d = target.d();
  const CMatrix& t = target.entries();
  const CMatrix& s = source.entries();
  CVector a;
  CVector b;

  if (kind == EquivalenceKind::PEquiv) {
    if (d > kMaxPermutationSearchDim) {
      throw Error(ErrorCode::SearchLimitExceeded, "P-equivalence search limited to d <= 8");
    }
    std::vector<int> m(d);
    std::iota(m.begin(), m.end(), 0);
    do {
      // P^T target P = D1 source D2
      auto ratio = [&](int i, int j) { return t(m[i], m[j]) / s(i, j); };
      if (detail::factor_rank_one(d, ratio, a, b, tol)) {
        Permutation p(m);
        EquivalenceWitness w{EquivalenceKind::PEquiv, p, DiagonalUnitary(a), p.inverse(),
                             DiagonalUnitary(b)};
        if (witness_residual(w, target, source) <= tol) return w;
      }
    } while (std::next_permutation(m.begin(), m.end()));
    return std::nullopt;
  }

  if (kind != EquivalenceKind::General) {
    throw Error(ErrorCode::InvalidWitness, "find_equivalence supports General and PEquiv");
  }
  if (d > kMaxGeneralSearchDim) {
    throw Error(ErrorCode::SearchLimitExceeded, "general equivalence search limited to d <= 6");
  }
  std::vector<int> m2(d);
  std::iota(m2.begin(), m2.end(), 0);
  std::vector<int> inv2(d);
  do {
    for (int j = 0; j < d; ++j) inv2[m2[j]] = j;
    std::vector<int> m1(d);
    std::iota(m1.begin(), m1.end(), 0);
    do {
      // (P1^T target P2^T)_{ij} = target(m1[i], inv2[j]) = a_i source_ij b_j
      auto ratio = [&](int i, int j) { return t(m1[i], inv2[j]) / s(i, j); };
      if (!detail::factor_rank_one(d, ratio, a, b, tol)) continue;
      // target = (P1 A P1^T) P1 source P2 (P2^T B P2)
      CVector d1(d);
      CVector d2(d);
      for (int i = 0; i < d; ++i) d1[m1[i]] = a[i];
      for (int j = 0; j < d; ++j) d2[j] = b[m2[j]];
      EquivalenceWitness w{EquivalenceKind::General, Permutation(m1), DiagonalUnitary(d1),
                           Permutation(m2), DiagonalUnitary(d2)};
      if (witness_residual(w, target, source) <= tol) return w;
    } while (std::next_permutation(m1.begin(), m1.end()));
  } while (std::next_permutation(m2.begin(), m2.end()));
  return std::nullopt;
}

/// All pairs (P, D) with P H D = H, in lexicographic order of P. For each P,
/// D is forced to be H^{-1} P^T H = (1/d) H^dag P^T H.
inline std::vector<EquivalenceWitness> s_symmetries(const HadamardMatrix& h, double tol = kTol) {
  const int d = h.d();
  if (d > kMaxPermutationSearchDim) {
    throw Error(ErrorCode::SearchLimitExceeded, "S-symmetry search limited to d <= 8");
  }
  const CMatrix& e = h.entries();
  const CMatrix adj = e.adjoint() / static_cast<double>(d);
  std::vector<EquivalenceWitness> out;
  std::vector<int> m(d);
  std::iota(m.begin(), m.end(), 0);
  CMatrix pt_h(d, d);
  do {
    // (P^T H)_{ij} = H_{m[i], j}
    for (int i = 0; i < d; ++i) pt_h.row(i) = e.row(m[i]);
    const CMatrix dm = adj * pt_h;
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      for (int j = 0; j < d && ok; ++j) {
        if (i == j) {
          ok = std::abs(std::abs(dm(i, i)) - 1.0) <= tol;
        } else {
          ok = std::abs(dm(i, j)) <= tol;
        }
      }
    }
    if (!ok) continue;
    EquivalenceWitness w{EquivalenceKind::SSymmetry, Permutation(m),
                         DiagonalUnitary(CVector(dm.diagonal())), Permutation::identity(d),
                         DiagonalUnitary::identity(d)};
    if (witness_residual(w, h, h) <= tol) out.push_back(std::move(w));
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

}  // namespace ggs
