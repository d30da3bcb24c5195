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

// Quantum codes spanned by encoded classical words, their Knill-Laflamme
// distance and Shor-Laflamme weight enumerators over the Weyl basis.

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ggs/core.hpp"
#include "ggs/graph.hpp"
#include "ggs/hadamard.hpp"
#include "ggs/state.hpp"
#include "ggs/symmetry.hpp"

namespace ggs {

class ClassicalCode {
 public:
  ClassicalCode(int n, int d, std::vector<std::vector<int>> words) : n_(n), d_(d), words_(std::move(words)) {
    if (n < 1 || d < 1) throw Error(ErrorCode::BadSize, "code needs n >= 1, d >= 1");
    std::set<std::vector<int>> seen;
    for (const auto& w : words_) {
      if (static_cast<int>(w.size()) != n) {
        throw Error(ErrorCode::DimensionMismatch, "word of length " + std::to_string(w.size()));
      }
      for (int v : w) {
        if (v < 0 || v >= d) throw Error(ErrorCode::DigitOutOfRange, "digit " + std::to_string(v));
      }
      if (!seen.insert(w).second) throw Error(ErrorCode::DuplicateWord, "repeated codeword");
    }
  }

  /// Every word of length n over 0..d-1, lexicographic.
  static ClassicalCode full(int n, int d) {
    const auto count = checked_pow(d, n, kMaxAmplitudes);
    std::vector<std::vector<int>> words;
    words.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<int> w(n);
      auto rem = k;
      for (int q = n - 1; q >= 0; --q) {
        w[q] = static_cast<int>(rem % d);
        rem /= d;
      }
      words.push_back(std::move(w));
    }
    return ClassicalCode(n, d, std::move(words));
  }

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<std::vector<int>>& words() const { return words_; }
  int size() const { return static_cast<int>(words_.size()); }

 private:
  int n_;
  int d_;
  std::vector<std::vector<int>> words_;
};

/// One word per line, each character a digit 0..d-1; `#` starts a comment and
/// blank lines are skipped. All words must share one length.
inline ClassicalCode parse_classical_code(const std::string& text, int d) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<int>> words;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<int> w;
    for (char ch : line) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (ch < '0' || ch > '9') {
        throw Error(ErrorCode::DigitOutOfRange, std::string("bad character '") + ch + "'");
      }
      w.push_back(ch - '0');
    }
    if (!w.empty()) words.push_back(std::move(w));
  }
  if (words.empty()) throw Error(ErrorCode::BadSize, "no codewords");
  const int n = static_cast<int>(words.front().size());
  return ClassicalCode(n, d, std::move(words));
}

/// Circuit output on |c>, built from the dephased form of H. Cross-checked
/// against the product of diagonal Gamma_{c_k} applied to the graph state.
inline StateVector encode(const Graph& g, const HadamardMatrix& h, const std::vector<int>& word,
                          double tol = kTol) {
  const HadamardMatrix hd = dephase(h).matrix;
  if (static_cast<int>(word.size()) != g.n()) {
    throw Error(ErrorCode::DimensionMismatch, "word length differs from n");
  }
  for (int v : word) {
    if (v < 0 || v >= hd.d()) throw Error(ErrorCode::DigitOutOfRange, "digit " + std::to_string(v));
  }
  StateVector out = graph_state(g, hd, word);
  std::vector<CMatrix> gammas;
  for (int v : word) gammas.push_back(gamma(hd, v).matrix());
  const StateVector check = apply_each(gammas, graph_state(g, hd));
  const double dev = (check.amps() - out.amps()).cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw Error(ErrorCode::NumericalResidue, "Gamma form differs by " + std::to_string(dev));
  }
  return out;
}

struct QuantumCode {
  Graph graph;
  HadamardMatrix hadamard;
  ClassicalCode classical;
  std::vector<StateVector> basis;
  double gram_deviation = 0.0;

  int n() const { return graph.n(); }
  int d() const { return hadamard.d(); }
  int dimension() const { return static_cast<int>(basis.size()); }

  /// Columns are the basis states.
  CMatrix basis_matrix() const {
    CMatrix b(basis.front().size(), dimension());
    for (int k = 0; k < dimension(); ++k) b.col(k) = basis[k].amps();
    return b;
  }
};

inline QuantumCode build_code(const Graph& g, const HadamardMatrix& h, const ClassicalCode& c,
                              double tol = kTol) {
  if (c.n() != g.n() || c.d() != h.d()) {
    throw Error(ErrorCode::DimensionMismatch, "classical code shape differs from (G, H)");
  }
  if (c.size() == 0) throw Error(ErrorCode::BadSize, "empty classical code");
  QuantumCode q{g, h, c, {}, 0.0};
  for (const auto& w : c.words()) q.basis.push_back(encode(g, h, w, tol));
  const CMatrix b = q.basis_matrix();
  q.gram_deviation = max_abs(b.adjoint() * b - CMatrix::Identity(q.dimension(), q.dimension()));
  if (q.gram_deviation > tol) {
    throw Error(ErrorCode::GramNotIdentity, "Gram deviation " + std::to_string(q.gram_deviation));
  }
  return q;
}

namespace detail {

/// Visits every Weyl string X^{a_0}Z^{b_0} (x) ... in lexicographic order of
/// the per-site label a*d + b. `visit(labels, weight)`.
template <typename Visit>
void for_each_weyl_string(int n, int d, Visit&& visit) {
  const int per_site = d * d;
  std::vector<int> labels(n, 0);
  while (true) {
    int weight = 0;
    for (int l : labels) weight += l != 0;
    visit(labels, weight);
    int q = n - 1;
    while (q >= 0 && ++labels[q] == per_site) labels[q--] = 0;
    if (q < 0) break;
  }
}

/// Visits Weyl strings of exactly `weight` non-identity sites: supports in
/// lexicographic order, then labels.
template <typename Visit>
void for_each_weyl_string_of_weight(int n, int d, int weight, Visit&& visit) {
  const int per_site = d * d;
  std::vector<int> support(weight);
  for (int k = 0; k < weight; ++k) support[k] = k;
  while (true) {
    std::vector<int> sub(weight, 1);
    while (true) {
      std::vector<int> labels(n, 0);
      for (int k = 0; k < weight; ++k) labels[support[k]] = sub[k];
      visit(labels);
      int k = weight - 1;
      while (k >= 0 && ++sub[k] == per_site) sub[k--] = 1;
      if (k < 0) break;
    }
    int k = weight - 1;
    while (k >= 0 && support[k] == n - weight + k) --k;
    if (k < 0) break;
    ++support[k];
    for (int j = k + 1; j < weight; ++j) support[j] = support[j - 1] + 1;
  }
}

class WeylTable {
 public:
  explicit WeylTable(int d) : d_(d) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) ops_.push_back(weyl(d, a, b));
  }
  const CMatrix& operator[](int label) const { return ops_[label]; }

  /// B^dag E B for the Weyl string `labels`.
  CMatrix compressed(const std::vector<int>& labels, const std::vector<StateVector>& basis,
                     const CMatrix& b) const {
    CMatrix eb(b.rows(), b.cols());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      StateVector s = basis[k];
      for (std::size_t q = 0; q < labels.size(); ++q) {
        if (labels[q] != 0) s = apply_local({d_, static_cast<int>(q), ops_[labels[q]]}, s);
      }
      eb.col(static_cast<Eigen::Index>(k)) = s.amps();
    }
    return b.adjoint() * eb;
  }

 private:
  int d_;
  std::vector<CMatrix> ops_;
};

inline void require_dense_ok(const QuantumCode& q) {
  checked_pow(q.d(), q.n(), kMaxDenseOperatorDim);
}

}  // namespace detail

struct DistanceResult {
  /// Smallest weight with a Knill-Laflamme violation, or the tested bound
  /// when `lower_bound_exceeded`.
  int value = 0;
  bool lower_bound_exceeded = false;
};

/// Knill-Laflamme distance over Weyl errors of weight 1..max_weight. An error
/// E violates the conditions when ||P E P - lambda P||_max > tol with
/// lambda = Tr(P E P) / K. For a one-dimensional code every P E P is a
/// multiple of P, so there the usual pure-state convention is used instead:
/// E counts when <psi|E|psi> != 0.
inline DistanceResult kl_distance(const QuantumCode& q, int max_weight, double tol = kTol) {
  detail::require_dense_ok(q);
  if (max_weight < 1 || max_weight > q.n()) {
    throw Error(ErrorCode::BadSize, "max_weight must be in 1..n");
  }
  const int k = q.dimension();
  const CMatrix b = q.basis_matrix();
  const detail::WeylTable table(q.d());
  for (int w = 1; w <= max_weight; ++w) {
    bool violated = false;
    detail::for_each_weyl_string_of_weight(q.n(), q.d(), w, [&](const std::vector<int>& labels) {
      if (violated) return;
      const CMatrix m = table.compressed(labels, q.basis, b);
      const Complex lambda = m.trace() / static_cast<double>(k);
      if (k == 1) {
        violated = std::abs(lambda) > tol;
        return;
      }
      const CMatrix shifted = m - lambda * CMatrix::Identity(k, k);
      violated = max_abs(b * shifted * b.adjoint()) > tol;
    });
    if (violated) return {w, false};
  }
  return {max_weight, true};
}

struct WeightEnumerators {
  std::vector<double> a;
  std::vector<double> b;
};

inline constexpr std::size_t kMaxWeylStrings = std::size_t{1} << 22;

/// A_j = (1/K^2) sum_{wt E = j} |Tr(P E)|^2,  B_j = (1/K) sum_{wt E = j} Tr(P E P E^dag)
/// over the d^{2n} Weyl strings, accumulated in lexicographic order.
inline WeightEnumerators weight_enumerators(const QuantumCode& q) {
  detail::require_dense_ok(q);
  checked_pow(static_cast<std::size_t>(q.d()) * q.d(), q.n(), kMaxWeylStrings);
  const double k = q.dimension();
  const CMatrix b = q.basis_matrix();
  const detail::WeylTable table(q.d());
  WeightEnumerators out{std::vector<double>(q.n() + 1, 0.0), std::vector<double>(q.n() + 1, 0.0)};
  detail::for_each_weyl_string(q.n(), q.d(), [&](const std::vector<int>& labels, int weight) {
    const CMatrix m = table.compressed(labels, q.basis, b);
    out.a[weight] += std::norm(m.trace()) / (k * k);
    out.b[weight] += m.squaredNorm() / k;
  });
  return out;
}

struct DecodedError {
  CMatrix full;            // U^dag E U on all n qudits
  bool factorized = false;
  CMatrix site_operator;   // partial trace onto the error's site, / d^(n-1)
  double residual = 0.0;   // max |full - site_operator (x) I|
  std::vector<int> support;
};

namespace detail {

/// Partial trace of a dense n-qudit operator onto one site.
inline CMatrix trace_onto_site(const CMatrix& m, int n, int d, int site) {
  Eigen::Index stride = 1;
  for (int q = site + 1; q < n; ++q) stride *= d;
  CMatrix out = CMatrix::Zero(d, d);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const Eigen::Index rd = (r / stride) % d;
    const Eigen::Index rest = r - rd * stride;
    for (int cd = 0; cd < d; ++cd) out(rd, cd) += m(r, rest + cd * stride);
  }
  return out;
}

/// max |m - R (x) I_site| where R = Tr_site(m) / d.
inline double identity_residual_on_site(const CMatrix& m, int n, int d, int site) {
  Eigen::Index stride = 1;
  for (int q = site + 1; q < n; ++q) stride *= d;
  double worst = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const Eigen::Index rd = (r / stride) % d;
    const Eigen::Index rbase = r - rd * stride;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Eigen::Index cd = (c / stride) % d;
      const Eigen::Index cbase = c - cd * stride;
      Complex avg = 0.0;
      for (int x = 0; x < d; ++x) avg += m(rbase + x * stride, cbase + x * stride);
      avg /= static_cast<double>(d);
      const Complex expected = rd == cd ? avg : Complex(0.0);
      worst = std::max(worst, std::abs(m(r, c) - expected));
    }
  }
  return worst;
}

}  // namespace detail

/// U^dag E U for a single-site E, with an attempt to write it as an operator
/// on E's site alone.
inline DecodedError decoded_error(const Graph& g, const HadamardMatrix& h, const LocalOperator& e,
                                  double tol = kTol) {
  if (e.d != h.d()) throw Error(ErrorCode::DimensionMismatch, "error dimension differs from H");
  if (e.site < 0 || e.site >= g.n()) throw Error(ErrorCode::SiteOutOfRange, "site " + std::to_string(e.site));
  const int n = g.n();
  const int d = h.d();
  const CMatrix u = encoding_unitary(g, h);
  CMatrix eu(u.rows(), u.cols());
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    eu.col(k) = apply_local(e, StateVector(n, d, u.col(k))).amps();
  }
  DecodedError out;
  out.full = u.adjoint() * eu;
  const double scale = 1.0 / static_cast<double>(u.rows() / d);
  out.site_operator = detail::trace_onto_site(out.full, n, d, e.site) * scale;
  double worst = 0.0;
  Eigen::Index stride = 1;
  for (int q = e.site + 1; q < n; ++q) stride *= d;
  for (Eigen::Index r = 0; r < out.full.rows(); ++r) {
    const Eigen::Index rd = (r / stride) % d;
    for (Eigen::Index c = 0; c < out.full.cols(); ++c) {
      const Eigen::Index cd = (c / stride) % d;
      const bool rest_equal = (r - rd * stride) == (c - cd * stride);
      const Complex expected = rest_equal ? out.site_operator(rd, cd) : Complex(0.0);
      worst = std::max(worst, std::abs(out.full(r, c) - expected));
    }
  }
  out.residual = worst;
  out.factorized = worst <= tol;
  for (int q = 0; q < n; ++q) {
    if (detail::identity_residual_on_site(out.full, n, d, q) > tol) out.support.push_back(q);
  }
  return out;
}

}  // namespace ggs
