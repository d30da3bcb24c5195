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

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace ggs {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Default absolute tolerance for entrywise comparisons of exact algebraic
/// objects evaluated in double precision.
inline constexpr double kTol = 1e-9;

/// Largest Hilbert-space dimension for which a full dense operator is built.
inline constexpr std::size_t kMaxDenseOperatorDim = 4096;

/// Largest number of amplitudes a StateVector may hold.
inline constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 24;

enum class ErrorCode {
  NotUnimodular,
  NotHadamard,
  NotSymmetric,
  NotSquare,
  UnknownName,
  BadSize,
  DimensionMismatch,
  SearchLimitExceeded,
  SelfLoop,
  IndexOutOfRange,
  DigitOutOfRange,
  SiteOutOfRange,
  SameSite,
  BadPermutation,
  TooLarge,
  EmptyKeep,
  BadSite,
  BadSlot,
  TooFewSites,
  BadPartition,
  InvalidWitness,
  BadVertex,
  NotBipartite,
  GramNotIdentity,
  NumericalResidue,
  NotNormalized,
  DuplicateWord,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotHadamard: return "NotHadamard";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SearchLimitExceeded: return "SearchLimitExceeded";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorCode::SiteOutOfRange: return "SiteOutOfRange";
    case ErrorCode::SameSite: return "SameSite";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EmptyKeep: return "EmptyKeep";
    case ErrorCode::BadSite: return "BadSite";
    case ErrorCode::BadSlot: return "BadSlot";
    case ErrorCode::TooFewSites: return "TooFewSites";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::GramNotIdentity: return "GramNotIdentity";
    case ErrorCode::NumericalResidue: return "NumericalResidue";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DuplicateWord: return "DuplicateWord";
  }
  return "Unknown";
}

/// Domain error raised by every library operation. `code()` is stable and is
/// what the command-line front end reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// e^{2 pi i k / d}, with k reduced mod d first so that large exponents
/// do not lose precision.
inline Complex root_of_unity(long long k, long long d) {
  long long r = k % d;
  if (r < 0) r += d;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == d) return {-1.0, 0.0};
  if (4 * r == d) return {0.0, 1.0};
  if (4 * r == 3 * d) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
  return std::polar(1.0, angle);
}

inline Complex ipow(Complex z, int k) {
  Complex out{1.0, 0.0};
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

/// Largest entrywise modulus of a matrix (zero for an empty matrix).
inline double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// d^n with an overflow guard against `limit`.
inline std::size_t checked_pow(std::size_t d, std::size_t n, std::size_t limit) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (d != 0 && out > limit / d) {
      throw Error(ErrorCode::TooLarge, "dimension " + std::to_string(d) + "^" +
                                           std::to_string(n) + " exceeds " +
                                           std::to_string(limit));
    }
    out *= d;
  }
  return out;
}

}  // namespace ggs
