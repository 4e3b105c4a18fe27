// Copyright 2026 The pfsim Authors
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

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfsim/matkernel.hpp"

namespace pfsim {

/// Decomposition H = sum_k H_k of a d x d Hamiltonian into m >= 2 nonzero
/// Hermitian terms. Terms are addressed 1..m everywhere outside this class.
class TermSet {
 public:
  static constexpr int kMaxTerms = 8;

  TermSet(std::vector<ComplexMatrix> terms, std::vector<std::string> labels);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(terms_.size()); }
  /// 1-based access, matching schedule indices.
  const ComplexMatrix& term(int index) const;
  const std::vector<ComplexMatrix>& terms() const { return terms_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int dim_ = 0;
  std::vector<ComplexMatrix> terms_;
  std::vector<std::string> labels_;
};

ComplexMatrix total(const TermSet& ts);

/// Largest ||[H_a, H_b]|| over all pairs a < b.
double max_commutator_norm(const TermSet& ts);

/// True when every pair of terms commutes to within `tol`; every product
/// formula is then exact and scaling fits are meaningless.
bool is_commuting(const TermSet& ts, double tol = 1e-8);

/// Gaussian Hermitian ensemble (A + A^dagger)/2, each term rescaled to
/// spectral norm `norm_bound`. Pure function of its arguments.
TermSet random_termset(int dim, int num_terms, double norm_bound,
                       std::uint64_t seed);

/// Open transverse-field chain split by measurement basis:
///   H_1 = jx * sum_i X_i X_{i+1} + hx * sum_i X_i
///   H_2 = jz * sum_i Z_i Z_{i+1}
/// Requires 2 <= n_qubits <= 6 and both terms nonzero.
TermSet spin_chain_termset(int n_qubits, double jx, double jz, double hx);

nlohmann::json to_json(const TermSet& ts);
TermSet termset_from_json(const nlohmann::json& j);

/// Row-major [[re, im], ...] encoding shared by the JSON formats.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, int rows, int cols);

}  // namespace pfsim
