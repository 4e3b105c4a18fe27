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

#include "pfsim/hamiltonians.hpp"

#include <sstream>

#include "pfsim/rng.hpp"

namespace pfsim {

TermSet::TermSet(std::vector<ComplexMatrix> terms,
                 std::vector<std::string> labels)
    : terms_(std::move(terms)), labels_(std::move(labels)) {
  if (terms_.size() < 2) {
    throw InvalidInput("TermSet: need at least 2 terms, got " +
                       std::to_string(terms_.size()));
  }
  if (terms_.size() > static_cast<std::size_t>(kMaxTerms)) {
    throw InvalidInput("TermSet: at most 8 terms are supported");
  }
  if (labels_.empty()) {
    for (std::size_t k = 0; k < terms_.size(); ++k)
      labels_.push_back("H" + std::to_string(k + 1));
  }
  if (labels_.size() != terms_.size()) {
    throw InvalidInput("TermSet: label count does not match term count");
  }
  dim_ = static_cast<int>(terms_.front().rows());
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const ComplexMatrix& h = terms_[k];
    if (h.rows() != dim_ || h.cols() != dim_ || dim_ == 0) {
      throw InvalidInput("TermSet: term " + std::to_string(k + 1) +
                         " is not " + std::to_string(dim_) + "x" +
                         std::to_string(dim_));
    }
    if (hermiticity_defect(h) > tolerance::kHermitianOutput) {
      throw InvalidInput("TermSet: term " + std::to_string(k + 1) +
                         " is not Hermitian");
    }
    if (h.cwiseAbs().maxCoeff() == 0.0) {
      throw InvalidInput("TermSet: term " + std::to_string(k + 1) +
                         " is identically zero");
    }
  }
}

const ComplexMatrix& TermSet::term(int index) const {
  if (index < 1 || index > size()) {
    throw InvalidInput("TermSet: term index " + std::to_string(index) +
                       " outside 1.." + std::to_string(size()));
  }
  return terms_[index - 1];
}

ComplexMatrix total(const TermSet& ts) {
  ComplexMatrix h = ComplexMatrix::Zero(ts.dim(), ts.dim());
  for (const auto& term : ts.terms()) h += term;
  return h;
}

double max_commutator_norm(const TermSet& ts) {
  double worst = 0.0;
  for (int a = 1; a <= ts.size(); ++a)
    for (int b = a + 1; b <= ts.size(); ++b)
      worst = std::max(worst, spectral_norm(commutator(ts.term(a), ts.term(b))));
  return worst;
}

bool is_commuting(const TermSet& ts, double tol) {
  return max_commutator_norm(ts) < tol;
}

namespace {

TermSet draw_termset(int dim, int num_terms, double norm_bound,
                     std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ComplexMatrix> terms;
  for (int k = 0; k < num_terms; ++k) {
    ComplexMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) a(i, j) = rng.complex_normal();
    ComplexMatrix h = 0.5 * (a + a.adjoint());
    h *= norm_bound / spectral_norm(h);
    // Exact symmetrization after scaling keeps the Hermitian check tight.
    h = 0.5 * (h + h.adjoint()).eval();
    terms.push_back(std::move(h));
  }
  return TermSet(std::move(terms), {});
}

}  // namespace

TermSet random_termset(int dim, int num_terms, double norm_bound,
                       std::uint64_t seed) {
  if (dim < 2) throw InvalidInput("random_termset: dimension must be >= 2");
  if (num_terms < 2) throw InvalidInput("random_termset: need m >= 2 terms");
  if (!(norm_bound > 0.0))
    throw InvalidInput("random_termset: norm_bound must be positive");
  constexpr int kMaxRedraws = 16;
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    TermSet ts = draw_termset(dim, num_terms, norm_bound, seed + attempt);
    if (max_commutator_norm(ts) >= 1e-6) return ts;
  }
  throw AssertionFailure("random_termset: every draw was commuting");
}

namespace {

/// Pauli `p` on `site` of an n-qubit register (site 0 is the leftmost factor).
ComplexMatrix site_operator(const ComplexMatrix& p, int site, int n) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int i = 0; i < n; ++i)
    out = kron(out, i == site ? p : pauli::identity());
  return out;
}

}  // namespace

TermSet spin_chain_termset(int n_qubits, double jx, double jz, double hx) {
  if (n_qubits < 2 || n_qubits > 6) {
    throw InvalidInput("spin_chain_termset: n_qubits must be in 2..6, got " +
                       std::to_string(n_qubits));
  }
  const int d = 1 << n_qubits;
  ComplexMatrix h1 = ComplexMatrix::Zero(d, d);
  ComplexMatrix h2 = ComplexMatrix::Zero(d, d);
  for (int i = 0; i + 1 < n_qubits; ++i) {
    h1 += jx * site_operator(pauli::x(), i, n_qubits) *
          site_operator(pauli::x(), i + 1, n_qubits);
    h2 += jz * site_operator(pauli::z(), i, n_qubits) *
          site_operator(pauli::z(), i + 1, n_qubits);
  }
  for (int i = 0; i < n_qubits; ++i)
    h1 += hx * site_operator(pauli::x(), i, n_qubits);
  if (h1.cwiseAbs().maxCoeff() == 0.0 || h2.cwiseAbs().maxCoeff() == 0.0) {
    throw InvalidInput(
        "spin_chain_termset: couplings leave a term identically zero "
        "(need jx or hx nonzero, and jz nonzero)");
  }
  return TermSet({std::move(h1), std::move(h2)}, {"XX+X", "ZZ"});
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out.push_back({m(i, j).real(), m(i, j).imag()});
  return out;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j, int rows, int cols) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(rows * cols)) {
    throw InvalidInput("matrix JSON: expected " + std::to_string(rows * cols) +
                       " [re, im] entries");
  }
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int c = 0; c < cols; ++c) {
      const auto& e = j[static_cast<std::size_t>(i * cols + c)];
      if (!e.is_array() || e.size() != 2)
        throw InvalidInput("matrix JSON: entry is not [re, im]");
      m(i, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

nlohmann::json to_json(const TermSet& ts) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& h : ts.terms()) terms.push_back(matrix_to_json(h));
  return {{"dim", ts.dim()}, {"labels", ts.labels()}, {"terms", terms}};
}

TermSet termset_from_json(const nlohmann::json& j) {
  try {
    const int dim = j.at("dim").get<int>();
    if (dim < 1) throw InvalidInput("TermSet JSON: dim must be positive");
    std::vector<ComplexMatrix> terms;
    for (const auto& t : j.at("terms")) terms.push_back(matrix_from_json(t, dim, dim));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return TermSet(std::move(terms), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("TermSet JSON: ") + e.what());
  }
}

}  // namespace pfsim
