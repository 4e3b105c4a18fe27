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
#include <random>
#include <string_view>

#include "pfsim/matkernel.hpp"

namespace pfsim {

/// Seeded generator with platform-independent output.
///
/// Raw draws come from std::mt19937_64, whose sequence is fixed by the
/// standard. The uniform and normal transforms are written out here because
/// the standard library distributions are implementation-defined.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform();
  /// Standard normal via Box-Muller (one value per call, no caching).
  double normal();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  Complex complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
};

/// Haar-ish random unit vector: normalized complex Gaussian entries.
ComplexVector random_unit_vector(Rng& rng, int dim);

/// Random density matrix G G^dagger / Tr(G G^dagger) with Gaussian G.
DensityMatrix random_density(Rng& rng, int dim);

}  // namespace pfsim
