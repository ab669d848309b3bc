// Copyright 2026 The povmrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POVMRT_CHANNELS_HPP
#define POVMRT_CHANNELS_HPP

#include <cstdint>
#include <vector>

#include "povmrt/measurement.hpp"
#include "povmrt/operator_core.hpp"
#include "povmrt/rng.hpp"

namespace povmrt {

/// Completely positive trace-preserving map as a Kraus family of
/// out_dim x in_dim matrices; sum_k K_k^dag K_k = I is validated.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<CMat> kraus);

  static KrausChannel identity(std::size_t d);
  static KrausChannel dephasing(std::size_t d);

  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }
  const std::vector<CMat>& kraus() const { return kraus_; }

  /// sum_k K x K^dag (Schroedinger picture); accepts any in_dim square input.
  CMat apply_mat(const CMat& x) const;
  Operator apply(const Operator& rho) const;

  /// sum_k K^dag m K (Heisenberg picture, action on effects).
  CMat adjoint_apply_mat(const CMat& m) const;
  Operator adjoint_apply(const Operator& effect) const;

 private:
  std::size_t in_dim_, out_dim_;
  std::vector<CMat> kraus_;
};

/// Unitary conjugation channel; u^dag u = I validated.
struct UnitaryChannel {
  CMat u;
  explicit UnitaryChannel(CMat unitary);
  KrausChannel channel() const;
  /// Channel of the adjoint unitary (conjugation by u^dag).
  KrausChannel adjoint_channel() const;
};

/// Generalized CNOT |i,j> -> |i,(j+i) mod d> on d*d.
UnitaryChannel cnot_unitary(std::size_t d);
/// Cyclic shift |i> -> |(i+y) mod d>.
UnitaryChannel shift_unitary(std::size_t d, std::size_t y);

bool is_unital(const KrausChannel& ch, double tolerance);
double unitality_residual(const KrausChannel& ch);

/// Detection incoherence: Delta o E = Delta o E o Delta as linear maps,
/// probed on the d^2 matrix units and cross-checked in the adjoint form
/// E^dag o Delta = Delta o E^dag o Delta; the predicate holds only if both
/// residuals stay within tolerance.
bool is_detection_incoherent(const KrausChannel& ch, double tolerance);
double detection_incoherence_residual(const KrausChannel& ch);

/// {E^dag(M_x)}: measurement after a pre-processing channel.
Povm pre_process(const Povm& povm, const KrausChannel& ch);

/// Sample from a constructively unital detection-incoherent family:
/// mixtures of basis-permutation/diagonal-phase unitaries, the dephasing
/// channel, and (on perfect-square dimensions) generalized-CNOT and shift
/// permutations.
KrausChannel random_udi_channel(std::size_t d, std::uint64_t seed);

/// Random mixture of unitary conjugations (unital, trace-preserving).
KrausChannel random_unital_channel(std::size_t d, SplitRng& rng);

/// Haar-like random unitary (eigenvector basis of a sampled GUE matrix).
CMat random_unitary(std::size_t d, SplitRng& rng);

/// The quantum-classical channel rho -> sum_x tr(M_x rho)|x><x|.
KrausChannel measurement_channel(const Povm& povm);

}  // namespace povmrt

#endif  // POVMRT_CHANNELS_HPP
