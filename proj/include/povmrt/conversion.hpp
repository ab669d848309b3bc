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

#ifndef POVMRT_CONVERSION_HPP
#define POVMRT_CONVERSION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "povmrt/channels.hpp"
#include "povmrt/monotones.hpp"

namespace povmrt {

/// Raised when a channel offered as a free operation fails the unital /
/// detection-incoherent predicates.
class FreeOperationError : public std::runtime_error {
 public:
  FreeOperationError(double unital_res, double di_res);
  double unital_residual;
  double detection_incoherence_residual;
};

/// Raised when a proven theorem bound fails numerically (implementation bug).
class TheoremViolation : public std::logic_error {
  using std::logic_error::logic_error;
};

enum class Regime { n_ge_d, n_lt_d };

struct ConversionResult {
  double input_cm = 0.0;
  Bracket output_em;
  std::string channel_id;
  Regime regime = Regime::n_ge_d;
  double bound_lower = 0.0;  // (n-1)/d * C_m when n < d (CNOT case), else C_m
  double bound_upper = 0.0;  // C_m
};

/// The canonical ancilla measurement: basis projectors padded with zero
/// effects when n >= d, or completed by I - sum when n < d.
Povm ancilla_incoherent_povm(std::size_t d, std::size_t n);

/// The adjoint-of-generalized-CNOT pre-processing channel on d (x) d.
KrausChannel cnot_adjoint_channel(std::size_t d);

/// Build the n^2-outcome bipartite measurement {E^dag(M_x (x) E_y)} from M
/// and the canonical ancilla; ch must be unital and detection-incoherent on
/// dimension d^2 or FreeOperationError is raised. Outcome order is x*n + y.
Povm convert(const Povm& m, const KrausChannel& ch);

/// Conversion bounds for an arbitrary free channel; the CNOT lower bound is
/// claimed only when `channel_is_cnot` is set. When `converted_out` is
/// non-null the converted POVM is stored there.
ConversionResult describe_conversion(const Povm& m, const KrausChannel& ch,
                                     const std::string& channel_id,
                                     bool channel_is_cnot,
                                     std::optional<Povm>* converted_out = nullptr);

/// Coherence never grows into more entanglement: E_m bounds of every sampled
/// conversion stay below C_m.
bool verify_theorem1(const Povm& m, int trials, std::uint64_t seed);

/// CNOT conversion attains C_m when n >= d (exact bracket) and obeys the
/// (n-1)/d sandwich when n < d. Throws TheoremViolation when the proven
/// relation fails.
ConversionResult verify_theorem2(const Povm& m);

/// Entanglement-induced coherence: max of E_m lower brackets over the CNOT
/// channel plus `sample_budget` sampled UDI channels. Requires n > 1.
double induced_coherence(const Povm& m, int sample_budget, std::uint64_t seed);

/// Monotone axioms of the induced coherence at sampling level: nonnegative,
/// zero on incoherent inputs, bounded by C_m, equal to C_m when n >= d, and
/// monotone under sampled free transformations.
bool verify_theorem3(const Povm& m, int sample_budget, std::uint64_t seed);

}  // namespace povmrt

#endif  // POVMRT_CONVERSION_HPP
