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

#ifndef POVMRT_SUITE_HPP
#define POVMRT_SUITE_HPP

// Seeded property sweeps behind the `suite` CLI command and the acceptance
// harness. Each sweep returns pass counts, the worst residual seen (the
// quantity that must stay below the property tolerance) and the lineage of
// the first failing instance.

#include <cstdint>
#include <string>
#include <vector>

#include "povmrt/conversion.hpp"

namespace povmrt::suite {

struct PropertyResult {
  std::string name;
  int total = 0;
  int passed = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::uint64_t counterexample_seed = 0;
  bool ok() const { return passed == total; }
};

// The six divergence properties of the measurement relative entropy on random
// measurement pairs over d in {2,3}, n in {2,3,4}.
PropertyResult dm_property(int which, std::uint64_t seed, int instances);

// Unital detection-incoherent channels preserve incoherent measurements;
// includes the dephasing / CNOT-adjoint / Hadamard fixed probes.
PropertyResult udi_preserves_incoherent(std::uint64_t seed, int channels,
                                              int povms);

// Closed-form coherence lower-bounds D_m against sampled incoherent POVMs.
PropertyResult cm_oracle(std::uint64_t seed, int povms, int trials_per);
// Closed form equals D_m(M || dephased M).
PropertyResult cm_closed_form(std::uint64_t seed, int instances);

// Effects of bipartite incoherent measurements are separable (2x2, 2x3).
PropertyResult incoherent_effects_separable(std::uint64_t seed, int instances);

// Conversion never exceeds the input coherence on sampled UDI channels.
PropertyResult theorem1_sampled(std::uint64_t seed, int instances,
                                int trials_per);
// CNOT attainment for n >= d over d in {2,3}, n in {d, d+1, d^2}.
PropertyResult theorem2_equality(std::uint64_t seed, int instances_per_combo,
                                 int udi_budget);
// (n-1)/d sandwich for (d,n) in {(3,2),(4,2),(4,3)}.
PropertyResult theorem2_sandwich(std::uint64_t seed, int instances_per_combo);
// Induced-coherence monotone axioms at sampling level.
PropertyResult theorem3_axioms(std::uint64_t seed, int instances, int budget);

// Relative-entropy identities on random PSD operators.
PropertyResult core_scaling_identity(std::uint64_t seed, int instances);
PropertyResult core_subadditivity(std::uint64_t seed, int instances);
PropertyResult core_unitary_invariance(std::uint64_t seed, int instances);
PropertyResult core_dephasing_entropy(std::uint64_t seed, int instances);

// Reduction-map inequality and the conditional-entropy lower bound on
// random (X, separable Y) pairs in 2x2 and 2x3.
PropertyResult er_bounds(std::uint64_t seed, int pairs);

// All four Bell effects are NPT (decided-false).
PropertyResult bell_ppt();

struct Config {
  std::uint64_t seed = 0;
  int trials = 100;
};

std::vector<PropertyResult> run_all(const Config& config);

}  // namespace povmrt::suite

#endif  // POVMRT_SUITE_HPP
