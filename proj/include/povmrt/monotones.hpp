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

#ifndef POVMRT_MONOTONES_HPP
#define POVMRT_MONOTONES_HPP

#include <cstdint>

#include "povmrt/measurement.hpp"

namespace povmrt {

/// Certified interval for a quantity whose exact value may be intractable.
/// All values in bits.
struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
};

Bracket make_bracket(double lower, double upper);

/// Measurement relative entropy: (1/dim) sum_x D(M_x || N_x), normalized by
/// the full Hilbert-space dimension (d^2 for bipartite measurements on
/// d (x) d). +infinity when any term diverges.
double measurement_relative_entropy(const Povm& m, const Povm& n);

/// Coherence of a measurement, closed form (1/d) sum_x {S(Delta M_x) - S(M_x)}.
double coherence_monotone(const Povm& m);

/// Per-effect coherence contributions S(Delta M_x) - S(M_x).
std::vector<double> coherence_contributions(const Povm& m);

/// Brute-force cross-check of the closed form: the minimum of D_m(M || F)
/// over sampled random incoherent POVMs F never undercuts the closed form
/// (slack 1e-9).
bool coherence_oracle_check(const Povm& m, int trials, std::uint64_t seed);

/// Worst-case margin behind the oracle: closed form minus the sampled
/// minimum of D_m(M || F); the check passes iff this is <= 1e-9.
double coherence_oracle_margin(const Povm& m, int trials, std::uint64_t seed);

/// Relative entropy of entanglement of a PSD bipartite operator, bracketed:
/// lower from the conditional-entropy bound, upper from explicit separable
/// candidates (the fully dephased operator; the reduced-entropy value for
/// rank-1 operators).
Bracket entanglement_relative_entropy_bracket(const Operator& x);

/// Entanglement of a bipartite measurement: per-effect E_R brackets summed
/// and divided by the full dimension; exact iff every per-effect bracket is.
Bracket entanglement_monotone_bracket(const Povm& m);

}  // namespace povmrt

#endif  // POVMRT_MONOTONES_HPP
