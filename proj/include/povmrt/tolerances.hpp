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

#ifndef POVMRT_TOLERANCES_HPP
#define POVMRT_TOLERANCES_HPP

// Library-wide numerical tolerances. All entropic quantities are in bits
// (base-2 logarithms) throughout.

namespace povmrt::tol {

inline constexpr double herm = 1e-10;            // Hermiticity, max |entry|
inline constexpr double psd = 1e-10;             // PSD slack; clamp window floor
inline constexpr double eig_cutoff = 1e-12;      // numerical-support cutoff
inline constexpr double support = 1e-9;          // image-inclusion residual
inline constexpr double completeness = 1e-9;     // POVM effects sum to identity
inline constexpr double reconstruction = 1e-9;   // V diag(w) V^dag vs input
inline constexpr double stochastic_col = 1e-12;  // stochastic column sums
inline constexpr double bracket = 1e-7;          // bracket gap deemed exact
inline constexpr double property = 1e-8;         // property-suite residuals
inline constexpr double duality = 1e-10;         // channel adjoint duality

}  // namespace povmrt::tol

#endif  // POVMRT_TOLERANCES_HPP
