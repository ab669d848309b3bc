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

#ifndef POVMRT_FIXTURES_HPP
#define POVMRT_FIXTURES_HPP

// Canonical measurement instances used across verification code and tests.

#include <cmath>
#include <numbers>

#include "povmrt/channels.hpp"
#include "povmrt/measurement.hpp"

namespace povmrt::fixtures {

/// {|+><+|, |-><-|}.
inline Povm plus_minus_measurement() {
  CMat plus(2, 2), minus(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      plus(i, j) = cplx{0.5, 0.0};
      minus(i, j) = cplx{(i == j) ? 0.5 : -0.5, 0.0};
    }
  return Povm({Operator(plus), Operator(minus)});
}

/// Bell measurement {Phi+, Phi-, Psi+, Psi-} on 2 (x) 2.
inline Povm bell_measurement() {
  auto bell = [](std::size_t a, std::size_t b, double sign) {
    CMat m(4, 4);
    m(a, a) = m(b, b) = cplx{0.5, 0.0};
    m(a, b) = m(b, a) = cplx{0.5 * sign, 0.0};
    return Operator(std::move(m), DimsSplit{2, 2});
  };
  return Povm({bell(0, 3, 1.0), bell(0, 3, -1.0), bell(1, 2, 1.0),
               bell(1, 2, -1.0)},
              DimsSplit{2, 2});
}

inline UnitaryChannel hadamard_unitary() {
  const double s = 1.0 / std::sqrt(2.0);
  CMat h(2, 2);
  h(0, 0) = h(0, 1) = h(1, 0) = cplx{s, 0.0};
  h(1, 1) = cplx{-s, 0.0};
  return UnitaryChannel(std::move(h));
}

/// Two-outcome coherent measurement on dimension d from a rank-(d-1)
/// truncated Fourier projector: {P/2, I - P/2}.
inline Povm fourier_truncated_povm(std::size_t d) {
  CMat p(d, d);
  for (std::size_t k = 0; k + 1 < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const double phase = 2.0 * std::numbers::pi *
                             static_cast<double>(k) *
                             (static_cast<double>(i) - static_cast<double>(j)) /
                             static_cast<double>(d);
        p(i, j) += std::polar(1.0 / static_cast<double>(d), phase) * 0.5;
      }
  p.hermitize();
  CMat rest = CMat::identity(d) - p;
  return Povm({Operator(p), Operator(rest)});
}

}  // namespace povmrt::fixtures

#endif  // POVMRT_FIXTURES_HPP
