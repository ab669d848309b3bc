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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "povmrt/operator_core.hpp"

namespace povmrt {

// Hermitian eigendecomposition via LAPACK zheevd (divide and conquer).
// Eigenvalues come back ascending; we re-sort descending with matching
// column order so downstream entropy code can rely on the ordering.
Spectrum spectrum_of(const CMat& m) {
  if (!m.square()) throw std::invalid_argument("spectrum: matrix not square");
  const lapack_int n = static_cast<lapack_int>(m.rows());
  Spectrum out;
  out.eigenvalues.assign(m.rows(), 0.0);
  if (n == 0) return out;

  std::vector<lapack_complex_double> a(m.data(), m.data() + m.size());
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_ROW_MAJOR, 'V', 'L', n, a.data(), n,
                     out.eigenvalues.data());
  if (info != 0)
    throw std::runtime_error("zheevd failed with info " + std::to_string(info));

  // Reverse to descending order.
  const std::size_t dn = m.rows();
  std::vector<double> w(dn);
  for (std::size_t j = 0; j < dn; ++j) w[j] = out.eigenvalues[dn - 1 - j];
  out.eigenvalues = std::move(w);

  out.eigenvectors = CMat(dn, dn);
  for (std::size_t i = 0; i < dn; ++i)
    for (std::size_t j = 0; j < dn; ++j)
      out.eigenvectors(i, j) = a[i * dn + (dn - 1 - j)];
  return out;
}

Spectrum spectrum(const Operator& m) { return spectrum_of(m.mat()); }

}  // namespace povmrt
