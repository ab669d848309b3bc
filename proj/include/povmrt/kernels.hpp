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

#ifndef POVMRT_KERNELS_HPP
#define POVMRT_KERNELS_HPP

#include <complex>
#include <cstddef>

// Data-parallel inner loops over interleaved complex<double>. Every kernel has
// a scalar reference implementation and, on x86-64, an AVX2+FMA variant; the
// active table is chosen once at startup. Set POVMRT_KERNELS=scalar|avx2 to
// force a backend (unknown or unsupported values fall back to scalar).

namespace povmrt::kernels {

using cplx = std::complex<double>;

// c = a (m x k, row-major) * b (k x n, row-major); c must not alias a or b.
using matmul_fn = void (*)(cplx* c, const cplx* a, const cplx* b,
                           std::size_t m, std::size_t k, std::size_t n);
// y += alpha * x
using axpy_fn = void (*)(cplx* y, cplx alpha, const cplx* x, std::size_t n);
// dst = alpha * src; dst must not alias src
using scale_copy_fn = void (*)(cplx* dst, cplx alpha, const cplx* src,
                               std::size_t n);
// sum_i conj(x_i) * y_i
using dotc_fn = cplx (*)(const cplx* x, const cplx* y, std::size_t n);

struct KernelTable {
  const char* name;
  matmul_fn matmul;
  axpy_fn axpy;
  scale_copy_fn scale_copy;
  dotc_fn dotc;
};

namespace scalar {
void matmul(cplx* c, const cplx* a, const cplx* b, std::size_t m,
            std::size_t k, std::size_t n);
void axpy(cplx* y, cplx alpha, const cplx* x, std::size_t n);
void scale_copy(cplx* dst, cplx alpha, const cplx* src, std::size_t n);
cplx dotc(const cplx* x, const cplx* y, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define POVMRT_HAVE_AVX2_KERNELS 1
namespace avx2 {
void matmul(cplx* c, const cplx* a, const cplx* b, std::size_t m,
            std::size_t k, std::size_t n);
void axpy(cplx* y, cplx alpha, const cplx* x, std::size_t n);
void scale_copy(cplx* dst, cplx alpha, const cplx* src, std::size_t n);
cplx dotc(const cplx* x, const cplx* y, std::size_t n);
}  // namespace avx2
#endif

const KernelTable& scalar_table();
#if POVMRT_HAVE_AVX2_KERNELS
const KernelTable& avx2_table();
bool cpu_supports_avx2();
#endif

// Active table, resolved once (CPU detection + POVMRT_KERNELS override).
const KernelTable& active();

}  // namespace povmrt::kernels

#endif  // POVMRT_KERNELS_HPP
