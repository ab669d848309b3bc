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

#include "povmrt/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace povmrt::kernels {

const KernelTable& scalar_table() {
  static const KernelTable t{"scalar", &scalar::matmul, &scalar::axpy,
                             &scalar::scale_copy, &scalar::dotc};
  return t;
}

#if POVMRT_HAVE_AVX2_KERNELS
const KernelTable& avx2_table() {
  static const KernelTable t{"avx2", &avx2::matmul, &avx2::axpy,
                             &avx2::scale_copy, &avx2::dotc};
  return t;
}

bool cpu_supports_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

namespace {

const KernelTable& resolve() {
  const char* req = std::getenv("POVMRT_KERNELS");
  if (req != nullptr && std::strcmp(req, "scalar") == 0) return scalar_table();
#if POVMRT_HAVE_AVX2_KERNELS
  if (req != nullptr && std::strcmp(req, "avx2") == 0) {
    if (cpu_supports_avx2()) return avx2_table();
    return scalar_table();
  }
  if (req == nullptr && cpu_supports_avx2()) return avx2_table();
#endif
  return scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& t = resolve();
  return t;
}

}  // namespace povmrt::kernels
