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

#ifndef POVMRT_MATRIX_HPP
#define POVMRT_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace povmrt {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Arithmetic routes through the runtime
/// kernel table (povmrt::kernels).
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

  static CMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  CMat operator*(const CMat& rhs) const;
  CMat& operator+=(const CMat& rhs);
  CMat& operator-=(const CMat& rhs);
  CMat& operator*=(cplx alpha);
  CMat operator+(const CMat& rhs) const;
  CMat operator-(const CMat& rhs) const;

  CMat adjoint() const;
  CMat transpose() const;
  cplx trace() const;
  double max_abs() const;
  double max_abs_diff(const CMat& rhs) const;
  double herm_deviation() const;  // max |M - M^dag| entry; square only
  void hermitize();               // M <- (M + M^dag)/2

  static CMat kron(const CMat& a, const CMat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMat scaled(const CMat& a, cplx alpha);

/// Hilbert-Schmidt inner product tr(A^dag B); shapes must match.
cplx hs_inner(const CMat& a, const CMat& b);

/// tr(A B) for square matrices of equal dimension.
cplx trace_product(const CMat& a, const CMat& b);

}  // namespace povmrt

#endif  // POVMRT_MATRIX_HPP
