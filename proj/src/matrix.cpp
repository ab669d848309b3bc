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

#include "povmrt/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "povmrt/kernels.hpp"

namespace povmrt {

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx{1.0, 0.0};
  return m;
}

CMat CMat::operator*(const CMat& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("CMat multiply: inner dimensions differ");
  CMat out(rows_, rhs.cols_);
  kernels::active().matmul(out.data(), data(), rhs.data(), rows_, cols_,
                           rhs.cols_);
  return out;
}

CMat& CMat::operator+=(const CMat& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("CMat add: shape mismatch");
  kernels::active().axpy(data(), cplx{1.0, 0.0}, rhs.data(), size());
  return *this;
}

CMat& CMat::operator-=(const CMat& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("CMat subtract: shape mismatch");
  kernels::active().axpy(data(), cplx{-1.0, 0.0}, rhs.data(), size());
  return *this;
}

CMat& CMat::operator*=(cplx alpha) {
  for (auto& v : data_) v *= alpha;
  return *this;
}

CMat CMat::operator+(const CMat& rhs) const {
  CMat out(*this);
  out += rhs;
  return out;
}

CMat CMat::operator-(const CMat& rhs) const {
  CMat out(*this);
  out -= rhs;
  return out;
}

CMat CMat::adjoint() const {
  CMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMat CMat::transpose() const {
  CMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

cplx CMat::trace() const {
  if (!square()) throw std::invalid_argument("CMat trace: not square");
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMat::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double CMat::max_abs_diff(const CMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("CMat max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    m = std::max(m, std::abs(data_[i] - rhs.data_[i]));
  return m;
}

double CMat::herm_deviation() const {
  if (!square()) throw std::invalid_argument("herm_deviation: not square");
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

void CMat::hermitize() {
  for (std::size_t i = 0; i < rows_; ++i) {
    (*this)(i, i) = cplx{(*this)(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < cols_; ++j) {
      const cplx v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      (*this)(i, j) = v;
      (*this)(j, i) = std::conj(v);
    }
  }
}

CMat CMat::kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  const auto& k = kernels::active();
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cplx f = a(ia, ja);
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        cplx* dst = out.data() + (ia * b.rows() + ib) * out.cols() + ja * b.cols();
        k.scale_copy(dst, f, b.data() + ib * b.cols(), b.cols());
      }
    }
  return out;
}

CMat scaled(const CMat& a, cplx alpha) {
  CMat out(a.rows(), a.cols());
  kernels::active().scale_copy(out.data(), alpha, a.data(), a.size());
  return out;
}

cplx hs_inner(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hs_inner: shape mismatch");
  return kernels::active().dotc(a.data(), b.data(), a.size());
}

cplx trace_product(const CMat& a, const CMat& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw std::invalid_argument("trace_product: need equal square matrices");
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
  return t;
}

}  // namespace povmrt
