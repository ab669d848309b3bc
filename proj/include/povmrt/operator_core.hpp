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

#ifndef POVMRT_OPERATOR_CORE_HPP
#define POVMRT_OPERATOR_CORE_HPP

#include <optional>
#include <span>
#include <vector>

#include "povmrt/matrix.hpp"
#include "povmrt/tolerances.hpp"

namespace povmrt {

/// Bipartite factorization d = a * b; subsystem index is row-major,
/// basis index = iA * b + iB, fixed across the whole library.
struct DimsSplit {
  std::size_t a = 0;
  std::size_t b = 0;
  bool operator==(const DimsSplit&) const = default;
};

enum class Subsystem { A, B };

/// Hermitian operator on a d-dimensional space: carrier of POVM effects and
/// unnormalized states. The constructor validates squareness, Hermiticity
/// within tol::herm and split consistency, then stores (M + M^dag)/2 so tiny
/// round-off asymmetry never accumulates downstream.
class Operator {
 public:
  Operator(CMat m, std::optional<DimsSplit> split = std::nullopt,
           double herm_tol = tol::herm);

  static Operator identity(std::size_t dim,
                           std::optional<DimsSplit> split = std::nullopt);
  static Operator zero(std::size_t dim,
                       std::optional<DimsSplit> split = std::nullopt);
  /// Rank-1 projector onto a computational basis state.
  static Operator basis_projector(std::size_t dim, std::size_t index);

  std::size_t dim() const { return m_.rows(); }
  const CMat& mat() const { return m_; }
  const std::optional<DimsSplit>& split() const { return split_; }
  Operator with_split(std::optional<DimsSplit> split) const;

  cplx operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }

 private:
  CMat m_;
  std::optional<DimsSplit> split_;
};

/// Eigensystem of a Hermitian operator, eigenvalues sorted descending,
/// eigenvectors the matching columns of a unitary.
struct Spectrum {
  std::vector<double> eigenvalues;
  CMat eigenvectors;
};

Spectrum spectrum(const Operator& m);
/// Spectrum of a Hermitian CMat (internal stepping stone; asserts squareness).
Spectrum spectrum_of(const CMat& m);

/// True iff the smallest eigenvalue is >= -tolerance.
bool is_positive_semidefinite(const Operator& m, double tolerance = tol::psd);

/// -sum lambda log2 lambda over eigenvalues above tol::eig_cutoff; defined for
/// unnormalized positive semidefinite operators, S(0) = 0.
/// Throws std::domain_error when an eigenvalue dips below -tol::psd.
double von_neumann_entropy(const Operator& m);

/// Umegaki relative entropy tr{M(log2 M - log2 N)} on the support of N,
/// +infinity when im M is not contained in im N (kernel-compression residual
/// above tol::support). D(0 || N) = 0 for every N, including N = 0.
double relative_entropy(const Operator& m, const Operator& n);

/// sum_x D(M_x || N_x); +infinity propagates through the sum.
double direct_sum_relative_entropy(std::span<const Operator> ms,
                                   std::span<const Operator> ns);

/// Zero all off-diagonal entries in the computational basis.
Operator dephase(const Operator& m);

/// Kronecker product; result carries dims_split = (dim m, dim n).
Operator tensor(const Operator& m, const Operator& n);

/// Trace out the complement of `keep`; requires dims_split.
Operator partial_trace(const Operator& m, Subsystem keep);

Operator add(const Operator& m, const Operator& n);
Operator scaled(const Operator& m, double factor);

}  // namespace povmrt

#endif  // POVMRT_OPERATOR_CORE_HPP
