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

#include "povmrt/operator_core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace povmrt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_split(std::size_t dim, const std::optional<DimsSplit>& split) {
  if (split && split->a * split->b != dim)
    throw std::invalid_argument("dims_split does not factor the dimension");
}

double clamp_eigenvalue(double w) {
  if (w > tol::eig_cutoff) return w;
  if (w > -tol::psd) return 0.0;
  throw std::domain_error("operator has a negative eigenvalue: " +
                          std::to_string(w));
}

}  // namespace

Operator::Operator(CMat m, std::optional<DimsSplit> split, double herm_tol)
    : m_(std::move(m)), split_(split) {
  if (!m_.square()) throw std::invalid_argument("Operator: matrix not square");
  check_split(m_.rows(), split_);
  const double dev = m_.herm_deviation();
  if (dev > herm_tol)
    throw std::invalid_argument("Operator: not Hermitian, deviation " +
                                std::to_string(dev));
  m_.hermitize();
}

Operator Operator::identity(std::size_t dim, std::optional<DimsSplit> split) {
  return Operator(CMat::identity(dim), split);
}

Operator Operator::zero(std::size_t dim, std::optional<DimsSplit> split) {
  return Operator(CMat(dim, dim), split);
}

Operator Operator::basis_projector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("basis_projector: index >= dim");
  CMat m(dim, dim);
  m(index, index) = cplx{1.0, 0.0};
  return Operator(std::move(m));
}

Operator Operator::with_split(std::optional<DimsSplit> split) const {
  Operator out(*this);
  check_split(out.dim(), split);
  out.split_ = split;
  return out;
}

bool is_positive_semidefinite(const Operator& m, double tolerance) {
  const Spectrum s = spectrum(m);
  return s.eigenvalues.empty() || s.eigenvalues.back() >= -tolerance;
}

double von_neumann_entropy(const Operator& m) {
  const Spectrum s = spectrum(m);
  double entropy = 0.0;
  for (const double w : s.eigenvalues) {
    const double lam = clamp_eigenvalue(w);
    if (lam > 0.0) entropy -= lam * std::log2(lam);
  }
  return entropy;
}

double relative_entropy(const Operator& m, const Operator& n) {
  if (m.dim() != n.dim())
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  const std::size_t d = m.dim();

  const Spectrum sm = spectrum(m);
  double tr_m_log_m = 0.0;
  bool m_is_zero = true;
  for (const double w : sm.eigenvalues) {
    const double lam = clamp_eigenvalue(w);
    if (lam > 0.0) {
      tr_m_log_m += lam * std::log2(lam);
      m_is_zero = false;
    }
  }
  if (m_is_zero) return 0.0;

  const Spectrum sn = spectrum(n);
  for (const double w : sn.eigenvalues) clamp_eigenvalue(w);

  // Kernel projector of N and the image-inclusion residual ||P M P||_max.
  std::vector<std::size_t> kernel_cols;
  for (std::size_t j = 0; j < d; ++j)
    if (sn.eigenvalues[j] <= tol::eig_cutoff) kernel_cols.push_back(j);
  if (!kernel_cols.empty()) {
    CMat proj(d, d);
    for (const std::size_t j : kernel_cols)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          proj(r, c) += sn.eigenvectors(r, j) * std::conj(sn.eigenvectors(c, j));
    const CMat compressed = proj * m.mat() * proj;
    if (compressed.max_abs() > tol::support) return kInf;
  }

  // tr(M log2 N) = sum_j log2(mu_j) <v_j| M |v_j> over the support of N.
  double tr_m_log_n = 0.0;
  CMat column(d, 1);
  for (std::size_t j = 0; j < d; ++j) {
    const double mu = sn.eigenvalues[j];
    if (mu <= tol::eig_cutoff) continue;
    for (std::size_t r = 0; r < d; ++r) column(r, 0) = sn.eigenvectors(r, j);
    const CMat mv = m.mat() * column;
    const double quad = hs_inner(column, mv).real();
    tr_m_log_n += std::log2(mu) * quad;
  }

  return tr_m_log_m - tr_m_log_n;
}

double direct_sum_relative_entropy(std::span<const Operator> ms,
                                   std::span<const Operator> ns) {
  if (ms.size() != ns.size())
    throw std::invalid_argument("direct_sum_relative_entropy: length mismatch");
  double total = 0.0;
  for (std::size_t x = 0; x < ms.size(); ++x) {
    total += relative_entropy(ms[x], ns[x]);
    if (std::isinf(total)) return kInf;
  }
  return total;
}

Operator dephase(const Operator& m) {
  CMat out(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) out(i, i) = m(i, i);
  return Operator(std::move(out), m.split());
}

Operator tensor(const Operator& m, const Operator& n) {
  return Operator(CMat::kron(m.mat(), n.mat()), DimsSplit{m.dim(), n.dim()});
}

Operator partial_trace(const Operator& m, Subsystem keep) {
  if (!m.split())
    throw std::invalid_argument("partial_trace: operator has no dims_split");
  const std::size_t da = m.split()->a;
  const std::size_t db = m.split()->b;
  if (keep == Subsystem::A) {
    CMat out(da, da);
    for (std::size_t ia = 0; ia < da; ++ia)
      for (std::size_t ja = 0; ja < da; ++ja) {
        cplx acc{0.0, 0.0};
        for (std::size_t ib = 0; ib < db; ++ib)
          acc += m(ia * db + ib, ja * db + ib);
        out(ia, ja) = acc;
      }
    return Operator(std::move(out));
  }
  CMat out(db, db);
  for (std::size_t ib = 0; ib < db; ++ib)
    for (std::size_t jb = 0; jb < db; ++jb) {
      cplx acc{0.0, 0.0};
      for (std::size_t ia = 0; ia < da; ++ia)
        acc += m(ia * db + ib, ia * db + jb);
      out(ib, jb) = acc;
    }
  return Operator(std::move(out));
}

Operator add(const Operator& m, const Operator& n) {
  if (m.dim() != n.dim()) throw std::invalid_argument("add: dimension mismatch");
  return Operator(m.mat() + n.mat(), m.split());
}

Operator scaled(const Operator& m, double factor) {
  return Operator(povmrt::scaled(m.mat(), cplx{factor, 0.0}), m.split());
}

}  // namespace povmrt
