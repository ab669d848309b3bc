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

#include "povmrt/measurement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace povmrt {

StochasticMap::StochasticMap(std::size_t rows, std::size_t cols,
                             std::vector<double> probs)
    : rows_(rows), cols_(cols), probs_(std::move(probs)) {
  if (rows_ == 0 || cols_ == 0 || probs_.size() != rows_ * cols_)
    throw std::invalid_argument("StochasticMap: bad shape");
  for (std::size_t x = 0; x < cols_; ++x) {
    double sum = 0.0;
    for (std::size_t y = 0; y < rows_; ++y) {
      const double p = (*this)(y, x);
      if (p < 0.0)
        throw std::invalid_argument("StochasticMap: negative probability");
      sum += p;
    }
    if (std::abs(sum - 1.0) > tol::stochastic_col)
      throw std::invalid_argument("StochasticMap: column " + std::to_string(x) +
                                  " sums to " + std::to_string(sum));
  }
}

StochasticMap StochasticMap::identity(std::size_t n) {
  std::vector<double> p(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) p[i * n + i] = 1.0;
  return StochasticMap(n, n, std::move(p));
}

StochasticMap StochasticMap::merge_all(std::size_t cols) {
  return StochasticMap(1, cols, std::vector<double>(cols, 1.0));
}

StochasticMap StochasticMap::compose(const StochasticMap& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("StochasticMap compose: alphabet mismatch");
  std::vector<double> p(rows_ * other.cols_, 0.0);
  for (std::size_t z = 0; z < rows_; ++z)
    for (std::size_t x = 0; x < other.cols_; ++x) {
      double acc = 0.0;
      for (std::size_t y = 0; y < cols_; ++y)
        acc += (*this)(z, y) * other(y, x);
      p[z * other.cols_ + x] = acc;
    }
  return StochasticMap(rows_, other.cols_, std::move(p));
}

std::vector<Violation> check_povm(const std::vector<CMat>& effects,
                                  const std::optional<DimsSplit>& split) {
  std::vector<Violation> out;
  if (effects.empty()) {
    out.push_back({"nonempty", 1.0});
    return out;
  }
  const std::size_t d = effects[0].rows();
  for (const auto& e : effects)
    if (!e.square() || e.rows() != d) {
      out.push_back({"uniform dimensions", 0.0});
      return out;
    }
  if (split && split->a * split->b != d)
    out.push_back({"dims_split factors dim",
                   static_cast<double>(split->a * split->b)});

  double herm_dev = 0.0;
  for (const auto& e : effects) herm_dev = std::max(herm_dev, e.herm_deviation());
  if (herm_dev > tol::herm) out.push_back({"hermiticity", herm_dev});

  if (herm_dev <= tol::herm) {
    double min_eig = 0.0;
    for (const auto& e : effects) {
      CMat h = e;
      h.hermitize();
      const Spectrum s = spectrum_of(h);
      if (!s.eigenvalues.empty())
        min_eig = std::min(min_eig, s.eigenvalues.back());
    }
    if (min_eig < -tol::psd) out.push_back({"positivity", min_eig});
  }

  CMat sum(d, d);
  for (const auto& e : effects) sum += e;
  const double completeness = sum.max_abs_diff(CMat::identity(d));
  if (completeness > tol::completeness)
    out.push_back({"completeness", completeness});

  return out;
}

Povm::Povm(std::vector<Operator> effects, std::optional<DimsSplit> split)
    : effects_(std::move(effects)) {
  if (effects_.empty()) throw std::invalid_argument("Povm: no effects");
  if (!split) split = effects_[0].split();
  std::vector<CMat> mats;
  mats.reserve(effects_.size());
  for (const auto& e : effects_) mats.push_back(e.mat());
  const auto violations = check_povm(mats, split);
  if (!violations.empty())
    throw std::invalid_argument("Povm: invariant '" + violations[0].invariant +
                                "' violated, residual " +
                                std::to_string(violations[0].residual));
  split_ = split;
  for (auto& e : effects_) e = e.with_split(split_);
}

Povm Povm::computational(std::size_t d) {
  std::vector<Operator> effects;
  effects.reserve(d);
  for (std::size_t i = 0; i < d; ++i)
    effects.push_back(Operator::basis_projector(d, i));
  return Povm(std::move(effects));
}

Povm Povm::trivial(std::size_t d) {
  return Povm(std::vector<Operator>{Operator::identity(d)});
}

std::vector<double> apply_statistics(const Povm& povm, const Operator& rho) {
  if (rho.dim() != povm.dim())
    throw std::invalid_argument("apply_statistics: dimension mismatch");
  if (std::abs(rho.trace() - 1.0) > tol::completeness ||
      !is_positive_semidefinite(rho))
    throw std::invalid_argument("apply_statistics: invalid state");
  std::vector<double> p;
  p.reserve(povm.outcomes());
  // tr(rho M) = <M, rho>_HS for Hermitian M.
  for (const auto& e : povm.effects())
    p.push_back(hs_inner(e.mat(), rho.mat()).real());
  return p;
}

double max_offdiagonal(const Povm& povm) {
  double m = 0.0;
  for (const auto& e : povm.effects())
    for (std::size_t i = 0; i < e.dim(); ++i)
      for (std::size_t j = 0; j < e.dim(); ++j)
        if (i != j) m = std::max(m, std::abs(e(i, j)));
  return m;
}

bool is_incoherent(const Povm& povm, double tolerance) {
  return max_offdiagonal(povm) <= tolerance;
}

const char* to_string(SeparabilityVerdict v) {
  switch (v) {
    case SeparabilityVerdict::DecidedTrue: return "decided-true";
    case SeparabilityVerdict::DecidedFalse: return "decided-false";
    default: return "undecided";
  }
}

namespace {

CMat partial_transpose_b(const CMat& m, const DimsSplit& split) {
  const std::size_t da = split.a, db = split.b;
  CMat out(m.rows(), m.cols());
  for (std::size_t ia = 0; ia < da; ++ia)
    for (std::size_t ja = 0; ja < da; ++ja)
      for (std::size_t ib = 0; ib < db; ++ib)
        for (std::size_t jb = 0; jb < db; ++jb)
          out(ia * db + ib, ja * db + jb) = m(ia * db + jb, ja * db + ib);
  return out;
}

bool effect_is_zero(const Operator& e) {
  return e.mat().max_abs() <= tol::eig_cutoff;
}

}  // namespace

EffectSeparability effect_separability(const Operator& e, double tolerance) {
  if (!e.split())
    throw std::invalid_argument("effect_separability: missing dims_split");
  if (effect_is_zero(e)) return {SeparabilityVerdict::DecidedTrue, 0.0};
  const DimsSplit split = *e.split();
  const std::size_t lo = std::min(split.a, split.b);
  const std::size_t hi = std::max(split.a, split.b);
  const bool ppt_decides = (lo == 2 && hi <= 3) || lo == 1;

  CMat pt = partial_transpose_b(scaled(e.mat(), cplx{1.0 / e.trace(), 0.0}),
                                split);
  pt.hermitize();
  const double min_eig = spectrum_of(pt).eigenvalues.back();
  if (min_eig < -tolerance)
    return {SeparabilityVerdict::DecidedFalse, min_eig};
  return {ppt_decides ? SeparabilityVerdict::DecidedTrue
                      : SeparabilityVerdict::Undecided,
          min_eig};
}

SeparabilityCertificate is_separable_effectwise(const Povm& povm,
                                                double tolerance) {
  if (!povm.split())
    throw std::invalid_argument("is_separable_effectwise: missing dims_split");
  SeparabilityCertificate cert{SeparabilityVerdict::DecidedTrue, {}, 0.0};
  for (const auto& e : povm.effects()) {
    const EffectSeparability es = effect_separability(e, tolerance);
    cert.per_effect.push_back(es.verdict);
    cert.min_pt_eigenvalue = std::min(cert.min_pt_eigenvalue,
                                      es.min_pt_eigenvalue);
  }

  bool any_false = false, all_true = true;
  for (const auto v : cert.per_effect) {
    any_false |= (v == SeparabilityVerdict::DecidedFalse);
    all_true &= (v == SeparabilityVerdict::DecidedTrue);
  }
  cert.verdict = any_false ? SeparabilityVerdict::DecidedFalse
                 : all_true ? SeparabilityVerdict::DecidedTrue
                            : SeparabilityVerdict::Undecided;
  return cert;
}

Povm post_process(const Povm& povm, const StochasticMap& s) {
  if (s.cols() != povm.outcomes())
    throw std::invalid_argument("post_process: alphabet mismatch");
  const std::size_t d = povm.dim();
  std::vector<Operator> out;
  out.reserve(s.rows());
  for (std::size_t y = 0; y < s.rows(); ++y) {
    CMat acc(d, d);
    for (std::size_t x = 0; x < povm.outcomes(); ++x) {
      const double p = s(y, x);
      if (p != 0.0) acc += scaled(povm.effect(x).mat(), cplx{p, 0.0});
    }
    out.emplace_back(std::move(acc), povm.split());
  }
  return Povm(std::move(out), povm.split());
}

Povm tensor_povm(const Povm& a, const Povm& b) {
  std::vector<Operator> effects;
  effects.reserve(a.outcomes() * b.outcomes());
  for (const auto& ea : a.effects())
    for (const auto& eb : b.effects()) effects.push_back(tensor(ea, eb));
  return Povm(std::move(effects), DimsSplit{a.dim(), b.dim()});
}

Povm mix_povm(double p, const Povm& a, const Povm& b) {
  if (a.dim() != b.dim() || a.outcomes() != b.outcomes())
    throw std::invalid_argument("mix_povm: shape mismatch");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("mix_povm: p in [0,1]");
  std::vector<Operator> effects;
  effects.reserve(a.outcomes());
  for (std::size_t x = 0; x < a.outcomes(); ++x)
    effects.push_back(add(scaled(a.effect(x), p), scaled(b.effect(x), 1.0 - p)));
  return Povm(std::move(effects), a.split());
}

CMat random_ginibre(std::size_t rows, std::size_t cols, SplitRng& rng) {
  CMat g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      g(i, j) = cplx{rng.normal(), rng.normal()};
  return g;
}

Operator random_psd(std::size_t d, SplitRng& rng) {
  CMat g = random_ginibre(d, d, rng);
  CMat p = g * g.adjoint();
  p.hermitize();
  return Operator(std::move(p));
}

Operator random_density(std::size_t d, SplitRng& rng) {
  Operator p = random_psd(d, rng);
  return scaled(p, 1.0 / p.trace());
}

Povm random_povm(std::size_t d, std::size_t n, std::uint64_t seed) {
  if (d < 1 || n < 1) throw std::invalid_argument("random_povm: d, n >= 1");
  for (int attempt = 0; attempt < 16; ++attempt) {
    SplitRng rng = SplitRng(seed).child("random_povm").child(attempt);
    std::vector<CMat> loads;
    loads.reserve(n);
    CMat total(d, d);
    for (std::size_t x = 0; x < n; ++x) {
      CMat g = random_ginibre(d, d, rng);
      CMat p = g * g.adjoint();
      p.hermitize();
      total += p;
      loads.push_back(std::move(p));
    }
    total.hermitize();
    const Spectrum s = spectrum_of(total);
    if (s.eigenvalues.back() < 1e-8 * s.eigenvalues.front()) continue;
    // total^{-1/2}
    CMat inv_sqrt(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      const double f = 1.0 / std::sqrt(s.eigenvalues[k]);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          inv_sqrt(i, j) += f * s.eigenvectors(i, k) *
                            std::conj(s.eigenvectors(j, k));
    }
    std::vector<Operator> effects;
    effects.reserve(n);
    for (auto& p : loads) {
      CMat e = inv_sqrt * p * inv_sqrt;
      e.hermitize();
      effects.emplace_back(std::move(e));
    }
    return Povm(std::move(effects));
  }
  throw std::runtime_error("random_povm: singular normalizer for all retries");
}

Povm random_incoherent_povm(std::size_t d, std::size_t n, SplitRng& rng) {
  // Column-wise probability loads: for each basis index i, the vector
  // (F_x)_{ii} over x is a point on the simplex.
  std::vector<CMat> mats(n, CMat(d, d));
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      double u = rng.uniform();
      while (u <= 0.0) u = rng.uniform();
      w[x] = -std::log(u);
      sum += w[x];
    }
    for (std::size_t x = 0; x < n; ++x) mats[x](i, i) = cplx{w[x] / sum, 0.0};
  }
  std::vector<Operator> effects;
  effects.reserve(n);
  for (auto& m : mats) effects.emplace_back(std::move(m));
  return Povm(std::move(effects));
}

StochasticMap random_stochastic_map(std::size_t rows, std::size_t cols,
                                    SplitRng& rng) {
  std::vector<double> p(rows * cols, 0.0);
  for (std::size_t x = 0; x < cols; ++x) {
    double sum = 0.0;
    std::vector<double> w(rows);
    for (std::size_t y = 0; y < rows; ++y) {
      double u = rng.uniform();
      while (u <= 0.0) u = rng.uniform();
      w[y] = -std::log(u);
      sum += w[y];
    }
    for (std::size_t y = 0; y < rows; ++y) p[y * cols + x] = w[y] / sum;
  }
  return StochasticMap(rows, cols, std::move(p));
}

}  // namespace povmrt
