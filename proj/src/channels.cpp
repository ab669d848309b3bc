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

#include "povmrt/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace povmrt {

namespace {

CMat dephase_mat(const CMat& m) {
  CMat out(m.rows(), m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i) out(i, i) = m(i, i);
  return out;
}

CMat matrix_unit(std::size_t d, std::size_t i, std::size_t j) {
  CMat e(d, d);
  e(i, j) = cplx{1.0, 0.0};
  return e;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<CMat> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw std::invalid_argument("KrausChannel: empty family");
  out_dim_ = kraus_[0].rows();
  in_dim_ = kraus_[0].cols();
  for (const auto& k : kraus_)
    if (k.rows() != out_dim_ || k.cols() != in_dim_)
      throw std::invalid_argument("KrausChannel: ragged Kraus shapes");
  CMat sum(in_dim_, in_dim_);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  const double residual = sum.max_abs_diff(CMat::identity(in_dim_));
  if (residual > tol::completeness)
    throw std::invalid_argument("KrausChannel: not trace preserving, residual " +
                                std::to_string(residual));
}

KrausChannel KrausChannel::identity(std::size_t d) {
  return KrausChannel({CMat::identity(d)});
}

KrausChannel KrausChannel::dephasing(std::size_t d) {
  std::vector<CMat> ks;
  ks.reserve(d);
  for (std::size_t i = 0; i < d; ++i) ks.push_back(matrix_unit(d, i, i));
  return KrausChannel(std::move(ks));
}

CMat KrausChannel::apply_mat(const CMat& x) const {
  if (!x.square() || x.rows() != in_dim_)
    throw std::invalid_argument("KrausChannel apply: dimension mismatch");
  CMat out(out_dim_, out_dim_);
  for (const auto& k : kraus_) out += k * x * k.adjoint();
  return out;
}

Operator KrausChannel::apply(const Operator& rho) const {
  CMat out = apply_mat(rho.mat());
  out.hermitize();
  return Operator(std::move(out),
                  in_dim_ == out_dim_ ? rho.split() : std::nullopt);
}

CMat KrausChannel::adjoint_apply_mat(const CMat& m) const {
  if (!m.square() || m.rows() != out_dim_)
    throw std::invalid_argument("KrausChannel adjoint: dimension mismatch");
  CMat out(in_dim_, in_dim_);
  for (const auto& k : kraus_) out += k.adjoint() * m * k;
  return out;
}

Operator KrausChannel::adjoint_apply(const Operator& effect) const {
  CMat out = adjoint_apply_mat(effect.mat());
  out.hermitize();
  return Operator(std::move(out),
                  in_dim_ == out_dim_ ? effect.split() : std::nullopt);
}

UnitaryChannel::UnitaryChannel(CMat unitary) : u(std::move(unitary)) {
  if (!u.square()) throw std::invalid_argument("UnitaryChannel: not square");
  const double residual =
      (u.adjoint() * u).max_abs_diff(CMat::identity(u.rows()));
  if (residual > tol::completeness)
    throw std::invalid_argument("UnitaryChannel: u^dag u != I, residual " +
                                std::to_string(residual));
}

KrausChannel UnitaryChannel::channel() const { return KrausChannel({u}); }

KrausChannel UnitaryChannel::adjoint_channel() const {
  return KrausChannel({u.adjoint()});
}

UnitaryChannel cnot_unitary(std::size_t d) {
  if (d < 1) throw std::invalid_argument("cnot_unitary: d >= 1");
  CMat u(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      u(i * d + (j + i) % d, i * d + j) = cplx{1.0, 0.0};
  return UnitaryChannel(std::move(u));
}

UnitaryChannel shift_unitary(std::size_t d, std::size_t y) {
  if (y >= d) throw std::invalid_argument("shift_unitary: y out of range");
  CMat u(d, d);
  for (std::size_t i = 0; i < d; ++i) u((i + y) % d, i) = cplx{1.0, 0.0};
  return UnitaryChannel(std::move(u));
}

double unitality_residual(const KrausChannel& ch) {
  if (ch.in_dim() != ch.out_dim())
    throw std::invalid_argument("unitality: channel not square");
  CMat sum(ch.out_dim(), ch.out_dim());
  for (const auto& k : ch.kraus()) sum += k * k.adjoint();
  return sum.max_abs_diff(CMat::identity(ch.out_dim()));
}

bool is_unital(const KrausChannel& ch, double tolerance) {
  return unitality_residual(ch) <= tolerance;
}

double detection_incoherence_residual(const KrausChannel& ch) {
  if (ch.in_dim() != ch.out_dim())
    throw std::invalid_argument("detection incoherence: channel not square");
  const std::size_t d = ch.in_dim();
  double residual = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const CMat unit = matrix_unit(d, i, j);
      // Forward form on the unit: Delta(E(unit)) vs Delta(E(Delta(unit))).
      const CMat lhs = dephase_mat(ch.apply_mat(unit));
      const CMat rhs = dephase_mat(ch.apply_mat(dephase_mat(unit)));
      residual = std::max(residual, lhs.max_abs_diff(rhs));
      // Adjoint form: E^dag(Delta(unit)) vs Delta(E^dag(Delta(unit))).
      const CMat adj = ch.adjoint_apply_mat(dephase_mat(unit));
      residual = std::max(residual, adj.max_abs_diff(dephase_mat(adj)));
    }
  return residual;
}

bool is_detection_incoherent(const KrausChannel& ch, double tolerance) {
  return detection_incoherence_residual(ch) <= tolerance;
}

Povm pre_process(const Povm& povm, const KrausChannel& ch) {
  if (ch.out_dim() != povm.dim())
    throw std::invalid_argument("pre_process: dimension mismatch");
  std::vector<Operator> effects;
  effects.reserve(povm.outcomes());
  for (const auto& e : povm.effects()) effects.push_back(ch.adjoint_apply(e));
  const bool keep_split = ch.in_dim() == ch.out_dim();
  return Povm(std::move(effects),
              keep_split ? povm.split() : std::nullopt);
}

CMat random_unitary(std::size_t d, SplitRng& rng) {
  CMat g = random_ginibre(d, d, rng);
  CMat h = g + g.adjoint();
  h.hermitize();
  return spectrum_of(h).eigenvectors;
}

KrausChannel random_unital_channel(std::size_t d, SplitRng& rng) {
  const int m = rng.uniform_int(1, 3);
  std::vector<double> w(m);
  double sum = 0.0;
  for (auto& v : w) {
    v = -std::log(std::max(rng.uniform(), 1e-300));
    sum += v;
  }
  std::vector<CMat> ks;
  ks.reserve(m);
  for (int k = 0; k < m; ++k)
    ks.push_back(scaled(random_unitary(d, rng), cplx{std::sqrt(w[k] / sum), 0.0}));
  return KrausChannel(std::move(ks));
}

namespace {

// Basis-permutation plus diagonal-phase unitary: U|i> = e^{i theta_i}|p(i)>.
CMat random_perm_phase_unitary(std::size_t d, SplitRng& rng) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = d; i > 1; --i)
    std::swap(perm[i - 1], perm[rng.uniform_int(0, static_cast<int>(i) - 1)]);
  CMat u(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    u(perm[i], i) = std::polar(1.0, theta);
  }
  return u;
}

std::size_t perfect_square_root(std::size_t d) {
  const auto r = static_cast<std::size_t>(std::lround(std::sqrt(double(d))));
  return r * r == d ? r : 0;
}

}  // namespace

KrausChannel random_udi_channel(std::size_t d, std::uint64_t seed) {
  SplitRng rng = SplitRng(seed).child("udi");
  const std::size_t root = perfect_square_root(d);

  const int components = rng.uniform_int(1, 3);
  std::vector<double> w(components);
  double sum = 0.0;
  for (auto& v : w) {
    v = -std::log(std::max(rng.uniform(), 1e-300));
    sum += v;
  }

  std::vector<CMat> ks;
  for (int c = 0; c < components; ++c) {
    const double weight = w[c] / sum;
    const double sq = std::sqrt(weight);
    int kind = rng.uniform_int(0, root > 1 ? 3 : 1);
    switch (kind) {
      case 0: {  // permutation-phase unitary
        ks.push_back(scaled(random_perm_phase_unitary(d, rng), cplx{sq, 0.0}));
        break;
      }
      case 1: {  // dephasing
        for (std::size_t i = 0; i < d; ++i) {
          CMat k(d, d);
          k(i, i) = cplx{sq, 0.0};
          ks.push_back(std::move(k));
        }
        break;
      }
      case 2: {  // generalized CNOT (or its adjoint) on root x root
        const CMat u = cnot_unitary(root).u;
        ks.push_back(scaled(rng.uniform() < 0.5 ? u : u.adjoint(), cplx{sq, 0.0}));
        break;
      }
      default: {  // local shift pair
        const CMat u = CMat::kron(shift_unitary(root, rng.uniform_int(0, int(root) - 1)).u,
                                  shift_unitary(root, rng.uniform_int(0, int(root) - 1)).u);
        ks.push_back(scaled(u, cplx{sq, 0.0}));
        break;
      }
    }
  }
  return KrausChannel(std::move(ks));
}

KrausChannel measurement_channel(const Povm& povm) {
  const std::size_t d = povm.dim();
  const std::size_t n = povm.outcomes();
  std::vector<CMat> ks;
  for (std::size_t x = 0; x < n; ++x) {
    const Spectrum s = spectrum(povm.effect(x));
    for (std::size_t k = 0; k < d; ++k) {
      if (s.eigenvalues[k] <= tol::eig_cutoff) continue;
      const double f = std::sqrt(s.eigenvalues[k]);
      CMat kr(n, d);
      for (std::size_t c = 0; c < d; ++c)
        kr(x, c) = f * std::conj(s.eigenvectors(c, k));
      ks.push_back(std::move(kr));
    }
  }
  return KrausChannel(std::move(ks));
}

}  // namespace povmrt
