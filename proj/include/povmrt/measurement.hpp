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

#ifndef POVMRT_MEASUREMENT_HPP
#define POVMRT_MEASUREMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "povmrt/operator_core.hpp"
#include "povmrt/rng.hpp"

namespace povmrt {

/// Classical post-processing p(y|x): entries nonnegative, every column a
/// probability distribution. rows = output alphabet, cols = input alphabet.
class StochasticMap {
 public:
  StochasticMap(std::size_t rows, std::size_t cols, std::vector<double> probs);

  static StochasticMap identity(std::size_t n);
  /// p(0|x) = 1 for all x: total coarse-graining onto one outcome.
  static StochasticMap merge_all(std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t y, std::size_t x) const {
    return probs_[y * cols_ + x];
  }

  /// Composition (this after other): p(z|x) = sum_y this(z|y) other(y|x).
  StochasticMap compose(const StochasticMap& other) const;

 private:
  std::size_t rows_, cols_;
  std::vector<double> probs_;
};

struct Violation {
  std::string invariant;
  double residual;
};

/// POVM invariant check without construction; returns one entry per
/// violated invariant (empty means valid).
std::vector<Violation> check_povm(const std::vector<CMat>& effects,
                                  const std::optional<DimsSplit>& split);

/// Ordered list of PSD effects summing to identity. Zero effects are
/// permitted. A dims_split marks a bipartite factorization and is pushed
/// down into every effect.
class Povm {
 public:
  explicit Povm(std::vector<Operator> effects,
                std::optional<DimsSplit> split = std::nullopt);

  std::size_t dim() const { return effects_[0].dim(); }
  std::size_t outcomes() const { return effects_.size(); }
  const std::vector<Operator>& effects() const { return effects_; }
  const Operator& effect(std::size_t x) const { return effects_[x]; }
  const std::optional<DimsSplit>& split() const { return split_; }

  /// Computational-basis measurement {|0><0|, ..., |d-1><d-1|}.
  static Povm computational(std::size_t d);
  /// The trivial single-outcome measurement {I}.
  static Povm trivial(std::size_t d);

 private:
  std::vector<Operator> effects_;
  std::optional<DimsSplit> split_;
};

/// Born rule: p_x = tr(rho M_x). rho must be PSD with unit trace.
std::vector<double> apply_statistics(const Povm& povm, const Operator& rho);

/// Largest off-diagonal magnitude over all effects.
double max_offdiagonal(const Povm& povm);

bool is_incoherent(const Povm& povm, double tolerance);

enum class SeparabilityVerdict { DecidedTrue, DecidedFalse, Undecided };

struct SeparabilityCertificate {
  SeparabilityVerdict verdict;
  std::vector<SeparabilityVerdict> per_effect;
  /// Most negative partial-transpose eigenvalue seen (trace-normalized).
  double min_pt_eigenvalue;
};

const char* to_string(SeparabilityVerdict v);

struct EffectSeparability {
  SeparabilityVerdict verdict;
  double min_pt_eigenvalue;  // of the trace-normalized effect; 0 for zero effects
};

/// PPT verdict for one PSD operator carrying a dims_split. Exact in 2x2 and
/// 2x3 (and trivially when either factor is 1); in higher dimensions NPT
/// decides false and PPT stays undecided. Zero operators are separable.
EffectSeparability effect_separability(const Operator& e,
                                       double tolerance = tol::psd);

/// Effect-by-effect PPT test; decided-true iff every effect is decided-true,
/// decided-false as soon as one effect is.
SeparabilityCertificate is_separable_effectwise(const Povm& povm,
                                                double tolerance = tol::psd);

/// M'_y = sum_x p(y|x) M_x.
Povm post_process(const Povm& povm, const StochasticMap& s);

/// Joint measurement {A_x (x) B_y}, outcome index x * B.outcomes() + y,
/// dims_split = (dim A, dim B).
Povm tensor_povm(const Povm& a, const Povm& b);

/// Outcome-wise convex mixture p A + (1-p) B; shapes must match.
Povm mix_povm(double p, const Povm& a, const Povm& b);

/// Deterministic-in-seed random POVM: Ginibre loads G_x G_x^dag normalized by
/// S^{-1/2} (.) S^{-1/2} with S their sum.
Povm random_povm(std::size_t d, std::size_t n, std::uint64_t seed);

/// Random incoherent POVM: per-basis-index probability loads across outcomes.
Povm random_incoherent_povm(std::size_t d, std::size_t n, SplitRng& rng);

StochasticMap random_stochastic_map(std::size_t rows, std::size_t cols,
                                    SplitRng& rng);

/// Random full-rank density operator (Ginibre G G^dag, trace-normalized).
Operator random_density(std::size_t d, SplitRng& rng);

/// Random PSD operator with the given ambient trace scale.
Operator random_psd(std::size_t d, SplitRng& rng);

CMat random_ginibre(std::size_t rows, std::size_t cols, SplitRng& rng);

}  // namespace povmrt

#endif  // POVMRT_MEASUREMENT_HPP
