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

#include "povmrt/suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "povmrt/fixtures.hpp"

namespace povmrt::suite {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Accumulates instance residuals against a tolerance.
struct Sweep {
  PropertyResult result;

  Sweep(std::string name, double tolerance) {
    result.name = std::move(name);
    result.tolerance = tolerance;
    result.max_residual = kNegInf;
  }

  void record(double residual, std::uint64_t instance_seed) {
    ++result.total;
    result.max_residual = std::max(result.max_residual, residual);
    if (residual <= result.tolerance) {
      ++result.passed;
    } else if (result.counterexample_seed == 0) {
      result.counterexample_seed = instance_seed;
    }
  }

  PropertyResult take() && { return std::move(result); }
};

struct Shape {
  std::size_t d, n;
};

Shape grid_shape(int index) {
  static constexpr std::size_t ds[] = {2, 3};
  static constexpr std::size_t ns[] = {2, 3, 4};
  return {ds[index % 2], ns[(index / 2) % 3]};
}

std::uint64_t instance_seed(std::uint64_t seed, const char* label, int t) {
  return SplitRng(seed).child(label).child(static_cast<std::uint64_t>(t)).lineage();
}

Povm random_pair_member(std::uint64_t s, const Shape& shape, int member) {
  return random_povm(shape.d, shape.n, SplitRng(s).child(member).lineage());
}

}  // namespace

PropertyResult dm_property(int which, std::uint64_t seed, int instances) {
  Sweep sweep("dm." + std::to_string(which), tol::property);
  for (int t = 0; t < instances; ++t) {
    const std::uint64_t s = instance_seed(seed, "dm_props", t);
    const Shape shape = grid_shape(t);
    SplitRng rng = SplitRng(s).child("aux");
    const Povm m = random_pair_member(s, shape, 0);
    const Povm n = random_pair_member(s, shape, 1);
    double residual = 0.0;
    switch (which) {
      case 1: {
        const double d_mn = measurement_relative_entropy(m, n);
        const double d_mm = measurement_relative_entropy(m, m);
        residual = std::max(-d_mn, d_mm);
        // Distinct measurements must be strictly separated.
        double dev = 0.0;
        for (std::size_t x = 0; x < m.outcomes(); ++x)
          dev = std::max(dev, m.effect(x).mat().max_abs_diff(n.effect(x).mat()));
        if (dev > 1e-4) residual = std::max(residual, 1e-8 - d_mn);
        break;
      }
      case 2: {
        const KrausChannel ch = random_unital_channel(shape.d, rng);
        residual = measurement_relative_entropy(pre_process(m, ch),
                                                pre_process(n, ch)) -
                   measurement_relative_entropy(m, n);
        break;
      }
      case 3: {
        const KrausChannel u = UnitaryChannel(random_unitary(shape.d, rng)).channel();
        residual = std::abs(measurement_relative_entropy(pre_process(m, u),
                                                         pre_process(n, u)) -
                            measurement_relative_entropy(m, n));
        break;
      }
      case 4: {
        const int rows = std::max(static_cast<int>(shape.n) + rng.uniform_int(-1, 1), 1);
        const StochasticMap s_map =
            random_stochastic_map(static_cast<std::size_t>(rows), shape.n, rng);
        residual = measurement_relative_entropy(post_process(m, s_map),
                                                post_process(n, s_map)) -
                   measurement_relative_entropy(m, n);
        break;
      }
      case 5: {
        const Shape other{shape.d == 2 ? std::size_t{3} : std::size_t{2}, 2};
        const std::uint64_t s2 = SplitRng(s).child("second").lineage();
        const Povm k = random_pair_member(s2, other, 0);
        const Povm l = random_pair_member(s2, other, 1);
        residual = std::abs(
            measurement_relative_entropy(tensor_povm(m, k), tensor_povm(n, l)) -
            measurement_relative_entropy(m, n) -
            measurement_relative_entropy(k, l));
        break;
      }
      case 6: {
        const std::uint64_t s2 = SplitRng(s).child("second").lineage();
        const Povm k = random_pair_member(s2, shape, 0);
        const Povm l = random_pair_member(s2, shape, 1);
        const double p = rng.uniform();
        residual = measurement_relative_entropy(mix_povm(p, m, k),
                                                mix_povm(p, n, l)) -
                   p * measurement_relative_entropy(m, n) -
                   (1.0 - p) * measurement_relative_entropy(k, l);
        break;
      }
      default:
        throw std::invalid_argument("dm_property: which in 1..6");
    }
    sweep.record(residual, s);
  }
  return std::move(sweep).take();
}

PropertyResult udi_preserves_incoherent(std::uint64_t seed, int channels,
                                              int povms) {
  Sweep sweep("udi.preserves_incoherent", 1e-9);
  // Fixed probes: dephasing and CNOT-adjoint are detection incoherent,
  // Hadamard is not.
  sweep.record(is_detection_incoherent(KrausChannel::dephasing(3), 1e-9) ? 0.0 : 1.0,
               1);
  sweep.record(is_detection_incoherent(cnot_adjoint_channel(2), 1e-9) ? 0.0 : 1.0,
               2);
  sweep.record(
      is_detection_incoherent(fixtures::hadamard_unitary().channel(), 1e-9)
          ? 1.0
          : 0.0,
      3);

  for (int c = 0; c < channels; ++c) {
    const std::uint64_t s = instance_seed(seed, "udi_preserve", c);
    const std::size_t d = 2 + static_cast<std::size_t>(c % 3);
    const KrausChannel ch = random_udi_channel(d, s);
    double residual = std::max(unitality_residual(ch),
                               detection_incoherence_residual(ch));
    SplitRng rng = SplitRng(s).child("povm");
    for (int p = 0; p < povms; ++p) {
      const std::size_t n = 2 + static_cast<std::size_t>(p % 3);
      const Povm f = random_incoherent_povm(d, n, rng);
      residual = std::max(residual, max_offdiagonal(pre_process(f, ch)));
    }
    sweep.record(residual, s);
  }
  return std::move(sweep).take();
}

PropertyResult cm_oracle(std::uint64_t seed, int povms, int trials_per) {
  Sweep sweep("cm.minimizer_oracle", 1e-9);
  for (int t = 0; t < povms; ++t) {
    const std::uint64_t s = instance_seed(seed, "cm_oracle", t);
    const Shape shape = grid_shape(t);
    const Povm m = random_povm(shape.d, shape.n, s);
    sweep.record(coherence_oracle_margin(m, trials_per, s), s);
  }
  return std::move(sweep).take();
}

PropertyResult cm_closed_form(std::uint64_t seed, int instances) {
  Sweep sweep("cm.closed_form_vs_dm", tol::property);
  for (int t = 0; t < instances; ++t) {
    const std::uint64_t s = instance_seed(seed, "cm_closed", t);
    const Shape shape = grid_shape(t);
    const Povm m = random_povm(shape.d, shape.n, s);
    std::vector<Operator> dephased;
    dephased.reserve(m.outcomes());
    for (const auto& e : m.effects()) dephased.push_back(dephase(e));
    const Povm delta_m(std::move(dephased));
    sweep.record(std::abs(coherence_monotone(m) -
                          measurement_relative_entropy(m, delta_m)),
                 s);
  }
  return std::move(sweep).take();
}

PropertyResult incoherent_effects_separable(std::uint64_t seed, int instances) {
  Sweep sweep("sep.incoherent_effects", 0.0);
  for (int t = 0; t < instances; ++t) {
    const std::uint64_t s = instance_seed(seed, "sep_incoherent", t);
    SplitRng rng(s);
    const DimsSplit split{2, (t % 2 == 0) ? std::size_t{2} : std::size_t{3}};
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    const Povm incoherent = random_incoherent_povm(split.a * split.b, n, rng);
    const Povm bipartite(incoherent.effects(), split);
    const SeparabilityCertificate cert = is_separable_effectwise(bipartite);
    sweep.record(cert.verdict == SeparabilityVerdict::DecidedTrue ? 0.0 : 1.0, s);
  }
  return std::move(sweep).take();
}

PropertyResult theorem1_sampled(std::uint64_t seed, int instances,
                                int trials_per) {
  Sweep sweep("theorem1.cm_dominates_em", tol::property);
  for (int t = 0; t < instances; ++t) {
    const std::uint64_t s = instance_seed(seed, "theorem1", t);
    const Shape shape{2 + static_cast<std::size_t>(t % 2),
                      2 + static_cast<std::size_t>(t % 3)};
    // Every third instance is incoherent: E_m must vanish there.
    const bool incoherent_case = (t % 3 == 2);
    SplitRng rng(s);
    const Povm m = incoherent_case
                       ? random_incoherent_povm(shape.d, shape.n, rng)
                       : random_povm(shape.d, shape.n, s);
    const double cm = coherence_monotone(m);
    double residual = kNegInf;
    SplitRng channels = SplitRng(s).child("channels");
    for (int k = 0; k < trials_per; ++k) {
      const KrausChannel ch = random_udi_channel(
          shape.d * shape.d, channels.child(static_cast<std::uint64_t>(k)).lineage());
      const Bracket em = entanglement_monotone_bracket(convert(m, ch));
      residual = std::max(residual, em.lower - cm);
      if (em.exact) residual = std::max(residual, em.upper - cm);
      if (incoherent_case) residual = std::max(residual, em.upper);
    }
    sweep.record(residual, s);
  }
  return std::move(sweep).take();
}

PropertyResult theorem2_equality(std::uint64_t seed, int instances_per_combo,
                                 int udi_budget) {
  Sweep sweep("theorem2.cnot_attainment", tol::bracket);
  static constexpr Shape combos[] = {{2, 2}, {2, 3}, {2, 4},
                                     {3, 3}, {3, 4}, {3, 9}};
  for (const Shape& shape : combos) {
    for (int t = 0; t < instances_per_combo; ++t) {
      const std::uint64_t s =
          instance_seed(seed, "theorem2_eq", t * 100 + static_cast<int>(shape.d * 10 + shape.n));
      const Povm m = random_povm(shape.d, shape.n, s);
      double residual;
      try {
        const ConversionResult r = verify_theorem2(m);
        const double induced = induced_coherence(m, udi_budget, s);
        residual = std::max({std::abs(induced - r.input_cm),
                             r.output_em.upper - r.output_em.lower});
      } catch (const TheoremViolation&) {
        residual = 1.0;
      }
      sweep.record(residual, s);
    }
  }
  return std::move(sweep).take();
}

PropertyResult theorem2_sandwich(std::uint64_t seed, int instances_per_combo) {
  Sweep sweep("theorem2.sandwich_n_lt_d", tol::property);
  static constexpr Shape combos[] = {{3, 2}, {4, 2}, {4, 3}};
  for (const Shape& shape : combos) {
    for (int t = 0; t < instances_per_combo; ++t) {
      const std::uint64_t s =
          instance_seed(seed, "theorem2_sw", t * 100 + static_cast<int>(shape.d * 10 + shape.n));
      const Povm m = random_povm(shape.d, shape.n, s);
      double residual;
      try {
        const ConversionResult r = verify_theorem2(m);
        residual = std::max(r.bound_lower - r.output_em.lower,
                            r.output_em.upper - r.input_cm);
      } catch (const TheoremViolation&) {
        residual = 1.0;
      }
      sweep.record(residual, s);
    }
  }
  return std::move(sweep).take();
}

PropertyResult theorem3_axioms(std::uint64_t seed, int instances, int budget) {
  Sweep sweep("theorem3.induced_monotone", 0.0);
  for (int t = 0; t < instances; ++t) {
    const std::uint64_t s = instance_seed(seed, "theorem3", t);
    const Shape shape{2 + static_cast<std::size_t>(t % 2),
                      2 + static_cast<std::size_t>(t % 2)};
    SplitRng rng(s);
    const Povm m = (t % 3 == 2)
                       ? random_incoherent_povm(shape.d, shape.n, rng)
                       : random_povm(shape.d, shape.n, s);
    sweep.record(verify_theorem3(m, budget, s) ? 0.0 : 1.0, s);
  }
  return std::move(sweep).take();
}

PropertyResult core_scaling_identity(std::uint64_t seed, int instances) {
  Sweep sweep("core.relent_scaling", tol::property);
  for (int t = 0; t < instances; ++t) {
    const std::uint64_t s = instance_seed(seed, "core_scaling", t);
    SplitRng rng(s);
    const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
    const Operator p = random_psd(d, rng);
    const Operator q = random_psd(d, rng);
    const double alpha = 0.25 + 4.0 * rng.uniform();
    const double beta = 0.25 + 4.0 * rng.uniform();
    const double lhs = relative_entropy(scaled(p, alpha), scaled(q, beta));
    const double rhs = alpha * relative_entropy(p, q) +
                       alpha * std::log2(alpha / beta) * p.trace();
    sweep.record(std::abs(lhs - rhs), s);
  }
  return std::move(sweep).take();
}

PropertyResult core_subadditivity(std::uint64_t seed, int instances) {
  Sweep sweep("core.relent_subadditivity", tol::property);
  for (int t = 0; t < instances; ++t) {
    const std::uint64_t s = instance_seed(seed, "core_subadd", t);
    SplitRng rng(s);
    const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
    const Operator p0 = random_psd(d, rng), p1 = random_psd(d, rng);
    const Operator q0 = random_psd(d, rng), q1 = random_psd(d, rng);
    const double residual = relative_entropy(add(p0, p1), add(q0, q1)) -
                            relative_entropy(p0, q0) - relative_entropy(p1, q1);
    sweep.record(residual, s);
  }
  return std::move(sweep).take();
}

PropertyResult core_unitary_invariance(std::uint64_t seed, int instances) {
  Sweep sweep("core.relent_unitary_invariance", tol::property);
  for (int t = 0; t < instances; ++t) {
    const std::uint64_t s = instance_seed(seed, "core_unitary", t);
    SplitRng rng(s);
    const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
    const Operator m = random_psd(d, rng);
    const Operator n = random_psd(d, rng);
    const CMat u = random_unitary(d, rng);
    auto conjugate = [&](const Operator& op) {
      CMat c = u * op.mat() * u.adjoint();
      c.hermitize();
      return Operator(std::move(c));
    };
    sweep.record(std::abs(relative_entropy(conjugate(m), conjugate(n)) -
                          relative_entropy(m, n)),
                 s);
  }
  return std::move(sweep).take();
}

PropertyResult core_dephasing_entropy(std::uint64_t seed, int instances) {
  Sweep sweep("core.dephasing_entropy_gain", 1e-9);
  for (int t = 0; t < instances; ++t) {
    const std::uint64_t s = instance_seed(seed, "core_dephase", t);
    SplitRng rng(s);
    const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
    const Operator m = random_psd(d, rng);
    const Operator dm = dephase(m);
    double residual = von_neumann_entropy(m) - von_neumann_entropy(dm);
    residual = std::max(residual, dephase(dm).mat().max_abs_diff(dm.mat()));
    residual = std::max(residual, std::abs(dm.trace() - m.trace()));
    sweep.record(residual, s);
  }
  return std::move(sweep).take();
}

PropertyResult er_bounds(std::uint64_t seed, int pairs) {
  Sweep sweep("er.reduction_and_lower_bound", tol::property);
  for (int t = 0; t < pairs; ++t) {
    const std::uint64_t s = instance_seed(seed, "er_bounds", t);
    SplitRng rng(s);
    const DimsSplit split{2, (t % 2 == 0) ? std::size_t{2} : std::size_t{3}};
    const std::size_t dim = split.a * split.b;

    const Operator x = random_psd(dim, rng).with_split(split);
    // Separable-by-construction Y: convex combination of PSD products.
    const int terms = 1 + rng.uniform_int(0, 2);
    CMat y_mat(dim, dim);
    for (int k = 0; k < terms; ++k) {
      const Operator a = random_psd(split.a, rng);
      const Operator b = random_psd(split.b, rng);
      y_mat += scaled(tensor(a, b), 0.25 + rng.uniform()).mat();
    }
    y_mat.hermitize();
    const Operator y = Operator(std::move(y_mat), split);

    const double s_x = von_neumann_entropy(x);
    const Operator xa = partial_trace(x, Subsystem::A);
    const Operator xb = partial_trace(x, Subsystem::B);
    const Operator ya = partial_trace(y, Subsystem::A);
    const Operator yb = partial_trace(y, Subsystem::B);
    const double d_xy = relative_entropy(x, y);

    // Reduction-map inequality, both marginals.
    double residual = von_neumann_entropy(xa) - s_x -
                      (d_xy - relative_entropy(xa, ya));
    residual = std::max(residual, von_neumann_entropy(xb) - s_x -
                                      (d_xy - relative_entropy(xb, yb)));

    // Conditional-entropy lower bound against the trace-matched candidate.
    const Operator y_matched = scaled(y, x.trace() / y.trace());
    const double lower = std::max(
        {von_neumann_entropy(xa) - s_x, von_neumann_entropy(xb) - s_x, 0.0});
    residual = std::max(residual, lower - relative_entropy(x, y_matched));

    sweep.record(residual, s);
  }
  return std::move(sweep).take();
}

PropertyResult bell_ppt() {
  Sweep sweep("er.bell_ppt", 1e-9);
  const SeparabilityCertificate cert =
      is_separable_effectwise(fixtures::bell_measurement());
  bool all_false = cert.verdict == SeparabilityVerdict::DecidedFalse;
  for (const auto v : cert.per_effect)
    all_false &= (v == SeparabilityVerdict::DecidedFalse);
  // Partial transpose of every Bell effect has eigenvalue -1/2.
  sweep.record(all_false ? std::abs(cert.min_pt_eigenvalue + 0.5) : 1.0, 0);
  return std::move(sweep).take();
}

std::vector<PropertyResult> run_all(const Config& config) {
  const std::uint64_t seed = config.seed;
  const int t = std::max(config.trials, 1);
  std::vector<PropertyResult> results;
  for (int which = 1; which <= 6; ++which)
    results.push_back(dm_property(which, seed, std::max(50, t / 2)));
  results.push_back(udi_preserves_incoherent(seed, t, 5));
  results.push_back(cm_oracle(seed, std::max(5, t / 5), 5 * t));
  results.push_back(cm_closed_form(seed, t));
  results.push_back(incoherent_effects_separable(seed, std::max(50, t / 2)));
  results.push_back(theorem1_sampled(seed, std::max(5, t / 5), 10));
  results.push_back(theorem2_equality(seed, std::max(2, t / 6), 4));
  results.push_back(theorem2_sandwich(seed, std::max(2, t / 3)));
  results.push_back(theorem3_axioms(seed, std::max(3, t / 10), 4));
  results.push_back(core_scaling_identity(seed, t));
  results.push_back(core_subadditivity(seed, t));
  results.push_back(core_unitary_invariance(seed, t));
  results.push_back(core_dephasing_entropy(seed, t));
  results.push_back(er_bounds(seed, 2 * t));
  results.push_back(bell_ppt());
  return results;
}

}  // namespace povmrt::suite
