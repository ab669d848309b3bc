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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "povmrt/conversion.hpp"
#include "povmrt/fixtures.hpp"
#include "test_helpers.hpp"

using namespace povmrt;
using namespace povmrt::testing;

TEST_CASE("canonical ancilla measurement") {
  const Povm a22 = ancilla_incoherent_povm(2, 2);
  CHECK(a22.effect(0).mat().max_abs_diff(
            Operator::basis_projector(2, 0).mat()) == 0.0);
  CHECK(a22.effect(1).mat().max_abs_diff(
            Operator::basis_projector(2, 1).mat()) == 0.0);

  const Povm a24 = ancilla_incoherent_povm(2, 4);
  REQUIRE(a24.outcomes() == 4);
  CHECK(a24.effect(2).mat().max_abs() == 0.0);
  CHECK(a24.effect(3).mat().max_abs() == 0.0);

  const Povm a32 = ancilla_incoherent_povm(3, 2);
  REQUIRE(a32.outcomes() == 2);
  CHECK(a32.effect(0).mat().max_abs_diff(
            Operator::basis_projector(3, 0).mat()) == 0.0);
  CHECK(a32.effect(1).mat().max_abs_diff(
            diag_op({0.0, 1.0, 1.0}).mat()) == 0.0);

  // n = 1 degenerates to the trivial measurement.
  CHECK(ancilla_incoherent_povm(3, 1).effect(0).mat().max_abs_diff(
            CMat::identity(3)) == 0.0);
}

TEST_CASE("conversion of the worked example yields the Bell measurement") {
  const Povm converted =
      convert(fixtures::plus_minus_measurement(), cnot_adjoint_channel(2));
  REQUIRE(converted.outcomes() == 4);
  REQUIRE(converted.split().has_value());

  auto bell_state = [](std::size_t a, std::size_t b, double sign) {
    CMat m(4, 4);
    m(a, a) = m(b, b) = cplx{0.5, 0.0};
    m(a, b) = m(b, a) = cplx{0.5 * sign, 0.0};
    return m;
  };
  CHECK(converted.effect(0).mat().max_abs_diff(bell_state(0, 3, 1.0)) < 1e-14);
  CHECK(converted.effect(1).mat().max_abs_diff(bell_state(1, 2, 1.0)) < 1e-14);
  CHECK(converted.effect(2).mat().max_abs_diff(bell_state(0, 3, -1.0)) < 1e-14);
  CHECK(converted.effect(3).mat().max_abs_diff(bell_state(1, 2, -1.0)) < 1e-14);
}

TEST_CASE("conversion of incoherent inputs stays separable") {
  SplitRng rng(83);
  const Povm f = random_incoherent_povm(2, 2, rng);
  const Povm converted = convert(f, random_udi_channel(4, 17));
  CHECK(is_separable_effectwise(converted).verdict ==
        SeparabilityVerdict::DecidedTrue);
  const Bracket em = entanglement_monotone_bracket(converted);
  CHECK(em.lower == 0.0);
  CHECK(em.upper == 0.0);
}

TEST_CASE("single-outcome measurements convert into resource-free povms") {
  const Povm converted = convert(Povm::trivial(2), cnot_adjoint_channel(2));
  REQUIRE(converted.outcomes() == 1);
  const Bracket em = entanglement_monotone_bracket(converted);
  CHECK(em.lower == 0.0);
  CHECK(em.upper == 0.0);
}

TEST_CASE("convert rejects non-free channels") {
  const Povm pm = fixtures::plus_minus_measurement();

  // Unital but not detection incoherent: Hadamard (x) I.
  const CMat hxi = CMat::kron(fixtures::hadamard_unitary().u, CMat::identity(2));
  CHECK_THROWS_AS(convert(pm, UnitaryChannel(hxi).channel()),
                  FreeOperationError);

  // Wrong dimension.
  CHECK_THROWS_AS(convert(pm, KrausChannel::identity(2)),
                  std::invalid_argument);

  try {
    convert(pm, UnitaryChannel(hxi).channel());
    CHECK(false);
  } catch (const FreeOperationError& e) {
    CHECK(e.unital_residual <= 1e-12);
    CHECK(e.detection_incoherence_residual > 0.1);
  }
}

TEST_CASE("converted cnot effects carry the shifted correlated sparsity") {
  const std::size_t d = 3, n = 3;
  const Povm m = random_povm(d, n, 301);
  const Povm converted = convert(m, cnot_adjoint_channel(d));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Operator& e = converted.effect(x * n + y);
      if (y >= d) {
        CHECK(e.mat().max_abs() == 0.0);
        continue;
      }
      for (std::size_t ia = 0; ia < d; ++ia)
        for (std::size_t ib = 0; ib < d; ++ib)
          for (std::size_t ja = 0; ja < d; ++ja)
            for (std::size_t jb = 0; jb < d; ++jb) {
              const bool allowed = ((ib + d - ia) % d == y) &&
                                   ((jb + d - ja) % d == y);
              if (!allowed)
                CHECK(std::abs(e(ia * d + ib, ja * d + jb)) < 1e-14);
            }
    }
}

TEST_CASE("theorem 1 on sampled channels") {
  CHECK(verify_theorem1(fixtures::plus_minus_measurement(), 20, 5));
  SplitRng rng(89);
  CHECK(verify_theorem1(random_incoherent_povm(2, 2, rng), 10, 6));
  CHECK(verify_theorem1(random_povm(2, 2, 23), 20, 7));
}

TEST_CASE("theorem 2 equality in the n >= d regime") {
  const ConversionResult pm = verify_theorem2(fixtures::plus_minus_measurement());
  CHECK(pm.input_cm == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(pm.output_em.exact);
  CHECK(pm.output_em.lower == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(pm.output_em.upper == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(pm.regime == Regime::n_ge_d);

  // Informationally-complete scale.
  const ConversionResult ic = verify_theorem2(random_povm(3, 9, 31));
  CHECK(ic.output_em.exact);
  CHECK(std::abs(ic.output_em.upper - ic.input_cm) < 1e-7);
}

TEST_CASE("theorem 2 sandwich in the n < d regime") {
  const ConversionResult fr =
      verify_theorem2(fixtures::fourier_truncated_povm(3));
  CHECK(fr.regime == Regime::n_lt_d);
  CHECK(fr.output_em.lower >= fr.bound_lower - 1e-8);
  CHECK(fr.output_em.upper <= fr.input_cm + 1e-8);
  CHECK(fr.bound_lower == doctest::Approx(fr.input_cm / 3.0));

  for (const auto& [d, n] :
       std::initializer_list<std::pair<std::size_t, std::size_t>>{{3, 2},
                                                                  {4, 3}}) {
    const ConversionResult r = verify_theorem2(random_povm(d, n, 37));
    CHECK(r.output_em.lower >= r.bound_lower - 1e-8);
    CHECK(r.output_em.upper <= r.input_cm + 1e-8);
  }
}

TEST_CASE("induced coherence") {
  CHECK(induced_coherence(fixtures::plus_minus_measurement(), 4, 3) ==
        doctest::Approx(1.0).epsilon(1e-7));

  SplitRng rng(97);
  CHECK(induced_coherence(random_incoherent_povm(2, 2, rng), 4, 5) <= 1e-9);

  const Povm m = random_povm(2, 2, 41);
  CHECK(std::abs(induced_coherence(m, 4, 7) - coherence_monotone(m)) < 1e-7);

  CHECK_THROWS_AS(induced_coherence(Povm::trivial(2), 4, 0),
                  std::invalid_argument);
}

TEST_CASE("theorem 3 axioms at sampling level") {
  CHECK(verify_theorem3(fixtures::plus_minus_measurement(), 4, 11));
  SplitRng rng(101);
  CHECK(verify_theorem3(random_incoherent_povm(2, 3, rng), 4, 13));
  CHECK(verify_theorem3(random_povm(3, 3, 43), 4, 17));
  CHECK(verify_theorem3(fixtures::fourier_truncated_povm(3), 4, 19));
}
