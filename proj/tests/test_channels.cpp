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

#include "povmrt/channels.hpp"
#include "povmrt/fixtures.hpp"
#include "test_helpers.hpp"

using namespace povmrt;
using namespace povmrt::testing;

namespace {

KrausChannel amplitude_damping(double gamma) {
  CMat k0(2, 2), k1(2, 2);
  k0(0, 0) = cplx{1.0, 0.0};
  k0(1, 1) = cplx{std::sqrt(1.0 - gamma), 0.0};
  k1(0, 1) = cplx{std::sqrt(gamma), 0.0};
  return KrausChannel({k0, k1});
}

Operator phi_plus() {
  CMat m(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = cplx{0.5, 0.0};
  return Operator(std::move(m), DimsSplit{2, 2});
}

}  // namespace

TEST_CASE("kraus family must be trace preserving") {
  CMat half = scaled(CMat::identity(2), cplx{0.5, 0.0});
  CHECK_THROWS_AS(KrausChannel({half}), std::invalid_argument);
  CHECK_NOTHROW(KrausChannel::identity(3));
  CHECK_NOTHROW(amplitude_damping(0.5));
}

TEST_CASE("channel application") {
  SplitRng rng(31);
  const Operator rho = random_density(3, rng);
  CHECK(KrausChannel::identity(3).apply(rho).mat().max_abs_diff(rho.mat()) <
        1e-15);

  const Operator plus = projector({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)});
  CHECK(KrausChannel::dephasing(2).apply(plus).mat().max_abs_diff(
            diag_op({0.5, 0.5}).mat()) < 1e-15);

  // CNOT on |+0>.
  const KrausChannel cnot = cnot_unitary(2).channel();
  const Operator in = tensor(plus, Operator::basis_projector(2, 0));
  CHECK(cnot.apply(in).mat().max_abs_diff(phi_plus().mat()) < 1e-14);
}

TEST_CASE("adjoint action and duality") {
  SplitRng rng(37);
  const CMat u = random_unitary(3, rng);
  const KrausChannel uch = UnitaryChannel(u).channel();
  const Operator m = random_psd(3, rng);
  CMat expected = u.adjoint() * m.mat() * u;
  expected.hermitize();
  CHECK(uch.adjoint_apply(m).mat().max_abs_diff(expected) < 1e-12);

  // tr[M E(rho)] = tr[E^dag(M) rho] for random channels, including the
  // rectangular measurement channel.
  for (int t = 0; t < 5; ++t) {
    const KrausChannel ch = random_unital_channel(3, rng);
    const Operator rho = random_density(3, rng);
    const Operator effect = random_psd(3, rng);
    const double lhs = hs_inner(effect.mat(), ch.apply(rho).mat()).real();
    const double rhs = hs_inner(ch.adjoint_apply(effect).mat(), rho.mat()).real();
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
  const KrausChannel mc = measurement_channel(random_povm(2, 3, 5));
  const Operator rho2 = random_density(2, rng);
  const Operator m3 = random_psd(3, rng);
  CHECK(std::abs(hs_inner(m3.mat(), mc.apply(rho2).mat()).real() -
                 hs_inner(mc.adjoint_apply(m3).mat(), rho2.mat()).real()) <
        1e-10);

  // Dephasing is self-adjoint.
  const Operator any = random_psd(2, rng);
  CHECK(KrausChannel::dephasing(2).adjoint_apply(any).mat().max_abs_diff(
            dephase(any).mat()) < 1e-14);
}

TEST_CASE("pre processing transforms the effects through the adjoint") {
  const Povm comp = Povm::computational(2);
  const Povm same = pre_process(comp, KrausChannel::identity(2));
  CHECK(same.effect(0).mat().max_abs_diff(comp.effect(0).mat()) < 1e-15);

  SplitRng rng(41);
  const CMat v = random_unitary(2, rng);
  const Povm rotated = pre_process(comp, UnitaryChannel(v).channel());
  for (std::size_t x = 0; x < 2; ++x) {
    CMat expected = v.adjoint() * comp.effect(x).mat() * v;
    expected.hermitize();
    CHECK(rotated.effect(x).mat().max_abs_diff(expected) < 1e-12);
  }

  CHECK_THROWS_AS(pre_process(comp, KrausChannel::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("cnot adjoint converts the plus/minus pair into Bell projectors") {
  const Povm joint =
      tensor_povm(fixtures::plus_minus_measurement(), Povm::computational(2));
  const Povm bell = pre_process(joint, cnot_unitary(2).adjoint_channel());
  REQUIRE(bell.outcomes() == 4);

  auto bell_state = [](std::size_t a, std::size_t b, double sign) {
    CMat m(4, 4);
    m(a, a) = m(b, b) = cplx{0.5, 0.0};
    m(a, b) = m(b, a) = cplx{0.5 * sign, 0.0};
    return m;
  };
  // Outcome order (x, y): (+,0) (+,1) (-,0) (-,1).
  CHECK(bell.effect(0).mat().max_abs_diff(bell_state(0, 3, 1.0)) < 1e-14);
  CHECK(bell.effect(1).mat().max_abs_diff(bell_state(1, 2, 1.0)) < 1e-14);
  CHECK(bell.effect(2).mat().max_abs_diff(bell_state(0, 3, -1.0)) < 1e-14);
  CHECK(bell.effect(3).mat().max_abs_diff(bell_state(1, 2, -1.0)) < 1e-14);
}

TEST_CASE("unitality predicate") {
  SplitRng rng(43);
  CHECK(is_unital(UnitaryChannel(random_unitary(3, rng)).channel(), 1e-10));
  CHECK(is_unital(KrausChannel::dephasing(4), 1e-10));
  const KrausChannel ad = amplitude_damping(0.5);
  CHECK_FALSE(is_unital(ad, 1e-10));
  // sum K K^dag = diag(1.5, 0.5).
  CHECK(unitality_residual(ad) == doctest::Approx(0.5));
}

TEST_CASE("detection incoherence predicate") {
  CHECK(is_detection_incoherent(KrausChannel::dephasing(3), 1e-9));
  CHECK(is_detection_incoherent(cnot_unitary(2).adjoint_channel(), 1e-9));
  CHECK(is_detection_incoherent(cnot_unitary(3).adjoint_channel(), 1e-9));
  CHECK_FALSE(
      is_detection_incoherent(fixtures::hadamard_unitary().channel(), 1e-9));
}

TEST_CASE("named unitaries") {
  const CMat u2 = cnot_unitary(2).u;
  CMat expected(4, 4);
  expected(0, 0) = expected(1, 1) = expected(3, 2) = expected(2, 3) =
      cplx{1.0, 0.0};
  CHECK(u2.max_abs_diff(expected) == 0.0);

  CHECK(cnot_unitary(1).u.max_abs_diff(CMat::identity(1)) == 0.0);

  // d=3: |1,1> -> |1,2>.
  const CMat u3 = cnot_unitary(3).u;
  CHECK(u3(5, 4) == cplx{1.0, 0.0});

  CMat pauli_x(2, 2);
  pauli_x(0, 1) = pauli_x(1, 0) = cplx{1.0, 0.0};
  CHECK(shift_unitary(2, 1).u.max_abs_diff(pauli_x) == 0.0);
  CHECK(shift_unitary(5, 0).u.max_abs_diff(CMat::identity(5)) == 0.0);
  CHECK(shift_unitary(3, 2).u(2, 0) == cplx{1.0, 0.0});
  CHECK_THROWS_AS(shift_unitary(3, 3), std::invalid_argument);
}

TEST_CASE("udi sampler output is unital detection-incoherent and seeded") {
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 4);
    const KrausChannel ch = random_udi_channel(d, 500 + t);
    CHECK(is_unital(ch, 1e-9));
    CHECK(is_detection_incoherent(ch, 1e-9));
  }
  const KrausChannel a = random_udi_channel(4, 99);
  const KrausChannel b = random_udi_channel(4, 99);
  REQUIRE(a.kraus().size() == b.kraus().size());
  for (std::size_t k = 0; k < a.kraus().size(); ++k)
    CHECK(a.kraus()[k].max_abs_diff(b.kraus()[k]) == 0.0);
}

TEST_CASE("detection-incoherent channels preserve incoherent measurements") {
  SplitRng rng(47);
  for (int t = 0; t < 10; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
    const KrausChannel ch = random_udi_channel(d, 700 + t);
    const Povm f = random_incoherent_povm(d, 3, rng);
    CHECK(max_offdiagonal(pre_process(f, ch)) <= 1e-9);
  }
}

TEST_CASE("measurement channel is classical exactly for incoherent povms") {
  SplitRng rng(53);
  // Output of any measurement channel is diagonal and matches Born's rule.
  const Povm pm = fixtures::plus_minus_measurement();
  const KrausChannel mc = measurement_channel(pm);
  const Operator rho = random_density(2, rng);
  const Operator out = mc.apply(rho);
  const auto stats = apply_statistics(pm, rho);
  for (std::size_t x = 0; x < 2; ++x)
    CHECK(std::abs(out(x, x).real() - stats[x]) < 1e-12);
  CHECK(dephase(out).mat().max_abs_diff(out.mat()) < 1e-12);

  // Delta o M o Delta = M as linear maps iff the measurement is incoherent.
  auto classical_residual = [](const Povm& povm) {
    const KrausChannel ch = measurement_channel(povm);
    const std::size_t d = povm.dim();
    double residual = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        CMat unit(d, d);
        unit(i, j) = cplx{1.0, 0.0};
        CMat deph(d, d);
        if (i == j) deph(i, i) = cplx{1.0, 0.0};
        const CMat lhs = ch.apply_mat(deph);
        const CMat rhs = ch.apply_mat(unit);
        // Delta on the output register is the identity on diagonal outputs.
        residual = std::max(residual, lhs.max_abs_diff(rhs));
      }
    return residual;
  };
  CHECK(classical_residual(Povm::computational(2)) < 1e-12);
  CHECK(classical_residual(pm) > 0.4);
}
