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

#include <cmath>
#include <limits>

#include "povmrt/channels.hpp"
#include "povmrt/measurement.hpp"
#include "povmrt/operator_core.hpp"
#include "test_helpers.hpp"

using namespace povmrt;
using namespace povmrt::testing;

namespace {
const double kInf = std::numeric_limits<double>::infinity();

Operator plus_projector() { return real_op(2, {0.5, 0.5, 0.5, 0.5}); }

Operator phi_plus() {
  // (|00> + |11>)/sqrt(2), as a trace-1 projector on 2 (x) 2.
  CMat m(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = cplx{0.5, 0.0};
  return Operator(std::move(m), DimsSplit{2, 2});
}
}  // namespace

TEST_CASE("operator construction enforces invariants") {
  CHECK_THROWS_AS(Operator(CMat(2, 3)), std::invalid_argument);

  CMat skew(2, 2);
  skew(0, 1) = cplx{1.0, 0.0};  // not Hermitian
  CHECK_THROWS_AS(Operator(std::move(skew)), std::invalid_argument);

  CHECK_THROWS_AS(Operator(CMat::identity(4), DimsSplit{3, 2}),
                  std::invalid_argument);
  CHECK_NOTHROW(Operator(CMat::identity(6), DimsSplit{2, 3}));
}

TEST_CASE("spectrum reconstructs, is unitary and descending") {
  SplitRng rng(7);
  for (std::size_t d = 1; d <= 8; ++d) {
    const Operator m = random_psd(d, rng);
    const Spectrum s = spectrum(m);
    CMat recon(d, d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          recon(i, j) += s.eigenvalues[k] * s.eigenvectors(i, k) *
                         std::conj(s.eigenvectors(j, k));
    CHECK(recon.max_abs_diff(m.mat()) < 1e-9);
    CHECK((s.eigenvectors.adjoint() * s.eigenvectors)
              .max_abs_diff(CMat::identity(d)) < 1e-9);
    for (std::size_t k = 0; k + 1 < d; ++k)
      CHECK(s.eigenvalues[k] >= s.eigenvalues[k + 1]);
  }
}

TEST_CASE("positive semidefinite validation") {
  CHECK(is_positive_semidefinite(Operator::identity(2), 1e-10));
  CHECK_FALSE(is_positive_semidefinite(diag_op({1.0, -0.5}), 1e-10));
  CHECK(is_positive_semidefinite(plus_projector(), 1e-10));
}

TEST_CASE("von Neumann entropy in bits") {
  CHECK(von_neumann_entropy(diag_op({0.5, 0.5})) == doctest::Approx(1.0));
  CHECK(von_neumann_entropy(Operator::basis_projector(2, 0)) ==
        doctest::Approx(0.0));
  // Unnormalized identity: -sum 1 log 1 = 0.
  CHECK(von_neumann_entropy(diag_op({1.0, 1.0})) == doctest::Approx(0.0));
  CHECK(von_neumann_entropy(Operator::zero(3)) == doctest::Approx(0.0));
  CHECK_THROWS_AS(von_neumann_entropy(diag_op({1.0, -0.5})), std::domain_error);
}

TEST_CASE("relative entropy closed forms") {
  const Operator plus = plus_projector();
  CHECK(relative_entropy(plus, plus) == doctest::Approx(0.0).epsilon(1e-10));

  // D(|0><0| || I/2) = -S(M) - tr M log2 N = 0 + 1.
  CHECK(relative_entropy(Operator::basis_projector(2, 0), diag_op({0.5, 0.5})) ==
        doctest::Approx(1.0));

  // Disjoint supports.
  CHECK(relative_entropy(Operator::basis_projector(2, 0),
                         Operator::basis_projector(2, 1)) == kInf);

  CHECK_THROWS_AS(
      relative_entropy(Operator::identity(2), Operator::identity(3)),
      std::invalid_argument);
  CHECK_THROWS_AS(relative_entropy(diag_op({1.0, -0.5}), Operator::identity(2)),
                  std::domain_error);
}

TEST_CASE("relative entropy of the zero operator vanishes") {
  const Operator zero2 = Operator::zero(2);
  CHECK(relative_entropy(zero2, Operator::identity(2)) == 0.0);
  CHECK(relative_entropy(zero2, zero2) == 0.0);
  CHECK(relative_entropy(zero2, Operator::basis_projector(2, 1)) == 0.0);
}

TEST_CASE("dephasing zeroes off-diagonals and is idempotent") {
  CHECK(dephase(plus_projector()).mat().max_abs_diff(
            diag_op({0.5, 0.5}).mat()) < 1e-15);
  const Operator d = diag_op({0.3, 0.7});
  CHECK(dephase(d).mat().max_abs_diff(d.mat()) == 0.0);

  const Operator phi = phi_plus();
  CMat expected(4, 4);
  expected(0, 0) = expected(3, 3) = cplx{0.5, 0.0};
  CHECK(dephase(phi).mat().max_abs_diff(expected) < 1e-15);

  SplitRng rng(21);
  const Operator m = random_psd(4, rng);
  CHECK(dephase(dephase(m)).mat().max_abs_diff(dephase(m).mat()) == 0.0);
  CHECK(dephase(m).trace() == doctest::Approx(m.trace()));
}

TEST_CASE("tensor products") {
  CHECK(tensor(Operator::identity(2), Operator::identity(2))
            .mat()
            .max_abs_diff(CMat::identity(4)) == 0.0);

  const Operator e01 = tensor(Operator::basis_projector(2, 0),
                              Operator::basis_projector(2, 1));
  CHECK(e01.mat().max_abs_diff(Operator::basis_projector(4, 1).mat()) == 0.0);
  REQUIRE(e01.split().has_value());
  CHECK(e01.split()->a == 2);
  CHECK(e01.split()->b == 2);

  // |+0> projector: rank 1, trace 1.
  const Operator p = tensor(plus_projector(), Operator::basis_projector(2, 0));
  const Spectrum s = spectrum(p);
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(s.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-12));

  SplitRng rng(3);
  const Operator a = random_psd(2, rng), b = random_psd(3, rng);
  CHECK(tensor(a, b).trace() == doctest::Approx(a.trace() * b.trace()));
}

TEST_CASE("partial trace") {
  CHECK(partial_trace(phi_plus(), Subsystem::A)
            .mat()
            .max_abs_diff(diag_op({0.5, 0.5}).mat()) < 1e-15);
  CHECK(partial_trace(phi_plus(), Subsystem::B)
            .mat()
            .max_abs_diff(diag_op({0.5, 0.5}).mat()) < 1e-15);

  SplitRng rng(5);
  const Operator a = random_psd(3, rng), b = random_psd(2, rng);
  const Operator ab = tensor(a, b);
  CHECK(partial_trace(ab, Subsystem::A)
            .mat()
            .max_abs_diff(scaled(a, b.trace()).mat()) < 1e-12);
  CHECK(partial_trace(ab, Subsystem::B)
            .mat()
            .max_abs_diff(scaled(b, a.trace()).mat()) < 1e-12);
  CHECK(partial_trace(ab, Subsystem::A).trace() == doctest::Approx(ab.trace()));

  CHECK_THROWS_AS(partial_trace(Operator::identity(4), Subsystem::A),
                  std::invalid_argument);
}

TEST_CASE("cnot compression reproduces dephasing through the partial trace") {
  const CMat u = cnot_unitary(2).u;
  const Operator joint =
      tensor(plus_projector(), Operator::basis_projector(2, 0));
  CMat conj = u * joint.mat() * u.adjoint();
  conj.hermitize();
  const Operator rotated = Operator(std::move(conj), DimsSplit{2, 2});
  CHECK(partial_trace(rotated, Subsystem::A)
            .mat()
            .max_abs_diff(dephase(plus_projector()).mat()) < 1e-12);
}

TEST_CASE("direct sum relative entropy") {
  const Operator eye = Operator::identity(2);
  std::vector<Operator> ms{eye}, ns{eye};
  CHECK(direct_sum_relative_entropy(ms, ns) == doctest::Approx(0.0));

  // Two copies of the one-bit example.
  std::vector<Operator> basis{Operator::basis_projector(2, 0),
                              Operator::basis_projector(2, 1)};
  std::vector<Operator> mixed{diag_op({0.5, 0.5}), diag_op({0.5, 0.5})};
  CHECK(direct_sum_relative_entropy(basis, mixed) == doctest::Approx(2.0));

  SplitRng rng(12);
  const Operator m = random_psd(3, rng);
  std::vector<Operator> zm{Operator::zero(3), m};
  CHECK(direct_sum_relative_entropy(zm, zm) == doctest::Approx(0.0));

  std::vector<Operator> both{eye, eye};
  CHECK_THROWS_AS(direct_sum_relative_entropy(ms, both),
                  std::invalid_argument);
  std::vector<Operator> bad{Operator::basis_projector(2, 0)};
  std::vector<Operator> other{Operator::basis_projector(2, 1)};
  CHECK(direct_sum_relative_entropy(bad, other) == kInf);
}

TEST_CASE("direct sum equals the explicit block-diagonal embedding") {
  SplitRng rng(13);
  for (int t = 0; t < 5; ++t) {
    std::vector<Operator> ms, ns;
    std::size_t total = 0;
    for (int x = 0; x < 3; ++x) {
      const std::size_t d = 2 + static_cast<std::size_t>((t + x) % 2);
      ms.push_back(random_psd(d, rng));
      ns.push_back(random_psd(d, rng));
      total += d;
    }
    CMat big_m(total, total), big_n(total, total);
    std::size_t off = 0;
    for (int x = 0; x < 3; ++x) {
      const std::size_t d = ms[static_cast<std::size_t>(x)].dim();
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          big_m(off + i, off + j) = ms[static_cast<std::size_t>(x)](i, j);
          big_n(off + i, off + j) = ns[static_cast<std::size_t>(x)](i, j);
        }
      off += d;
    }
    const double block = relative_entropy(Operator(std::move(big_m)),
                                          Operator(std::move(big_n)));
    CHECK(std::abs(block - direct_sum_relative_entropy(ms, ns)) < 1e-9);
  }
}

TEST_CASE("scaling identity for the relative entropy") {
  SplitRng rng(17);
  for (int t = 0; t < 10; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
    const Operator p = random_psd(d, rng), q = random_psd(d, rng);
    const double alpha = 0.3 + 2.0 * rng.uniform();
    const double beta = 0.3 + 2.0 * rng.uniform();
    const double lhs = relative_entropy(scaled(p, alpha), scaled(q, beta));
    const double rhs = alpha * relative_entropy(p, q) +
                       alpha * std::log2(alpha / beta) * p.trace();
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
}

TEST_CASE("subadditivity of the relative entropy") {
  SplitRng rng(19);
  for (int t = 0; t < 10; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
    const Operator p0 = random_psd(d, rng), p1 = random_psd(d, rng);
    const Operator q0 = random_psd(d, rng), q1 = random_psd(d, rng);
    CHECK(relative_entropy(add(p0, p1), add(q0, q1)) <=
          relative_entropy(p0, q0) + relative_entropy(p1, q1) + 1e-8);
  }
}

TEST_CASE("unitary invariance of the relative entropy") {
  SplitRng rng(23);
  for (int t = 0; t < 10; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
    const Operator m = random_psd(d, rng), n = random_psd(d, rng);
    const CMat u = random_unitary(d, rng);
    CMat mu = u * m.mat() * u.adjoint();
    CMat nu = u * n.mat() * u.adjoint();
    mu.hermitize();
    nu.hermitize();
    CHECK(std::abs(relative_entropy(Operator(std::move(mu)),
                                    Operator(std::move(nu))) -
                   relative_entropy(m, n)) < 1e-8);
  }
}

TEST_CASE("dephasing never lowers the entropy") {
  SplitRng rng(29);
  for (int t = 0; t < 10; ++t) {
    const Operator m = random_psd(2 + static_cast<std::size_t>(t % 3), rng);
    CHECK(von_neumann_entropy(dephase(m)) >= von_neumann_entropy(m) - 1e-9);
  }
}

TEST_CASE("reduction-map inequality on separable operators") {
  SplitRng rng(31);
  for (int t = 0; t < 10; ++t) {
    const DimsSplit split{2, (t % 2 == 0) ? std::size_t{2} : std::size_t{3}};
    const Operator x = random_psd(split.a * split.b, rng).with_split(split);
    const Operator y =
        tensor(random_psd(split.a, rng), random_psd(split.b, rng));
    const double s_x = von_neumann_entropy(x);
    const Operator xa = partial_trace(x, Subsystem::A);
    const Operator ya = partial_trace(y, Subsystem::A);
    CHECK(von_neumann_entropy(xa) - s_x <=
          relative_entropy(x, y) - relative_entropy(xa, ya) + 1e-8);
  }
}
