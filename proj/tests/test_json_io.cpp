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

#include <cstdio>
#include <fstream>

#include "povmrt/fixtures.hpp"
#include "povmrt/json_io.hpp"

using namespace povmrt;

TEST_CASE("operator round trip") {
  SplitRng rng(7);
  const Operator op = random_psd(6, rng).with_split(DimsSplit{2, 3});
  const Operator back = operator_from_json(operator_to_json(op));
  CHECK(back.mat().max_abs_diff(op.mat()) == 0.0);
  REQUIRE(back.split().has_value());
  CHECK(back.split()->a == 2);
  CHECK(back.split()->b == 3);

  const Operator plain = random_psd(3, rng);
  CHECK_FALSE(operator_from_json(operator_to_json(plain)).split().has_value());
}

TEST_CASE("povm round trip is byte stable") {
  const Povm bell = fixtures::bell_measurement();
  const json j = povm_to_json(bell);
  const Povm back = povm_from_json(j);
  CHECK(back.outcomes() == 4);
  for (std::size_t x = 0; x < 4; ++x)
    CHECK(back.effect(x).mat().max_abs_diff(bell.effect(x).mat()) == 0.0);
  // Serialize -> parse -> serialize must reproduce the same bytes.
  CHECK(povm_to_json(back).dump(2) == j.dump(2));
}

TEST_CASE("channel round trip including rectangular kraus blocks") {
  const KrausChannel mc = measurement_channel(random_povm(2, 3, 5));
  REQUIRE(mc.out_dim() == 3);
  REQUIRE(mc.in_dim() == 2);
  const KrausChannel back = channel_from_json(channel_to_json(mc));
  REQUIRE(back.kraus().size() == mc.kraus().size());
  for (std::size_t k = 0; k < mc.kraus().size(); ++k)
    CHECK(back.kraus()[k].max_abs_diff(mc.kraus()[k]) == 0.0);

  const KrausChannel cnot = cnot_adjoint_channel(2);
  const KrausChannel cnot_back = channel_from_json(channel_to_json(cnot));
  CHECK(cnot_back.kraus()[0].max_abs_diff(cnot.kraus()[0]) == 0.0);
}

TEST_CASE("schema violations are reported as SchemaError") {
  json j = povm_to_json(fixtures::plus_minus_measurement());
  json no_effects = j;
  no_effects.erase("effects");
  CHECK_THROWS_AS(povm_from_json(no_effects), SchemaError);

  json short_effects = j;
  short_effects["outcomes"] = 3;
  CHECK_THROWS_AS(povm_from_json(short_effects), SchemaError);

  json bad_dim = j;
  bad_dim["effects"][0]["dim"] = 3;
  CHECK_THROWS_AS(povm_from_json(bad_dim), SchemaError);

  json ragged = j;
  ragged["effects"][0]["entries"][0] = json::array({json::array({1.0, 0.0})});
  CHECK_THROWS_AS(povm_from_json(ragged), SchemaError);

  // Invariant violations surface as invalid_argument, not SchemaError.
  json incomplete = j;
  incomplete["effects"][1]["entries"][0][0][0] = 0.25;
  CHECK_THROWS_AS(povm_from_json(incomplete), std::invalid_argument);
}

TEST_CASE("parse errors carry the byte location") {
  const char* path = "json_io_truncated.json";
  {
    std::ofstream out(path);
    out << "{\"dim\": 2, \"outcomes\": ";
  }
  CHECK_THROWS_AS(load_json_file(path), json::parse_error);
  std::remove(path);
  CHECK_THROWS_AS(load_json_file("does_not_exist.json"), SchemaError);
}

TEST_CASE("report schema") {
  ResourceReport r;
  r.command = "coherence";
  r.seed = 42;
  r.trials = 10;
  r.c_m = 1.0;
  const json j = report_to_json(r);
  CHECK(j["c_m"] == 1.0);
  CHECK(j["e_m"].is_null());
  CHECK(j["log_base"] == 2);
  CHECK(j["tolerances"]["bracket"] == 1e-7);
  CHECK(j.dump() == report_to_json(r).dump());

  ResourceReport r2;
  r2.command = "entanglement";
  r2.e_m = make_bracket(0.5, 0.5);
  const json j2 = report_to_json(r2);
  CHECK(j2["c_m"].is_null());
  CHECK(j2["e_m"]["exact"] == true);
}
