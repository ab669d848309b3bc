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

#include "povmrt/json_io.hpp"

#include <fstream>

namespace povmrt {

namespace {

json entries_to_json(const CMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat entries_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw SchemaError("matrix entries must be a nonempty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw SchemaError("matrix rows must be nonempty arrays");
  CMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw SchemaError("ragged matrix entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& cell = j[i][c];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number())
        throw SchemaError("matrix entry must be [re, im]");
      m(i, c) = cplx{cell[0].get<double>(), cell[1].get<double>()};
    }
  }
  return m;
}

std::optional<DimsSplit> split_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() ||
      !j[1].is_number_unsigned())
    throw SchemaError("dims_split must be null or [dA, dB]");
  return DimsSplit{j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

json split_to_json(const std::optional<DimsSplit>& split) {
  if (!split) return nullptr;
  return json::array({split->a, split->b});
}

const json& require(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw SchemaError(std::string("missing key '") + key + "'");
  return *it;
}

}  // namespace

json matrix_to_json(const CMat& m, const std::optional<DimsSplit>& split) {
  json j;
  if (m.square()) {
    j["dim"] = m.rows();
    j["dims_split"] = split_to_json(split);
  } else {
    j["rows"] = m.rows();
    j["cols"] = m.cols();
  }
  j["entries"] = entries_to_json(m);
  return j;
}

CMat matrix_from_json(const json& j, std::optional<DimsSplit>* split_out) {
  if (!j.is_object()) throw SchemaError("matrix must be a JSON object");
  CMat m = entries_from_json(require(j, "entries"));
  if (j.contains("dim")) {
    const auto dim = require(j, "dim").get<std::size_t>();
    if (!m.square() || m.rows() != dim)
      throw SchemaError("matrix entries do not match declared dim");
  } else if (j.contains("rows")) {
    if (m.rows() != require(j, "rows").get<std::size_t>() ||
        m.cols() != require(j, "cols").get<std::size_t>())
      throw SchemaError("matrix entries do not match declared rows/cols");
  }
  if (split_out != nullptr)
    *split_out = j.contains("dims_split")
                     ? split_from_json(j["dims_split"])
                     : std::nullopt;
  return m;
}

json operator_to_json(const Operator& op) {
  return matrix_to_json(op.mat(), op.split());
}

Operator operator_from_json(const json& j) {
  std::optional<DimsSplit> split;
  CMat m = matrix_from_json(j, &split);
  return Operator(std::move(m), split);
}

RawPovm raw_povm_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("POVM must be a JSON object");
  RawPovm raw;
  raw.dim = require(j, "dim").get<std::size_t>();
  raw.outcomes = require(j, "outcomes").get<std::size_t>();
  raw.split = j.contains("dims_split") ? split_from_json(j["dims_split"])
                                       : std::nullopt;
  const json& effects = require(j, "effects");
  if (!effects.is_array() || effects.size() != raw.outcomes)
    throw SchemaError("effects must be an array of length 'outcomes'");
  for (const auto& e : effects) {
    CMat m = matrix_from_json(e, nullptr);
    if (!m.square() || m.rows() != raw.dim)
      throw SchemaError("effect dimension does not match POVM dim");
    raw.effects.push_back(std::move(m));
  }
  return raw;
}

json povm_to_json(const Povm& p) {
  json j;
  j["dim"] = p.dim();
  j["outcomes"] = p.outcomes();
  j["dims_split"] = split_to_json(p.split());
  json effects = json::array();
  for (const auto& e : p.effects()) {
    json m;
    m["dim"] = e.dim();
    m["dims_split"] = split_to_json(e.split());
    m["entries"] = entries_to_json(e.mat());
    effects.push_back(std::move(m));
  }
  j["effects"] = std::move(effects);
  return j;
}

Povm povm_from_json(const json& j) {
  RawPovm raw = raw_povm_from_json(j);
  std::vector<Operator> effects;
  effects.reserve(raw.effects.size());
  for (auto& m : raw.effects) effects.emplace_back(std::move(m));
  return Povm(std::move(effects), raw.split);
}

json channel_to_json(const KrausChannel& ch) {
  json j;
  j["in_dim"] = ch.in_dim();
  j["out_dim"] = ch.out_dim();
  json kraus = json::array();
  for (const auto& k : ch.kraus()) kraus.push_back(matrix_to_json(k, std::nullopt));
  j["kraus"] = std::move(kraus);
  return j;
}

KrausChannel channel_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("channel must be a JSON object");
  const auto in_dim = require(j, "in_dim").get<std::size_t>();
  const auto out_dim = require(j, "out_dim").get<std::size_t>();
  const json& kraus = require(j, "kraus");
  if (!kraus.is_array() || kraus.empty())
    throw SchemaError("kraus must be a nonempty array");
  std::vector<CMat> ks;
  for (const auto& k : kraus) {
    CMat m = matrix_from_json(k, nullptr);
    if (m.rows() != out_dim || m.cols() != in_dim)
      throw SchemaError("Kraus block shape does not match in_dim/out_dim");
    ks.push_back(std::move(m));
  }
  return KrausChannel(std::move(ks));
}

json bracket_to_json(const Bracket& b) {
  json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["exact"] = b.exact;
  return j;
}

json conversion_to_json(const ConversionResult& r) {
  json j;
  j["input_cm"] = r.input_cm;
  j["output_em"] = bracket_to_json(r.output_em);
  j["channel_id"] = r.channel_id;
  j["regime"] = r.regime == Regime::n_ge_d ? "n_ge_d" : "n_lt_d";
  j["bound_lower"] = r.bound_lower;
  j["bound_upper"] = r.bound_upper;
  return j;
}

json tolerances_json() {
  json j;
  j["herm"] = tol::herm;
  j["psd"] = tol::psd;
  j["eig_cutoff"] = tol::eig_cutoff;
  j["support"] = tol::support;
  j["completeness"] = tol::completeness;
  j["stochastic_col"] = tol::stochastic_col;
  j["bracket"] = tol::bracket;
  j["property"] = tol::property;
  return j;
}

json report_to_json(const ResourceReport& r) {
  json j;
  j["command"] = r.command;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["c_m"] = r.c_m ? json(*r.c_m) : json(nullptr);
  if (r.per_effect_coherence) j["per_effect_coherence"] = *r.per_effect_coherence;
  j["e_m"] = r.e_m ? bracket_to_json(*r.e_m) : json(nullptr);
  if (r.separability) j["separability"] = *r.separability;
  if (r.conversion) j["conversion"] = conversion_to_json(*r.conversion);
  if (r.theorem) j["theorem"] = *r.theorem;
  if (r.verified) j["verified"] = *r.verified;
  j["log_base"] = 2;
  j["tolerances"] = tolerances_json();
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file: " + path);
  return json::parse(in);  // json::parse_error propagates with byte location
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write file: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace povmrt
