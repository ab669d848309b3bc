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

#ifndef POVMRT_JSON_IO_HPP
#define POVMRT_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "povmrt/conversion.hpp"

namespace povmrt {

using json = nlohmann::ordered_json;

/// Structurally invalid input (missing keys, wrong shapes). Distinct from
/// invariant violations, which surface as std::invalid_argument.
class SchemaError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complex matrices: {"dim": d, "dims_split": [dA,dB]|null, "entries":
// [[[re,im],...],...]} row-major. Rectangular Kraus blocks use
// {"rows": r, "cols": c, "entries": ...}; the reader accepts both.
json matrix_to_json(const CMat& m, const std::optional<DimsSplit>& split);
CMat matrix_from_json(const json& j, std::optional<DimsSplit>* split_out);

json operator_to_json(const Operator& op);
Operator operator_from_json(const json& j);

/// POVM prior to invariant checking; used by the validate path.
struct RawPovm {
  std::size_t dim = 0;
  std::size_t outcomes = 0;
  std::optional<DimsSplit> split;
  std::vector<CMat> effects;
};

RawPovm raw_povm_from_json(const json& j);
json povm_to_json(const Povm& p);
Povm povm_from_json(const json& j);

json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const json& j);

json bracket_to_json(const Bracket& b);
json conversion_to_json(const ConversionResult& r);
json tolerances_json();

/// Computed monotone values, bounds and certificate metadata emitted by the
/// CLI. Absent c_m / e_m serialize as null per the report schema.
struct ResourceReport {
  std::string command;
  std::uint64_t seed = 0;
  int trials = 0;
  std::optional<double> c_m;
  std::optional<std::vector<double>> per_effect_coherence;
  std::optional<Bracket> e_m;
  std::optional<std::string> separability;
  std::optional<ConversionResult> conversion;
  std::optional<int> theorem;
  std::optional<bool> verified;
};

json report_to_json(const ResourceReport& r);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace povmrt

#endif  // POVMRT_JSON_IO_HPP
