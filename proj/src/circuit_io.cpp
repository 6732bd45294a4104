// Copyright 2026 The Kronq Authors
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

#include "kronq/circuit_io.hpp"

#include <json.hpp>

#include "kronq/errors.hpp"

namespace kronq {

using nlohmann::json;

namespace {

constexpr std::string_view kOpNames[] = {"eq", "ne", "lt", "gt", "odd", "even"};
constexpr std::string_view kPermNames[] = {"shuffle", "bit_shift", "subtract_two_if_odd",
                                           "swap_registers", "digit_reversal"};

json range_json(RegRange r) { return json::array({r.first, r.count}); }

json controls_json(const std::vector<Control>& controls) {
  json out = json::array();
  for (const Control& c : controls) {
    out.push_back({{"registers", range_json(c.registers)}, {"value", c.value}});
  }
  return out;
}

json matrix_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const Complex& z : m.entries()) entries.push_back(format_complex(z));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json gate_json(const Gate& gate) {
  json registers = json::object();
  json payload = json::object();
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SingleUnitary>) {
          registers["target"] = range_json(g.target);
          payload["matrix"] = matrix_json(g.matrix);
        } else if constexpr (std::is_same_v<T, Multiplexed>) {
          registers["control"] = range_json(g.control);
          registers["target"] = range_json(g.target);
          registers["controls"] = controls_json(g.controls);
          json members = json::array();
          for (const auto& m : g.tuple.members()) members.push_back(matrix_json(m));
          payload["tuple"] = std::move(members);
        } else if constexpr (std::is_same_v<T, ValueControlled>) {
          registers["controls"] = controls_json(g.controls);
          registers["target"] = range_json(g.target);
          payload["matrix"] = matrix_json(g.matrix);
        } else if constexpr (std::is_same_v<T, PhasePair>) {
          registers["first"] = range_json(g.first);
          registers["second"] = range_json(g.second);
          registers["controls"] = controls_json(g.controls);
          payload["turn_num"] = g.turn_num;
          payload["turn_den"] = g.turn_den;
        } else if constexpr (std::is_same_v<T, PredicatePhase>) {
          json clauses = json::array();
          for (const Clause& c : g.clauses) {
            clauses.push_back({{"registers", range_json(c.registers)},
                               {"op", kOpNames[static_cast<int>(c.op)]},
                               {"value", c.value}});
          }
          registers["clauses"] = std::move(clauses);
          payload["phase"] = format_complex(g.phase);
        } else {
          registers["block"] = range_json(g.block);
          registers["controls"] = controls_json(g.controls);
          payload["permutation"] = kPermNames[static_cast<int>(g.kind)];
          payload["params"] = g.params;
        }
      },
      gate);
  return {{"kind", gate_kind_name(gate)}, {"registers", registers}, {"payload", payload}};
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

std::size_t count_of(const json& v) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw FormatError("expected a nonnegative integer, got " + v.dump());
  }
  return v.get<std::size_t>();
}

RegRange range_of(const json& v) {
  if (!v.is_array() || v.size() != 2) throw FormatError("register range must be [first, count]");
  return {count_of(v[0]), count_of(v[1])};
}

std::vector<Control> controls_of(const json& obj) {
  std::vector<Control> out;
  if (!obj.contains("controls")) return out;
  const json& arr = obj.at("controls");
  if (!arr.is_array()) throw FormatError("'controls' must be an array");
  for (const json& c : arr) out.push_back({range_of(field(c, "registers")), count_of(field(c, "value"))});
  return out;
}

ComplexMatrix matrix_of(const json& v) {
  const std::size_t rows = count_of(field(v, "rows"));
  const std::size_t cols = count_of(field(v, "cols"));
  const json& tokens = field(v, "entries");
  if (!tokens.is_array()) throw FormatError("matrix entries must be an array");
  std::vector<Complex> entries;
  entries.reserve(tokens.size());
  for (const json& t : tokens) {
    if (!t.is_string()) throw FormatError("matrix entries must be \"re,im\" strings");
    entries.push_back(parse_complex(t.get<std::string>()));
  }
  try {
    return ComplexMatrix(rows, cols, std::move(entries));
  } catch (const ShapeError& e) {
    throw FormatError(e.what());
  }
}

template <std::size_t N>
std::size_t lookup(const std::string_view (&names)[N], const json& v, const char* what) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    for (std::size_t i = 0; i < N; ++i) {
      if (names[i] == s) return i;
    }
  }
  throw FormatError(std::string("unknown ") + what + " " + v.dump());
}

Gate gate_of(const json& g) {
  const json& kind_field = field(g, "kind");
  if (!kind_field.is_string()) throw FormatError("gate kind must be a string");
  const std::string kind = kind_field.get<std::string>();
  const json& r = field(g, "registers");
  const json& p = field(g, "payload");
  if (kind == "single_unitary") {
    return SingleUnitary{range_of(field(r, "target")), matrix_of(field(p, "matrix"))};
  }
  if (kind == "multiplexed") {
    const json& members = field(p, "tuple");
    if (!members.is_array()) throw FormatError("'tuple' must be an array");
    std::vector<ComplexMatrix> tuple;
    for (const json& m : members) tuple.push_back(matrix_of(m));
    try {
      return Multiplexed{range_of(field(r, "control")), range_of(field(r, "target")),
                         MatrixTuple(std::move(tuple)), controls_of(r)};
    } catch (const ShapeError& e) {
      throw FormatError(e.what());
    }
  }
  if (kind == "value_controlled") {
    return ValueControlled{controls_of(r), range_of(field(r, "target")),
                           matrix_of(field(p, "matrix"))};
  }
  if (kind == "phase_pair") {
    const json& num = field(p, "turn_num");
    const json& den = field(p, "turn_den");
    if (!num.is_number_integer() || !den.is_number_integer()) {
      throw FormatError("phase pair turn must be integers");
    }
    return PhasePair{range_of(field(r, "first")), range_of(field(r, "second")),
                     num.get<long long>(), den.get<long long>(), controls_of(r)};
  }
  if (kind == "predicate_phase") {
    PredicatePhase out;
    const json& clauses = field(r, "clauses");
    if (!clauses.is_array()) throw FormatError("'clauses' must be an array");
    for (const json& c : clauses) {
      out.clauses.push_back({range_of(field(c, "registers")),
                             static_cast<PredicateOp>(lookup(kOpNames, field(c, "op"), "predicate")),
                             count_of(field(c, "value"))});
    }
    const json& phase = field(p, "phase");
    if (!phase.is_string()) throw FormatError("phase must be a \"re,im\" string");
    out.phase = parse_complex(phase.get<std::string>());
    return out;
  }
  if (kind == "index_permutation") {
    IndexPermutation out;
    out.kind = static_cast<PermutationKind>(lookup(kPermNames, field(p, "permutation"), "permutation"));
    out.block = range_of(field(r, "block"));
    const json& params = field(p, "params");
    if (!params.is_array()) throw FormatError("'params' must be an array");
    for (const json& v : params) out.params.push_back(count_of(v));
    out.controls = controls_of(r);
    return out;
  }
  throw FormatError("unknown gate kind '" + kind + "'");
}

}  // namespace

std::string serialize(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates()) gates.push_back(gate_json(g));
  json doc = {{"format_version", kCircuitFormatVersion},
              {"layout", c.layout().dims()},
              {"gates", std::move(gates)}};
  return doc.dump(1) + "\n";
}

Circuit deserialize(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("circuit document is not valid JSON: ") + e.what());
  }
  const json& version = field(doc, "format_version");
  if (!version.is_number_integer() || version.get<long long>() != kCircuitFormatVersion) {
    throw FormatError("unsupported format_version " + version.dump());
  }
  const json& layout_field = field(doc, "layout");
  if (!layout_field.is_array()) throw FormatError("'layout' must be an array");
  std::vector<std::size_t> dims;
  for (const json& d : layout_field) dims.push_back(count_of(d));
  Circuit out;
  try {
    out = Circuit(RegisterLayout(std::move(dims)));
  } catch (const ShapeError& e) {
    throw FormatError(e.what());
  }
  const json& gates = field(doc, "gates");
  if (!gates.is_array()) throw FormatError("'gates' must be an array");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    try {
      out.append(gate_of(gates[i]));
    } catch (const ShapeError& e) {
      throw FormatError("gate " + std::to_string(i) + ": " + e.what());
    } catch (const FormatError& e) {
      throw FormatError("gate " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace kronq
