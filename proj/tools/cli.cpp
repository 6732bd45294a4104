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

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kronq/circuit_io.hpp"
#include "kronq/errors.hpp"
#include "kronq/group_synth.hpp"
#include "kronq/reference.hpp"
#include "kronq/transform.hpp"

namespace kronq::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoError("cannot write '" + path + "'");
}

std::size_t parse_count(const std::string& token) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw FormatError("expected a nonnegative integer, got '" + token + "'");
  }
  return v;
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_count(item));
  return out;
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// A transform or group target, e.g. "haar 3", "dft 2 3 4", "group en 2".
struct Target {
  std::string kind;
  std::vector<std::size_t> args;
  std::string family;  // wavelet family
  GroupSpec group;

  std::string describe() const {
    if (kind == "group") return "group " + group.to_string();
    std::string s = kind;
    if (!family.empty()) s += " " + family;
    for (std::size_t a : args) s += " " + std::to_string(a);
    return s;
  }
};

Target parse_target(std::vector<std::string> tokens, std::size_t qubits_flag) {
  if (tokens.empty()) throw FormatError("missing transform spec");
  Target t;
  t.kind = tokens.front();
  tokens.erase(tokens.begin());
  if (t.kind == "group") {
    t.group = parse_group_spec(tokens);
    return t;
  }
  if (t.kind == "wavelet") {
    if (tokens.empty()) throw FormatError("wavelet needs a family (haar or d4)");
    t.family = tokens.front();
    tokens.erase(tokens.begin());
    if (t.family != "haar" && t.family != "d4") {
      throw FormatError("unknown wavelet family '" + t.family + "'");
    }
  }
  for (const auto& tok : tokens) t.args.push_back(parse_count(tok));
  if (t.args.empty() && qubits_flag > 0) t.args.push_back(qubits_flag);
  std::size_t expected = 1;
  if (t.kind == "shuffle") {
    expected = 2;
  } else if (t.kind == "dft") {
    expected = t.args.empty() ? 1 : t.args.size();
  } else if (t.kind != "haar" && t.kind != "walsh" && t.kind != "d4" && t.kind != "wavelet") {
    throw FormatError("unknown transform '" + t.kind + "'");
  }
  if (t.args.size() != expected) {
    throw FormatError("'" + t.kind + "' takes " + std::to_string(expected) + " parameter(s)");
  }
  if (t.kind == "dft" && t.args.size() == 1) {
    if (t.args[0] < 2) throw FormatError("dft size must be at least 2");
    t.args = prime_factors(t.args[0]);
  }
  return t;
}

std::size_t product(const std::vector<std::size_t>& v) {
  std::size_t p = 1;
  for (std::size_t x : v) p *= x;
  return p;
}

std::size_t wavelet_levels(const Target& t) {
  const std::size_t base = t.family == "haar" ? 1 : 2;
  if (t.args[0] < base) {
    throw FormatError("wavelet " + t.family + " needs at least " + std::to_string(base) +
                      " qubits");
  }
  return t.args[0] - base;
}

Circuit synthesize(const Target& t, const DftOptions& options, bool phase_correct) {
  if (t.kind == "haar") return synth_haar(t.args[0]);
  if (t.kind == "walsh") return synth_walsh(t.args[0]);
  if (t.kind == "dft") return synth_dft(t.args);
  if (t.kind == "d4") return synth_d4_scaling(t.args[0]);
  if (t.kind == "shuffle") return synth_shuffle(t.args[0], t.args[1]);
  if (t.kind == "wavelet") {
    return synth_wavelet(t.family == "haar" ? haar_family() : d4_family(), wavelet_levels(t));
  }
  GroupFtResult res = synth_group_ft(t.group, options);
  if (phase_correct) res = apply_phase_correction(res);
  return res.circuit;
}

ComplexMatrix reference(const Target& t) {
  if (t.kind == "haar") return haar_matrix(t.args[0]);
  if (t.kind == "walsh") return walsh_matrix(t.args[0]);
  if (t.kind == "dft") return dft_matrix(product(t.args));
  if (t.kind == "d4") return d4_matrix(t.args[0]);
  if (t.kind == "shuffle") return shuffle_matrix(t.args[0], t.args[1]);
  if (t.kind == "wavelet") {
    const std::size_t levels = wavelet_levels(t);
    if (t.family == "haar") return haar_matrix(t.args[0]);
    return wavelet_matrix(
        d4_matrix(4), [](std::size_t q) { return d4_matrix(std::size_t{1} << q); }, levels);
  }
  return standard_oracle(make_group(t.group));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kronecker-product circuit synthesis and verification", "kronq"};
  app.require_subcommand(1);

  std::vector<std::string> spec;
  std::string out_path;
  std::string inline_dft;
  std::size_t qubits_flag = 0;
  bool phase_correct = false;
  std::string circuit_path;
  double tol = kDefaultTolerance;
  bool up_to_phase = false;

  auto* synth = app.add_subcommand("synth", "synthesize a circuit and write it as JSON");
  synth->add_option("spec", spec, "transform spec, e.g. 'haar 3' or 'group quaternionic 2'")
      ->required();
  synth->add_option("--out", out_path, "output path (stdout if omitted)");
  synth->add_option("--qubits", qubits_flag, "qubit count for haar and walsh");
  synth->add_option("--inline-dft", inline_dft,
                    "comma-separated factors; expand DFT payloads of that size");
  synth->add_flag("--phase-correct", phase_correct,
                  "append the phase correction to up-to-phase group circuits");

  auto* verify_cmd = app.add_subcommand("verify", "check a circuit against a reference");
  verify_cmd->add_option("circuit", circuit_path, "circuit document")->required();
  verify_cmd->add_option("spec", spec, "reference spec")->required();
  verify_cmd->add_option("--tol", tol, "absolute tolerance")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--qubits", qubits_flag, "qubit count for haar and walsh");
  verify_cmd->add_flag("--up-to-phase", up_to_phase, "accept a diagonal phase difference");

  auto* matrix_cmd = app.add_subcommand("matrix", "write a reference matrix");
  matrix_cmd->add_option("spec", spec, "reference spec")->required();
  matrix_cmd->add_option("--out", out_path, "output path (stdout if omitted)");
  matrix_cmd->add_option("--qubits", qubits_flag, "qubit count for haar and walsh");

  auto* count_cmd = app.add_subcommand("gatecount", "print gate counts of a circuit");
  count_cmd->add_option("circuit", circuit_path, "circuit document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (synth->parsed()) {
      DftOptions options;
      if (!inline_dft.empty()) options.inline_factors = parse_list(inline_dft);
      const Target t = parse_target(spec, qubits_flag);
      write_output(out_path, serialize(synthesize(t, options, phase_correct)), out);
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const Circuit c = deserialize(read_file(circuit_path));
      const Target t = parse_target(spec, qubits_flag);
      const VerificationReport report =
          verify_circuit(c, reference(t), t.describe(), tol,
                         up_to_phase ? Equivalence::kUpToPhase : Equivalence::kExact);
      out << report.to_json();
      return report.passed ? kOk : kMismatch;
    }
    if (matrix_cmd->parsed()) {
      write_output(out_path, format_matrix(reference(parse_target(spec, qubits_flag))), out);
      return kOk;
    }
    if (count_cmd->parsed()) {
      out << gate_count_json(gate_count(deserialize(read_file(circuit_path)))) << "\n";
      return kOk;
    }
  } catch (const ConstraintError& e) {
    err << "constraint violated: " << e.what() << "\n";
    return kConstraintViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace kronq::cli
