// Copyright 2026 The qpc Authors
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
//
// Command-line front end. Commands:
//
//   qpc run <file> [--dense] [--json <path>]
//   qpc check-universality <file> [--json <path>]
//   qpc synthesize <file> [--target <gate-expr>] --max-len <int> --tol <real>
//                  [--node-budget <int>] [--json <path>]
//   qpc demo no-programming [--gates <list>] [--seed <int>] [--json <path>]
//
// Exit codes: 0 success, 1 input error, 2 numeric or capacity failure,
// 3 synthesis target not found. Reports are deterministic JSON; every
// number in them comes from a library call. QPC_MAX_DIM overrides the
// dense capacity cap.

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qpc/qpc.hpp"

namespace {

// Input problems diagnosed by the CLI itself (bad flag values, unreadable
// files); mapped to exit code 1 like parse errors.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError("cannot read file: " + path);
  return buf.str();
}

void emit(const qpc::Json& report, const std::string& json_path) {
  const std::string text = report.dump();
  if (json_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(json_path, std::ios::binary);
  if (!out) throw InputError("cannot open output file: " + json_path);
  out << text;
  out.flush();
  if (!out) throw InputError("cannot write output file: " + json_path);
}

qpc::Json state_to_json(const qpc::StateVector& psi) {
  qpc::Json amps = qpc::Json::array();
  for (Eigen::Index k = 0; k < psi.size(); ++k)
    amps.push(qpc::Json::complex_pair(psi(k)));
  return amps;
}

qpc::Json dims_to_json(const qpc::BusConfig& cfg) {
  qpc::Json dims = qpc::Json::object();
  dims.set("m", qpc::Json::integer(cfg.m));
  dims.set("n", qpc::Json::integer(cfg.n));
  dims.set("p", qpc::Json::integer(cfg.p));
  return dims;
}

qpc::Json program_to_json(const qpc::Program& prog) {
  qpc::Json steps = qpc::Json::array();
  for (int k : prog.steps) steps.push(qpc::Json::integer(k));
  return steps;
}

void apply_env_capacity() {
  const char* raw = std::getenv("QPC_MAX_DIM");
  if (raw == nullptr || *raw == '\0') return;
  std::int64_t cap = 0;
  const std::string s(raw);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), cap);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || cap < 1)
    throw InputError("QPC_MAX_DIM must be a positive integer, got '" + s +
                     "'");
  qpc::set_max_dim(cap);
}

int cmd_run(const std::string& path, bool dense, const std::string& json_path) {
  const qpc::ProgramFile pf = qpc::parse_program_file(read_file(path));
  const qpc::StateVector fast =
      qpc::execute_fast(pf.instruction_set, pf.program, pf.initial_state);

  qpc::Json report = qpc::Json::object();
  report.set("command", qpc::Json::str("run"));
  report.set("dims", dims_to_json(pf.config));
  report.set("program", program_to_json(pf.program));
  report.set("mode", qpc::Json::str(dense ? "dense" : "fast"));
  report.set("final_state", state_to_json(fast));

  if (dense) {
    const qpc::DenseExecution dx =
        qpc::execute_dense(pf.instruction_set, pf.program, pf.initial_state);
    const qpc::RomState rom_in = qpc::encode_rom(pf.program);
    qpc::Json block = qpc::Json::object();
    block.set("rom_restored",
              qpc::Json::boolean(dx.rom.index == rom_in.index));
    block.set("rom_index", qpc::Json::integer(dx.rom.index));
    block.set("cross_check_residual",
              qpc::Json::real((dx.data - fast).norm()));
    report.set("dense", std::move(block));
  }
  if (pf.has_target) {
    const qpc::StateVector want = pf.target * pf.initial_state;
    const double fidelity = std::norm(want.dot(fast));
    report.set("target", qpc::Json::str(pf.target_text));
    report.set("fidelity", qpc::Json::real(fidelity));
  }
  emit(report, json_path);
  return 0;
}

int cmd_check_universality(const std::string& path,
                           const std::string& json_path) {
  const qpc::ProgramFile pf = qpc::parse_program_file(read_file(path));

  qpc::HamiltonianSet hs;
  hs.n = pf.config.n;
  std::vector<std::string> skipped;
  for (const qpc::GateDef& def : pf.gate_defs) {
    const qpc::PrincipalLog log = qpc::principal_hamiltonian(def.matrix);
    if (!log.ok) {
      skipped.push_back(def.name);
      std::cerr << "warning: gate " << def.name
                << " has a degenerate -1 eigenvalue pair; principal "
                   "logarithm is ambiguous, gate skipped\n";
      continue;
    }
    hs.hams.push_back(log.hamiltonian);
  }
  const qpc::LieClosureReport closure = qpc::lie_closure(hs);

  qpc::Json report = qpc::Json::object();
  report.set("command", qpc::Json::str("check-universality"));
  report.set("n", qpc::Json::integer(pf.config.n));
  report.set("full_dim", qpc::Json::integer(pf.config.n * pf.config.n));
  report.set("generated_dim", qpc::Json::integer(closure.generated_dim));
  report.set("universal", qpc::Json::boolean(closure.universal));
  report.set("iterations", qpc::Json::integer(closure.iterations));
  qpc::Json skipped_json = qpc::Json::array();
  for (const std::string& name : skipped)
    skipped_json.push(qpc::Json::str(name));
  report.set("skipped_gates", std::move(skipped_json));
  emit(report, json_path);
  return 0;
}

int cmd_synthesize(const std::string& path, const std::string& target_expr,
                   int max_len, double tol, std::int64_t node_budget,
                   const std::string& json_path) {
  const qpc::ProgramFile pf = qpc::parse_program_file(read_file(path));
  qpc::Operator target;
  std::string target_text;
  if (!target_expr.empty()) {
    target = qpc::evaluate_gate_expr(target_expr, pf);
    target_text = target_expr;
  } else if (pf.has_target) {
    target = pf.target;
    target_text = pf.target_text;
  } else {
    throw InputError(
        "no target: give --target or a target line in the file");
  }

  const qpc::SynthesisResult result = qpc::synthesize(
      target, pf.instruction_set, max_len, tol, node_budget);

  qpc::Json report = qpc::Json::object();
  report.set("command", qpc::Json::str("synthesize"));
  report.set("target", qpc::Json::str(target_text));
  report.set("max_len", qpc::Json::integer(max_len));
  report.set("tol", qpc::Json::real(tol));
  report.set("found", qpc::Json::boolean(result.found));
  report.set("program", program_to_json(result.program));
  report.set("distance", qpc::Json::real(result.distance));
  report.set("expanded_nodes", qpc::Json::integer(result.expanded_nodes));
  emit(report, json_path);
  return result.found ? 0 : 3;
}

int cmd_demo_no_programming(const std::string& gates_csv, std::int64_t seed,
                            const std::string& json_path) {
  std::vector<std::string> names;
  std::string token;
  std::istringstream split(gates_csv);
  while (std::getline(split, token, ',')) {
    if (token.empty()) throw InputError("--gates has an empty entry");
    names.push_back(token);
  }
  if (names.size() < 2)
    throw InputError("--gates needs at least two comma-separated names");
  if (names.front() != "I")
    throw InputError("--gates must start with I (instruction 0 is fixed)");

  std::vector<qpc::Operator> gates;
  gates.reserve(names.size());
  for (const std::string& name : names) {
    const std::optional<qpc::Operator> gate = qpc::builtin_gate(name);
    if (!gate)
      throw InputError("unknown builtin gate '" + name + "' in --gates");
    gates.push_back(*gate);
  }
  const qpc::InstructionSet iset =
      qpc::make_instruction_set(std::move(gates));
  const qpc::ControllerUnitary ctrl = qpc::build_controller(iset);

  constexpr int sample_count = 8;
  const std::vector<qpc::StateVector> samples =
      qpc::sample_states(iset.n, sample_count,
                         static_cast<std::uint64_t>(seed));
  const qpc::StateVector prog_a = qpc::basis_state(iset.m, 0);
  const qpc::StateVector prog_b = qpc::basis_state(iset.m, 1);
  const qpc::OrthogonalityReport ortho =
      qpc::orthogonality_residual(ctrl, prog_a, prog_b, samples);

  std::vector<qpc::Complex> weights(
      static_cast<std::size_t>(iset.m),
      qpc::Complex(1.0 / std::sqrt(static_cast<double>(iset.m)), 0.0));
  const int rank = qpc::superposed_program_entanglement(
      ctrl, weights, qpc::basis_state(iset.n, 0));

  // Spread in the data-side overlaps means a single program overlap cannot
  // satisfy the scalar-product identity for every data state, which is the
  // orthogonality argument in miniature.
  const bool forced = ortho.gram_spread > 1e-3;

  qpc::Json report = qpc::Json::object();
  report.set("command", qpc::Json::str("demo no-programming"));
  qpc::Json gates_json = qpc::Json::array();
  for (const std::string& name : names) gates_json.push(qpc::Json::str(name));
  report.set("gates", std::move(gates_json));
  report.set("seed", qpc::Json::integer(seed));
  report.set("sample_count", qpc::Json::integer(sample_count));
  report.set("program_overlap",
             qpc::Json::complex_pair(ortho.program_overlap));
  report.set("residual", qpc::Json::real(ortho.residual));
  report.set("gram_spread", qpc::Json::real(ortho.gram_spread));
  report.set("entangled_samples", qpc::Json::integer(ortho.entangled_samples));
  report.set("superposed_schmidt_rank", qpc::Json::integer(rank));
  report.set("verdict",
             qpc::Json::str(forced ? "orthogonality required"
                                   : "no orthogonality constraint"));
  emit(report, json_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"programmable quantum controller simulator"};
  app.require_subcommand(1);

  std::string file_path, json_path, target_expr;
  bool dense = false;
  int max_len = 0;
  double tol = 0.0;
  std::int64_t node_budget = 10'000'000;
  std::string gates_csv = "I,X";
  std::int64_t seed = 1;

  CLI::App* run = app.add_subcommand("run", "execute a program file");
  run->add_option("file", file_path, "program file")->required();
  run->add_flag("--dense", dense, "also run the dense three-bus execution");
  run->add_option("--json", json_path, "write the report to this path");

  CLI::App* check = app.add_subcommand(
      "check-universality", "test whether the gate set generates u(n)");
  check->add_option("file", file_path, "program file")->required();
  check->add_option("--json", json_path, "write the report to this path");

  CLI::App* synth = app.add_subcommand(
      "synthesize", "search for a program approximating a target gate");
  synth->add_option("file", file_path, "program file")->required();
  synth->add_option("--target", target_expr,
                    "target gate expression (defaults to the file's target)");
  synth->add_option("--max-len", max_len, "maximum program length")
      ->required();
  synth->add_option("--tol", tol, "acceptance distance")->required();
  synth->add_option("--node-budget", node_budget,
                    "search node budget before giving up");
  synth->add_option("--json", json_path, "write the report to this path");

  CLI::App* demo =
      app.add_subcommand("demo", "canned demonstrations");
  demo->require_subcommand(1);
  CLI::App* nop = demo->add_subcommand(
      "no-programming", "orthogonal-programs certificate for distinct gates");
  nop->add_option("--gates", gates_csv,
                  "comma-separated builtin gates, first must be I");
  nop->add_option("--seed", seed, "sample seed");
  nop->add_option("--json", json_path, "write the report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    apply_env_capacity();
    if (run->parsed()) return cmd_run(file_path, dense, json_path);
    if (check->parsed()) return cmd_check_universality(file_path, json_path);
    if (synth->parsed())
      return cmd_synthesize(file_path, target_expr, max_len, tol, node_budget,
                            json_path);
    if (nop->parsed())
      return cmd_demo_no_programming(gates_csv, seed, json_path);
    throw qpc::InternalError("no subcommand dispatched");
  } catch (const qpc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
