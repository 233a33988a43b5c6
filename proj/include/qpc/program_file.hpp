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
// Textual program-description format. Line oriented, '#' starts a comment:
//
//   dims m=<int> n=<int> p=<int>
//   gate <name> = <builtin> | <builtin>(<real>) | matrix [[a+bi, ...], ...]
//   state |<basis>          or  state amps [a+bi, ...]
//   program <idx-or-name> <idx-or-name> ...
//   target <gate-expr>                                   (optional)
//
// The instruction set is {identity, defined gates in order}, so a file must
// define exactly m-1 gates. Programs shorter than p are padded with trailing
// 0 entries (the identity instruction). Complex literals permit no interior
// whitespace. A target expression may also name a defined gate.

#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpc/controller.hpp"
#include "qpc/core.hpp"
#include "qpc/gates.hpp"
#include "qpc/linalg.hpp"
#include "qpc/program_bus.hpp"

namespace qpc {

// Explicit matrices in files are rejected beyond this unitarity defect; the
// stricter construction-time unitarity_tol still applies afterwards.
inline constexpr double parser_unitarity_tol = 1e-8;

// Diagnostic for malformed or inconsistent program files. Line and column
// are 1-based; 0/0 marks a file-level problem such as a missing section.
struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;

  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}

  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GateDef {
  std::string name;
  std::string expr_text;
  Operator matrix;
};

struct ProgramFile {
  BusConfig config;
  std::vector<GateDef> gate_defs;  // instruction indices 1..m-1 in order
  InstructionSet instruction_set;  // {identity, gate_defs...}
  StateVector initial_state;       // dim n, normalized
  Program program;                 // padded to length p
  bool has_target = false;
  Operator target;
  std::string target_text;
};

namespace detail {

inline bool is_space_byte(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

inline bool is_word_byte(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Signed float reader on top of from_chars; rejects doubled signs and
// non-finite spellings, advances pos past what it consumed.
inline std::optional<double> read_number(std::string_view s, std::size_t& pos) {
  std::size_t p = pos;
  double sign = 1.0;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
    if (s[p] == '-') sign = -1.0;
    ++p;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) return std::nullopt;
  }
  double value = 0.0;
  const auto res = std::from_chars(s.data() + p, s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr == s.data() + p) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  pos = static_cast<std::size_t>(res.ptr - s.data());
  return sign * value;
}

// a | bi | a+bi | a-bi with i/-i/+i accepted for unit imaginary parts.
// The whole view must be consumed; no interior whitespace is allowed.
inline std::optional<Complex> parse_complex_literal(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;

  const auto read_unit_i = [&](double* out) -> bool {
    std::size_t p = pos;
    double sign = 1.0;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
      if (s[p] == '-') sign = -1.0;
      ++p;
    }
    if (p < s.size() && s[p] == 'i') {
      *out = sign;
      pos = p + 1;
      return true;
    }
    return false;
  };

  double unit = 0.0;
  if (read_unit_i(&unit) && pos == s.size()) return Complex(0.0, unit);
  pos = 0;

  const std::optional<double> first = read_number(s, pos);
  if (!first) return std::nullopt;
  if (pos == s.size()) return Complex(*first, 0.0);
  if (s[pos] == 'i') return pos + 1 == s.size() ? std::optional<Complex>(
                                                      Complex(0.0, *first))
                                                : std::nullopt;
  if (read_unit_i(&unit)) {
    if (pos != s.size()) return std::nullopt;
    return Complex(*first, unit);
  }
  if (s[pos] != '+' && s[pos] != '-') return std::nullopt;
  const std::optional<double> second = read_number(s, pos);
  if (!second) return std::nullopt;
  if (pos + 1 == s.size() && s[pos] == 'i') return Complex(*first, *second);
  return std::nullopt;
}

// Scanner over one comment-stripped line; all failures carry line and the
// 1-based column of the offending byte.
struct LineCursor {
  int line_no = 0;
  std::string text;
  std::size_t pos = 0;

  LineCursor(int line, std::string stripped)
      : line_no(line), text(std::move(stripped)) {}

  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw ParseError(line_no, static_cast<int>(at) + 1, msg);
  }

  void skip_ws() {
    while (pos < text.size() && is_space_byte(text[pos])) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    if (peek() != c || pos >= text.size()) return false;
    ++pos;
    return true;
  }

  void expect(char c, const char* context) {
    if (!consume(c))
      fail(pos, std::string("expected '") + c + "' " + context);
  }

  // Run of word bytes; empty when the next byte is not a word byte.
  std::string word() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && is_word_byte(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }

  std::int64_t integer(const char* what) {
    skip_ws();
    std::size_t p = pos;
    if (p < text.size() && text[p] == '-') ++p;
    std::int64_t value = 0;
    const auto res =
        std::from_chars(text.data() + p, text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr == text.data() + p)
      fail(pos, std::string("expected integer for ") + what);
    if (p > pos) value = -value;
    pos = static_cast<std::size_t>(res.ptr - text.data());
    return value;
  }

  double real(const char* what) {
    skip_ws();
    std::string_view view(text);
    const std::optional<double> value = read_number(view, pos);
    if (!value) fail(pos, std::string("expected real number for ") + what);
    return *value;
  }

  // Next bracket-list entry: everything up to the next ',' or ']', trimmed.
  // Returns the entry and its start column through `at`.
  std::string bracket_entry(std::size_t* at) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != ']') ++pos;
    std::size_t stop = pos;
    while (stop > start && is_space_byte(text[stop - 1])) --stop;
    *at = start;
    return text.substr(start, stop - start);
  }

  Complex complex_entry(const char* context) {
    std::size_t at = 0;
    const std::string entry = bracket_entry(&at);
    if (entry.empty())
      fail(at, std::string("expected complex literal in ") + context);
    for (char c : entry)
      if (is_space_byte(c))
        fail(at, "complex literals permit no interior whitespace");
    const std::optional<Complex> value = parse_complex_literal(entry);
    if (!value)
      fail(at, "malformed complex literal '" + entry + "'");
    return *value;
  }
};

inline bool is_builtin_fixed(const std::string& w) {
  return w == "I" || w == "X" || w == "Y" || w == "Z" || w == "H" ||
         w == "S" || w == "T";
}

inline bool is_builtin_rotation(const std::string& w) {
  return w == "RX" || w == "RY" || w == "RZ";
}

inline Operator parse_matrix(LineCursor& cur, Eigen::Index n) {
  const std::size_t open_at = cur.pos;
  cur.expect('[', "to open matrix");
  std::vector<std::vector<Complex>> rows;
  while (true) {
    cur.expect('[', "to open matrix row");
    std::vector<Complex> row;
    while (true) {
      row.push_back(cur.complex_entry("matrix row"));
      if (cur.consume(',')) continue;
      cur.expect(']', "to close matrix row");
      break;
    }
    rows.push_back(std::move(row));
    if (cur.consume(',')) continue;
    cur.expect(']', "to close matrix");
    break;
  }
  const std::size_t n_rows = rows.size();
  for (const auto& row : rows)
    if (row.size() != n_rows)
      cur.fail(open_at, "matrix rows must all have length " +
                            std::to_string(n_rows));
  if (static_cast<Eigen::Index>(n_rows) != n)
    cur.fail(open_at, "matrix must be " + std::to_string(n) + "x" +
                          std::to_string(n) + " for n = " + std::to_string(n));
  Operator out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      out(r, c) = rows[static_cast<std::size_t>(r)]
                      [static_cast<std::size_t>(c)];
  return out;
}

// builtin | builtin(real) | matrix [[...]] and, when `defs` is non-null,
// the name of a previously defined gate.
inline Operator parse_gate_expr(LineCursor& cur, Eigen::Index n,
                                const std::vector<GateDef>* defs) {
  cur.skip_ws();
  const std::size_t at = cur.pos;
  const std::string w = cur.word();
  if (w.empty()) cur.fail(at, "expected gate expression");

  if (w == "matrix") {
    const Operator out = parse_matrix(cur, n);
    if (!is_unitary(out, parser_unitarity_tol))
      cur.fail(at, "matrix is not unitary within " +
                       std::to_string(parser_unitarity_tol));
    return out;
  }
  if (is_builtin_fixed(w) || is_builtin_rotation(w)) {
    if (n != 2)
      cur.fail(at, "builtin gate " + w + " is 2x2 but n = " +
                       std::to_string(n));
    if (is_builtin_fixed(w)) return *builtin_gate(w);
    cur.expect('(', "after rotation gate name");
    const double theta = cur.real("rotation angle");
    cur.expect(')', "after rotation angle");
    return *builtin_rotation(w, theta);
  }
  if (defs != nullptr)
    for (const GateDef& def : *defs)
      if (def.name == w) return def.matrix;
  cur.fail(at, "undefined gate '" + w + "'");
}

}  // namespace detail

inline ProgramFile parse_program_file(const std::string& text) {
  ProgramFile pf;
  bool have_dims = false, have_state = false, have_program = false;
  std::vector<int> raw_program;

  int line_no = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    const std::size_t newline = text.find('\n', line_start);
    const std::size_t line_end =
        newline == std::string::npos ? text.size() : newline;
    ++line_no;
    std::string line = text.substr(line_start, line_end - line_start);
    line_start = line_end + 1;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);

    detail::LineCursor cur(line_no, std::move(line));
    if (cur.at_end()) {
      if (newline == std::string::npos) break;
      continue;
    }
    const std::size_t key_at = cur.pos;
    const std::string key = cur.word();

    if (key == "dims") {
      if (have_dims) cur.fail(key_at, "duplicate dims line");
      for (const char* field : {"m", "n", "p"}) {
        const std::size_t at = cur.pos;
        if (cur.word() != field)
          cur.fail(at, std::string("expected ") + field + "=<int>");
        cur.expect('=', "in dims");
        const std::int64_t value = cur.integer(field);
        if (value < 1)
          cur.fail(at, std::string(field) + " must be >= 1");
        if (value > max_dim())
          throw CapacityError(std::string("dims: ") + field + " = " +
                              std::to_string(value) + " exceeds capacity " +
                              std::to_string(max_dim()));
        if (field[0] == 'm') pf.config.m = static_cast<int>(value);
        if (field[0] == 'n') pf.config.n = static_cast<Eigen::Index>(value);
        if (field[0] == 'p') pf.config.p = static_cast<int>(value);
      }
      if (!cur.at_end()) cur.fail(cur.pos, "unexpected trailing input");
      have_dims = true;
      continue;
    }

    if (!have_dims) cur.fail(key_at, "dims must come first");

    if (key == "gate") {
      const std::size_t name_at = cur.pos;
      const std::string name = cur.word();
      if (name.empty() ||
          std::isdigit(static_cast<unsigned char>(name.front())) != 0)
        cur.fail(name_at, "expected gate name");
      if (detail::is_builtin_fixed(name) || detail::is_builtin_rotation(name) ||
          name == "matrix" || name == "amps")
        cur.fail(name_at, "gate name '" + name + "' is reserved");
      for (const GateDef& def : pf.gate_defs)
        if (def.name == name)
          cur.fail(name_at, "duplicate gate name '" + name + "'");
      if (static_cast<int>(pf.gate_defs.size()) + 1 > pf.config.m - 1)
        cur.fail(key_at, "too many gate definitions for m = " +
                             std::to_string(pf.config.m) +
                             " (expected " + std::to_string(pf.config.m - 1) +
                             ", the identity occupies index 0)");
      cur.expect('=', "after gate name");
      cur.skip_ws();
      const std::string expr_text = cur.text.substr(cur.pos);
      const Operator matrix =
          detail::parse_gate_expr(cur, pf.config.n, nullptr);
      if (!cur.at_end()) cur.fail(cur.pos, "unexpected trailing input");
      pf.gate_defs.push_back(GateDef{name, expr_text, matrix});
      continue;
    }

    if (key == "state") {
      if (have_state) cur.fail(key_at, "duplicate state line");
      if (cur.peek() == '|') {
        cur.expect('|', "before basis index");
        const std::size_t at = cur.pos;
        const std::int64_t basis = cur.integer("basis index");
        cur.expect('>', "after basis index");
        if (basis < 0 || basis >= pf.config.n)
          cur.fail(at, "basis index " + std::to_string(basis) +
                           " out of range for n = " +
                           std::to_string(pf.config.n));
        pf.initial_state = basis_state(pf.config.n, basis);
      } else {
        const std::size_t at = cur.pos;
        if (cur.word() != "amps")
          cur.fail(at, "expected '|<basis>' or 'amps [...]'");
        cur.expect('[', "to open amplitude list");
        std::vector<Complex> amps;
        while (true) {
          amps.push_back(cur.complex_entry("amplitude list"));
          if (cur.consume(',')) continue;
          cur.expect(']', "to close amplitude list");
          break;
        }
        if (static_cast<Eigen::Index>(amps.size()) != pf.config.n)
          cur.fail(at, "expected " + std::to_string(pf.config.n) +
                           " amplitudes, found " + std::to_string(amps.size()));
        StateVector psi(pf.config.n);
        for (Eigen::Index k = 0; k < pf.config.n; ++k)
          psi(k) = amps[static_cast<std::size_t>(k)];
        const double norm = psi.norm();
        if (norm == 0.0) cur.fail(at, "state has zero norm");
        pf.initial_state = psi / norm;
      }
      if (!cur.at_end()) cur.fail(cur.pos, "unexpected trailing input");
      have_state = true;
      continue;
    }

    if (key == "program") {
      if (have_program) cur.fail(key_at, "duplicate program line");
      while (!cur.at_end()) {
        const std::size_t at = cur.pos;
        const std::string tok = cur.word();
        if (tok.empty()) cur.fail(at, "expected program index or gate name");
        bool all_digits = true;
        for (char c : tok)
          if (std::isdigit(static_cast<unsigned char>(c)) == 0)
            all_digits = false;
        if (all_digits) {
          std::int64_t idx = 0;
          std::from_chars(tok.data(), tok.data() + tok.size(), idx);
          if (idx >= pf.config.m)
            cur.fail(at, "program index " + std::to_string(idx) +
                             " out of range for m = " +
                             std::to_string(pf.config.m));
          raw_program.push_back(static_cast<int>(idx));
          continue;
        }
        int found = -1;
        for (std::size_t g = 0; g < pf.gate_defs.size(); ++g)
          if (pf.gate_defs[g].name == tok) found = static_cast<int>(g) + 1;
        if (found < 0) cur.fail(at, "undefined gate '" + tok + "'");
        raw_program.push_back(found);
      }
      if (raw_program.empty())
        cur.fail(cur.pos, "program needs at least one entry");
      if (static_cast<int>(raw_program.size()) > pf.config.p)
        cur.fail(key_at, "program has " + std::to_string(raw_program.size()) +
                             " entries but p = " + std::to_string(pf.config.p));
      have_program = true;
      continue;
    }

    if (key == "target") {
      if (pf.has_target) cur.fail(key_at, "duplicate target line");
      cur.skip_ws();
      pf.target_text = cur.text.substr(cur.pos);
      pf.target = detail::parse_gate_expr(cur, pf.config.n, &pf.gate_defs);
      if (!cur.at_end()) cur.fail(cur.pos, "unexpected trailing input");
      pf.has_target = true;
      continue;
    }

    cur.fail(key_at, "unknown directive '" + key + "'");
  }

  if (!have_dims) throw ParseError("missing dims line");
  if (static_cast<int>(pf.gate_defs.size()) != pf.config.m - 1)
    throw ParseError("expected " + std::to_string(pf.config.m - 1) +
                     " gate definitions for m = " + std::to_string(pf.config.m) +
                     ", found " + std::to_string(pf.gate_defs.size()));
  if (!have_state) throw ParseError("missing state line");
  if (!have_program) throw ParseError("missing program line");

  std::vector<Operator> gates;
  gates.reserve(static_cast<std::size_t>(pf.config.m));
  gates.push_back(identity_op(pf.config.n));
  for (const GateDef& def : pf.gate_defs) gates.push_back(def.matrix);
  try {
    pf.instruction_set = make_instruction_set(std::move(gates));
  } catch (const ContractError& e) {
    throw ParseError(std::string("instruction set invalid: ") + e.what());
  }

  raw_program.resize(static_cast<std::size_t>(pf.config.p), 0);
  pf.program = Program{pf.config.m, std::move(raw_program)};
  return pf;
}

// Evaluates a standalone gate expression (for --target flags) in the context
// of a parsed file's definitions.
inline Operator evaluate_gate_expr(const std::string& expr,
                                   const ProgramFile& pf) {
  detail::LineCursor cur(0, expr);
  const Operator out = detail::parse_gate_expr(cur, pf.config.n, &pf.gate_defs);
  if (!cur.at_end()) cur.fail(cur.pos, "unexpected trailing input");
  return out;
}

}  // namespace qpc
