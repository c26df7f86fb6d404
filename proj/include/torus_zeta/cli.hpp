/* Copyright 2026 The torus-zeta Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Input parsing, report assembly and the command-line driver.
//
// Matrix files are JSON objects
//   {"p": 7, "e": 1, "d": 2, "entries": [[[6], []], [[], [2]]]}
// where each entry is a little-endian coefficient list in t. For e = 1 the
// coefficients are integers; for e > 1 each coefficient is itself a
// little-endian list of integers in the basis 1, y, ..., y^{e-1}, y a root of
// "field_modulus" (little-endian, monic of degree e, optional). Integers are
// reduced mod p on load.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "torus_zeta/dichotomy.hpp"
#include "torus_zeta/zeta.hpp"

namespace torus_zeta::cli {

using Json = nlohmann::ordered_json;

struct MatrixInput {
  std::uint64_t p = 0;
  int e = 1;
  FieldDesc field;
  PolyMatrix A;
  Json echo;  // normalized input, itself a valid input document
};

/// Throws Error(ParseError) for malformed documents and Error(ValidationError)
/// for well-formed but invalid ones; messages name the offending field.
MatrixInput parse_matrix_input(const Json& doc);
MatrixInput load_matrix_input(const std::string& path);

/// Window files: a list of "num/den" strings, or an object
/// {"p": .., "s": .., "offset": .., "coeffs": [[coords...], ...]} for values in Q(p^(1/s)).
SeriesWindow parse_window(const Json& doc);

struct AnalyzeOptions {
  std::size_t kmax = 48;
  std::size_t terms = 64;
  unsigned threads = 1;
};

struct DiagnoseOptions {
  std::size_t kmax = 48;
  std::optional<std::size_t> hankel_max;
  bool kronecker = false;
  bool lcm = false;
  std::optional<std::uint64_t> exceptional_bound;
  unsigned threads = 1;
};

Json analyze_report(const MatrixInput& in, const AnalyzeOptions& opt);
Json diagnose_report(const MatrixInput& in, const DiagnoseOptions& opt);
Json series_report(const MatrixInput& in, std::size_t terms, unsigned threads);
Json window_report(const SeriesWindow& w, std::optional<std::size_t> hankel_max, bool kronecker);

/// Serialized form used for every report: two-space indent, trailing newline.
std::string dump(const Json& j);

/// The published JSON schema for all reports.
const std::string& report_schema();

/// Worker count from TORUS_ZETA_THREADS (default: hardware concurrency).
unsigned thread_budget();

/// Exit codes: 0 success, 2 parse/validation errors, 3 internal inconsistency.
int exit_code_for(Errc code);

/// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace torus_zeta::cli
