// Copyright 2026 The eofb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eofb/bounds.hpp"
#include "eofb/ensemble.hpp"
#include "eofb/standard_form.hpp"

namespace eofb::io {

/// Everything one analyzed state produces, ready for rendering.
struct AnalyzeOutcome {
    StateTag tag = StateTag::unphysical;
    std::string rejection_reason; ///< empty iff entangled
    std::optional<StandardForm<double>> sf;
    std::optional<SymplecticInvariants<double>> inv;
    std::optional<BoundReport<double>> bounds;
    std::optional<double> tan_sq_theta; ///< symmetrization angle, entangled states only
};

AnalyzeOutcome analyze(const StandardForm<double>& sf);
AnalyzeOutcome analyze(const Eigen::Matrix4d& gamma);

/// One JSON object with a stable key set (absent quantities are null),
/// indented by two spaces, newline-terminated. Parsing and re-dumping with
/// the same settings reproduces the bytes exactly.
std::string to_json(const AnalyzeOutcome& outcome);

/// Human-readable card; numeric values at five decimals.
std::string to_table(const AnalyzeOutcome& outcome, bool verbose);

/// Parses "a,b,c,d" into a canonical quadruple. Errc::parse_error on junk.
StandardForm<double> parse_quadruple(const std::string& text);

/// Reads a 4x4 matrix: four rows of four whitespace-separated numbers,
/// '#' starts a comment. Asymmetry beyond 1e-9 is a parse error; smaller
/// asymmetry is averaged away.
Eigen::Matrix4d read_matrix_file(const std::string& path);

/// The recomputed benchmark table; with_published adds the originally
/// published values and per-entry deviations.
std::string render_benchmark_table(bool with_published);

/// Largest |computed - published| over all twelve benchmark entries.
double benchmark_max_deviation();

/// Renders the two candidate-refutation cases and reports whether both
/// strict inequalities hold.
std::string render_counterexamples(bool& all_strict);

/// Text/JSON forms of a property-check run (the `check` subcommand).
std::string check_to_text(const std::vector<ViolationReport>& suites);
std::string check_to_json(const std::vector<ViolationReport>& suites,
                          std::uint64_t seed, std::size_t count);

} // namespace eofb::io
