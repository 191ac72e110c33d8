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

#include <array>

namespace eofb {

/// One reference state of the built-in benchmark table: a canonical
/// quadruple together with the originally published five-decimal bounds.
struct BenchmarkRow {
    double n, m, kx, kp;
    double published_lb1;
    double published_lb2;
};

/// The six entangled benchmark states reproduced by `eofb table1`.
///
/// A note on row 5 (2, 3, 1.7, -1.2): its published LB2 entry, 0.00142,
/// equals f evaluated at sqrt(1.04) while skipping the min{1, .} clamp the
/// bound requires (compare row 4, where the clamp was applied and 0 was
/// published). With the clamp this library computes 0 for both rows, so a
/// comparison against the published numbers shows a ~1.4e-3 deviation on
/// that single entry.
inline constexpr std::array<BenchmarkRow, 6> benchmark_rows{{
    {1.5, 2.0, 1.2, -1.0, 0.14635, 0.28919},
    {1.5, 2.0, 1.0, -1.0, 0.08687, 0.14672},
    {2.0, 3.0, 1.8, -1.2, 0.02448, 0.00681},
    {1.7, 2.6, 1.3, -0.9, 0.00549, 0.0},
    {2.0, 3.0, 1.7, -1.2, 0.00725, 0.00142},
    {2.0, 2.5, 1.3, -1.2, 0.00173, 0.00001},
}};

/// The two published refutation cases: each candidate EoF expression is
/// beaten by one of the lower bounds, so neither candidate can be the EoF.
struct CounterexampleCase {
    double n, m, kx, kp;
    const char* bound_name;     ///< which bound dominates
    const char* candidate_name; ///< which candidate it refutes
    double published_bound;
    double published_candidate;
};

inline constexpr std::array<CounterexampleCase, 2> counterexample_cases{{
    {2.0, 2.5, 1.3, -1.2, "LB1", "f1", 0.00173, 0.00091},
    {1.5, 2.0, 1.1, -1.0, "LB2", "f2", 0.208853, 0.18621},
}};

} // namespace eofb
