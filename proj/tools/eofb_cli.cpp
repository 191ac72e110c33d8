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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eofb/eofb.hpp"
#include "eofb/report_io.hpp"

namespace {

// Exit-code contract: 0 success, 2 state rejected (unphysical/separable),
// 3 parse error, 4 property violation.
constexpr int exit_ok = 0;
constexpr int exit_rejected = 2;
constexpr int exit_parse = 3;
constexpr int exit_violation = 4;

int run_analyze(const std::string& sf_text, const std::string& matrix_path,
                bool as_json, bool verbose)
{
    const eofb::io::AnalyzeOutcome outcome =
        sf_text.empty() ? eofb::io::analyze(eofb::io::read_matrix_file(matrix_path))
                        : eofb::io::analyze(eofb::io::parse_quadruple(sf_text));
    std::cout << (as_json ? eofb::io::to_json(outcome)
                          : eofb::io::to_table(outcome, verbose));
    return outcome.tag == eofb::StateTag::entangled ? exit_ok : exit_rejected;
}

int run_table1(bool diff)
{
    std::cout << eofb::io::render_benchmark_table(diff);
    return exit_ok;
}

int run_counterexamples()
{
    bool all_strict = false;
    std::cout << eofb::io::render_counterexamples(all_strict);
    return all_strict ? exit_ok : exit_violation;
}

int run_check(std::uint64_t seed, std::size_t count, bool as_json)
{
    eofb::EnsembleConfig<double> cfg;
    cfg.seed = seed;
    cfg.count = count;

    std::vector<eofb::ViolationReport> suites;
    suites.push_back(eofb::concavity_check(cfg));
    suites.push_back(eofb::pipeline_equivalence_check(cfg));
    suites.push_back(eofb::invariance_check(cfg));

    std::cout << (as_json ? eofb::io::check_to_json(suites, seed, count)
                          : eofb::io::check_to_text(suites));
    for (const eofb::ViolationReport& suite : suites)
        if (!suite.passed())
            return exit_violation;
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Physicality classification and entanglement-of-formation lower bounds "
                 "for two-mode Gaussian states"};
    app.require_subcommand(1);

    std::string sf_text, matrix_path;
    bool as_json = false, verbose = false;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Classify one state and compute its bound report");
    CLI::Option* sf_opt =
        analyze->add_option("--sf", sf_text, "Inline standard form: n,m,kx,kp");
    CLI::Option* matrix_opt = analyze->add_option(
        "--matrix", matrix_path, "Path to a 4x4 covariance matrix file");
    sf_opt->excludes(matrix_opt);
    analyze->add_flag("--json", as_json, "Emit one JSON object");
    analyze->add_flag("--verbose", verbose, "Also print invariants and the mixing angle");

    bool diff = false;
    CLI::App* table1 = app.add_subcommand(
        "table1", "Recompute the built-in six-state benchmark table");
    table1->add_flag("--diff", diff, "Compare against the originally published values");

    CLI::App* counterexamples = app.add_subcommand(
        "counterexamples", "Show the two cases where a bound beats a candidate EoF formula");

    std::uint64_t seed = 1;
    std::size_t count = 1000;
    bool check_json = false;
    CLI::App* check = app.add_subcommand(
        "check", "Run the Monte-Carlo property suites (concavity, route equivalence, "
                 "local-symplectic invariance)");
    check->add_option("--seed", seed, "Ensemble seed")->capture_default_str();
    check->add_option("--count", count, "Samples per suite")->capture_default_str();
    check->add_flag("--json", check_json, "Emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_parse;
    }

    try {
        if (analyze->parsed()) {
            if (sf_text.empty() && matrix_path.empty()) {
                std::cerr << "analyze: provide exactly one of --sf or --matrix\n";
                return exit_parse;
            }
            return run_analyze(sf_text, matrix_path, as_json, verbose);
        }
        if (table1->parsed())
            return run_table1(diff);
        if (counterexamples->parsed())
            return run_counterexamples();
        if (check->parsed())
            return run_check(seed, count, check_json);
    } catch (const eofb::Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == eofb::Errc::parse_error ? exit_parse : exit_rejected;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_rejected;
    }
    return exit_ok;
}
