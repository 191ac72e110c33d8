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

#include "eofb/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "eofb/benchmarks.hpp"
#include "eofb/symmetrization.hpp"

namespace eofb::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string five_decimals(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.5f", value);
    return buf;
}

void fill_entangled_extras(AnalyzeOutcome& outcome)
{
    outcome.bounds = bound_report(*outcome.sf);
    const Eigen::Matrix4d gamma = cm_from_standard_form(*outcome.sf);
    const StandardForm<double> wigner_sf =
        standard_form(wigner_from_cm(gamma), MatrixRole::wigner);
    outcome.tan_sq_theta = symmetrize(wigner_sf).tan_sq_theta;
}

} // namespace

AnalyzeOutcome analyze(const StandardForm<double>& sf)
{
    AnalyzeOutcome outcome;
    outcome.sf = sf;
    outcome.inv = invariants(cm_from_standard_form(sf), MatrixRole::cm);

    const StateClass<double> cls = classify(sf);
    outcome.tag = cls.tag;
    if (cls.tag == StateTag::entangled) {
        fill_entangled_extras(outcome);
    } else {
        outcome.rejection_reason = to_string(*cls.violated);
    }
    return outcome;
}

AnalyzeOutcome analyze(const Eigen::Matrix4d& gamma)
{
    AnalyzeOutcome outcome;
    const PhysicalityReport<double> report = validate_cm(gamma);
    if (!report.physical) {
        outcome.tag = StateTag::unphysical;
        std::ostringstream reason;
        if (report.singular) {
            reason << "matrix is numerically singular";
        } else if (report.min_eigenvalue <= 1e-10) {
            reason << "gamma > 0 (min eigenvalue " << report.min_eigenvalue << ")";
        } else {
            reason << "gamma >= J^T gamma^{-1} J (min eigenvalue "
                   << report.min_uncertainty_eigenvalue << ")";
        }
        outcome.rejection_reason = reason.str();
        try {
            outcome.inv = invariants(gamma, MatrixRole::cm);
            outcome.sf = standard_form_from_invariants(*outcome.inv);
        } catch (const Error&) {
            // block determinants can be negative here; report without them
        }
        return outcome;
    }
    return analyze(standard_form(gamma));
}

std::string to_json(const AnalyzeOutcome& outcome)
{
    ordered_json j;
    j["class"] = to_string(outcome.tag);
    j["violated_inequality"] =
        outcome.rejection_reason.empty() ? ordered_json(nullptr)
                                         : ordered_json(outcome.rejection_reason);
    if (outcome.sf) {
        j["n"] = outcome.sf->n;
        j["m"] = outcome.sf->m;
        j["kx"] = outcome.sf->kx;
        j["kp"] = outcome.sf->kp;
    } else {
        j["n"] = nullptr;
        j["m"] = nullptr;
        j["kx"] = nullptr;
        j["kp"] = nullptr;
    }
    if (outcome.bounds) {
        j["lb1"] = outcome.bounds->lb1;
        j["lb2"] = outcome.bounds->lb2;
        j["best"] = outcome.bounds->best;
        j["delta"] = outcome.bounds->delta_raw;
        j["delta_optimized"] = outcome.bounds->delta_optimized;
        j["lb2_degenerate"] = outcome.bounds->lb2_degenerate;
    } else {
        j["lb1"] = nullptr;
        j["lb2"] = nullptr;
        j["best"] = nullptr;
        j["delta"] = nullptr;
        j["delta_optimized"] = nullptr;
        j["lb2_degenerate"] = nullptr;
    }
    if (outcome.inv) {
        j["invariants"] = {{"i1", outcome.inv->i1},
                           {"i2", outcome.inv->i2},
                           {"i3", outcome.inv->i3},
                           {"i4", outcome.inv->i4},
                           {"i5", outcome.inv->i5}};
    } else {
        j["invariants"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string to_table(const AnalyzeOutcome& outcome, bool verbose)
{
    std::ostringstream os;
    os << "class: " << to_string(outcome.tag) << "\n";
    if (!outcome.rejection_reason.empty() && outcome.tag != StateTag::entangled)
        os << "rejected by: " << outcome.rejection_reason << "\n";
    if (outcome.sf) {
        os << "canonical (n, m, kx, kp): " << five_decimals(outcome.sf->n) << ", "
           << five_decimals(outcome.sf->m) << ", " << five_decimals(outcome.sf->kx)
           << ", " << five_decimals(outcome.sf->kp) << "\n";
    }
    if (outcome.bounds) {
        os << "LB1:   " << five_decimals(outcome.bounds->lb1) << "\n";
        os << "LB2:   " << five_decimals(outcome.bounds->lb2)
           << (outcome.bounds->lb2_degenerate ? "  (degenerate: argument clamped at 1)" : "")
           << "\n";
        os << "best:  " << five_decimals(outcome.bounds->best) << "\n";
        os << "delta: " << five_decimals(outcome.bounds->delta_raw)
           << "  (optimally squeezed: " << five_decimals(outcome.bounds->delta_optimized)
           << ")\n";
    }
    if (verbose && outcome.inv) {
        os << "invariants: i1 = " << five_decimals(outcome.inv->i1)
           << ", i2 = " << five_decimals(outcome.inv->i2)
           << ", i3 = " << five_decimals(outcome.inv->i3)
           << ", i4 = " << five_decimals(outcome.inv->i4)
           << ", i5 = " << five_decimals(outcome.inv->i5) << "\n";
    }
    if (verbose && outcome.tan_sq_theta)
        os << "tan^2(theta): " << five_decimals(*outcome.tan_sq_theta) << "\n";
    return os.str();
}

StandardForm<double> parse_quadruple(const std::string& text)
{
    std::array<double, 4> values{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        const std::size_t comma = text.find(',', pos);
        const std::string token = text.substr(pos, comma == std::string::npos
                                                       ? std::string::npos
                                                       : comma - pos);
        try {
            std::size_t used = 0;
            values[i] = std::stod(token, &used);
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
                ++used;
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            fail(Errc::parse_error, "expected four comma-separated numbers, got '" + text + "'");
        }
        if (i < 3) {
            if (comma == std::string::npos)
                fail(Errc::parse_error,
                     "expected four comma-separated numbers, got '" + text + "'");
            pos = comma + 1;
        } else if (comma != std::string::npos) {
            fail(Errc::parse_error, "trailing data after fourth number in '" + text + "'");
        }
    }
    if (!(std::isfinite(values[0]) && std::isfinite(values[1]) && std::isfinite(values[2]) &&
          std::isfinite(values[3])))
        fail(Errc::parse_error, "quadruple entries must be finite");
    return StandardForm<double>(values[0], values[1], values[2], values[3]);
}

Eigen::Matrix4d read_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(Errc::parse_error, "cannot open '" + path + "'");

    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream row(line);
        double value;
        while (row >> value)
            values.push_back(value);
        if (!row.eof()) {
            fail(Errc::parse_error, "non-numeric data in '" + path + "'");
        }
    }
    if (values.size() != 16)
        fail(Errc::parse_error, "expected 16 numbers in '" + path + "', found " +
                                    std::to_string(values.size()));

    Eigen::Matrix4d gamma;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            gamma(r, c) = values[static_cast<std::size_t>(4 * r + c)];
    if (!gamma.allFinite())
        fail(Errc::parse_error, "matrix entries must be finite");

    const double defect = (gamma - gamma.transpose()).lpNorm<Eigen::Infinity>();
    if (defect > 1e-9)
        fail(Errc::parse_error, "matrix is asymmetric by " + std::to_string(defect) +
                                    " (tolerance 1e-9)");
    gamma = ((gamma + gamma.transpose()) / 2.0).eval();
    return gamma;
}

std::string render_benchmark_table(bool with_published)
{
    std::ostringstream os;
    os << "   n        m        kx       kp       LB1      LB2";
    if (with_published)
        os << "      pub.LB1  pub.LB2  |dev|";
    os << "\n";

    double max_dev = 0.0;
    for (const BenchmarkRow& row : benchmark_rows) {
        const StandardForm<double> sf(row.n, row.m, row.kx, row.kp);
        const double v1 = lb1(sf);
        const double v2 = lb2(sf);
        os << "  " << five_decimals(sf.n) << "  " << five_decimals(sf.m) << "  "
           << five_decimals(sf.kx) << " " << five_decimals(sf.kp) << "  "
           << five_decimals(v1) << "  " << five_decimals(v2);
        if (with_published) {
            const double dev =
                std::max(std::abs(v1 - row.published_lb1), std::abs(v2 - row.published_lb2));
            max_dev = std::max(max_dev, dev);
            os << "  " << five_decimals(row.published_lb1) << "  "
               << five_decimals(row.published_lb2) << "  " << five_decimals(dev);
        }
        os << "\n";
    }
    if (with_published)
        os << "max |deviation| = " << five_decimals(max_dev) << "\n";
    return os.str();
}

double benchmark_max_deviation()
{
    double max_dev = 0.0;
    for (const BenchmarkRow& row : benchmark_rows) {
        const StandardForm<double> sf(row.n, row.m, row.kx, row.kp);
        max_dev = std::max({max_dev, std::abs(lb1(sf) - row.published_lb1),
                            std::abs(lb2(sf) - row.published_lb2)});
    }
    return max_dev;
}

std::string render_counterexamples(bool& all_strict)
{
    all_strict = true;
    std::ostringstream os;
    for (const CounterexampleCase& c : counterexample_cases) {
        const StandardForm<double> sf(c.n, c.m, c.kx, c.kp);
        const double bound = std::string(c.bound_name) == "LB1" ? lb1(sf) : lb2(sf);
        const double candidate =
            std::string(c.candidate_name) == "f1" ? candidate_f1(sf) : candidate_f2(sf);
        const bool strict = bound > candidate;
        all_strict = all_strict && strict;
        os << c.bound_name << "(" << five_decimals(c.n) << ", " << five_decimals(c.m)
           << ", " << five_decimals(c.kx) << ", " << five_decimals(c.kp)
           << ") = " << five_decimals(bound) << (strict ? " > " : " <= ")
           << c.candidate_name << " = " << five_decimals(candidate)
           << (strict ? "   [candidate refuted]" : "   [REFUTATION FAILED]") << "\n";
    }
    os << (all_strict ? "both candidates are exceeded by a lower bound\n"
                      : "refutation failed\n");
    return os.str();
}

std::string check_to_text(const std::vector<ViolationReport>& suites)
{
    std::ostringstream os;
    bool all_passed = true;
    for (const ViolationReport& suite : suites) {
        os << suite.to_text() << "\n";
        all_passed = all_passed && suite.passed();
    }
    os << (all_passed ? "all property suites passed" : "PROPERTY VIOLATIONS FOUND") << "\n";
    return os.str();
}

std::string check_to_json(const std::vector<ViolationReport>& suites,
                          std::uint64_t seed, std::size_t count)
{
    ordered_json j;
    j["seed"] = seed;
    j["count"] = count;
    bool all_passed = true;
    ordered_json suite_array = ordered_json::array();
    for (const ViolationReport& suite : suites) {
        ordered_json s;
        s["name"] = suite.suite;
        s["samples"] = suite.samples;
        s["checks"] = suite.checks;
        s["violations"] = suite.violations;
        s["worst"] = suite.worst;
        s["passed"] = suite.passed();
        ordered_json details = ordered_json::array();
        for (const Violation& violation : suite.details)
            details.push_back({{"sample", violation.sample_index},
                               {"magnitude", violation.magnitude},
                               {"what", violation.what}});
        s["details"] = details;
        suite_array.push_back(s);
        all_passed = all_passed && suite.passed();
    }
    j["suites"] = suite_array;
    j["passed"] = all_passed;
    return j.dump(2) + "\n";
}

} // namespace eofb::io
