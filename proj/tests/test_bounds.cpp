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

#include <doctest.h>

#include <cmath>

#include "eofb/bounds.hpp"
#include "eofb/ensemble.hpp"

using namespace eofb;
using Matrix4 = Eigen::Matrix4d;

namespace {

// Values computed independently at 40-digit precision and frozen here.
constexpr double lb1_row1 = 0.14634740095034983;
constexpr double lb2_row1 = 0.28919161874269421;
constexpr double lb1_row2 = 0.086874004568291941;
constexpr double lb2_row2 = 0.1467204651464522;
constexpr double lb1_row3 = 0.024479603472149982;
constexpr double lb2_row3 = 0.0068142853868748935;
constexpr double lb1_row4 = 0.0054919990203376858;
constexpr double lb1_row5 = 0.0072485225336621665;
constexpr double lb1_row6 = 0.0017275959396995373;
constexpr double lb2_row6 = 8.8999013606028743e-6;
constexpr double f_at_080 = 0.097170033033320187;
constexpr double f1_case = 0.00090916520032676138;
constexpr double f2_case = 0.18620456838102211;
constexpr double lb2_f2_case = 0.20885319767195522;

// Brute-force minimizer of delta(s) = (s^2 a + b / s^2) / 2 over the squeeze
// factor, used as the oracle for optimal_local_squeezing.
double minimize_squeezed_delta(double a, double b)
{
    double lo = 0.2, hi = 5.0;
    double best = std::numeric_limits<double>::infinity();
    double best_s = 1.0;
    for (int refine = 0; refine < 6; ++refine) {
        const int steps = 2000;
        for (int i = 0; i <= steps; ++i) {
            const double s = lo + (hi - lo) * i / steps;
            const double value = 0.5 * (s * s * a + b / (s * s));
            if (value < best) {
                best = value;
                best_s = s;
            }
        }
        const double width = (hi - lo) / steps;
        lo = best_s - 2 * width;
        hi = best_s + 2 * width;
    }
    return best;
}

} // namespace

TEST_CASE("f_of_delta basics")
{
    CHECK(f_of_delta(1.0) == 0.0); // c- = 0 with the 0 log 0 convention
    CHECK(f_of_delta(1.5) == 0.0); // extension beyond the domain
    CHECK(f_of_delta(0.8) == doctest::Approx(f_at_080).epsilon(1e-13));
    CHECK(f_of_delta(0.642261) == doctest::Approx(0.28919).epsilon(1e-4));
    try {
        f_of_delta(0.0);
        FAIL("expected eofb::Error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::domain_error);
    }
    CHECK_THROWS_AS(f_of_delta(-0.3), Error);
}

TEST_CASE("f_of_delta matches the squeezed-state entropy at e^{-2r}")
{
    for (const double r : {0.1, 0.5, 1.0, 2.0}) {
        const double entropy = std::cosh(r) * std::cosh(r) * std::log2(std::cosh(r) * std::cosh(r)) -
                               std::sinh(r) * std::sinh(r) * std::log2(std::sinh(r) * std::sinh(r));
        CHECK(f_of_delta(std::exp(-2.0 * r)) == doctest::Approx(entropy).epsilon(1e-12));
    }
}

TEST_CASE("f_of_delta is decreasing and convex on a sampled grid")
{
    const int points = 2001;
    std::vector<double> values(points);
    for (int i = 0; i < points; ++i) {
        const double delta = 0.01 + (1.0 - 0.01) * i / (points - 1);
        values[static_cast<std::size_t>(i)] = f_of_delta(delta);
    }
    for (int i = 0; i + 1 < points; ++i)
        CHECK(values[i + 1] - values[i] <= 0.0);
    for (int i = 0; i + 2 < points; ++i)
        CHECK(values[i + 2] - 2 * values[i + 1] + values[i] >= -1e-9);
}

TEST_CASE("eof_symmetric")
{
    SUBCASE("product state has no entanglement")
    {
        CHECK(eof_symmetric(StandardForm<double>(1.4, 1.4, 0.0, 0.0)) == 0.0);
    }
    SUBCASE("forced argument 0.8")
    {
        const double value = eof_symmetric(StandardForm<double>(2.0, 2.0, 1.2, -1.2));
        CHECK(value == doctest::Approx(f_at_080).epsilon(1e-12));
    }
    SUBCASE("asymmetric input is rejected")
    {
        try {
            eof_symmetric(StandardForm<double>(1.5, 2.0, 1.2, -1.0));
            FAIL("expected eofb::Error");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::not_symmetric);
        }
    }
}

TEST_CASE("lb1 reproduces the frozen benchmark values")
{
    CHECK(lb1(StandardForm<double>(1.5, 2.0, 1.2, -1.0)) == doctest::Approx(lb1_row1).epsilon(1e-12));
    CHECK(lb1(StandardForm<double>(1.5, 2.0, 1.0, -1.0)) == doctest::Approx(lb1_row2).epsilon(1e-12));
    CHECK(lb1(StandardForm<double>(2.0, 3.0, 1.8, -1.2)) == doctest::Approx(lb1_row3).epsilon(1e-12));
    CHECK(lb1(StandardForm<double>(1.7, 2.6, 1.3, -0.9)) == doctest::Approx(lb1_row4).epsilon(1e-12));
    CHECK(lb1(StandardForm<double>(2.0, 3.0, 1.7, -1.2)) == doctest::Approx(lb1_row5).epsilon(1e-12));
    CHECK(lb1(StandardForm<double>(2.0, 2.5, 1.3, -1.2)) == doctest::Approx(lb1_row6).epsilon(1e-12));
}

TEST_CASE("lb1 rejects separable and unphysical inputs")
{
    try {
        lb1(StandardForm<double>(1.0, 1.0, 0.0, 0.0));
        FAIL("expected eofb::Error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_entangled);
    }
    try {
        lb1(StandardForm<double>(1.0, 1.0, 0.5, -0.5));
        FAIL("expected eofb::Error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unphysical);
    }
}

TEST_CASE("lb2 reproduces the frozen benchmark values and the clamp")
{
    CHECK(lb2(StandardForm<double>(1.5, 2.0, 1.2, -1.0)) == doctest::Approx(lb2_row1).epsilon(1e-12));
    CHECK(lb2(StandardForm<double>(1.5, 2.0, 1.0, -1.0)) == doctest::Approx(lb2_row2).epsilon(1e-12));
    CHECK(lb2(StandardForm<double>(2.0, 3.0, 1.8, -1.2)) == doctest::Approx(lb2_row3).epsilon(1e-12));
    CHECK(lb2(StandardForm<double>(2.0, 2.5, 1.3, -1.2)) == doctest::Approx(lb2_row6).epsilon(1e-9));

    // rows 4 and 5: the variance product exceeds 1, the clamp engages
    const StandardForm<double> row4(1.7, 2.6, 1.3, -0.9);
    CHECK(lb2(row4) == 0.0);
    CHECK(lb2_argument(row4) > 1.0);
    const StandardForm<double> row5(2.0, 3.0, 1.7, -1.2);
    CHECK(lb2(row5) == 0.0);
    CHECK(lb2_argument(row5) == doctest::Approx(std::sqrt(1.04)).epsilon(1e-14));
}

TEST_CASE("both bounds collapse to eof_symmetric at n = m")
{
    EnsembleConfig<double> cfg;
    cfg.seed = 17;
    cfg.count = 300;
    for (const auto& sf : random_symmetric_entangled_standard_form(cfg)) {
        const double reference = eof_symmetric(sf);
        CHECK(std::abs(lb1(sf) - reference) <= 1e-10);
        CHECK(std::abs(lb2(sf) - reference) <= 1e-10);
    }
}

TEST_CASE("lb1 radicand and slack signs over the entangled ensemble")
{
    EnsembleConfig<double> cfg;
    cfg.seed = 23;
    cfg.count = 500;
    for (const auto& sf : random_entangled_standard_form(cfg)) {
        const auto breakdown = lb1_breakdown(sf);
        CHECK(breakdown.radicand > 0.0);
        CHECK(breakdown.radicand <= 1.0);
        CHECK_FALSE(breakdown.degenerate);
        CHECK(sf.n - sf.m * (sf.n * sf.m - sf.kp * sf.kp) <= 0.0);
        CHECK(sf.m - sf.n * (sf.n * sf.m - sf.kp * sf.kp) <= 0.0);
        CHECK(sf.m * (1.0 - sf.m * sf.m) + sf.n * sf.kp * sf.kp <= 0.0);
    }
}

TEST_CASE("epr_delta")
{
    SUBCASE("vacuum") { CHECK(epr_delta(Matrix4(Matrix4::Identity())) == 1.0); }
    SUBCASE("standard-form substitution")
    {
        const StandardForm<double> sf(1.5, 2.0, 1.2, -1.0);
        const double direct = epr_delta(cm_from_standard_form(sf));
        const double expected = std::min(1.0, ((sf.n + sf.m) - sf.kx + sf.kp) / 2.0);
        CHECK(direct == doctest::Approx(expected).epsilon(1e-14));
    }
    SUBCASE("two-mode squeezed state")
    {
        for (const double r : {0.1, 0.7, 1.5}) {
            const StandardForm<double> sf(std::cosh(2 * r), std::cosh(2 * r),
                                          std::sinh(2 * r), -std::sinh(2 * r));
            CHECK(epr_delta(cm_from_standard_form(sf)) ==
                  doctest::Approx(std::exp(-2 * r)).epsilon(1e-12));
        }
    }
    SUBCASE("unphysical input is rejected")
    {
        try {
            epr_delta(Matrix4(0.5 * Matrix4::Identity()));
            FAIL("expected eofb::Error");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::unphysical);
        }
    }
}

TEST_CASE("optimal_local_squeezing")
{
    SUBCASE("balanced correlations need no squeeze")
    {
        const auto out = optimal_local_squeezing(StandardForm<double>(2.0, 2.0, 1.2, -1.2));
        CHECK(out.scale == doctest::Approx(1.0));
    }
    SUBCASE("benchmark row 1 against the scalar-minimization oracle")
    {
        const StandardForm<double> sf(1.5, 2.0, 1.2, -1.0);
        const auto out = optimal_local_squeezing(sf);
        CHECK(out.delta_min == doctest::Approx(std::sqrt(0.55 * 0.75)).epsilon(1e-14));
        CHECK(out.delta_min == doctest::Approx(minimize_squeezed_delta(0.55, 0.75)).epsilon(1e-8));
    }
    SUBCASE("squeezing never helps past the unsqueezed correlation")
    {
        EnsembleConfig<double> cfg;
        cfg.seed = 29;
        cfg.count = 300;
        for (const auto& sf : random_entangled_standard_form(cfg)) {
            const auto out = optimal_local_squeezing(sf);
            CHECK(out.delta_min <= epr_delta(cm_from_standard_form(sf)) + 1e-14);
        }
    }
    SUBCASE("degenerate direction is a domain error")
    {
        try {
            optimal_local_squeezing(StandardForm<double>(1.0, 4.0, 2.5, -0.1));
            FAIL("expected eofb::Error");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::domain_error);
        }
    }
}

TEST_CASE("squeezed_state_entropy")
{
    CHECK(squeezed_state_entropy(0.0) == 0.0);
    for (const double r : {0.1, 1.0, 3.0})
        CHECK(std::abs(squeezed_state_entropy(r) - f_of_delta(std::exp(-2 * r))) <= 1e-12);

    double previous = 0.0;
    for (int i = 1; i <= 60; ++i) {
        const double value = squeezed_state_entropy(0.05 * i);
        CHECK(value > previous);
        previous = value;
    }
    CHECK_THROWS_AS(squeezed_state_entropy(-0.1), Error);
}

TEST_CASE("candidate functions against the refutation cases")
{
    const StandardForm<double> case1(2.0, 2.5, 1.3, -1.2);
    CHECK(candidate_f1(case1) == doctest::Approx(f1_case).epsilon(1e-12));
    CHECK(lb1(case1) > candidate_f1(case1));

    const StandardForm<double> case2(1.5, 2.0, 1.1, -1.0);
    CHECK(candidate_f2(case2) == doctest::Approx(f2_case).epsilon(1e-12));
    CHECK(lb2(case2) == doctest::Approx(lb2_f2_case).epsilon(1e-12));
    CHECK(lb2(case2) > candidate_f2(case2));
}

TEST_CASE("candidates agree with eof_symmetric at n = m")
{
    const StandardForm<double> sf(1.8, 1.8, 1.1, -0.9);
    const double reference = eof_symmetric(sf);
    CHECK(candidate_f1(sf) == doctest::Approx(reference).epsilon(1e-12));
    CHECK(candidate_f2(sf) == doctest::Approx(reference).epsilon(1e-12));
}

TEST_CASE("bound_report assembles the benchmark rows")
{
    const auto row1 = bound_report(StandardForm<double>(1.5, 2.0, 1.2, -1.0));
    CHECK(row1.lb1 == doctest::Approx(0.14635).epsilon(1e-4));
    CHECK(row1.lb2 == doctest::Approx(0.28919).epsilon(1e-4));
    CHECK(row1.best == row1.lb2);
    CHECK_FALSE(row1.lb2_degenerate);

    const auto row4 = bound_report(StandardForm<double>(1.7, 2.6, 1.3, -0.9));
    CHECK(row4.lb1 == doctest::Approx(lb1_row4).epsilon(1e-12));
    CHECK(row4.lb2 == 0.0);
    CHECK(row4.best == row4.lb1);
    CHECK(row4.lb2_degenerate);

    const auto row6 = bound_report(StandardForm<double>(2.0, 2.5, 1.3, -1.2));
    CHECK(row6.best == row6.lb1);
    CHECK(row6.delta_optimized <= row6.delta_raw);

    CHECK_THROWS_AS(bound_report(StandardForm<double>(1.0, 1.0, 0.0, 0.0)), Error);
}

TEST_CASE("bound_report accepts a covariance matrix directly")
{
    const Matrix4 gamma = cm_from_standard_form(StandardForm<double>(1.5, 2.0, 1.2, -1.0));
    const auto report = bound_report(gamma);
    CHECK(report.lb1 == doctest::Approx(lb1_row1).epsilon(1e-12));
}

TEST_CASE("dominance between the bounds is state-dependent")
{
    // first two benchmark rows: lb2 wins; last four: lb1 wins
    const std::array<StandardForm<double>, 6> rows{
        StandardForm<double>(1.5, 2.0, 1.2, -1.0), StandardForm<double>(1.5, 2.0, 1.0, -1.0),
        StandardForm<double>(2.0, 3.0, 1.8, -1.2), StandardForm<double>(1.7, 2.6, 1.3, -0.9),
        StandardForm<double>(2.0, 3.0, 1.7, -1.2), StandardForm<double>(2.0, 2.5, 1.3, -1.2)};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i < 2)
            CHECK(lb2(rows[i]) > lb1(rows[i]));
        else
            CHECK(lb1(rows[i]) > lb2(rows[i]));
    }
}

TEST_CASE("delta never increases under optimal squeezing (AM-GM chain)")
{
    EnsembleConfig<double> cfg;
    cfg.seed = 37;
    cfg.count = 200;
    for (const auto& sf : random_entangled_standard_form(cfg)) {
        const auto report = bound_report(sf);
        CHECK(report.delta_optimized <= report.delta_raw + 1e-14);
    }
}
