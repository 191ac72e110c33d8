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

#include "eofb/ensemble.hpp"
#include "eofb/symmetrization.hpp"

using namespace eofb;
using Matrix4 = Eigen::Matrix4d;

namespace {
constexpr double lb1_row1 = 0.14634740095034983;
constexpr double lb1_row2 = 0.086874004568291941;
} // namespace

TEST_CASE("symmetric inputs pass through unchanged with zero angle")
{
    const StandardForm<double> wsf(0.9, 0.9, 0.3, -0.2, MatrixRole::wigner);
    const auto result = symmetrize(wsf);
    CHECK(result.tan_sq_theta == 0.0);
    CHECK_FALSE(result.modes_swapped);
    CHECK((result.symmetric_wigner_cm - cm_from_standard_form(wsf))
              .lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("symmetrizing benchmark row 1 reproduces its first bound")
{
    const StandardForm<double> sf(1.5, 2.0, 1.2, -1.0);
    const Matrix4 gamma_w = wigner_from_cm(cm_from_standard_form(sf));
    const auto wsf = standard_form(gamma_w, MatrixRole::wigner);
    const auto result = symmetrize(wsf);
    CHECK(result.tan_sq_theta > 0.0);
    const double value = eof_from_symmetric_wigner_cm(result.symmetric_wigner_cm);
    CHECK(value == doctest::Approx(0.14635).epsilon(1e-4));
    CHECK(value == doctest::Approx(lb1_row1).epsilon(1e-10));
}

TEST_CASE("output mode-block determinants match on random asymmetric inputs")
{
    EnsembleConfig<double> cfg;
    cfg.seed = 57;
    cfg.count = 1000;
    for (const auto& sf : random_entangled_standard_form(cfg)) {
        const auto wsf = standard_form(wigner_from_cm(cm_from_standard_form(sf)),
                                       MatrixRole::wigner);
        const auto result = symmetrize(wsf);
        const Matrix4& g = result.symmetric_wigner_cm;
        const double det_a = g.block<2, 2>(0, 0).determinant();
        const double det_b = g.block<2, 2>(2, 2).determinant();
        CHECK(std::abs(det_a - det_b) <= 1e-9);
        CHECK(result.tan_sq_theta >= 0.0);
    }
}

TEST_CASE("symmetrized states remain physical")
{
    EnsembleConfig<double> cfg;
    cfg.seed = 61;
    cfg.count = 300;
    for (const auto& sf : random_entangled_standard_form(cfg)) {
        const auto wsf = standard_form(wigner_from_cm(cm_from_standard_form(sf)),
                                       MatrixRole::wigner);
        const auto result = symmetrize(wsf);
        // physicality of a Wigner-form CM is checked on its dual
        const Matrix4 dual = cm_from_wigner(result.symmetric_wigner_cm);
        CHECK(validate_cm(dual).physical);
    }
}

TEST_CASE("symmetrize requires the wigner role")
{
    try {
        symmetrize(StandardForm<double>(1.5, 2.0, 1.2, -1.0));
        FAIL("expected eofb::Error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::domain_error);
    }
}

TEST_CASE("quadruples without a physical preimage are rejected")
{
    // W5 = (NM - Kx^2)(NM - Kp^2) < 0
    const StandardForm<double> wsf(1.0, 2.0, 1.5, -0.2, MatrixRole::wigner);
    try {
        symmetrize(wsf);
        FAIL("expected eofb::Error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unphysical);
    }
}

TEST_CASE("angle-domain violations are reported, not clamped")
{
    // W5 = 1.75 > 0 passes the sanity gate, but
    // tan^2 = (4 - 1) / (1 - 2 (2 - 1)) = -3.
    const StandardForm<double> wsf(1.0, 2.0, 1.0, -0.5, MatrixRole::wigner);
    try {
        symmetrize(wsf);
        FAIL("expected eofb::Error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_angle);
    }
}

TEST_CASE("pipeline route: benchmark row 2")
{
    const Matrix4 gamma = cm_from_standard_form(StandardForm<double>(1.5, 2.0, 1.0, -1.0));
    const double value = lb1_via_pipeline(gamma);
    CHECK(value == doctest::Approx(0.08687).epsilon(1e-4));
    CHECK(value == doctest::Approx(lb1_row2).epsilon(1e-10));
}

TEST_CASE("pipeline route on a symmetric state equals eof_symmetric")
{
    const StandardForm<double> sf(1.8, 1.8, 1.1, -0.9);
    const Matrix4 gamma = cm_from_standard_form(sf);
    CHECK(std::abs(lb1_via_pipeline(gamma) - eof_symmetric(sf)) <= 1e-12);
    CHECK(std::abs(lb1_via_w_invariants(gamma) - eof_symmetric(sf)) <= 1e-12);
}

TEST_CASE("three routes agree on random entangled states")
{
    EnsembleConfig<double> cfg;
    cfg.seed = 71;
    cfg.count = 300;
    for (const auto& sf : random_entangled_standard_form(cfg)) {
        const Matrix4 gamma = cm_from_standard_form(sf);
        const double closed = lb1(sf);
        CHECK(std::abs(lb1_via_pipeline(gamma) - closed) <= 1e-8);
        CHECK(std::abs(lb1_via_w_invariants(gamma) - closed) <= 1e-8);
    }
}

TEST_CASE("pipeline rejects separable input")
{
    const Matrix4 vacuum = Matrix4::Identity();
    try {
        lb1_via_pipeline(vacuum);
        FAIL("expected eofb::Error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_entangled);
    }
}

TEST_CASE("re-symmetrizing a symmetrized state is the identity")
{
    const StandardForm<double> sf(1.5, 2.0, 1.2, -1.0);
    const auto wsf = standard_form(wigner_from_cm(cm_from_standard_form(sf)),
                                   MatrixRole::wigner);
    const auto once = symmetrize(wsf);
    const auto wsf_again =
        standard_form(once.symmetric_wigner_cm, MatrixRole::wigner);
    const auto twice = symmetrize(wsf_again);
    CHECK(twice.tan_sq_theta == 0.0);
    CHECK(std::abs(eof_from_symmetric_wigner_cm(once.symmetric_wigner_cm) -
                   eof_from_symmetric_wigner_cm(twice.symmetric_wigner_cm)) <= 1e-10);
}

TEST_CASE("eof_from_symmetric_wigner_cm rejects asymmetric matrices")
{
    const StandardForm<double> sf(1.5, 2.0, 1.2, -1.0);
    const Matrix4 gamma_w = wigner_from_cm(cm_from_standard_form(sf));
    try {
        eof_from_symmetric_wigner_cm(gamma_w);
        FAIL("expected eofb::Error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_symmetric);
    }
}
