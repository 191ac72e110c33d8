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

#include <cmath>
#include <sstream>

#include "eofb/bounds.hpp"
#include "eofb/standard_form.hpp"

namespace eofb {

/// Outcome of the local symmetrization protocol applied to a Wigner-form
/// standard form. The output CM is in Wigner form with equal mode-block
/// determinants; mode 1 of the output carries the input's larger-variance
/// mode (the protocol is defined for N > M).
template <typename Scalar>
struct SymmetrizationResult {
    CovarianceMatrix<Scalar> symmetric_wigner_cm;
    Scalar tan_sq_theta;
    StandardForm<Scalar> inputs_echo; ///< canonical (N, M, Kx, Kp) actually used
    bool modes_swapped;               ///< output mode 1 == input mode 2
};

namespace detail {

/// Wigner-side invariants evaluated on a standard-form quadruple.
template <typename Scalar>
SymplecticInvariants<Scalar> invariants_of_quadruple(const StandardForm<Scalar>& sf)
{
    SymplecticInvariants<Scalar> w;
    w.i1 = sf.n;
    w.i2 = sf.m;
    w.i3 = sf.kx * sf.kp;
    w.i4 = sf.n * sf.m * (sf.kx * sf.kx + sf.kp * sf.kp);
    w.i5 = (sf.n * sf.m - sf.kx * sf.kx) * (sf.n * sf.m - sf.kp * sf.kp);
    w.role = sf.role;
    return w;
}

} // namespace detail

/// Applies the measurement-based symmetrization map to a Wigner-form
/// quadruple with N > M:
///   tan^2(theta) = (N^2 - M^2) / (M - N(NM - Kx^2)),
/// mode blocks rebuilt with cos^2, sin^2 and cos(theta) = +sqrt(cos^2).
/// The angle condition forces det A_W = det B_W on the output. The sign of
/// cos(theta) only flips both off-diagonal entries together (a local pi
/// rotation), so no invariant or bound depends on it.
template <typename Scalar>
SymmetrizationResult<Scalar> symmetrize(const StandardForm<Scalar>& wigner_sf)
{
    if (wigner_sf.role != MatrixRole::wigner)
        fail(Errc::domain_error, "symmetrize: expected a wigner-role standard form");

    // Only what the map itself needs is checked here: positive purities and
    // a positive dual determinant. Full physicality of the underlying state
    // is the caller's contract (physical inputs always land in the angle
    // domain; anything else surfaces as invalid_angle below).
    const Scalar w5 = (wigner_sf.n * wigner_sf.m - wigner_sf.kx * wigner_sf.kx) *
                      (wigner_sf.n * wigner_sf.m - wigner_sf.kp * wigner_sf.kp);
    if (wigner_sf.n <= Scalar(0) || w5 <= Scalar(0)) {
        std::ostringstream msg;
        msg << "symmetrize: quadruple (" << wigner_sf.n << ", " << wigner_sf.m << ", "
            << wigner_sf.kx << ", " << wigner_sf.kp
            << ") has no physical preimage (W5 = " << w5 << ")";
        fail(Errc::unphysical, msg.str());
    }

    SymmetrizationResult<Scalar> result{};
    result.inputs_echo = wigner_sf;

    // Canonical storage keeps m >= n; the protocol wants mode 1 to carry
    // the larger value, so asymmetric inputs always get relabeled.
    const Scalar big = wigner_sf.m;
    const Scalar small = wigner_sf.n;
    result.modes_swapped = big != small;

    if (std::abs(big - small) <= Scalar(1e-12) * std::max(Scalar(1), big)) {
        result.tan_sq_theta = Scalar(0);
        result.modes_swapped = false;
        result.symmetric_wigner_cm = cm_from_standard_form(wigner_sf);
        return result;
    }

    const Scalar n_big = big, m_small = small;
    const Scalar kx = wigner_sf.kx, kp = wigner_sf.kp;

    const Scalar numer = n_big * n_big - m_small * m_small;
    const Scalar denom = m_small - n_big * (n_big * m_small - kx * kx);
    if (denom == Scalar(0) || numer / denom < Scalar(0)) {
        std::ostringstream msg;
        msg << "symmetrize: tan^2(theta) = " << numer << " / " << denom
            << " is outside [0, inf); input is not in the map's domain";
        fail(Errc::invalid_angle, msg.str());
    }
    const Scalar tan_sq = numer / denom;
    const Scalar cos_sq = Scalar(1) / (Scalar(1) + tan_sq);
    const Scalar sin_sq = tan_sq / (Scalar(1) + tan_sq);
    const Scalar cos_theta = std::sqrt(cos_sq);
    const Scalar mix = cos_sq + m_small * sin_sq;

    CovarianceMatrix<Scalar> g = CovarianceMatrix<Scalar>::Zero();
    g(0, 0) = (n_big * cos_sq + (n_big * m_small - kx * kx) * sin_sq) / mix;
    g(1, 1) = (n_big * cos_sq + n_big * m_small * sin_sq) / mix;
    g(2, 2) = m_small / mix;
    g(3, 3) = sin_sq + m_small * cos_sq;
    g(0, 2) = g(2, 0) = kx * cos_theta / mix;
    g(1, 3) = g(3, 1) = kp * cos_theta;

    result.tan_sq_theta = tan_sq;
    result.symmetric_wigner_cm = g;
    return result;
}

/// EoF of a symmetric state given its Wigner-form CM, evaluated purely in
/// Wigner invariants: f( sqrt((W1 - W3 - sqrt(W4 - 2 W1 W3)) / W5) ) with
/// the unrooted W1 = det A_W.
template <typename Derived>
typename Derived::Scalar
eof_from_symmetric_wigner_cm(const Eigen::MatrixBase<Derived>& gamma_w,
                             typename Derived::Scalar tol = typename Derived::Scalar(1e-9))
{
    using Scalar = typename Derived::Scalar;
    const SymplecticInvariants<Scalar> w = invariants(gamma_w, MatrixRole::wigner);
    const Scalar w1 = w.i1 * w.i1;
    const Scalar w2 = w.i2 * w.i2;
    if (std::abs(w1 - w2) > tol * std::max(Scalar(1), w1)) {
        std::ostringstream msg;
        msg << "eof_from_symmetric_wigner_cm: block determinants " << w1 << " and "
            << w2 << " differ";
        fail(Errc::not_symmetric, msg.str());
    }
    const Scalar inner = std::max(w.i4 - Scalar(2) * w1 * w.i3, Scalar(0));
    const Scalar arg_sq = (w1 - w.i3 - std::sqrt(inner)) / w.i5;
    if (arg_sq <= Scalar(0))
        fail(Errc::domain_error, "eof_from_symmetric_wigner_cm: nonpositive argument");
    return f_of_delta(std::sqrt(arg_sq));
}

/// First lower bound computed the long way around:
/// gamma -> gamma_W -> standard form -> symmetrize -> Wigner invariants -> f.
/// Agrees with the closed-form lb1 to better than 1e-8.
template <typename Derived>
typename Derived::Scalar
lb1_via_pipeline(const Eigen::MatrixBase<Derived>& gamma)
{
    using Scalar = typename Derived::Scalar;
    detail::require_entangled(standard_form(gamma), "lb1_via_pipeline");
    const CovarianceMatrix<Scalar> gw = wigner_from_cm(gamma);
    const StandardForm<Scalar> wsf = standard_form(gw, MatrixRole::wigner);
    const SymmetrizationResult<Scalar> sym = symmetrize(wsf);
    return eof_from_symmetric_wigner_cm(sym.symmetric_wigner_cm);
}

/// First lower bound evaluated directly in the asymmetric state's Wigner
/// invariants, the intermediate bridge between the pipeline and the closed
/// form. tan^2(theta) and Kx^2 are reconstructed from the invariants alone.
template <typename Derived>
typename Derived::Scalar
lb1_via_w_invariants(const Eigen::MatrixBase<Derived>& gamma)
{
    using Scalar = typename Derived::Scalar;
    detail::require_entangled(standard_form(gamma), "lb1_via_w_invariants");
    const SymplecticInvariants<Scalar> w =
        invariants(wigner_from_cm(gamma), MatrixRole::wigner);

    const Scalar n_big = std::max(w.i1, w.i2);  // N = sqrt(W1)
    const Scalar m_small = std::min(w.i1, w.i2); // M = sqrt(W2)
    const Scalar w3 = w.i3, w4 = w.i4, w5 = w.i5;
    const Scalar nm = n_big * m_small;

    const Scalar kx_disc = std::max(w4 * w4 - Scalar(4) * nm * nm * w3 * w3, Scalar(0));
    const Scalar kx_sq = (w4 + std::sqrt(kx_disc)) / (Scalar(2) * nm);

    Scalar tan_sq = Scalar(0);
    if (n_big - m_small > Scalar(1e-12) * std::max(Scalar(1), n_big)) {
        const Scalar numer = n_big * n_big - m_small * m_small;
        const Scalar denom = m_small - n_big * (nm - kx_sq);
        if (denom == Scalar(0) || numer / denom < Scalar(0)) {
            std::ostringstream msg;
            msg << "lb1_via_w_invariants: tan^2(theta) = " << numer << " / " << denom
                << " is outside [0, inf)";
            fail(Errc::invalid_angle, msg.str());
        }
        tan_sq = numer / denom;
    }

    const Scalar m_sq = m_small * m_small;
    const Scalar alpha = m_sq - w3 + m_small * tan_sq;
    const Scalar eps = w5 + n_big * (nm - kx_sq) * tan_sq;
    const Scalar beta = w4 - Scalar(2) * m_sq * w3 +
                        tan_sq * ((w4 - Scalar(2) * w3 - w3 * w3) * m_small +
                                  (Scalar(1) - m_sq) * kx_sq * n_big);

    const Scalar arg_sq = (alpha - std::sqrt(std::max(beta, Scalar(0)))) / eps;
    if (arg_sq <= Scalar(0))
        fail(Errc::domain_error, "lb1_via_w_invariants: nonpositive argument");
    return f_of_delta(std::sqrt(arg_sq));
}

} // namespace eofb
