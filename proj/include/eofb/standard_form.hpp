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

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "eofb/covariance.hpp"
#include "eofb/error.hpp"

namespace eofb {

/// Canonical block-diagonal parameterization of a two-mode Gaussian state:
/// A = diag(n, n), B = diag(m, m), C = diag(kx, kp). The constructor
/// canonicalizes to m >= n (mode swap) and kx >= |kp| >= 0 with kp carrying
/// the sign of kx*kp; both moves are local symplectics (mode swap aside)
/// and leave every invariant and bound unchanged.
template <typename Scalar>
struct StandardForm {
    Scalar n{1};
    Scalar m{1};
    Scalar kx{0};
    Scalar kp{0};
    MatrixRole role{MatrixRole::cm};

    StandardForm() = default;

    StandardForm(Scalar n_, Scalar m_, Scalar kx_, Scalar kp_,
                 MatrixRole role_ = MatrixRole::cm)
        : role(role_)
    {
        if (!(std::isfinite(n_) && std::isfinite(m_) && std::isfinite(kx_) &&
              std::isfinite(kp_)))
            fail(Errc::non_finite, "StandardForm: parameters must be finite");
        n = n_;
        m = m_;
        if (n > m)
            std::swap(n, m);
        const Scalar hi = std::max(std::abs(kx_), std::abs(kp_));
        const Scalar lo = std::min(std::abs(kx_), std::abs(kp_));
        kx = hi;
        kp = (kx_ * kp_ < Scalar(0)) ? -lo : lo;
    }
};

/// The five local-symplectic invariants of a 4x4 covariance matrix.
/// i1 = sqrt(det A), i2 = sqrt(det B), i3 = det C, i4 is the mixed block
/// trace, i5 = det gamma. For a standard form: i1 = n, i2 = m, i3 = kx*kp,
/// i4 = n*m*(kx^2 + kp^2), i5 = (nm - kx^2)(nm - kp^2).
template <typename Scalar>
struct SymplecticInvariants {
    Scalar i1, i2, i3, i4, i5;
    MatrixRole role{MatrixRole::cm};
};

template <typename Derived>
SymplecticInvariants<typename Derived::Scalar>
invariants(const Eigen::MatrixBase<Derived>& gamma, MatrixRole role = MatrixRole::cm)
{
    using Scalar = typename Derived::Scalar;
    detail::require_finite(gamma, "invariants");
    const CovarianceMatrix<Scalar> g = gamma;
    const ModeBlock<Scalar> a = g.template block<2, 2>(0, 0);
    const ModeBlock<Scalar> b = g.template block<2, 2>(2, 2);
    const ModeBlock<Scalar> c = g.template block<2, 2>(0, 2);

    const Scalar det_a = a.determinant();
    const Scalar det_b = b.determinant();
    if (det_a < Scalar(0) || det_b < Scalar(0)) {
        std::ostringstream msg;
        msg << "invariants: negative mode-block determinant (det A = " << det_a
            << ", det B = " << det_b << ")";
        fail(Errc::negative_block_determinant, msg.str());
    }

    const ModeBlock<Scalar> j1 = mode_symplectic_form<Scalar>();
    SymplecticInvariants<Scalar> inv;
    inv.i1 = std::sqrt(det_a);
    inv.i2 = std::sqrt(det_b);
    inv.i3 = c.determinant();
    inv.i4 = (a * j1 * c * j1 * b * j1 * c.transpose() * j1).trace();
    inv.i5 = g.determinant();
    inv.role = role;
    return inv;
}

/// Recovers the canonical quadruple from the invariants: n = i1, m = i2,
/// and kx^2, kp^2 are the roots of t^2 - (i4/(n m)) t + i3^2 = 0 with
/// |kx| >= |kp| and sign(kx*kp) = sign(i3). For the cm role, n and m must
/// respect the single-mode uncertainty bound (>= 1); the wigner role has
/// no such constraint.
template <typename Scalar>
StandardForm<Scalar>
standard_form_from_invariants(const SymplecticInvariants<Scalar>& inv,
                              Scalar tol = Scalar(1e-9))
{
    if (inv.i1 <= Scalar(0) || inv.i2 <= Scalar(0))
        fail(Errc::unphysical, "standard_form: nonpositive mode purity invariant");

    const Scalar sum_sq = inv.i4 / (inv.i1 * inv.i2); // kx^2 + kp^2
    Scalar disc = sum_sq * sum_sq - Scalar(4) * inv.i3 * inv.i3;
    if (disc < -tol * std::max(Scalar(1), sum_sq * sum_sq)) {
        std::ostringstream msg;
        msg << "standard_form: complex roots for (kx^2, kp^2); discriminant = " << disc;
        fail(Errc::complex_root, msg.str());
    }
    disc = std::max(disc, Scalar(0));

    const Scalar root = std::sqrt(disc);
    const Scalar kx_sq = std::max((sum_sq + root) / Scalar(2), Scalar(0));
    const Scalar kp_sq = std::max((sum_sq - root) / Scalar(2), Scalar(0));
    const Scalar kx = std::sqrt(kx_sq);
    const Scalar kp = (inv.i3 < Scalar(0) ? Scalar(-1) : Scalar(1)) * std::sqrt(kp_sq);

    if (inv.role == MatrixRole::cm &&
        (inv.i1 < Scalar(1) - tol || inv.i2 < Scalar(1) - tol)) {
        std::ostringstream msg;
        msg << "standard_form: mode purity below vacuum (n = " << inv.i1
            << ", m = " << inv.i2 << ")";
        fail(Errc::unphysical, msg.str());
    }
    return StandardForm<Scalar>(inv.i1, inv.i2, kx, kp, inv.role);
}

template <typename Derived>
StandardForm<typename Derived::Scalar>
standard_form(const Eigen::MatrixBase<Derived>& gamma, MatrixRole role = MatrixRole::cm)
{
    return standard_form_from_invariants(invariants(gamma, role));
}

/// Builds the block-diagonal CM: diag blocks n*I and m*I, C = diag(kx, kp).
template <typename Scalar>
CovarianceMatrix<Scalar> cm_from_standard_form(const StandardForm<Scalar>& sf)
{
    CovarianceMatrix<Scalar> g = CovarianceMatrix<Scalar>::Zero();
    g(0, 0) = g(1, 1) = sf.n;
    g(2, 2) = g(3, 3) = sf.m;
    g(0, 2) = g(2, 0) = sf.kx;
    g(1, 3) = g(3, 1) = sf.kp;
    return g;
}

/// Maps the Wigner-side invariants to the gamma-side ones. In terms of the
/// unrooted block determinants the relations are I1 = W2/W5, I2 = W1/W5,
/// I3 = W3/W5, I4 = W4/W5^2, I5 = 1/W5; with the rooted storage used here
/// the first two pick up a sqrt(W5). Note the 1 <-> 2 mode crossing.
template <typename Scalar>
SymplecticInvariants<Scalar>
relate_invariants(const SymplecticInvariants<Scalar>& w)
{
    if (w.role != MatrixRole::wigner)
        fail(Errc::domain_error, "relate_invariants: expected wigner-role invariants");
    if (w.i5 == Scalar(0))
        fail(Errc::division_by_zero, "relate_invariants: W5 = 0");
    if (w.i5 < Scalar(0))
        fail(Errc::domain_error, "relate_invariants: W5 < 0 has no real preimage");

    const Scalar sqrt_w5 = std::sqrt(w.i5);
    SymplecticInvariants<Scalar> inv;
    inv.i1 = w.i2 / sqrt_w5;
    inv.i2 = w.i1 / sqrt_w5;
    inv.i3 = w.i3 / w.i5;
    inv.i4 = w.i4 / (w.i5 * w.i5);
    inv.i5 = Scalar(1) / w.i5;
    inv.role = MatrixRole::cm;
    return inv;
}

enum class StateTag { unphysical, separable, entangled };

/// The three standard-form inequalities a physical entangled state obeys.
enum class Inequality {
    physicality_sum,     ///< det gamma + 1 >= n^2 + m^2 + 2 kx kp
    physicality_product, ///< n m - kx^2 >= 1
    entanglement,        ///< det gamma + 1 <  n^2 + m^2 - 2 kx kp (strict)
};

inline const char* to_string(Inequality ineq) noexcept
{
    switch (ineq) {
    case Inequality::physicality_sum: return "det(gamma) + 1 >= n^2 + m^2 + 2*kx*kp";
    case Inequality::physicality_product: return "n*m - kx^2 >= 1";
    case Inequality::entanglement: return "det(gamma) + 1 < n^2 + m^2 - 2*kx*kp";
    }
    return "unknown";
}

inline const char* to_string(StateTag tag) noexcept
{
    switch (tag) {
    case StateTag::unphysical: return "unphysical";
    case StateTag::separable: return "separable";
    case StateTag::entangled: return "entangled";
    }
    return "unknown";
}

template <typename Scalar>
struct StateClass {
    StateTag tag;
    std::optional<Inequality> violated;
    Scalar det_gamma;
};

template <typename Scalar>
Scalar det_from_standard_form(const StandardForm<Scalar>& sf)
{
    return (sf.n * sf.m - sf.kx * sf.kx) * (sf.n * sf.m - sf.kp * sf.kp);
}

/// Total classification of a canonical quadruple. Equality cases of the two
/// physicality inequalities count as physical; the entanglement inequality
/// is strict, so its equality case is separable.
template <typename Scalar>
StateClass<Scalar> classify(const StandardForm<Scalar>& sf)
{
    StateClass<Scalar> result;
    result.det_gamma = det_from_standard_form(sf);

    const Scalar lhs = result.det_gamma + Scalar(1);
    const Scalar nn_mm = sf.n * sf.n + sf.m * sf.m;
    if (lhs < nn_mm + Scalar(2) * sf.kx * sf.kp) {
        result.tag = StateTag::unphysical;
        result.violated = Inequality::physicality_sum;
        return result;
    }
    if (sf.n * sf.m - sf.kx * sf.kx < Scalar(1)) {
        result.tag = StateTag::unphysical;
        result.violated = Inequality::physicality_product;
        return result;
    }
    if (lhs < nn_mm - Scalar(2) * sf.kx * sf.kp) {
        result.tag = StateTag::entangled;
        result.violated = std::nullopt;
        return result;
    }
    result.tag = StateTag::separable;
    result.violated = Inequality::entanglement;
    return result;
}

} // namespace eofb
