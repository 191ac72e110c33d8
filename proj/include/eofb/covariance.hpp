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

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "eofb/error.hpp"

namespace eofb {

/// Covariance matrices are real symmetric 4x4 matrices over the quadrature
/// ordering (X1, P1, X2, P2), in units where the vacuum CM is the identity.
/// The same storage is used for the Wigner-form matrix J^T gamma^{-1} J;
/// functions that care take a MatrixRole.
template <typename Scalar>
using CovarianceMatrix = Eigen::Matrix<Scalar, 4, 4>;

template <typename Scalar>
using ModeBlock = Eigen::Matrix<Scalar, 2, 2>;

/// Distinguishes a covariance matrix gamma from its Wigner dual gamma_W,
/// and likewise the (n, m, kx, kp) quadruple from (N, M, Kx, Kp).
enum class MatrixRole { cm, wigner };

/// Single-mode symplectic form J1 = [[0, -1], [1, 0]].
template <typename Scalar>
ModeBlock<Scalar> mode_symplectic_form()
{
    ModeBlock<Scalar> j;
    j << Scalar(0), Scalar(-1), Scalar(1), Scalar(0);
    return j;
}

/// Two-mode symplectic form J = J1 (+) J1. Satisfies J^2 = -I and J^T = -J.
template <typename Scalar>
CovarianceMatrix<Scalar> symplectic_form()
{
    CovarianceMatrix<Scalar> j = CovarianceMatrix<Scalar>::Zero();
    j.template block<2, 2>(0, 0) = mode_symplectic_form<Scalar>();
    j.template block<2, 2>(2, 2) = mode_symplectic_form<Scalar>();
    return j;
}

template <typename Scalar>
struct PhysicalityReport {
    Scalar symmetry_defect;   ///< max |gamma_ij - gamma_ji|
    Scalar min_eigenvalue;    ///< smallest eigenvalue of (gamma + gamma^T)/2
    Scalar min_uncertainty_eigenvalue; ///< smallest eigenvalue of gamma - J^T gamma^{-1} J
    bool singular;            ///< |det gamma| below the invertibility floor
    bool physical;
};

namespace detail {

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& gamma, const char* who)
{
    if (!gamma.allFinite())
        fail(Errc::non_finite, std::string(who) + ": matrix has NaN/Inf entries");
}

template <typename Scalar>
Scalar singularity_floor(const CovarianceMatrix<Scalar>& gamma)
{
    const Scalar scale = std::max(Scalar(1), gamma.template lpNorm<Eigen::Infinity>());
    return Scalar(1e-12) * scale * scale * scale * scale;
}

} // namespace detail

/// Checks whether gamma describes a physical state: strictly positive
/// definite and gamma - J^T gamma^{-1} J positive semidefinite. tol_pd is
/// an absolute eigenvalue floor; tol_psd is taken relative to
/// max(1, |gamma|_inf), since the inversion roundoff in the uncertainty
/// matrix grows with the norm (strongly squeezed pure states sit exactly
/// on the boundary). A numerically singular gamma is reported unphysical
/// rather than raised.
template <typename Derived>
PhysicalityReport<typename Derived::Scalar>
validate_cm(const Eigen::MatrixBase<Derived>& gamma,
            typename Derived::Scalar tol_pd = typename Derived::Scalar(1e-10),
            typename Derived::Scalar tol_psd = typename Derived::Scalar(1e-9))
{
    using Scalar = typename Derived::Scalar;
    static_assert(Derived::RowsAtCompileTime == 4 && Derived::ColsAtCompileTime == 4,
                  "covariance matrices are 4x4");
    detail::require_finite(gamma, "validate_cm");

    PhysicalityReport<Scalar> report{};
    const CovarianceMatrix<Scalar> g = gamma;
    report.symmetry_defect = (g - g.transpose()).template lpNorm<Eigen::Infinity>();

    const CovarianceMatrix<Scalar> sym = (g + g.transpose()) / Scalar(2);
    Eigen::SelfAdjointEigenSolver<CovarianceMatrix<Scalar>> solver(sym);
    report.min_eigenvalue = solver.eigenvalues().minCoeff();

    const Scalar det = solver.eigenvalues().prod();
    report.singular = std::abs(det) < detail::singularity_floor(sym);
    if (report.singular) {
        report.min_uncertainty_eigenvalue = std::numeric_limits<Scalar>::quiet_NaN();
        report.physical = false;
        return report;
    }

    // The inverse is assembled from the eigendecomposition: the cofactor
    // formula loses too many digits on strongly squeezed states (large
    // entries, determinant near 1), and pure states sit exactly on the
    // boundary this check decides.
    const CovarianceMatrix<Scalar> inverse =
        solver.eigenvectors() *
        solver.eigenvalues().cwiseInverse().asDiagonal() *
        solver.eigenvectors().transpose();
    const CovarianceMatrix<Scalar> j = symplectic_form<Scalar>();
    const CovarianceMatrix<Scalar> dual = j.transpose() * inverse * j;
    Eigen::SelfAdjointEigenSolver<CovarianceMatrix<Scalar>> diff_solver(
        CovarianceMatrix<Scalar>(sym - dual), Eigen::EigenvaluesOnly);
    report.min_uncertainty_eigenvalue = diff_solver.eigenvalues().minCoeff();

    const Scalar psd_scale = std::max(Scalar(1), sym.template lpNorm<Eigen::Infinity>());
    report.physical = report.min_eigenvalue > tol_pd &&
                      report.min_uncertainty_eigenvalue >= -tol_psd * psd_scale;
    return report;
}

/// Wigner dual gamma_W = J^T gamma^{-1} J. Involutive: applying it twice
/// recovers gamma, and det gamma_W = 1 / det gamma.
template <typename Derived>
CovarianceMatrix<typename Derived::Scalar>
wigner_from_cm(const Eigen::MatrixBase<Derived>& gamma)
{
    using Scalar = typename Derived::Scalar;
    detail::require_finite(gamma, "wigner_from_cm");
    const CovarianceMatrix<Scalar> g = gamma;
    if (std::abs(g.determinant()) < detail::singularity_floor(g))
        fail(Errc::singular, "wigner_from_cm: matrix is not invertible");
    const CovarianceMatrix<Scalar> j = symplectic_form<Scalar>();
    // Eigen's fixed-size 4x4 inverse is the analytic cofactor formula.
    return j.transpose() * g.inverse() * j;
}

/// The relation is its own inverse, so converting back uses the same formula.
template <typename Derived>
CovarianceMatrix<typename Derived::Scalar>
cm_from_wigner(const Eigen::MatrixBase<Derived>& gamma_w)
{
    return wigner_from_cm(gamma_w);
}

/// Congruence gamma -> S gamma S^T for a mode-local symplectic S
/// (block-diagonal, each 2x2 block of determinant 1).
template <typename DerivedG, typename DerivedS>
CovarianceMatrix<typename DerivedG::Scalar>
apply_local_symplectic(const Eigen::MatrixBase<DerivedG>& gamma,
                       const Eigen::MatrixBase<DerivedS>& s,
                       typename DerivedG::Scalar det_tol = typename DerivedG::Scalar(1e-9))
{
    using Scalar = typename DerivedG::Scalar;
    detail::require_finite(gamma, "apply_local_symplectic");
    detail::require_finite(s, "apply_local_symplectic");
    const CovarianceMatrix<Scalar> smat = s;

    const Scalar off = smat.template block<2, 2>(0, 2).template lpNorm<Eigen::Infinity>() +
                       smat.template block<2, 2>(2, 0).template lpNorm<Eigen::Infinity>();
    if (off > Scalar(0))
        fail(Errc::not_local, "apply_local_symplectic: off-diagonal mode blocks are nonzero");

    for (int mode = 0; mode < 2; ++mode) {
        const Scalar det = smat.template block<2, 2>(2 * mode, 2 * mode).determinant();
        if (std::abs(det - Scalar(1)) > det_tol) {
            std::ostringstream msg;
            msg << "apply_local_symplectic: mode " << mode + 1
                << " block determinant " << det << " != 1";
            fail(Errc::not_symplectic, msg.str());
        }
    }
    return smat * gamma * smat.transpose();
}

} // namespace eofb
