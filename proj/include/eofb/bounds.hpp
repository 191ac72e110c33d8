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

#include "eofb/standard_form.hpp"

namespace eofb {

/// Entanglement (in ebits) of the symmetric Gaussian state whose EPR
/// variance product is delta:
///   f(delta) = c+ log2(c+) - c- log2(c-),  c± = (delta^{-1/2} ± delta^{1/2})^2 / 4.
/// f is decreasing and convex on (0, 1], f(1) = 0 under the 0*log(0) = 0
/// convention, and is extended by 0 for delta >= 1 so degenerate bound
/// arguments stay total.
template <typename Scalar>
Scalar f_of_delta(Scalar delta)
{
    if (!(delta > Scalar(0))) {
        std::ostringstream msg;
        msg << "f_of_delta: argument " << delta << " outside (0, inf)";
        fail(Errc::domain_error, msg.str());
    }
    if (delta >= Scalar(1))
        return Scalar(0);
    const Scalar inv_root = Scalar(1) / std::sqrt(delta);
    const Scalar root = std::sqrt(delta);
    const Scalar c_plus = (inv_root + root) * (inv_root + root) / Scalar(4);
    const Scalar c_minus = (inv_root - root) * (inv_root - root) / Scalar(4);
    Scalar value = c_plus * std::log2(c_plus);
    if (c_minus > Scalar(0))
        value -= c_minus * std::log2(c_minus);
    return value;
}

/// Exact EoF of a symmetric state (n = m): f(sqrt((n - |kx|)(n - |kp|))).
/// Separable symmetric states land on arguments >= 1 and return 0.
template <typename Scalar>
Scalar eof_symmetric(const StandardForm<Scalar>& sf, Scalar tol = Scalar(1e-12))
{
    if (std::abs(sf.n - sf.m) > tol * std::max(Scalar(1), sf.m)) {
        std::ostringstream msg;
        msg << "eof_symmetric: n = " << sf.n << " and m = " << sf.m << " differ";
        fail(Errc::not_symmetric, msg.str());
    }
    const Scalar arg = (sf.n - std::abs(sf.kx)) * (sf.n - std::abs(sf.kp));
    if (arg <= Scalar(0))
        fail(Errc::domain_error, "eof_symmetric: nonpositive variance product");
    return f_of_delta(std::sqrt(arg));
}

template <typename Scalar>
struct Lb1Breakdown {
    Scalar radicand;  ///< squared argument handed to f
    Scalar value;     ///< the bound, in ebits
    bool degenerate;  ///< radicand >= 1, bound collapsed to 0
};

namespace detail {

template <typename Scalar>
void require_entangled(const StandardForm<Scalar>& sf, const char* who)
{
    const StateClass<Scalar> cls = classify(sf);
    if (cls.tag == StateTag::unphysical) {
        std::ostringstream msg;
        msg << who << ": state violates " << to_string(*cls.violated);
        fail(Errc::unphysical, msg.str());
    }
    if (cls.tag == StateTag::separable) {
        std::ostringstream msg;
        msg << who << ": state is separable";
        fail(Errc::not_entangled, msg.str());
    }
}

} // namespace detail

/// First lower bound: the EoF of the symmetric state the input maps to
/// under the local symmetrization protocol, in closed form over the
/// canonical quadruple. Reduces to eof_symmetric at n = m.
template <typename Scalar>
Lb1Breakdown<Scalar> lb1_breakdown(const StandardForm<Scalar>& sf,
                                   Scalar tol = Scalar(1e-9))
{
    detail::require_entangled(sf, "lb1");
    const Scalar n = sf.n, m = sf.m, kx = sf.kx, kp = sf.kp;

    // slack_nm, slack_mn and denom are all <= 0 on the physical entangled
    // domain, which keeps the cross term's square root real and the
    // radicand positive.
    const Scalar slack_nm = n - m * (n * m - kp * kp);
    const Scalar slack_mn = m - n * (n * m - kp * kp);
    const Scalar denom = m * (Scalar(1) - m * m) + n * kp * kp;

    const Scalar cross_sq = slack_nm * slack_mn;
    const Scalar cross_scale = std::max(Scalar(1), slack_nm * slack_nm + slack_mn * slack_mn);
    if (cross_sq < -tol * cross_scale) {
        std::ostringstream msg;
        msg << "lb1: mixed-sign slack factors (" << slack_nm << ", " << slack_mn
            << "); input is outside the bound's derivation domain";
        fail(Errc::negative_radicand, msg.str());
    }
    const Scalar cross = std::sqrt(std::max(cross_sq, Scalar(0)));

    Lb1Breakdown<Scalar> out{};
    out.radicand = (n * m * slack_nm - kx * kp * slack_mn +
                    std::abs(m * kx - n * kp) * cross) / denom;
    if (out.radicand <= Scalar(0)) {
        std::ostringstream msg;
        msg << "lb1: nonpositive radicand " << out.radicand;
        fail(Errc::domain_error, msg.str());
    }
    out.degenerate = out.radicand >= Scalar(1);
    out.value = out.degenerate ? Scalar(0) : f_of_delta(std::sqrt(out.radicand));
    return out;
}

template <typename Scalar>
Scalar lb1(const StandardForm<Scalar>& sf)
{
    return lb1_breakdown(sf).value;
}

/// Argument of the second lower bound before the clamp: the EPR variance
/// product reached by the optimal mode-local squeezing,
/// sqrt(((n+m)/2 - |kx|) ((n+m)/2 - |kp|)).
template <typename Scalar>
Scalar lb2_argument(const StandardForm<Scalar>& sf)
{
    const Scalar mean = (sf.n + sf.m) / Scalar(2);
    return std::sqrt((mean - std::abs(sf.kx)) * (mean - std::abs(sf.kp)));
}

/// Second lower bound: f(min{1, lb2_argument}). When the argument clamps
/// at 1 the bound degenerates to 0 (it then only certifies EoF >= 0).
template <typename Scalar>
Scalar lb2(const StandardForm<Scalar>& sf)
{
    detail::require_entangled(sf, "lb2");
    return f_of_delta(std::min(Scalar(1), lb2_argument(sf)));
}

/// EPR correlation of a (zero-mean) state:
///   min{1, (Var(X1 - X2) + Var(P1 + P2)) / 2}
/// with Var(R_i) = gamma_ii / 2 in this CM normalization. 1 for vacuum,
/// -> 0 for ideal EPR correlations.
template <typename Derived>
typename Derived::Scalar epr_delta(const Eigen::MatrixBase<Derived>& gamma)
{
    using Scalar = typename Derived::Scalar;
    const PhysicalityReport<Scalar> report = validate_cm(gamma);
    if (!report.physical)
        fail(Errc::unphysical, "epr_delta: input fails the physicality check");
    const CovarianceMatrix<Scalar> g = gamma;
    const Scalar quad = g(0, 0) + g(2, 2) - Scalar(2) * g(0, 2) +
                        g(1, 1) + g(3, 3) + Scalar(2) * g(1, 3);
    return std::min(Scalar(1), quad / Scalar(4));
}

template <typename Scalar>
struct LocalSqueezing {
    Scalar scale;     ///< factor applied to X on both modes (1/scale on P)
    Scalar delta_min; ///< min{1, sqrt(ab)}, the EPR correlation it reaches
};

/// The mode-local squeezing diag(s, 1/s) (x) diag(s, 1/s) that minimizes the
/// EPR correlation of a standard form: s = (b/a)^{1/4} with
/// a = (n+m)/2 - |kx|, b = (n+m)/2 - |kp|, turning (a + b)/2 into sqrt(ab).
template <typename Scalar>
LocalSqueezing<Scalar> optimal_local_squeezing(const StandardForm<Scalar>& sf)
{
    const Scalar mean = (sf.n + sf.m) / Scalar(2);
    const Scalar a = mean - std::abs(sf.kx);
    const Scalar b = mean - std::abs(sf.kp);
    if (a <= Scalar(0)) {
        std::ostringstream msg;
        msg << "optimal_local_squeezing: (n+m)/2 - |kx| = " << a
            << " <= 0; no minimizing squeeze exists";
        fail(Errc::domain_error, msg.str());
    }
    LocalSqueezing<Scalar> out;
    out.scale = std::pow(b / a, Scalar(0.25));
    out.delta_min = std::min(Scalar(1), std::sqrt(a * b));
    return out;
}

/// Entanglement entropy of the two-mode squeezed state with parameter r:
///   cosh^2(r) log2 cosh^2(r) - sinh^2(r) log2 sinh^2(r),
/// which equals f(e^{-2r}).
template <typename Scalar>
Scalar squeezed_state_entropy(Scalar r)
{
    if (r < Scalar(0)) {
        std::ostringstream msg;
        msg << "squeezed_state_entropy: negative squeezing parameter " << r;
        fail(Errc::domain_error, msg.str());
    }
    if (r == Scalar(0))
        return Scalar(0);
    const Scalar ch = std::cosh(r) * std::cosh(r);
    const Scalar sh = std::sinh(r) * std::sinh(r);
    Scalar value = ch * std::log2(ch);
    if (sh > Scalar(0))
        value -= sh * std::log2(sh);
    return value;
}

/// Candidate EoF expression built on the geometric mean sqrt(nm). Ruled out
/// as the EoF: lb1 exceeds it on part of the entangled domain.
template <typename Scalar>
Scalar candidate_f1(const StandardForm<Scalar>& sf)
{
    const Scalar mean = std::sqrt(sf.n * sf.m);
    const Scalar arg = (mean - std::abs(sf.kx)) * (mean - std::abs(sf.kp));
    if (arg <= Scalar(0))
        fail(Errc::domain_error, "candidate_f1: nonpositive variance product");
    return f_of_delta(std::sqrt(arg));
}

/// Candidate EoF expression built on the quadratic mean sqrt((n^2+m^2)/2).
/// Ruled out as the EoF: lb2 exceeds it on part of the entangled domain.
template <typename Scalar>
Scalar candidate_f2(const StandardForm<Scalar>& sf)
{
    const Scalar mean = std::sqrt((sf.n * sf.n + sf.m * sf.m) / Scalar(2));
    const Scalar arg = (mean - std::abs(sf.kx)) * (mean - std::abs(sf.kp));
    if (arg <= Scalar(0))
        fail(Errc::domain_error, "candidate_f2: nonpositive variance product");
    return f_of_delta(std::sqrt(arg));
}

/// Everything the analysis of one entangled state produces.
template <typename Scalar>
struct BoundReport {
    Scalar lb1;             ///< symmetrization bound, ebits
    Scalar lb2;             ///< EPR-correlation bound, ebits
    Scalar best;            ///< max(lb1, lb2)
    Scalar delta_raw;       ///< EPR correlation of the canonical CM
    Scalar delta_optimized; ///< EPR correlation after optimal local squeezing
    bool lb2_degenerate;    ///< lb2 argument hit the clamp at 1
};

template <typename Scalar>
BoundReport<Scalar> bound_report(const StandardForm<Scalar>& sf)
{
    detail::require_entangled(sf, "bound_report");
    BoundReport<Scalar> report{};
    report.lb1 = lb1(sf);
    report.lb2 = lb2(sf);
    report.best = std::max(report.lb1, report.lb2);
    report.delta_raw = epr_delta(cm_from_standard_form(sf));
    report.delta_optimized = optimal_local_squeezing(sf).delta_min;
    report.lb2_degenerate = lb2_argument(sf) >= Scalar(1);
    return report;
}

template <typename Derived>
BoundReport<typename Derived::Scalar>
bound_report(const Eigen::MatrixBase<Derived>& gamma)
{
    return bound_report(standard_form(gamma));
}

} // namespace eofb
