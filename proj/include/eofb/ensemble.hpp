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
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eofb/bounds.hpp"
#include "eofb/symmetrization.hpp"

namespace eofb {

/// Deterministic uniform generator. Doubles are derived from the raw
/// mt19937_64 stream (the engine is fully specified by the standard), so
/// sequences are identical across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    std::mt19937_64 engine_;
};

/// splitmix64 step, used to derive independent per-sample substreams so a
/// parallel evaluation order cannot change results.
inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline Rng substream(std::uint64_t seed, std::uint64_t index)
{
    return Rng(splitmix64(seed ^ splitmix64(index)));
}

/// Sampling box and budget for the random-state generators and the
/// Monte-Carlo property checks. The default box brackets the benchmark
/// states: n, m in [1, 4], kx in [0, 2.5], kp in [-2.5, 0].
template <typename Scalar = double>
struct EnsembleConfig {
    std::uint64_t seed = 1;
    std::size_t count = 1000;
    Scalar n_min = Scalar(1), n_max = Scalar(4);
    Scalar m_min = Scalar(1), m_max = Scalar(4);
    Scalar kx_min = Scalar(0), kx_max = Scalar(2.5);
    Scalar kp_min = Scalar(-2.5), kp_max = Scalar(0);
    Scalar max_squeeze_log = Scalar(2); ///< |log| of squeeze factors in random symplectics
};

namespace detail {

inline constexpr std::size_t rejection_probe = 1000000;
inline constexpr double min_acceptance_rate = 1e-3;

template <typename Scalar>
StandardForm<Scalar> draw_quadruple(Rng& rng, const EnsembleConfig<Scalar>& cfg,
                                    bool symmetric)
{
    const Scalar n = Scalar(rng.uniform(double(cfg.n_min), double(cfg.n_max)));
    const Scalar m = symmetric ? n : Scalar(rng.uniform(double(cfg.m_min), double(cfg.m_max)));
    const Scalar kx = Scalar(rng.uniform(double(cfg.kx_min), double(cfg.kx_max)));
    const Scalar kp = Scalar(rng.uniform(double(cfg.kp_min), double(cfg.kp_max)));
    return StandardForm<Scalar>(n, m, kx, kp);
}

template <typename Scalar>
std::vector<StandardForm<Scalar>>
rejection_sample(const EnsembleConfig<Scalar>& cfg, bool symmetric)
{
    std::vector<StandardForm<Scalar>> out;
    out.reserve(cfg.count);
    Rng rng = substream(cfg.seed, symmetric ? 0xe5u : 0xa7u);
    std::size_t draws = 0;
    while (out.size() < cfg.count) {
        ++draws;
        const StandardForm<Scalar> sf = draw_quadruple(rng, cfg, symmetric);
        if (classify(sf).tag == StateTag::entangled)
            out.push_back(sf);
        if (draws >= rejection_probe &&
            double(out.size()) < min_acceptance_rate * double(draws)) {
            std::ostringstream msg;
            msg << "rejection sampling accepted " << out.size() << " of " << draws
                << " draws; the configured box contains too few entangled states";
            fail(Errc::exhausted_rejection, msg.str());
        }
    }
    return out;
}

} // namespace detail

/// Rejection-samples canonical quadruples uniformly from the configured box,
/// keeping those that classify entangled. Deterministic given cfg.seed.
template <typename Scalar>
std::vector<StandardForm<Scalar>>
random_entangled_standard_form(const EnsembleConfig<Scalar>& cfg)
{
    return detail::rejection_sample(cfg, false);
}

/// Same sampler constrained to n = m (symmetric states).
template <typename Scalar>
std::vector<StandardForm<Scalar>>
random_symmetric_entangled_standard_form(const EnsembleConfig<Scalar>& cfg)
{
    return detail::rejection_sample(cfg, true);
}

/// Random 2x2 symplectic: rotation * squeeze * rotation, determinant 1,
/// squeeze factors within [e^{-max_log}, e^{max_log}].
template <typename Scalar>
ModeBlock<Scalar> random_symplectic_block(Rng& rng, Scalar max_log = Scalar(2))
{
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const double psi = rng.uniform(0.0, 2.0 * M_PI);
    const double z = rng.uniform(-double(max_log), double(max_log));
    ModeBlock<Scalar> rot1, rot2, squeeze;
    rot1 << Scalar(std::cos(phi)), Scalar(-std::sin(phi)),
            Scalar(std::sin(phi)), Scalar(std::cos(phi));
    rot2 << Scalar(std::cos(psi)), Scalar(-std::sin(psi)),
            Scalar(std::sin(psi)), Scalar(std::cos(psi));
    squeeze << Scalar(std::exp(z)), Scalar(0), Scalar(0), Scalar(std::exp(-z));
    return rot1 * squeeze * rot2;
}

/// Random mode-local symplectic: one independent block per mode.
template <typename Scalar = double>
CovarianceMatrix<Scalar> random_local_symplectic(Rng& rng, Scalar max_log = Scalar(2))
{
    CovarianceMatrix<Scalar> s = CovarianceMatrix<Scalar>::Zero();
    s.template block<2, 2>(0, 0) = random_symplectic_block<Scalar>(rng, max_log);
    s.template block<2, 2>(2, 2) = random_symplectic_block<Scalar>(rng, max_log);
    return s;
}

template <typename Scalar = double>
CovarianceMatrix<Scalar> random_local_symplectic(std::uint64_t seed)
{
    Rng rng = substream(seed, 0x51u);
    return random_local_symplectic<Scalar>(rng);
}

/// One failed sample of a Monte-Carlo property check.
struct Violation {
    std::size_t sample_index;
    double magnitude; ///< how far past the tolerance the sample landed
    std::string what;
};

/// Summary of one property suite run. Deterministic given (seed, count):
/// to_text() is byte-identical across runs.
struct ViolationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t checks = 0;
    std::size_t violations = 0;
    double worst = 0.0; ///< largest observed violation magnitude (0 if none)
    std::vector<Violation> details; ///< capped at 8 entries

    bool passed() const { return violations == 0; }

    void record(std::size_t index, double magnitude, const std::string& what)
    {
        ++violations;
        worst = std::max(worst, magnitude);
        if (details.size() < 8)
            details.push_back({index, magnitude, what});
    }

    std::string to_text() const
    {
        std::ostringstream os;
        os << suite << ": " << (passed() ? "pass" : "FAIL") << " (" << samples
           << " samples, " << checks << " checks, " << violations << " violations";
        if (violations > 0)
            os << ", worst " << worst;
        os << ")";
        for (const Violation& violation : details)
            os << "\n  sample " << violation.sample_index << ": " << violation.what
               << " (by " << violation.magnitude << ")";
        return os.str();
    }
};

/// Checks concavity of the EPR correlation over random finite mixtures of
/// Gaussian components with random means: the mixture's second moments are
/// the weight average of component CMs plus the mean-spread term, and
///   delta(mixture) >= sum_j p_j delta(component_j) - 1e-12
/// must hold, as must the Cauchy-Schwarz step
///   sum_j p_j <R>_j^2 >= (sum_j p_j <R>_j)^2
/// for both EPR quadratures.
template <typename Scalar = double>
ViolationReport concavity_check(const EnsembleConfig<Scalar>& cfg)
{
    using Vector4 = Eigen::Matrix<Scalar, 4, 1>;
    ViolationReport report;
    report.suite = "concavity";
    report.seed = cfg.seed;

    for (std::size_t sample = 0; sample < cfg.count; ++sample) {
        Rng rng = substream(cfg.seed, 0xc0000000ull + sample);
        const std::size_t parts = 2 + static_cast<std::size_t>(rng.next_u64() % 4);

        std::vector<Scalar> weights(parts);
        Scalar total = Scalar(0);
        for (Scalar& w : weights) {
            w = Scalar(rng.uniform(0.01, 1.0));
            total += w;
        }
        for (Scalar& w : weights)
            w /= total;

        std::vector<CovarianceMatrix<Scalar>> cms;
        std::vector<Vector4> means;
        for (std::size_t j = 0; j < parts; ++j) {
            StandardForm<Scalar> sf = detail::draw_quadruple(rng, cfg, false);
            std::size_t retries = 0;
            while (classify(sf).tag == StateTag::unphysical) {
                if (++retries > detail::rejection_probe)
                    fail(Errc::exhausted_rejection,
                         "concavity_check: the configured box contains no physical states");
                sf = detail::draw_quadruple(rng, cfg, false);
            }
            const CovarianceMatrix<Scalar> s = random_local_symplectic<Scalar>(rng, Scalar(1));
            cms.push_back(apply_local_symplectic(cm_from_standard_form(sf), s));
            Vector4 d = Vector4::Zero();
            if (rng.uniform01() < 0.7)
                for (int i = 0; i < 4; ++i)
                    d(i) = Scalar(rng.uniform(-2.0, 2.0));
            means.push_back(d);
        }

        // gamma = 2 * covariance, so the mean-spread term carries a factor 2.
        CovarianceMatrix<Scalar> mix_cm = CovarianceMatrix<Scalar>::Zero();
        Vector4 mean_bar = Vector4::Zero();
        Scalar avg_delta = Scalar(0);
        for (std::size_t j = 0; j < parts; ++j) {
            mix_cm += weights[j] * (cms[j] + Scalar(2) * means[j] * means[j].transpose());
            mean_bar += weights[j] * means[j];
            avg_delta += weights[j] * epr_delta(cms[j]);
        }
        mix_cm -= Scalar(2) * mean_bar * mean_bar.transpose();

        const Scalar mix_delta = epr_delta(mix_cm);
        ++report.checks;
        if (mix_delta < avg_delta - Scalar(1e-12)) {
            std::ostringstream what;
            what << "delta(mixture) = " << mix_delta << " < weighted component delta "
                 << avg_delta;
            report.record(sample, double(avg_delta - mix_delta), what.str());
        }

        // Cauchy-Schwarz on the two EPR quadrature means.
        for (int quadrature = 0; quadrature < 2; ++quadrature) {
            Scalar avg_sq = Scalar(0), avg = Scalar(0);
            for (std::size_t j = 0; j < parts; ++j) {
                const Scalar value = quadrature == 0 ? means[j](0) - means[j](2)
                                                     : means[j](1) + means[j](3);
                avg_sq += weights[j] * value * value;
                avg += weights[j] * value;
            }
            ++report.checks;
            if (avg_sq < avg * avg - Scalar(1e-14)) {
                std::ostringstream what;
                what << "mean-square " << avg_sq << " < squared mean " << avg * avg;
                report.record(sample, double(avg * avg - avg_sq), what.str());
            }
        }
        ++report.samples;
    }
    return report;
}

/// Cross-validates the three routes to the first lower bound (closed form,
/// Wigner-invariant form, full symmetrization pipeline) to 1e-8 pairwise.
template <typename Scalar = double>
ViolationReport pipeline_equivalence_check(const EnsembleConfig<Scalar>& cfg)
{
    ViolationReport report;
    report.suite = "pipeline_equivalence";
    report.seed = cfg.seed;

    const std::vector<StandardForm<Scalar>> states = random_entangled_standard_form(cfg);
    for (std::size_t i = 0; i < states.size(); ++i) {
        const CovarianceMatrix<Scalar> gamma = cm_from_standard_form(states[i]);
        const Scalar closed = lb1(states[i]);
        const Scalar via_w = lb1_via_w_invariants(gamma);
        const Scalar via_pipe = lb1_via_pipeline(gamma);
        const Scalar dev = std::max({std::abs(closed - via_w), std::abs(closed - via_pipe),
                                     std::abs(via_w - via_pipe)});
        ++report.samples;
        ++report.checks;
        if (dev > Scalar(1e-8)) {
            std::ostringstream what;
            what << "route disagreement: closed " << closed << ", invariants " << via_w
                 << ", pipeline " << via_pipe;
            report.record(i, double(dev), what.str());
        }
    }
    return report;
}

/// Checks invariance under random mode-local symplectics: the five
/// invariants to 1e-9 relative, and both bounds recomputed from the
/// conjugated CM's recovered standard form to 1e-8.
template <typename Scalar = double>
ViolationReport invariance_check(const EnsembleConfig<Scalar>& cfg)
{
    ViolationReport report;
    report.suite = "local_symplectic_invariance";
    report.seed = cfg.seed;

    const std::vector<StandardForm<Scalar>> states = random_entangled_standard_form(cfg);
    for (std::size_t i = 0; i < states.size(); ++i) {
        Rng rng = substream(cfg.seed, 0x1e000000ull + i);
        const CovarianceMatrix<Scalar> gamma = cm_from_standard_form(states[i]);
        const CovarianceMatrix<Scalar> s =
            random_local_symplectic<Scalar>(rng, cfg.max_squeeze_log);
        const CovarianceMatrix<Scalar> conjugated = apply_local_symplectic(gamma, s);

        const SymplecticInvariants<Scalar> before = invariants(gamma);
        const SymplecticInvariants<Scalar> after = invariants(conjugated);
        const Scalar inv_dev = std::max(
            {std::abs(before.i1 - after.i1) / std::max(Scalar(1), std::abs(before.i1)),
             std::abs(before.i2 - after.i2) / std::max(Scalar(1), std::abs(before.i2)),
             std::abs(before.i3 - after.i3) / std::max(Scalar(1), std::abs(before.i3)),
             std::abs(before.i4 - after.i4) / std::max(Scalar(1), std::abs(before.i4)),
             std::abs(before.i5 - after.i5) / std::max(Scalar(1), std::abs(before.i5))});
        ++report.checks;
        if (inv_dev > Scalar(1e-9)) {
            std::ostringstream what;
            what << "invariant drift " << inv_dev << " under conjugation";
            report.record(i, double(inv_dev), what.str());
        }

        const StandardForm<Scalar> recovered = standard_form(conjugated);
        const Scalar lb1_dev = std::abs(lb1(states[i]) - lb1(recovered));
        const Scalar lb2_dev = std::abs(lb2(states[i]) - lb2(recovered));
        ++report.checks;
        if (std::max(lb1_dev, lb2_dev) > Scalar(1e-8)) {
            std::ostringstream what;
            what << "bound drift: lb1 by " << lb1_dev << ", lb2 by " << lb2_dev;
            report.record(i, double(std::max(lb1_dev, lb2_dev)), what.str());
        }
        ++report.samples;
    }
    return report;
}

} // namespace eofb
