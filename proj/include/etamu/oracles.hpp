// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef ETAMU_ORACLES_HPP
#define ETAMU_ORACLES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "etamu/coeff_map.hpp"
#include "etamu/fading_params.hpp"

namespace etamu {

// ---------------------------------------------------------------------------
// Monte Carlo
// ---------------------------------------------------------------------------

/// 64-bit Mersenne Twister with an open-interval uniform and a polar-method
/// normal. Kept local so that streams reproduce bit-for-bit across standard
/// library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on (0, 1).
    double uniform() noexcept { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }
    double normal() noexcept;

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Gamma(shape, rate) by Marsaglia-Tsang; shapes below one use the
/// G(shape + 1) * U^(1/shape) boost, so any positive shape is exact.
class GammaSampler {
public:
    GammaSampler(double shape, double rate);

    double operator()(Rng& rng) const noexcept;

    double shape() const noexcept { return shape_; }
    double rate() const noexcept { return rate_; }

private:
    double shape_;
    double rate_;
    double d_;
    double c_;
    double boost_exponent_; // 1/shape when shape < 1, else 0
};

/// A power that is a sum of independent Gamma variates.
struct PowerModel {
    std::vector<GammaSampler> components;

    double sample(Rng& rng) const noexcept;
    double mean() const noexcept;
};

/// In-phase and quadrature Gamma components of a squared eta-mu variate,
/// built from the per-cluster Gaussian variances.
std::vector<GammaSampler> etamu_components(const EtaMuParams& params);

double sample_squared_etamu(const EtaMuParams& params, Rng& rng);

PowerModel signal_power_model(const ScenarioSOI& soi);
PowerModel signal_power_model(const CorrelatedSpec& soi);
PowerModel interference_power_model(const ScenarioCCI& cci);

struct McConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    std::uint32_t streams = 8;
};

struct McEstimate {
    double p_hat = 0.0;
    double std_err = 0.0; // sqrt(p_hat (1 - p_hat) / n)
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

/// Seed of substream `stream` (SplitMix64 finaliser over seed and index).
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint32_t stream) noexcept;

/// Fraction of draws with signal <= zeta * interference. Substreams may run
/// concurrently; the result depends only on (samples, seed, streams).
McEstimate mc_outage(const PowerModel& signal, const PowerModel& interference, double zeta,
                     const McConfig& cfg);
McEstimate mc_outage(const ScenarioSOI& soi, const ScenarioCCI& cci, double zeta, const McConfig& cfg);
McEstimate mc_outage(const CorrelatedSpec& soi, const ScenarioCCI& cci, double zeta, const McConfig& cfg);

// ---------------------------------------------------------------------------
// Contour inversion
// ---------------------------------------------------------------------------

struct ContourConfig {
    enum class Abscissa {
        /// Minimiser of Xi on (0, smallest pole). Xi is log-convex there, so
        /// the minimiser is unique; the vertical line through it carries the
        /// least cancellation when multiplicities are large.
        Saddle,
        /// epsilon = abscissa_fraction * smallest pole.
        FixedFraction,
    };

    Abscissa abscissa = Abscissa::Saddle;
    double abscissa_fraction = 0.5; // used by FixedFraction
    double truncation_tol = 1e-10;  // relative to the running integral
    std::uint64_t max_nodes = 200'000;
};

struct ContourResult {
    double value = 0.0;
    double abscissa = 0.0;
    double error_estimate = 0.0;
    std::uint64_t nodes = 0;
};

/// Real abscissa in (0, smallest pole) minimising Xi(x).
double saddle_abscissa(double z, const NumeratorCoefficients& numerator, const PoleSet& poles);

/// CDF at z as (1/pi) * integral over t >= 0 of Re Xi(eps + i t), where
/// Xi(p) = (1/p) prod (1 + p/(z alpha_l))^(-a_l) prod (1 - p/beta_j)^(-b_j).
/// Adaptive Gauss-Kronrod panels on [0, T], T doubled until the algebraic
/// tail bound falls under the tolerance. Throws QuadratureNotConverged.
ContourResult contour_cdf(double z, const NumeratorCoefficients& numerator, const PoleSet& poles,
                          const ContourConfig& cfg = {});

} // namespace etamu

#endif // ETAMU_ORACLES_HPP
