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

#ifndef ETAMU_COEFF_MAP_HPP
#define ETAMU_COEFF_MAP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "etamu/fading_params.hpp"

namespace etamu {

/// One Gamma-type factor (1 - s/alpha)^(-a) of the signal-power MGF.
struct RatePair {
    double a;
    double alpha;

    friend bool operator==(const RatePair&, const RatePair&) = default;
};

/// The 2N numerator pairs. Branch order is preserved: entries 2n and 2n+1
/// (zero-based) belong to branch n.
struct NumeratorCoefficients {
    std::vector<RatePair> pairs;
};

struct IntermediateCoefficient {
    double omega;
    double rho;
    std::uint32_t mu;
};

struct Pole {
    double beta;
    std::uint32_t b;

    friend bool operator==(const Pole&, const Pole&) = default;
};

/// Distinct interference rates with integer multiplicities, ascending in beta.
struct PoleSet {
    std::vector<Pole> poles;

    std::uint64_t total_multiplicity() const noexcept;
};

/// Eigenvalue group of the correlated-MRC signal-power MGF.
struct CorrelatedGroup {
    double lambda_x;
    double lambda_y;
    std::uint32_t xi_x;
    std::uint32_t xi_y;
};

class CorrelatedSpec {
public:
    explicit CorrelatedSpec(std::vector<CorrelatedGroup> groups);

    std::span<const CorrelatedGroup> groups() const noexcept { return groups_; }

private:
    std::vector<CorrelatedGroup> groups_;
};

/// Two rates coincide iff |x - y| <= kPoleMergeTolerance * max(x, y).
inline constexpr double kPoleMergeTolerance = 1e-9;

/// Shared factor (mu / omega) * (2 + eta + 1/eta) / (1 + eta).
double etamu_rate(const EtaMuParams& params) noexcept;

NumeratorCoefficients soi_coefficients(const ScenarioSOI& soi);

/// omega_k and rho_k = eta_k * omega_k for an eta-mu flavoured CCI.
std::vector<IntermediateCoefficient> cci_intermediate(const ScenarioCCI& cci);

PoleSet merge_poles(std::span<const IntermediateCoefficient> inter);

/// Sorts by rate and fuses coincident rates, summing multiplicities. Each
/// cluster is represented by its smallest rate.
PoleSet merge_rates(std::vector<Pole> rates);

/// Poles m_k / omega_k of a Nakagami-m CCI.
PoleSet nakagami_poles(const ScenarioCCI& cci);

/// Dispatches on the CCI flavour.
PoleSet cci_poles(const ScenarioCCI& cci);

/// (xi_x/2, 1/(2 lambda_x)), (xi_y/2, 1/(2 lambda_y)) per group, in X,Y order.
NumeratorCoefficients correlated_coefficients(const CorrelatedSpec& spec);

} // namespace etamu

#endif // ETAMU_COEFF_MAP_HPP
