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

// Test-only oracles and fixtures. Nothing here calls into the residue
// machinery under test.

#ifndef ETAMU_TEST_SUPPORT_HPP
#define ETAMU_TEST_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "etamu/coeff_map.hpp"
#include "etamu/fading_params.hpp"

namespace etamu::testing {

/// Pr[X <= z Y] for independent exponential powers with means omega_x and
/// omega_y: integral of (1 - exp(-z y / omega_x)) exp(-y / omega_y) / omega_y dy.
inline double rayleigh_ratio_cdf(double z, double omega_x, double omega_y)
{
    return z * omega_y / (omega_x + z * omega_y);
}

/// Every composition of `total` into `slots` parts, by plain recursion.
inline void brute_compositions(std::uint32_t total, std::size_t slots, std::vector<std::uint32_t>& prefix,
                               std::set<std::vector<std::uint32_t>>& out)
{
    if (prefix.size() + 1 == slots) {
        prefix.push_back(total);
        out.insert(prefix);
        prefix.pop_back();
        return;
    }
    for (std::uint32_t v = 0; v <= total; ++v) {
        prefix.push_back(v);
        brute_compositions(total - v, slots, prefix, out);
        prefix.pop_back();
    }
}

inline std::set<std::vector<std::uint32_t>> brute_compositions(std::uint32_t total, std::size_t slots)
{
    std::set<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> prefix;
    brute_compositions(total, slots, prefix, out);
    return out;
}

inline std::vector<double> log_grid(double lo, double hi, int points)
{
    std::vector<double> z(points);
    for (int i = 0; i < points; ++i)
        z[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
    return z;
}

/// Signal branches of the three-branch eta-mu case at average SIR omega.
inline ScenarioSOI etamu_case_soi(double omega, double mu)
{
    return ScenarioSOI({{omega, 2.6, mu}, {0.8 * omega, 3.4, mu}, {0.7 * omega, 1.7, mu}});
}

inline ScenarioCCI etamu_case_cci()
{
    return ScenarioCCI::eta_mu({{1.0, 3.3, 2.0}, {1.0, 3.3, 2.0}, {0.5, 1.7, 1.0}});
}

inline ScenarioSOI nakagami_case_soi(double omega)
{
    return ScenarioSOI({{2.0 * omega, 1.0, 0.5}, {0.7 * omega, 0.6, 2.0}});
}

inline ScenarioCCI nakagami_case_cci(double m)
{
    return ScenarioCCI::nakagami({{1.0, m}, {1.0, m}, {0.5, m}, {0.2, m}});
}

struct RandomScenario {
    std::vector<EtaMuParams> soi;
    std::vector<EtaMuParams> cci;
};

/// Small random type I scenario: N <= 3, K <= 3, integer mu_Y <= 3.
inline RandomScenario random_scenario(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<int> mu_y(1, 3);
    std::uniform_real_distribution<double> log_omega(std::log(0.2), std::log(5.0));
    std::uniform_real_distribution<double> log_eta(std::log(0.1), std::log(10.0));
    std::uniform_real_distribution<double> mu_x(0.3, 3.0);

    RandomScenario s;
    const int n = count(rng);
    const int k = count(rng);
    for (int i = 0; i < n; ++i)
        s.soi.push_back({std::exp(log_omega(rng)), std::exp(log_eta(rng)), mu_x(rng)});
    for (int i = 0; i < k; ++i)
        s.cci.push_back({std::exp(log_omega(rng)), std::exp(log_eta(rng)), static_cast<double>(mu_y(rng))});
    return s;
}

// Smallest (beta_{j+1} - beta_j) / beta_{j+1} over adjacent poles.
inline double min_relative_gap(const PoleSet& poles)
{
    double gap = 1.0;
    for (std::size_t j = 1; j < poles.poles.size(); ++j)
        gap = std::min(gap, (poles.poles[j].beta - poles.poles[j - 1].beta) / poles.poles[j].beta);
    return gap;
}

// Residue sums lose roughly (b / gap)^b digits to cancellation, so scenarios
// whose interference poles crowd together are redrawn. The closed form
// reports those as unstable by design.
inline RandomScenario random_separated_scenario(std::mt19937_64& rng, double min_gap = 0.3)
{
    for (;;) {
        auto s = random_scenario(rng);
        if (min_relative_gap(merge_poles(cci_intermediate(ScenarioCCI::eta_mu(s.cci)))) >= min_gap)
            return s;
    }
}

} // namespace etamu::testing

#endif // ETAMU_TEST_SUPPORT_HPP
