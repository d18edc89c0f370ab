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

#include "etamu/coeff_map.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace etamu {

std::uint64_t PoleSet::total_multiplicity() const noexcept
{
    std::uint64_t total = 0;
    for (const auto& p : poles)
        total += p.b;
    return total;
}

CorrelatedSpec::CorrelatedSpec(std::vector<CorrelatedGroup> groups) : groups_(std::move(groups))
{
    if (groups_.empty())
        throw Error(ErrorCode::InvalidArgument, "correlated soi needs at least one group");
    for (std::size_t v = 0; v < groups_.size(); ++v) {
        const auto& g = groups_[v];
        for (auto [name, value] : {std::pair{"lambda_x", g.lambda_x}, std::pair{"lambda_y", g.lambda_y}}) {
            std::ostringstream msg;
            msg << "soi[" << v << "]." << name;
            if (!std::isfinite(value))
                throw Error(ErrorCode::NonFiniteParameter, msg.str() + " must be finite");
            if (!(value > 0.0))
                throw Error(ErrorCode::NonPositiveParameter, msg.str() + " must be strictly positive");
        }
        if (g.xi_x < 1 || g.xi_y < 1) {
            std::ostringstream msg;
            msg << "soi[" << v << "]: multiplicities xi_x, xi_y must be positive integers";
            throw Error(ErrorCode::NonPositiveParameter, msg.str());
        }
    }
}

double etamu_rate(const EtaMuParams& params) noexcept
{
    const double eta = params.eta;
    return (params.mu / params.omega) * (2.0 + eta + 1.0 / eta) / (1.0 + eta);
}

NumeratorCoefficients soi_coefficients(const ScenarioSOI& soi)
{
    NumeratorCoefficients out;
    out.pairs.reserve(2 * soi.size());
    for (const auto& branch : soi.branches()) {
        const double rate = etamu_rate(branch);
        out.pairs.push_back({branch.mu, rate});
        out.pairs.push_back({branch.mu, branch.eta * rate});
    }
    return out;
}

std::vector<IntermediateCoefficient> cci_intermediate(const ScenarioCCI& cci)
{
    std::vector<IntermediateCoefficient> out;
    for (const auto& y : cci.eta_mu_interferers()) {
        const double omega = etamu_rate(y);
        out.push_back({omega, y.eta * omega, static_cast<std::uint32_t>(std::lround(y.mu))});
    }
    return out;
}

PoleSet merge_rates(std::vector<Pole> rates)
{
    std::sort(rates.begin(), rates.end(), [](const Pole& l, const Pole& r) {
        return l.beta < r.beta || (l.beta == r.beta && l.b < r.b);
    });
    PoleSet out;
    for (const auto& p : rates) {
        if (!out.poles.empty()) {
            auto& head = out.poles.back();
            if (std::abs(p.beta - head.beta) <= kPoleMergeTolerance * std::max(p.beta, head.beta)) {
                head.b += p.b;
                continue;
            }
        }
        out.poles.push_back(p);
    }
    return out;
}

PoleSet merge_poles(std::span<const IntermediateCoefficient> inter)
{
    std::vector<Pole> rates;
    rates.reserve(2 * inter.size());
    for (const auto& c : inter) {
        rates.push_back({c.omega, c.mu});
        rates.push_back({c.rho, c.mu});
    }
    return merge_rates(std::move(rates));
}

PoleSet nakagami_poles(const ScenarioCCI& cci)
{
    std::vector<Pole> rates;
    for (const auto& y : cci.nakagami_interferers()) {
        const auto m = static_cast<std::uint32_t>(std::lround(y.m));
        rates.push_back({y.m / y.omega, m});
    }
    return merge_rates(std::move(rates));
}

PoleSet cci_poles(const ScenarioCCI& cci)
{
    if (cci.flavor() == ScenarioCCI::Flavor::EtaMu) {
        const auto inter = cci_intermediate(cci);
        return merge_poles(inter);
    }
    return nakagami_poles(cci);
}

NumeratorCoefficients correlated_coefficients(const CorrelatedSpec& spec)
{
    NumeratorCoefficients out;
    for (const auto& g : spec.groups()) {
        out.pairs.push_back({g.xi_x / 2.0, 1.0 / (2.0 * g.lambda_x)});
        out.pairs.push_back({g.xi_y / 2.0, 1.0 / (2.0 * g.lambda_y)});
    }
    return out;
}

} // namespace etamu
