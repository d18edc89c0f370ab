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

#include "etamu/fading_params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace etamu {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::NonFiniteParameter: return "NonFiniteParameter";
    case ErrorCode::NotInteger: return "NotInteger";
    case ErrorCode::UnstableEvaluation: return "UnstableEvaluation";
    case ErrorCode::ProblemTooLarge: return "ProblemTooLarge";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

void check_field(const char* field, double value)
{
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << field << " must be finite (got " << value << ")";
        throw Error(ErrorCode::NonFiniteParameter, msg.str());
    }
    if (!(value > 0.0)) {
        std::ostringstream msg;
        msg << field << " must be strictly positive (got " << value << ")";
        throw Error(ErrorCode::NonPositiveParameter, msg.str());
    }
}

std::string indexed(const char* prefix, std::size_t i, const char* field)
{
    return std::string(prefix) + "[" + std::to_string(i) + "]." + field;
}

} // namespace

void validate(const EtaMuParams& params)
{
    check_field("omega", params.omega);
    check_field("eta", params.eta);
    check_field("mu", params.mu);
}

void validate(const NakagamiParams& params)
{
    check_field("omega", params.omega);
    check_field("m", params.m);
}

bool is_integer_valued(double x) noexcept
{
    if (!std::isfinite(x))
        return false;
    return std::abs(x - std::round(x)) <= 1e-12 * std::max(1.0, std::abs(x));
}

bool is_half_integer_valued(double x) noexcept
{
    return is_integer_valued(2.0 * x);
}

EtaMuParams nakagami_as_etamu_half(const NakagamiParams& params)
{
    validate(params);
    return {params.omega, 1.0, params.m / 2.0};
}

EtaMuParams nakagami_as_etamu_limit(const NakagamiParams& params, double eta_small)
{
    validate(params);
    EtaMuParams out{params.omega, eta_small, params.m};
    validate(out);
    return out;
}

ScenarioSOI::ScenarioSOI(std::vector<EtaMuParams> branches) : branches_(std::move(branches))
{
    if (branches_.empty())
        throw Error(ErrorCode::InvalidArgument, "soi needs at least one branch");
    for (const auto& b : branches_)
        validate(b);
}

ScenarioCCI ScenarioCCI::eta_mu(std::vector<EtaMuParams> interferers)
{
    if (interferers.empty())
        throw Error(ErrorCode::InvalidArgument, "cci needs at least one interferer");
    for (std::size_t k = 0; k < interferers.size(); ++k) {
        validate(interferers[k]);
        if (!is_integer_valued(interferers[k].mu)) {
            std::ostringstream msg;
            msg << indexed("cci", k, "mu") << ": mu must be a positive integer (got "
                << interferers[k].mu << ")";
            throw Error(ErrorCode::NotInteger, msg.str());
        }
        interferers[k].mu = std::round(interferers[k].mu);
    }
    return ScenarioCCI(Storage(std::move(interferers)));
}

ScenarioCCI ScenarioCCI::nakagami(std::vector<NakagamiParams> interferers)
{
    if (interferers.empty())
        throw Error(ErrorCode::InvalidArgument, "cci needs at least one interferer");
    for (std::size_t k = 0; k < interferers.size(); ++k) {
        validate(interferers[k]);
        if (!is_integer_valued(interferers[k].m)) {
            std::ostringstream msg;
            msg << indexed("cci", k, "m") << ": m must be a positive integer (got "
                << interferers[k].m << ")";
            throw Error(ErrorCode::NotInteger, msg.str());
        }
        interferers[k].m = std::round(interferers[k].m);
    }
    return ScenarioCCI(Storage(std::move(interferers)));
}

ScenarioCCI::Flavor ScenarioCCI::flavor() const noexcept
{
    return std::holds_alternative<std::vector<EtaMuParams>>(storage_) ? Flavor::EtaMu
                                                                       : Flavor::Nakagami;
}

std::size_t ScenarioCCI::size() const noexcept
{
    return std::visit([](const auto& v) { return v.size(); }, storage_);
}

std::span<const EtaMuParams> ScenarioCCI::eta_mu_interferers() const
{
    if (const auto* v = std::get_if<std::vector<EtaMuParams>>(&storage_))
        return *v;
    throw Error(ErrorCode::InvalidArgument, "cci holds Nakagami-m interferers, not eta-mu");
}

std::span<const NakagamiParams> ScenarioCCI::nakagami_interferers() const
{
    if (const auto* v = std::get_if<std::vector<NakagamiParams>>(&storage_))
        return *v;
    throw Error(ErrorCode::InvalidArgument, "cci holds eta-mu interferers, not Nakagami-m");
}

} // namespace etamu
