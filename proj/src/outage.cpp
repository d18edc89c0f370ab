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

#include "etamu/outage.hpp"

namespace etamu {

namespace {

void require_flavor(const ScenarioCCI& cci, ScenarioCCI::Flavor flavor, const char* what)
{
    if (cci.flavor() != flavor)
        throw Error(ErrorCode::InvalidArgument, what);
}

} // namespace

double outage_type1(double zeta, const ScenarioSOI& soi, const ScenarioCCI& cci, const ThetaOptions& options)
{
    require_flavor(cci, ScenarioCCI::Flavor::EtaMu, "type I outage needs eta-mu interferers");
    const auto inter = cci_intermediate(cci);
    return theta(zeta, soi_coefficients(soi), merge_poles(inter), options);
}

double outage_type2(double zeta, const ScenarioSOI& soi, const ScenarioCCI& cci, const ThetaOptions& options)
{
    require_flavor(cci, ScenarioCCI::Flavor::Nakagami, "type II outage needs Nakagami-m interferers");
    return theta_tilde(zeta, soi_coefficients(soi), nakagami_poles(cci), options);
}

double outage_correlated_type1(double zeta, const CorrelatedSpec& soi, const ScenarioCCI& cci,
                               const ThetaOptions& options)
{
    require_flavor(cci, ScenarioCCI::Flavor::EtaMu, "type I outage needs eta-mu interferers");
    const auto inter = cci_intermediate(cci);
    return theta(zeta, correlated_coefficients(soi), merge_poles(inter), options);
}

double outage_correlated_type2(double zeta, const CorrelatedSpec& soi, const ScenarioCCI& cci,
                               const ThetaOptions& options)
{
    require_flavor(cci, ScenarioCCI::Flavor::Nakagami, "type II outage needs Nakagami-m interferers");
    return theta_tilde(zeta, correlated_coefficients(soi), nakagami_poles(cci), options);
}

} // namespace etamu
