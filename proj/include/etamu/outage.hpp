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

#ifndef ETAMU_OUTAGE_HPP
#define ETAMU_OUTAGE_HPP

#include "etamu/coeff_map.hpp"
#include "etamu/theta.hpp"

namespace etamu {

// Outage probability Pr[sum X / sum Y <= zeta] for an interference-limited
// receiver. Type I takes eta-mu interferers with integer mu, type II takes
// Nakagami-m interferers with integer m. The correlated variants take the
// signal-power MGF as eigenvalue groups instead of independent branches and
// additionally require integer or half-integer signal exponents, which
// CorrelatedSpec guarantees by construction.

double outage_type1(double zeta, const ScenarioSOI& soi, const ScenarioCCI& cci,
                    const ThetaOptions& options = {});

double outage_type2(double zeta, const ScenarioSOI& soi, const ScenarioCCI& cci,
                    const ThetaOptions& options = {});

double outage_correlated_type1(double zeta, const CorrelatedSpec& soi, const ScenarioCCI& cci,
                               const ThetaOptions& options = {});

double outage_correlated_type2(double zeta, const CorrelatedSpec& soi, const ScenarioCCI& cci,
                               const ThetaOptions& options = {});

} // namespace etamu

#endif // ETAMU_OUTAGE_HPP
