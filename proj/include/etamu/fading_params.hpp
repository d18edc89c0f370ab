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

#ifndef ETAMU_FADING_PARAMS_HPP
#define ETAMU_FADING_PARAMS_HPP

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "etamu/errors.hpp"

namespace etamu {

/// One squared eta-mu branch in format 1 (eta > 0, mu > 0). omega is the mean
/// power on a linear scale.
struct EtaMuParams {
    double omega;
    double eta;
    double mu;

    friend bool operator==(const EtaMuParams&, const EtaMuParams&) = default;
};

/// One squared Nakagami-m branch.
struct NakagamiParams {
    double omega;
    double m;

    friend bool operator==(const NakagamiParams&, const NakagamiParams&) = default;
};

/// Throws NonFiniteParameter or NonPositiveParameter naming the offending field.
void validate(const EtaMuParams& params);
void validate(const NakagamiParams& params);

/// Integer test used for every "must be a positive integer" hypothesis:
/// |x - round(x)| <= 1e-12 * max(1, |x|).
bool is_integer_valued(double x) noexcept;
/// Same rule applied to 2x.
bool is_half_integer_valued(double x) noexcept;

/// Exact embedding eta = 1, mu = m/2.
EtaMuParams nakagami_as_etamu_half(const NakagamiParams& params);

/// Near-limit embedding eta = eta_small, mu = m; the exact Nakagami law is
/// reached only as eta_small -> 0.
EtaMuParams nakagami_as_etamu_limit(const NakagamiParams& params, double eta_small);

/// Branches combined at the receiver for the signal of interest.
class ScenarioSOI {
public:
    explicit ScenarioSOI(std::vector<EtaMuParams> branches);

    std::span<const EtaMuParams> branches() const noexcept { return branches_; }
    std::size_t size() const noexcept { return branches_.size(); }

private:
    std::vector<EtaMuParams> branches_;
};

/// Cochannel interferers. Either all eta-mu with integer mu, or all Nakagami-m
/// with integer m; the integer restriction is checked on construction.
class ScenarioCCI {
public:
    enum class Flavor { EtaMu, Nakagami };

    static ScenarioCCI eta_mu(std::vector<EtaMuParams> interferers);
    static ScenarioCCI nakagami(std::vector<NakagamiParams> interferers);

    Flavor flavor() const noexcept;
    std::size_t size() const noexcept;

    /// Throws InvalidArgument when the flavor does not match.
    std::span<const EtaMuParams> eta_mu_interferers() const;
    std::span<const NakagamiParams> nakagami_interferers() const;

private:
    using Storage = std::variant<std::vector<EtaMuParams>, std::vector<NakagamiParams>>;
    explicit ScenarioCCI(Storage storage) : storage_(std::move(storage)) {}

    Storage storage_;
};

} // namespace etamu

#endif // ETAMU_FADING_PARAMS_HPP
