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

#ifndef ETAMU_SCENARIO_HPP
#define ETAMU_SCENARIO_HPP

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "etamu/coeff_map.hpp"
#include "etamu/oracles.hpp"
#include "etamu/theta.hpp"

namespace etamu {

enum class Mode { Type1, Type2, CorrelatedType1, CorrelatedType2 };

const char* to_string(Mode mode) noexcept;

struct Sweep {
    double omega_db_min = 0.0;
    double omega_db_max = 40.0;
    double omega_db_step = 1.0;

    /// Ascending grid min, min + step, ... up to max (inclusive within 1e-9 steps).
    std::vector<double> grid() const;
};

/// Linear SIR from dB.
double db_to_linear(double db) noexcept;

/// A scenario file: signal branches whose powers may be written as multiples
/// of the swept average SIR, absolute interferer powers, and a threshold.
///
/// Schema (JSON):
///   mode  : "type1" | "type2" | "correlated-type1" | "correlated-type2"
///   soi   : independent modes  -> [{omega | omega_scale, eta, mu}, ...]
///           correlated modes   -> [{lambda_x | lambda_x_scale,
///                                   lambda_y | lambda_y_scale, xi_x, xi_y}, ...]
///   cci   : type1 modes -> [{omega, eta, mu}], mu a positive integer
///           type2 modes -> [{omega, m}], m a positive integer
///   zeta  : positive threshold
///   sweep : optional {omega_db_min, omega_db_max, omega_db_step}
/// "*_scale" fields are multiplied by the SIR omega at evaluation time.
class Scenario {
public:
    /// Throws Error(Schema) naming the offending field.
    static Scenario parse(std::string_view json_text);
    static Scenario load(const std::filesystem::path& path);

    Mode mode() const noexcept { return mode_; }
    double zeta() const noexcept { return zeta_; }
    const std::optional<Sweep>& sweep() const noexcept { return sweep_; }
    const ScenarioCCI& cci() const noexcept { return cci_; }

    bool correlated() const noexcept
    {
        return mode_ == Mode::CorrelatedType1 || mode_ == Mode::CorrelatedType2;
    }

    ScenarioSOI soi_at(double omega) const;
    CorrelatedSpec correlated_at(double omega) const;

    NumeratorCoefficients numerator_at(double omega) const;
    /// Interference poles as the closed form sees them (after any perturbation).
    PoleSet closed_form_poles() const;
    PoleSet poles() const { return poles_; }

    double closed_form(double omega, const ThetaOptions& options = {}) const;
    ContourResult contour(double omega, const ContourConfig& cfg = {}) const;
    McEstimate monte_carlo(double omega, const McConfig& cfg) const;

    /// Test hook: multiplies the largest pole rate seen by the closed form by
    /// `factor` while the oracles keep the true poles. 1.0 disables it.
    void set_pole_perturbation(double factor);

private:
    struct SoiBranch {
        double omega;
        bool scaled;
        double eta;
        double mu;
    };
    struct SoiGroup {
        double lambda_x;
        bool lambda_x_scaled;
        double lambda_y;
        bool lambda_y_scaled;
        std::uint32_t xi_x;
        std::uint32_t xi_y;
    };

    Scenario(Mode mode, ScenarioCCI cci) : mode_(mode), cci_(std::move(cci)) {}

    Mode mode_;
    ScenarioCCI cci_;
    std::vector<SoiBranch> branches_;
    std::vector<SoiGroup> groups_;
    double zeta_ = 0.0;
    std::optional<Sweep> sweep_;
    PoleSet poles_;
    double pole_perturbation_ = 1.0;
};

} // namespace etamu

#endif // ETAMU_SCENARIO_HPP
