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

#include "etamu/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace etamu {

using nlohmann::json;

const char* to_string(Mode mode) noexcept
{
    switch (mode) {
    case Mode::Type1: return "type1";
    case Mode::Type2: return "type2";
    case Mode::CorrelatedType1: return "correlated-type1";
    case Mode::CorrelatedType2: return "correlated-type2";
    }
    return "unknown";
}

double db_to_linear(double db) noexcept
{
    return std::pow(10.0, db / 10.0);
}

std::vector<double> Sweep::grid() const
{
    const double span = omega_db_max - omega_db_min;
    const auto n = span == 0.0 ? std::size_t{1}
                               : static_cast<std::size_t>(std::floor(span / omega_db_step + 1e-9)) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = omega_db_min + static_cast<double>(i) * omega_db_step;
    return out;
}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what)
{
    throw Error(ErrorCode::Schema, path + ": " + what);
}

std::string at(const std::string& prefix, std::size_t i)
{
    return prefix + "[" + std::to_string(i) + "]";
}

void reject_unknown_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed)
{
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& item : obj.items()) {
        if (!ok.count(item.key()))
            schema_error(path + "." + item.key(), "unknown field");
    }
}

double number(const json& obj, const std::string& path, const char* key)
{
    const auto it = obj.find(key);
    if (it == obj.end())
        schema_error(path + "." + key, "missing field");
    if (!it->is_number())
        schema_error(path + "." + key, "must be a number");
    return it->get<double>();
}

double positive(const json& obj, const std::string& path, const char* key)
{
    const double v = number(obj, path, key);
    if (!std::isfinite(v) || !(v > 0.0)) {
        std::ostringstream msg;
        msg << key << " must be finite and strictly positive (got " << v << ")";
        schema_error(path + "." + key, msg.str());
    }
    return v;
}

std::uint32_t positive_integer(const json& obj, const std::string& path, const char* key)
{
    const double v = positive(obj, path, key);
    if (!is_integer_valued(v) || v > 1e6) {
        std::ostringstream msg;
        msg << key << " must be a positive integer (got " << v << ")";
        schema_error(path + "." + key, msg.str());
    }
    return static_cast<std::uint32_t>(std::lround(v));
}

/// Exactly one of `key` (absolute) or `key_scale` (multiple of omega).
std::pair<double, bool> power_field(const json& obj, const std::string& path, const std::string& key)
{
    const std::string scaled_key = key + "_scale";
    const bool has_abs = obj.contains(key);
    const bool has_scaled = obj.contains(scaled_key);
    if (has_abs == has_scaled)
        schema_error(path, "exactly one of '" + key + "' or '" + scaled_key + "' is required");
    if (has_abs)
        return {positive(obj, path, key.c_str()), false};
    return {positive(obj, path, scaled_key.c_str()), true};
}

const json& array_field(const json& doc, const char* key)
{
    const auto it = doc.find(key);
    if (it == doc.end())
        schema_error(key, "missing field");
    if (!it->is_array() || it->empty())
        schema_error(key, "must be a non-empty array");
    return *it;
}

Mode parse_mode(const json& doc)
{
    const auto it = doc.find("mode");
    if (it == doc.end() || !it->is_string())
        schema_error("mode", "missing or not a string");
    const auto s = it->get<std::string>();
    if (s == "type1") return Mode::Type1;
    if (s == "type2") return Mode::Type2;
    if (s == "correlated-type1") return Mode::CorrelatedType1;
    if (s == "correlated-type2") return Mode::CorrelatedType2;
    schema_error("mode", "must be one of type1, type2, correlated-type1, correlated-type2 (got '" + s + "')");
}

ScenarioCCI parse_cci(const json& doc, Mode mode)
{
    const auto& arr = array_field(doc, "cci");
    try {
        if (mode == Mode::Type1 || mode == Mode::CorrelatedType1) {
            std::vector<EtaMuParams> out;
            for (std::size_t k = 0; k < arr.size(); ++k) {
                const auto path = at("cci", k);
                if (!arr[k].is_object())
                    schema_error(path, "must be an object");
                reject_unknown_keys(arr[k], path, {"omega", "eta", "mu"});
                const double omega = positive(arr[k], path, "omega");
                const double eta = positive(arr[k], path, "eta");
                const double mu = positive_integer(arr[k], path, "mu");
                out.push_back({omega, eta, mu});
            }
            return ScenarioCCI::eta_mu(std::move(out));
        }
        std::vector<NakagamiParams> out;
        for (std::size_t k = 0; k < arr.size(); ++k) {
            const auto path = at("cci", k);
            if (!arr[k].is_object())
                schema_error(path, "must be an object");
            reject_unknown_keys(arr[k], path, {"omega", "m"});
            const double omega = positive(arr[k], path, "omega");
            const double m = positive_integer(arr[k], path, "m");
            out.push_back({omega, m});
        }
        return ScenarioCCI::nakagami(std::move(out));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Schema)
            throw;
        schema_error("cci", e.what());
    }
}

} // namespace

Scenario Scenario::parse(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Schema, std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        schema_error("$", "scenario must be a JSON object");
    reject_unknown_keys(doc, "$", {"mode", "soi", "cci", "zeta", "sweep", "name", "description"});

    const Mode mode = parse_mode(doc);
    Scenario s(mode, parse_cci(doc, mode));
    s.zeta_ = positive(doc, "$", "zeta");

    const auto& soi = array_field(doc, "soi");
    for (std::size_t n = 0; n < soi.size(); ++n) {
        const auto path = at("soi", n);
        if (!soi[n].is_object())
            schema_error(path, "must be an object");
        if (s.correlated()) {
            reject_unknown_keys(soi[n], path,
                                {"lambda_x", "lambda_x_scale", "lambda_y", "lambda_y_scale", "xi_x", "xi_y"});
            const auto [lx, lx_scaled] = power_field(soi[n], path, "lambda_x");
            const auto [ly, ly_scaled] = power_field(soi[n], path, "lambda_y");
            const auto xi_x = positive_integer(soi[n], path, "xi_x");
            const auto xi_y = positive_integer(soi[n], path, "xi_y");
            s.groups_.push_back({lx, lx_scaled, ly, ly_scaled, xi_x, xi_y});
        } else {
            reject_unknown_keys(soi[n], path, {"omega", "omega_scale", "eta", "mu"});
            const auto [omega, scaled] = power_field(soi[n], path, "omega");
            const double eta = positive(soi[n], path, "eta");
            const double mu = positive(soi[n], path, "mu");
            s.branches_.push_back({omega, scaled, eta, mu});
        }
    }

    if (const auto it = doc.find("sweep"); it != doc.end()) {
        if (!it->is_object())
            schema_error("sweep", "must be an object");
        reject_unknown_keys(*it, "sweep", {"omega_db_min", "omega_db_max", "omega_db_step"});
        Sweep sw;
        sw.omega_db_min = number(*it, "sweep", "omega_db_min");
        sw.omega_db_max = number(*it, "sweep", "omega_db_max");
        sw.omega_db_step = it->contains("omega_db_step") ? number(*it, "sweep", "omega_db_step") : 1.0;
        if (!std::isfinite(sw.omega_db_min) || !std::isfinite(sw.omega_db_max))
            schema_error("sweep", "bounds must be finite");
        if (sw.omega_db_max < sw.omega_db_min)
            schema_error("sweep", "omega_db_max must not be below omega_db_min");
        if (sw.omega_db_max > sw.omega_db_min && !(sw.omega_db_step > 0.0))
            schema_error("sweep.omega_db_step", "must be strictly positive");
        s.sweep_ = sw;
    }

    s.poles_ = cci_poles(s.cci_);
    return s;
}

Scenario Scenario::load(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open scenario file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

ScenarioSOI Scenario::soi_at(double omega) const
{
    if (correlated())
        throw Error(ErrorCode::InvalidArgument, "correlated scenarios have no independent branches");
    std::vector<EtaMuParams> out;
    for (const auto& b : branches_)
        out.push_back({b.scaled ? b.omega * omega : b.omega, b.eta, b.mu});
    return ScenarioSOI(std::move(out));
}

CorrelatedSpec Scenario::correlated_at(double omega) const
{
    if (!correlated())
        throw Error(ErrorCode::InvalidArgument, "scenario is not in a correlated mode");
    std::vector<CorrelatedGroup> out;
    for (const auto& g : groups_) {
        out.push_back({g.lambda_x_scaled ? g.lambda_x * omega : g.lambda_x,
                       g.lambda_y_scaled ? g.lambda_y * omega : g.lambda_y, g.xi_x, g.xi_y});
    }
    return CorrelatedSpec(std::move(out));
}

NumeratorCoefficients Scenario::numerator_at(double omega) const
{
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw Error(ErrorCode::InvalidArgument, "omega must be finite and strictly positive");
    return correlated() ? correlated_coefficients(correlated_at(omega)) : soi_coefficients(soi_at(omega));
}

PoleSet Scenario::closed_form_poles() const
{
    if (pole_perturbation_ == 1.0)
        return poles_;
    std::vector<Pole> rates = poles_.poles;
    rates.back().beta *= pole_perturbation_;
    return merge_rates(std::move(rates));
}

double Scenario::closed_form(double omega, const ThetaOptions& options) const
{
    // Type I and type II share one formal evaluation; only the pole
    // construction (already done in parse) differs.
    return evaluate_theta(zeta_, numerator_at(omega), closed_form_poles(), options).value;
}

ContourResult Scenario::contour(double omega, const ContourConfig& cfg) const
{
    return contour_cdf(zeta_, numerator_at(omega), poles_, cfg);
}

McEstimate Scenario::monte_carlo(double omega, const McConfig& cfg) const
{
    if (correlated())
        return mc_outage(correlated_at(omega), cci_, zeta_, cfg);
    return mc_outage(soi_at(omega), cci_, zeta_, cfg);
}

void Scenario::set_pole_perturbation(double factor)
{
    if (!(factor > 0.0) || !std::isfinite(factor))
        throw Error(ErrorCode::InvalidArgument, "pole perturbation factor must be positive");
    pole_perturbation_ = factor;
}

} // namespace etamu
