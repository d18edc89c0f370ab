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

#include "etamu/etamu.h"

#include <string>

#include "etamu/outage.hpp"
#include "etamu/scenario.hpp"

struct etamu_scenario {
    etamu::Scenario scenario;
};

namespace {

thread_local std::string last_error;

etamu_status to_status(etamu::ErrorCode code)
{
    using etamu::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidArgument: return ETAMU_E_INVALID_ARGUMENT;
    case ErrorCode::NonPositiveParameter: return ETAMU_E_NON_POSITIVE;
    case ErrorCode::NonFiniteParameter: return ETAMU_E_NON_FINITE;
    case ErrorCode::NotInteger: return ETAMU_E_NOT_INTEGER;
    case ErrorCode::UnstableEvaluation: return ETAMU_E_UNSTABLE;
    case ErrorCode::ProblemTooLarge: return ETAMU_E_TOO_LARGE;
    case ErrorCode::QuadratureNotConverged: return ETAMU_E_QUADRATURE;
    case ErrorCode::Schema: return ETAMU_E_SCHEMA;
    case ErrorCode::Io: return ETAMU_E_IO;
    }
    return ETAMU_E_INTERNAL;
}

template <class F>
etamu_status guarded(F&& body)
{
    try {
        body();
        last_error.clear();
        return ETAMU_OK;
    } catch (const etamu::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return ETAMU_E_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return ETAMU_E_INTERNAL;
    }
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw etamu::Error(etamu::ErrorCode::InvalidArgument, what);
}

etamu::ThetaOptions options(uint64_t budget)
{
    etamu::ThetaOptions o;
    if (budget != 0)
        o.term_budget = budget;
    return o;
}

etamu::ScenarioSOI make_soi(const etamu_branch* soi, size_t n)
{
    require(soi != nullptr && n > 0, "soi array is empty");
    std::vector<etamu::EtaMuParams> v;
    for (size_t i = 0; i < n; ++i)
        v.push_back({soi[i].omega, soi[i].eta, soi[i].mu});
    return etamu::ScenarioSOI(std::move(v));
}

etamu::CorrelatedSpec make_correlated(const etamu_corr_group* g, size_t n)
{
    require(g != nullptr && n > 0, "correlated group array is empty");
    std::vector<etamu::CorrelatedGroup> v;
    for (size_t i = 0; i < n; ++i)
        v.push_back({g[i].lambda_x, g[i].lambda_y, g[i].xi_x, g[i].xi_y});
    return etamu::CorrelatedSpec(std::move(v));
}

etamu::ScenarioCCI make_cci(const etamu_branch* cci, size_t n)
{
    require(cci != nullptr && n > 0, "cci array is empty");
    std::vector<etamu::EtaMuParams> v;
    for (size_t i = 0; i < n; ++i)
        v.push_back({cci[i].omega, cci[i].eta, cci[i].mu});
    return etamu::ScenarioCCI::eta_mu(std::move(v));
}

etamu::ScenarioCCI make_cci(const etamu_nakagami* cci, size_t n)
{
    require(cci != nullptr && n > 0, "cci array is empty");
    std::vector<etamu::NakagamiParams> v;
    for (size_t i = 0; i < n; ++i)
        v.push_back({cci[i].omega, cci[i].m});
    return etamu::ScenarioCCI::nakagami(std::move(v));
}

} // namespace

extern "C" {

const char* etamu_version(void)
{
    return "0.1.0";
}

const char* etamu_last_error(void)
{
    return last_error.c_str();
}

const char* etamu_status_name(etamu_status status)
{
    switch (status) {
    case ETAMU_OK: return "ok";
    case ETAMU_E_INVALID_ARGUMENT: return "invalid argument";
    case ETAMU_E_NON_POSITIVE: return "non-positive parameter";
    case ETAMU_E_NON_FINITE: return "non-finite parameter";
    case ETAMU_E_NOT_INTEGER: return "parameter must be an integer";
    case ETAMU_E_UNSTABLE: return "unstable evaluation";
    case ETAMU_E_TOO_LARGE: return "problem too large";
    case ETAMU_E_QUADRATURE: return "quadrature not converged";
    case ETAMU_E_SCHEMA: return "schema violation";
    case ETAMU_E_IO: return "i/o error";
    case ETAMU_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

etamu_status etamu_theta(double z, const double* a, const double* alpha, size_t n_numerator, const double* beta,
                         const uint32_t* b, size_t n_poles, uint64_t term_budget, double* out)
{
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        require(a && alpha && n_numerator > 0, "numerator arrays are empty");
        require(beta && b && n_poles > 0, "pole arrays are empty");
        etamu::NumeratorCoefficients num;
        for (size_t i = 0; i < n_numerator; ++i)
            num.pairs.push_back({a[i], alpha[i]});
        std::vector<etamu::Pole> rates;
        for (size_t j = 0; j < n_poles; ++j) {
            require(beta[j] > 0.0 && b[j] > 0, "poles need positive rates and multiplicities");
            rates.push_back({beta[j], b[j]});
        }
        *out = etamu::theta(z, num, etamu::merge_rates(std::move(rates)), options(term_budget));
    });
}

etamu_status etamu_outage_type1(double zeta, const etamu_branch* soi, size_t n_soi, const etamu_branch* cci,
                                size_t n_cci, uint64_t term_budget, double* out)
{
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = etamu::outage_type1(zeta, make_soi(soi, n_soi), make_cci(cci, n_cci), options(term_budget));
    });
}

etamu_status etamu_outage_type2(double zeta, const etamu_branch* soi, size_t n_soi, const etamu_nakagami* cci,
                                size_t n_cci, uint64_t term_budget, double* out)
{
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = etamu::outage_type2(zeta, make_soi(soi, n_soi), make_cci(cci, n_cci), options(term_budget));
    });
}

etamu_status etamu_outage_correlated_type1(double zeta, const etamu_corr_group* soi, size_t n_groups,
                                           const etamu_branch* cci, size_t n_cci, uint64_t term_budget,
                                           double* out)
{
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = etamu::outage_correlated_type1(zeta, make_correlated(soi, n_groups), make_cci(cci, n_cci),
                                              options(term_budget));
    });
}

etamu_status etamu_outage_correlated_type2(double zeta, const etamu_corr_group* soi, size_t n_groups,
                                           const etamu_nakagami* cci, size_t n_cci, uint64_t term_budget,
                                           double* out)
{
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = etamu::outage_correlated_type2(zeta, make_correlated(soi, n_groups), make_cci(cci, n_cci),
                                              options(term_budget));
    });
}

etamu_status etamu_scenario_parse(const char* json_text, etamu_scenario** out)
{
    return guarded([&] {
        require(json_text != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        *out = new etamu_scenario{etamu::Scenario::parse(json_text)};
    });
}

etamu_status etamu_scenario_load(const char* path, etamu_scenario** out)
{
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        *out = new etamu_scenario{etamu::Scenario::load(path)};
    });
}

void etamu_scenario_free(etamu_scenario* scenario)
{
    delete scenario;
}

etamu_status etamu_scenario_mode(const etamu_scenario* scenario, etamu_mode* out)
{
    return guarded([&] {
        require(scenario && out, "null argument");
        *out = static_cast<etamu_mode>(scenario->scenario.mode());
    });
}

etamu_status etamu_scenario_zeta(const etamu_scenario* scenario, double* out)
{
    return guarded([&] {
        require(scenario && out, "null argument");
        *out = scenario->scenario.zeta();
    });
}

etamu_status etamu_scenario_sweep(const etamu_scenario* scenario, etamu_sweep* out, int* has_sweep)
{
    return guarded([&] {
        require(scenario && out && has_sweep, "null argument");
        const auto& sw = scenario->scenario.sweep();
        *has_sweep = sw.has_value() ? 1 : 0;
        if (sw)
            *out = {sw->omega_db_min, sw->omega_db_max, sw->omega_db_step};
    });
}

etamu_status etamu_scenario_set_pole_perturbation(etamu_scenario* scenario, double factor)
{
    return guarded([&] {
        require(scenario != nullptr, "null argument");
        scenario->scenario.set_pole_perturbation(factor);
    });
}

etamu_status etamu_scenario_closed_form(const etamu_scenario* scenario, double omega, uint64_t term_budget,
                                        double* out)
{
    return guarded([&] {
        require(scenario && out, "null argument");
        *out = scenario->scenario.closed_form(omega, options(term_budget));
    });
}

etamu_status etamu_scenario_contour(const etamu_scenario* scenario, double omega, double* out,
                                    double* error_estimate)
{
    return guarded([&] {
        require(scenario && out, "null argument");
        const auto r = scenario->scenario.contour(omega);
        *out = r.value;
        if (error_estimate)
            *error_estimate = r.error_estimate;
    });
}

etamu_status etamu_scenario_monte_carlo(const etamu_scenario* scenario, double omega, uint64_t samples,
                                        uint64_t seed, uint32_t streams, double* p_hat, double* std_err)
{
    return guarded([&] {
        require(scenario && p_hat, "null argument");
        etamu::McConfig cfg;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.streams = streams;
        const auto est = scenario->scenario.monte_carlo(omega, cfg);
        *p_hat = est.p_hat;
        if (std_err)
            *std_err = est.std_err;
    });
}

} // extern "C"
