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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "etamu/etamu.h"

using doctest::Approx;

TEST_CASE("version and status names")
{
    CHECK(std::strlen(etamu_version()) > 0);
    CHECK(std::string(etamu_status_name(ETAMU_OK)) == "ok");
    CHECK(std::string(etamu_status_name(ETAMU_E_UNSTABLE)) != "ok");
}

TEST_CASE("direct theta and outage entry points")
{
    const double a[] = {1.0};
    const double alpha[] = {1.0};
    const double beta[] = {1.0};
    const uint32_t b[] = {1};
    double out = -1.0;
    REQUIRE(etamu_theta(9.0, a, alpha, 1, beta, b, 1, 0, &out) == ETAMU_OK);
    CHECK(out == Approx(0.9).epsilon(1e-14));

    const etamu_branch soi[] = {{1.0, 1.0, 0.5}};
    const etamu_nakagami naka[] = {{1.0, 1.0}};
    REQUIRE(etamu_outage_type2(1.0, soi, 1, naka, 1, 0, &out) == ETAMU_OK);
    CHECK(out == Approx(0.5).epsilon(1e-14));

    const etamu_branch cci[] = {{1.0, 1.0, 1.0}};
    double type1 = 0.0;
    REQUIRE(etamu_outage_type1(3.0, soi, 1, cci, 1, 0, &type1) == ETAMU_OK);
    const etamu_nakagami m2[] = {{1.0, 2.0}};
    REQUIRE(etamu_outage_type2(3.0, soi, 1, m2, 1, 0, &out) == ETAMU_OK);
    CHECK(type1 == Approx(out).epsilon(1e-12));

    const etamu_corr_group groups[] = {{0.5, 0.5, 1, 1}};
    REQUIRE(etamu_outage_correlated_type2(1.0, groups, 1, naka, 1, 0, &out) == ETAMU_OK);
    CHECK(out == Approx(0.5).epsilon(1e-14));
    REQUIRE(etamu_outage_correlated_type1(3.0, groups, 1, cci, 1, 0, &out) == ETAMU_OK);
    CHECK(out == Approx(type1).epsilon(1e-12));
}

TEST_CASE("error reporting")
{
    const etamu_branch soi[] = {{1.0, 1.0, 0.5}};
    const etamu_branch bad_cci[] = {{1.0, 1.0, 1.5}};
    double out = 0.0;
    CHECK(etamu_outage_type1(1.0, soi, 1, bad_cci, 1, 0, &out) == ETAMU_E_NOT_INTEGER);
    CHECK(std::string(etamu_last_error()).find("mu must be a positive integer") != std::string::npos);

    const etamu_branch negative[] = {{-1.0, 1.0, 0.5}};
    const etamu_nakagami naka[] = {{1.0, 1.0}};
    CHECK(etamu_outage_type2(1.0, negative, 1, naka, 1, 0, &out) == ETAMU_E_NON_POSITIVE);
    const etamu_branch nan_soi[] = {{NAN, 1.0, 0.5}};
    CHECK(etamu_outage_type2(1.0, nan_soi, 1, naka, 1, 0, &out) == ETAMU_E_NON_FINITE);
    CHECK(etamu_outage_type2(1.0, soi, 1, naka, 1, 0, nullptr) == ETAMU_E_INVALID_ARGUMENT);
    CHECK(etamu_outage_type2(1.0, nullptr, 1, naka, 1, 0, &out) == ETAMU_E_INVALID_ARGUMENT);

    const etamu_nakagami heavy[] = {{1.0, 30.0}, {0.5, 30.0}};
    CHECK(etamu_outage_type2(1.0, soi, 1, heavy, 2, 10, &out) == ETAMU_E_TOO_LARGE);
}

TEST_CASE("scenario handle")
{
    etamu_scenario* s = nullptr;
    REQUIRE(etamu_scenario_parse(R"({"mode": "type2", "zeta": 1,
        "soi": [{"omega_scale": 1, "eta": 1, "mu": 0.5}], "cci": [{"omega": 1, "m": 1}],
        "sweep": {"omega_db_min": 0, "omega_db_max": 10, "omega_db_step": 5}})",
                                 &s)
            == ETAMU_OK);
    REQUIRE(s != nullptr);

    etamu_mode mode;
    REQUIRE(etamu_scenario_mode(s, &mode) == ETAMU_OK);
    CHECK(mode == ETAMU_MODE_TYPE2);
    double zeta = 0.0;
    REQUIRE(etamu_scenario_zeta(s, &zeta) == ETAMU_OK);
    CHECK(zeta == 1.0);
    etamu_sweep sweep{};
    int has_sweep = 0;
    REQUIRE(etamu_scenario_sweep(s, &sweep, &has_sweep) == ETAMU_OK);
    CHECK(has_sweep == 1);
    CHECK(sweep.omega_db_step == 5.0);

    double closed = 0.0;
    REQUIRE(etamu_scenario_closed_form(s, 1.0, 0, &closed) == ETAMU_OK);
    CHECK(closed == Approx(0.5).epsilon(1e-14));
    double contour = 0.0;
    double err = 0.0;
    REQUIRE(etamu_scenario_contour(s, 1.0, &contour, &err) == ETAMU_OK);
    CHECK(std::abs(contour - 0.5) <= 1e-8);
    double p_hat = 0.0;
    double std_err = 0.0;
    REQUIRE(etamu_scenario_monte_carlo(s, 1.0, 200000, 42, 4, &p_hat, &std_err) == ETAMU_OK);
    CHECK(std::abs(p_hat - 0.5) <= 4.0 * std_err);

    REQUIRE(etamu_scenario_set_pole_perturbation(s, 1.1) == ETAMU_OK);
    REQUIRE(etamu_scenario_closed_form(s, 1.0, 0, &closed) == ETAMU_OK);
    CHECK(closed == Approx(1.0 / 2.1).epsilon(1e-12));
    CHECK(etamu_scenario_set_pole_perturbation(s, -1.0) == ETAMU_E_INVALID_ARGUMENT);
    etamu_scenario_free(s);

    etamu_scenario* bad = nullptr;
    CHECK(etamu_scenario_parse(R"({"mode": "type1"})", &bad) == ETAMU_E_SCHEMA);
    CHECK(bad == nullptr);
    CHECK(etamu_scenario_load("/nonexistent/scenario.json", &bad) == ETAMU_E_IO);
    etamu_scenario_free(nullptr);
}
