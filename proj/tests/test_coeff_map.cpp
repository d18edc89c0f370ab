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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "etamu/coeff_map.hpp"
#include "test_support.hpp"

using namespace etamu;
using doctest::Approx;

TEST_CASE("soi_coefficients follows the per-branch layout")
{
    SUBCASE("symmetric branch eta = 1")
    {
        const auto c = soi_coefficients(ScenarioSOI({{1.0, 1.0, 0.5}}));
        REQUIRE(c.pairs.size() == 2);
        CHECK(c.pairs[0] == RatePair{0.5, 1.0});
        CHECK(c.pairs[1] == RatePair{0.5, 1.0});
    }
    SUBCASE("eta = 3.3, mu = 2")
    {
        const auto c = soi_coefficients(ScenarioSOI({{1.0, 3.3, 2.0}}));
        REQUIRE(c.pairs.size() == 2);
        CHECK(c.pairs[0].a == 2.0);
        CHECK(c.pairs[1].a == 2.0);
        CHECK(c.pairs[0].alpha == Approx(2.606060606060606).epsilon(1e-14));
        CHECK(c.pairs[1].alpha == Approx(8.6).epsilon(1e-14));
        CHECK(c.pairs[1].alpha / c.pairs[0].alpha == Approx(3.3).epsilon(1e-14));
    }
    SUBCASE("identical branches duplicate")
    {
        const auto c = soi_coefficients(ScenarioSOI({{0.7, 1.7, 1.2}, {0.7, 1.7, 1.2}}));
        REQUIRE(c.pairs.size() == 4);
        CHECK(c.pairs[2] == c.pairs[0]);
        CHECK(c.pairs[3] == c.pairs[1]);
    }
}

TEST_CASE("cci_intermediate")
{
    const auto inter = cci_intermediate(ScenarioCCI::eta_mu({{1.0, 3.3, 2.0}, {0.5, 1.7, 1.0}, {1.0, 1.0, 1.0}}));
    REQUIRE(inter.size() == 3);
    CHECK(inter[0].omega == Approx(2.60606).epsilon(1e-5));
    CHECK(inter[0].rho == Approx(8.60000).epsilon(1e-5));
    CHECK(inter[1].omega == Approx(3.17647).epsilon(1e-5));
    CHECK(inter[1].rho == Approx(5.40000).epsilon(1e-5));
    CHECK(inter[2].omega == 2.0);
    CHECK(inter[2].rho == 2.0);
    CHECK(inter[0].mu == 2);

    CHECK_THROWS_AS(cci_intermediate(ScenarioCCI::nakagami({{1.0, 1.0}})), Error);
}

TEST_CASE("merge_poles")
{
    SUBCASE("three eta-mu interferers")
    {
        const auto poles = merge_poles(cci_intermediate(testing::etamu_case_cci()));
        REQUIRE(poles.poles.size() == 4);
        CHECK(poles.poles[0].beta == Approx(2.60606).epsilon(1e-5));
        CHECK(poles.poles[0].b == 4);
        CHECK(poles.poles[1].beta == Approx(3.17647).epsilon(1e-5));
        CHECK(poles.poles[1].b == 1);
        CHECK(poles.poles[2].beta == Approx(5.40000).epsilon(1e-5));
        CHECK(poles.poles[2].b == 1);
        CHECK(poles.poles[3].beta == Approx(8.60000).epsilon(1e-5));
        CHECK(poles.poles[3].b == 4);
        CHECK(poles.total_multiplicity() == 10);
    }
    SUBCASE("eta = 1 collapses within one interferer")
    {
        const auto poles = merge_poles(cci_intermediate(ScenarioCCI::eta_mu({{1.0, 1.0, 1.0}})));
        REQUIRE(poles.poles.size() == 1);
        CHECK(poles.poles[0] == Pole{2.0, 2});
    }
    SUBCASE("no coincidences")
    {
        const auto poles = merge_poles(cci_intermediate(ScenarioCCI::eta_mu({{1.0, 2.0, 1.0}, {0.3, 0.4, 1.0}})));
        REQUIRE(poles.poles.size() == 4);
        for (const auto& p : poles.poles)
            CHECK(p.b == 1);
        CHECK(std::is_sorted(poles.poles.begin(), poles.poles.end(),
                             [](const Pole& l, const Pole& r) { return l.beta < r.beta; }));
    }
}

TEST_CASE("merge tolerance")
{
    CHECK(merge_rates({{1.0, 1}, {1.0 + 1e-11, 2}}).poles.size() == 1);
    CHECK(merge_rates({{1.0, 1}, {1.0 + 1e-11, 2}}).poles[0] == Pole{1.0, 3});
    CHECK(merge_rates({{1.0, 1}, {1.0 + 1e-7, 2}}).poles.size() == 2);
}

TEST_CASE("nakagami_poles")
{
    const auto fig2 = nakagami_poles(testing::nakagami_case_cci(1.0));
    REQUIRE(fig2.poles.size() == 3);
    CHECK(fig2.poles[0] == Pole{1.0, 2});
    CHECK(fig2.poles[1] == Pole{2.0, 1});
    CHECK(fig2.poles[2] == Pole{5.0, 1});

    const auto single = nakagami_poles(ScenarioCCI::nakagami({{2.0, 3.0}}));
    REQUIRE(single.poles.size() == 1);
    CHECK(single.poles[0] == Pole{1.5, 3});

    const auto two = nakagami_poles(ScenarioCCI::nakagami({{1.0, 1.0}, {0.5, 2.0}}));
    REQUIRE(two.poles.size() == 2);
    CHECK(two.poles[0] == Pole{1.0, 1});
    CHECK(two.poles[1] == Pole{4.0, 2});
}

TEST_CASE("correlated_coefficients")
{
    const auto one = correlated_coefficients(CorrelatedSpec({{0.25, 0.5, 1, 1}}));
    REQUIRE(one.pairs.size() == 2);
    CHECK(one.pairs[0] == RatePair{0.5, 2.0});
    CHECK(one.pairs[1] == RatePair{0.5, 1.0});

    // Independent Rayleigh branch written as one eigenvalue group.
    const auto bridge = correlated_coefficients(CorrelatedSpec({{0.5, 0.5, 1, 1}}));
    const auto direct = soi_coefficients(ScenarioSOI({{1.0, 1.0, 0.5}}));
    CHECK(bridge.pairs == direct.pairs);

    const auto two = correlated_coefficients(CorrelatedSpec({{0.25, 0.5, 1, 3}, {2.0, 4.0, 2, 4}}));
    REQUIRE(two.pairs.size() == 4);
    CHECK(two.pairs[0] == RatePair{0.5, 2.0});
    CHECK(two.pairs[1] == RatePair{1.5, 1.0});
    CHECK(two.pairs[2] == RatePair{1.0, 0.25});
    CHECK(two.pairs[3] == RatePair{2.0, 0.125});

    CHECK_THROWS_AS(CorrelatedSpec({}), Error);
    CHECK_THROWS_AS(CorrelatedSpec({{0.0, 1.0, 1, 1}}), Error);
    CHECK_THROWS_AS(CorrelatedSpec({{1.0, 1.0, 0, 1}}), Error);
}

TEST_CASE("pole-set properties on random interferer sets")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = testing::random_scenario(rng);
        auto cci = s.cci;
        // Force some exact coincidences: duplicates and eta = 1.
        if (trial % 3 == 0)
            cci.push_back(cci.front());
        if (trial % 5 == 0)
            cci.back().eta = 1.0;

        std::uint64_t mu_total = 0;
        for (const auto& y : cci)
            mu_total += static_cast<std::uint64_t>(y.mu);

        const auto poles = merge_poles(cci_intermediate(ScenarioCCI::eta_mu(cci)));
        CHECK(poles.total_multiplicity() == 2 * mu_total);
        for (std::size_t j = 1; j < poles.poles.size(); ++j)
            CHECK(poles.poles[j].beta - poles.poles[j - 1].beta
                  > kPoleMergeTolerance * poles.poles[j].beta);

        // Idempotence.
        CHECK(merge_rates(poles.poles).poles == poles.poles);

        // Order invariance.
        auto shuffled = cci;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(merge_poles(cci_intermediate(ScenarioCCI::eta_mu(shuffled))).poles == poles.poles);

        // eta = 1 interferers contribute one pole of multiplicity 2 mu.
        if (cci.size() == 1 && cci[0].eta == 1.0) {
            REQUIRE(poles.poles.size() == 1);
            CHECK(poles.poles[0].b == 2 * static_cast<std::uint32_t>(cci[0].mu));
        }
    }

    std::uniform_int_distribution<int> m(1, 5);
    std::uniform_real_distribution<double> omega(0.1, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<NakagamiParams> g;
        std::uint64_t m_total = 0;
        for (int k = 0; k < 4; ++k) {
            g.push_back({omega(rng), static_cast<double>(m(rng))});
            m_total += static_cast<std::uint64_t>(g.back().m);
        }
        g.push_back(g.front());
        m_total += static_cast<std::uint64_t>(g.front().m);
        CHECK(nakagami_poles(ScenarioCCI::nakagami(g)).total_multiplicity() == m_total);
    }
}
