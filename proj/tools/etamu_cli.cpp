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

// Command-line front end over the C interface.
//
//   etamu-cli eval   FILE [--omega-db X]
//   etamu-cli sweep  FILE [--out PATH] [--with-mc] [--mc-samples N] [--seed S]
//   etamu-cli verify FILE [--grid LIST] [--mc-samples N] [--seed S]
//
// Exit codes: 0 success, 2 invalid input, 3 closed form refused
// (unstable or over budget), 4 verification failed.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "etamu/etamu.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitEvaluation = 3;
constexpr int kExitVerify = 4;

constexpr uint32_t kMcStreams = 8;
constexpr double kRelativeTolerance = 1e-6;
constexpr double kRelativeFloor = 1e-8;
constexpr double kBandSigmas = 4.0;

struct CliFailure {
    int code;
    std::string message;
};

struct ScenarioDeleter {
    void operator()(etamu_scenario* s) const noexcept { etamu_scenario_free(s); }
};
using ScenarioHandle = std::unique_ptr<etamu_scenario, ScenarioDeleter>;

int exit_code_for(etamu_status status)
{
    switch (status) {
    case ETAMU_OK: return kExitOk;
    case ETAMU_E_UNSTABLE:
    case ETAMU_E_TOO_LARGE:
    case ETAMU_E_QUADRATURE:
    case ETAMU_E_INTERNAL: return kExitEvaluation;
    default: return kExitInput;
    }
}

void check(etamu_status status, const std::string& context)
{
    if (status == ETAMU_OK)
        return;
    std::string msg = context + ": " + etamu_last_error();
    if (status == ETAMU_E_UNSTABLE || status == ETAMU_E_TOO_LARGE)
        msg += "\nhint: rerun with --contour-fallback to report the contour-integral value instead";
    throw CliFailure{exit_code_for(status), msg};
}

std::string fmt17(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

struct Options {
    std::string file;
    double omega_db = 0.0;
    std::string out;
    bool with_mc = false;
    uint64_t mc_samples = 1'000'000;
    uint64_t seed = 42;
    std::string grid;
    uint64_t budget = 0;
    bool contour_fallback = false;
    double corrupt_pole = 1.0;
};

ScenarioHandle load(const Options& opt)
{
    etamu_scenario* raw = nullptr;
    check(etamu_scenario_load(opt.file.c_str(), &raw), opt.file);
    ScenarioHandle s(raw);
    if (opt.corrupt_pole != 1.0)
        check(etamu_scenario_set_pole_perturbation(s.get(), opt.corrupt_pole), "--corrupt-pole");
    return s;
}

struct ClosedValue {
    double value;
    bool from_contour;
};

ClosedValue closed_or_fallback(const etamu_scenario* s, double omega, const Options& opt)
{
    double op = 0.0;
    const etamu_status st = etamu_scenario_closed_form(s, omega, opt.budget, &op);
    if (st == ETAMU_OK)
        return {op, false};
    if (opt.contour_fallback && (st == ETAMU_E_UNSTABLE || st == ETAMU_E_TOO_LARGE)) {
        check(etamu_scenario_contour(s, omega, &op, nullptr), "contour fallback");
        return {op, true};
    }
    check(st, "closed form at omega=" + fmt17(omega));
    return {op, false};
}

struct McResult {
    double p_hat;
    double std_err;
};

McResult monte_carlo(const etamu_scenario* s, double omega, const Options& opt, std::size_t point)
{
    McResult r{};
    check(etamu_scenario_monte_carlo(s, omega, opt.mc_samples, opt.seed + point, kMcStreams, &r.p_hat,
                                     &r.std_err),
          "monte carlo");
    return r;
}

std::vector<double> sweep_grid(const etamu_scenario* s)
{
    etamu_sweep sw{};
    int has = 0;
    check(etamu_scenario_sweep(s, &sw, &has), "sweep");
    if (!has)
        throw CliFailure{kExitInput, "sweep: scenario has no sweep block"};
    const double span = sw.omega_db_max - sw.omega_db_min;
    const auto n = span == 0.0 ? std::size_t{1}
                               : static_cast<std::size_t>(std::floor(span / sw.omega_db_step + 1e-9)) + 1;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = sw.omega_db_min + static_cast<double>(i) * sw.omega_db_step;
    return grid;
}

std::vector<double> parse_grid(const std::string& text)
{
    std::vector<double> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            grid.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CliFailure{kExitInput, "--grid: '" + item + "' is not a number"};
        }
    }
    if (grid.empty())
        throw CliFailure{kExitInput, "--grid: empty list"};
    return grid;
}

int cmd_eval(const Options& opt)
{
    auto s = load(opt);
    const double omega = db_to_linear(opt.omega_db);
    const auto closed = closed_or_fallback(s.get(), omega, opt);
    std::string row = fmt17(opt.omega_db) + "," + fmt17(omega) + "," + fmt17(closed.value);
    if (opt.with_mc) {
        const auto mc = monte_carlo(s.get(), omega, opt, 0);
        row += "," + fmt17(mc.p_hat) + "," + fmt17(mc.std_err);
    }
    std::cout << row << '\n';
    return kExitOk;
}

int cmd_sweep(const Options& opt)
{
    auto s = load(opt);
    const auto grid = sweep_grid(s.get());

    std::string csv = opt.with_mc ? "omega_db,omega_linear,op_closed,op_mc,mc_stderr\n"
                                   : "omega_db,omega_linear,op_closed\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double omega = db_to_linear(grid[i]);
        const auto closed = closed_or_fallback(s.get(), omega, opt);
        csv += fmt17(grid[i]) + "," + fmt17(omega) + "," + fmt17(closed.value);
        if (opt.with_mc) {
            const auto mc = monte_carlo(s.get(), omega, opt, i);
            csv += "," + fmt17(mc.p_hat) + "," + fmt17(mc.std_err);
        }
        csv += '\n';
    }

    if (opt.out.empty()) {
        std::cout << csv;
        return kExitOk;
    }
    const std::filesystem::path target(opt.out);
    const std::filesystem::path partial = target.string() + ".partial";
    {
        std::ofstream f(partial, std::ios::binary | std::ios::trunc);
        f << csv;
        if (!f) {
            std::error_code ec;
            std::filesystem::remove(partial, ec);
            throw CliFailure{kExitInput, "cannot write '" + opt.out + "'"};
        }
    }
    std::filesystem::rename(partial, target);
    return kExitOk;
}

int cmd_verify(const Options& opt)
{
    auto s = load(opt);
    const auto grid = opt.grid.empty() ? sweep_grid(s.get()) : parse_grid(opt.grid);

    double max_rel = 0.0;
    std::size_t outside_band = 0;
    std::vector<std::string> failures;

    std::cout << "omega_db,op_closed,op_contour,rel_err,op_mc,mc_stderr,band\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double omega = db_to_linear(grid[i]);
        const auto closed = closed_or_fallback(s.get(), omega, opt);
        double contour = 0.0;
        const etamu_status cst = etamu_scenario_contour(s.get(), omega, &contour, nullptr);
        const auto mc = monte_carlo(s.get(), omega, opt, i);

        double rel = 0.0;
        if (cst != ETAMU_OK) {
            failures.push_back("omega_db=" + fmt17(grid[i]) + ": contour oracle failed: " + etamu_last_error());
        } else if (closed.value >= kRelativeFloor) {
            rel = std::abs(closed.value - contour) / closed.value;
            max_rel = std::max(max_rel, rel);
            if (!(rel <= kRelativeTolerance)) {
                failures.push_back("omega_db=" + fmt17(grid[i]) + ": closed vs contour relative error "
                                   + fmt17(rel));
            }
        }

        const double n = static_cast<double>(opt.mc_samples);
        const double sigma = std::max(mc.std_err, std::sqrt(closed.value * (1.0 - closed.value) / n));
        const bool in_band = std::abs(closed.value - mc.p_hat) <= kBandSigmas * sigma;
        if (!in_band) {
            ++outside_band;
            failures.push_back("omega_db=" + fmt17(grid[i]) + ": outside Monte Carlo 4-sigma band (closed "
                               + fmt17(closed.value) + ", mc " + fmt17(mc.p_hat) + ")");
        }
        std::cout << fmt17(grid[i]) << ',' << fmt17(closed.value) << (closed.from_contour ? "*" : "") << ','
                  << fmt17(contour) << ',' << fmt17(rel) << ',' << fmt17(mc.p_hat) << ',' << fmt17(mc.std_err)
                  << ',' << (in_band ? "ok" : "FAIL") << '\n';
    }

    std::cout << "max_rel_closed_vs_contour=" << fmt17(max_rel) << '\n';
    std::cout << "points_outside_mc_4sigma=" << outside_band << '\n';
    if (failures.empty()) {
        std::cout << "verify: PASS (" << grid.size() << " points)\n";
        return kExitOk;
    }
    std::cout << "verify: FAIL\n";
    for (const auto& f : failures)
        std::cerr << f << '\n';
    return kExitVerify;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Outage probability for eta-mu / eta-mu interference-limited receivers"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.file, "Scenario file (JSON)")->required();
        cmd->add_option("--budget", opt.budget, "Closed-form term budget (0 = default 1e7)");
        cmd->add_flag("--contour-fallback", opt.contour_fallback,
                      "Report the contour-integral value when the closed form is unstable or over budget");
    };
    auto add_mc = [&](CLI::App* cmd) {
        cmd->add_option("--mc-samples", opt.mc_samples, "Monte Carlo samples per point")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", opt.seed, "Monte Carlo seed");
    };

    auto* eval = app.add_subcommand("eval", "Evaluate the outage probability at one average SIR");
    add_common(eval);
    add_mc(eval);
    eval->add_option("--omega-db", opt.omega_db, "Average SIR in dB");
    eval->add_flag("--with-mc", opt.with_mc, "Append a Monte Carlo estimate");

    auto* sweep = app.add_subcommand("sweep", "Sweep the average SIR and write a CSV");
    add_common(sweep);
    add_mc(sweep);
    sweep->add_option("--out", opt.out, "Output CSV path (stdout when omitted)");
    sweep->add_flag("--with-mc", opt.with_mc, "Add op_mc and mc_stderr columns");

    auto* verify = app.add_subcommand("verify", "Check the closed form against both oracles");
    add_common(verify);
    add_mc(verify);
    verify->add_option("--grid", opt.grid, "Comma-separated SIR values in dB (default: the sweep grid)");
    verify->add_option("--corrupt-pole", opt.corrupt_pole, "Scale the largest closed-form pole (test hook)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*eval)
            return cmd_eval(opt);
        if (*sweep)
            return cmd_sweep(opt);
        return cmd_verify(opt);
    } catch (const CliFailure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEvaluation;
    }
}
