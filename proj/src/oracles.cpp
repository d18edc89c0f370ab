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

#include "etamu/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <queue>
#include <sstream>
#include <thread>

namespace etamu {

double Rng::normal() noexcept
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double x, y, s;
    do {
        x = 2.0 * uniform() - 1.0;
        y = 2.0 * uniform() - 1.0;
        s = x * x + y * y;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = y * f;
    has_spare_ = true;
    return x * f;
}

GammaSampler::GammaSampler(double shape, double rate) : shape_(shape), rate_(rate)
{
    if (!(shape > 0.0) || !(rate > 0.0) || !std::isfinite(shape) || !std::isfinite(rate))
        throw Error(ErrorCode::InvalidArgument, "Gamma shape and rate must be finite and positive");
    const double a = shape < 1.0 ? shape + 1.0 : shape;
    d_ = a - 1.0 / 3.0;
    c_ = 1.0 / std::sqrt(9.0 * d_);
    boost_exponent_ = shape < 1.0 ? 1.0 / shape : 0.0;
}

double GammaSampler::operator()(Rng& rng) const noexcept
{
    double g;
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c_ * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2 || std::log(u) < 0.5 * x2 + d_ * (1.0 - v + std::log(v))) {
            g = d_ * v;
            break;
        }
    }
    if (boost_exponent_ != 0.0)
        g *= std::pow(rng.uniform(), boost_exponent_);
    return g / rate_;
}

double PowerModel::sample(Rng& rng) const noexcept
{
    double total = 0.0;
    for (const auto& c : components)
        total += c(rng);
    return total;
}

double PowerModel::mean() const noexcept
{
    double total = 0.0;
    for (const auto& c : components)
        total += c.shape() / c.rate();
    return total;
}

std::vector<GammaSampler> etamu_components(const EtaMuParams& params)
{
    validate(params);
    // 2 mu Gaussian clusters per branch; eta = sigma_x^2 / sigma_y^2 and
    // omega = 2 mu (sigma_x^2 + sigma_y^2). Each half is Gamma(mu, 2 sigma^2).
    const double sigma_y2 = params.omega / (2.0 * params.mu * (1.0 + params.eta));
    const double sigma_x2 = params.eta * sigma_y2;
    return {GammaSampler(params.mu, 1.0 / (2.0 * sigma_x2)), GammaSampler(params.mu, 1.0 / (2.0 * sigma_y2))};
}

double sample_squared_etamu(const EtaMuParams& params, Rng& rng)
{
    const auto parts = etamu_components(params);
    return parts[0](rng) + parts[1](rng);
}

PowerModel signal_power_model(const ScenarioSOI& soi)
{
    PowerModel model;
    for (const auto& branch : soi.branches()) {
        auto parts = etamu_components(branch);
        model.components.insert(model.components.end(), parts.begin(), parts.end());
    }
    return model;
}

PowerModel signal_power_model(const CorrelatedSpec& soi)
{
    PowerModel model;
    for (const auto& g : soi.groups()) {
        model.components.emplace_back(g.xi_x / 2.0, 1.0 / (2.0 * g.lambda_x));
        model.components.emplace_back(g.xi_y / 2.0, 1.0 / (2.0 * g.lambda_y));
    }
    return model;
}

PowerModel interference_power_model(const ScenarioCCI& cci)
{
    PowerModel model;
    if (cci.flavor() == ScenarioCCI::Flavor::EtaMu) {
        for (const auto& y : cci.eta_mu_interferers()) {
            auto parts = etamu_components(y);
            model.components.insert(model.components.end(), parts.begin(), parts.end());
        }
    } else {
        for (const auto& y : cci.nakagami_interferers())
            model.components.emplace_back(y.m, y.m / y.omega);
    }
    return model;
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint32_t stream) noexcept
{
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(stream) + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

McEstimate mc_outage(const PowerModel& signal, const PowerModel& interference, double zeta, const McConfig& cfg)
{
    if (cfg.samples == 0 || cfg.streams == 0)
        throw Error(ErrorCode::InvalidArgument, "Monte Carlo needs at least one sample and one stream");
    if (!(zeta > 0.0) || !std::isfinite(zeta))
        throw Error(ErrorCode::InvalidArgument, "threshold must be finite and positive");

    const std::uint32_t streams = cfg.streams;
    std::vector<std::uint64_t> hits(streams, 0);
    std::atomic<std::uint32_t> next{0};

    auto worker = [&] {
        for (std::uint32_t s = next++; s < streams; s = next++) {
            const std::uint64_t n = cfg.samples / streams + (s < cfg.samples % streams ? 1 : 0);
            Rng rng(derive_stream_seed(cfg.seed, s));
            std::uint64_t h = 0;
            for (std::uint64_t i = 0; i < n; ++i) {
                const double x = signal.sample(rng);
                const double y = interference.sample(rng);
                if (x <= zeta * y)
                    ++h;
            }
            hits[s] = h;
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_threads = std::min<unsigned>(hw, streams);
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n_threads; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    McEstimate est;
    for (std::uint32_t s = 0; s < streams; ++s)
        est.hits += hits[s];
    est.samples = cfg.samples;
    est.p_hat = static_cast<double>(est.hits) / static_cast<double>(est.samples);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(est.samples));
    return est;
}

McEstimate mc_outage(const ScenarioSOI& soi, const ScenarioCCI& cci, double zeta, const McConfig& cfg)
{
    return mc_outage(signal_power_model(soi), interference_power_model(cci), zeta, cfg);
}

McEstimate mc_outage(const CorrelatedSpec& soi, const ScenarioCCI& cci, double zeta, const McConfig& cfg)
{
    return mc_outage(signal_power_model(soi), interference_power_model(cci), zeta, cfg);
}

namespace {

// 15-point Kronrod nodes on [-1, 1] (non-negative half) and weights; the
// 7-point Gauss rule uses the odd-indexed nodes.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;

    bool operator<(const Panel& rhs) const noexcept { return error < rhs.error; }
};

template <class F>
Panel integrate_panel(const F& f, double lo, double hi)
{
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double s = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * s;
        if (i % 2 == 1)
            gauss += kGaussWeights[i / 2] * s;
    }
    return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

} // namespace

double saddle_abscissa(double z, const NumeratorCoefficients& numerator, const PoleSet& poles)
{
    double beta_min = poles.poles.front().beta;
    for (const auto& p : poles.poles)
        beta_min = std::min(beta_min, p.beta);

    // d/dx log Xi(x); strictly increasing from -inf at 0+ to +inf at beta_min-.
    auto slope = [&](double x) {
        double d = -1.0 / x;
        for (const auto& n : numerator.pairs)
            d -= n.a / (z * n.alpha + x);
        for (const auto& p : poles.poles)
            d += p.b / (p.beta - x);
        return d;
    };
    double lo = 0.0;
    double hi = beta_min;
    for (int i = 0; i < 200 && hi - lo > 1e-14 * beta_min; ++i) {
        const double mid = 0.5 * (lo + hi);
        (slope(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

ContourResult contour_cdf(double z, const NumeratorCoefficients& numerator, const PoleSet& poles,
                          const ContourConfig& cfg)
{
    if (!(z > 0.0) || !std::isfinite(z))
        throw Error(ErrorCode::InvalidArgument, "z must be finite and strictly positive");
    if (numerator.pairs.empty() || poles.poles.empty())
        throw Error(ErrorCode::InvalidArgument, "contour inversion needs numerator pairs and poles");
    if (cfg.abscissa == ContourConfig::Abscissa::FixedFraction
        && !(cfg.abscissa_fraction > 0.0 && cfg.abscissa_fraction < 1.0))
        throw Error(ErrorCode::InvalidArgument, "abscissa_fraction must lie in (0, 1)");
    if (!(cfg.truncation_tol > 0.0))
        throw Error(ErrorCode::InvalidArgument, "truncation_tol must be positive");

    double beta_min = poles.poles.front().beta;
    double beta_max = beta_min;
    for (const auto& p : poles.poles) {
        beta_min = std::min(beta_min, p.beta);
        beta_max = std::max(beta_max, p.beta);
    }
    const double eps = cfg.abscissa == ContourConfig::Abscissa::Saddle
                           ? saddle_abscissa(z, numerator, poles)
                           : cfg.abscissa_fraction * beta_min;
    if (!(eps > 0.0 && eps < beta_min))
        throw Error(ErrorCode::InvalidArgument, "contour abscissa must lie strictly between 0 and the smallest pole");

    double alpha_max = 0.0;
    double decay = 0.0;     // sum a + sum b
    double log_scale = 0.0; // log(prod (z alpha)^a prod beta^b)
    for (const auto& n : numerator.pairs) {
        alpha_max = std::max(alpha_max, n.alpha);
        decay += n.a;
        log_scale += n.a * std::log(z * n.alpha);
    }
    for (const auto& p : poles.poles) {
        decay += p.b;
        log_scale += p.b * std::log(p.beta);
    }

    // Principal logarithms are continuous along Re p = eps > 0 because every
    // factor below keeps a positive real part there.
    auto integrand = [&](double t) {
        const std::complex<double> p(eps, t);
        std::complex<double> log_xi = -std::log(p);
        for (const auto& n : numerator.pairs)
            log_xi -= n.a * std::log(1.0 + p / (z * n.alpha));
        for (const auto& q : poles.poles)
            log_xi -= static_cast<double>(q.b) * std::log(1.0 - p / q.beta);
        return std::exp(log_xi).real();
    };

    // |Xi(eps + i t)| <= prod(z alpha)^a prod beta^b * t^(-1 - decay), hence
    // the tail beyond T is at most that constant * T^(-decay) / decay.
    auto tail_bound = [&](double t) {
        return std::exp(log_scale - decay * std::log(t)) / decay / std::numbers::pi;
    };

    ContourResult result;
    result.abscissa = eps;
    std::priority_queue<Panel> panels;
    double value = 0.0;
    double error = 0.0;
    auto push = [&](double lo, double hi) {
        Panel p = integrate_panel(integrand, lo, hi);
        result.nodes += 15;
        value += p.value;
        error += p.error;
        panels.push(p);
    };

    const double t_start = 8.0 * std::max({beta_max, z * alpha_max, eps});
    double lo = 0.0;
    double hi = eps;
    while (lo < t_start) {
        push(lo, hi);
        lo = hi;
        hi *= 2.0;
    }
    double t_end = lo;

    for (;;) {
        const double tail = tail_bound(t_end);
        const double target = cfg.truncation_tol * std::max(std::abs(value) / std::numbers::pi, 1e-300);
        const double total_error = error / std::numbers::pi + tail;
        if (total_error <= target) {
            result.value = value / std::numbers::pi;
            result.error_estimate = total_error;
            return result;
        }
        if (result.nodes >= cfg.max_nodes) {
            std::ostringstream msg;
            msg << "contour quadrature did not converge within " << cfg.max_nodes
                << " nodes (estimated error " << total_error << ", estimate "
                << value / std::numbers::pi << ")";
            throw Error(ErrorCode::QuadratureNotConverged, msg.str());
        }
        if (tail >= error / std::numbers::pi) {
            push(t_end, 2.0 * t_end);
            t_end *= 2.0;
            continue;
        }
        Panel worst = panels.top();
        panels.pop();
        value -= worst.value;
        error -= worst.error;
        const double mid = 0.5 * (worst.lo + worst.hi);
        push(worst.lo, mid);
        push(mid, worst.hi);
    }
}

} // namespace etamu
