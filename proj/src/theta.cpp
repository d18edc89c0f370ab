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

#include "etamu/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace etamu {

namespace {

constexpr double kRangeTolerance = 1e-9;
constexpr double kMinSignificance = 1e-10;
constexpr long double kTailFloor = 1024 * std::numeric_limits<long double>::epsilon();
constexpr std::uint32_t kPochhammerProductLimit = 64;

/// Neumaier-compensated sum of terms given as sign * exp(log_mag), kept in
/// units of exp(scale) where scale tracks the largest magnitude seen.
class ScaledSum {
public:
    void add(const SignedLogValue& term) noexcept
    {
        if (term.sign == 0)
            return;
        if (!any_ || term.log_magnitude > scale_) {
            if (any_) {
                const long double f = std::exp(scale_ - term.log_magnitude);
                sum_ *= f;
                comp_ *= f;
            }
            scale_ = term.log_magnitude;
            any_ = true;
        }
        const long double x = term.sign * std::exp(term.log_magnitude - scale_);
        const long double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    bool empty() const noexcept { return !any_; }
    long double scale() const noexcept { return scale_; }
    long double scaled_total() const noexcept { return sum_ + comp_; }

private:
    bool any_ = false;
    long double scale_ = 0.0L;
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

void check_inputs(double z, const NumeratorCoefficients& numerator, const PoleSet& poles)
{
    if (!(z > 0.0) || !std::isfinite(z))
        throw Error(ErrorCode::InvalidArgument, "z must be finite and strictly positive");
    if (numerator.pairs.empty())
        throw Error(ErrorCode::InvalidArgument, "numerator coefficients are empty");
    if (poles.poles.empty())
        throw Error(ErrorCode::InvalidArgument, "pole set is empty");
    for (const auto& p : numerator.pairs) {
        if (!(p.a > 0.0) || !(p.alpha > 0.0) || !std::isfinite(p.a) || !std::isfinite(p.alpha))
            throw Error(ErrorCode::InvalidArgument, "numerator exponents and rates must be finite and positive");
    }
    for (std::size_t j = 0; j < poles.poles.size(); ++j) {
        const auto& p = poles.poles[j];
        if (!(p.beta > 0.0) || !std::isfinite(p.beta) || p.b == 0)
            throw Error(ErrorCode::InvalidArgument, "poles need finite positive rates and multiplicities");
        if (j > 0 && !(p.beta > poles.poles[j - 1].beta))
            throw Error(ErrorCode::InvalidArgument, "poles must be strictly ascending and distinct");
    }
}

struct Reduced {
    long double value = 0.0L;
    double max_term = 0.0;
};

// Fixed r-ascending reduction of the per-pole sums.
Reduced reduce(const std::vector<ScaledSum>& per_pole)
{
    long double max_log = -std::numeric_limits<long double>::infinity();
    for (const auto& s : per_pole)
        if (!s.empty())
            max_log = std::max(max_log, s.scale());
    ScaledSum combined;
    for (const auto& s : per_pole) {
        if (s.empty())
            continue;
        combined.add(SignedLogValue::from(s.scaled_total()) * SignedLogValue{1, s.scale()});
    }
    return {combined.empty() ? 0.0L : combined.scaled_total() * std::exp(combined.scale()),
            static_cast<double>(std::exp(max_log))};
}

} // namespace

SignedLogValue SignedLogValue::from(long double x) noexcept
{
    if (x == 0.0L)
        return {};
    return {x > 0.0L ? 1 : -1, std::log(std::abs(x))};
}

long double SignedLogValue::extended_value() const noexcept
{
    return sign == 0 ? 0.0L : sign * std::exp(log_magnitude);
}

double SignedLogValue::value() const noexcept
{
    return static_cast<double>(extended_value());
}

SignedLogValue& SignedLogValue::operator*=(const SignedLogValue& rhs) noexcept
{
    sign *= rhs.sign;
    log_magnitude += rhs.log_magnitude;
    return *this;
}

SignedLogValue& SignedLogValue::operator/=(const SignedLogValue& rhs) noexcept
{
    // Division by zero is not representable; callers never divide by zero.
    sign *= rhs.sign;
    log_magnitude -= rhs.log_magnitude;
    return *this;
}

SignedLogValue SignedLogValue::pow(std::int64_t n) const noexcept
{
    if (n == 0)
        return {1, 0.0};
    SignedLogValue out{sign, log_magnitude * static_cast<long double>(n)};
    if (sign < 0 && (n % 2 == 0))
        out.sign = 1;
    return out;
}

SignedLogValue pochhammer_log(double c, std::uint32_t q)
{
    if (!(c > 0.0))
        throw Error(ErrorCode::InvalidArgument, "Pochhammer base must be positive");
    if (q <= kPochhammerProductLimit) {
        long double log_mag = 0.0L;
        for (std::uint32_t i = 0; i < q; ++i)
            log_mag += std::log(static_cast<long double>(c) + i);
        return {1, log_mag};
    }
    return {1, std::lgamma(static_cast<long double>(c) + q) - std::lgamma(static_cast<long double>(c))};
}

CompositionStream::CompositionStream(std::uint32_t total, std::size_t slots) : parts_(slots, 0)
{
    if (slots == 0)
        throw Error(ErrorCode::InvalidArgument, "compositions need at least one slot");
    parts_[0] = total;
}

bool CompositionStream::next() noexcept
{
    std::size_t i = 0;
    while (i < parts_.size() && parts_[i] == 0)
        ++i;
    if (i + 1 >= parts_.size())
        return false;
    const std::uint32_t v = parts_[i];
    parts_[i] = 0;
    parts_[0] = v - 1;
    parts_[i + 1] += 1;
    return true;
}

std::uint64_t composition_count(std::uint32_t total, std::size_t slots) noexcept
{
    if (slots == 0)
        return 0;
    // C(n, k) with k = min(total, slots - 1), built incrementally; every
    // partial product C(n - k + i, i) is an integer.
    const std::uint64_t k = std::min<std::uint64_t>(total, slots - 1);
    const std::uint64_t n = static_cast<std::uint64_t>(total) + slots - 1;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (c > kMax / (n - k + i))
            return kMax;
        c = c * (n - k + i) / i;
    }
    return c;
}

std::uint64_t theta_term_count(std::size_t numerator_size, const PoleSet& poles) noexcept
{
    const std::size_t slots = numerator_size + poles.poles.size();
    std::uint64_t total = 0;
    for (const auto& p : poles.poles) {
        const std::uint64_t c = composition_count(p.b - 1, slots);
        if (c > std::numeric_limits<std::uint64_t>::max() - total)
            return std::numeric_limits<std::uint64_t>::max();
        total += c;
    }
    return total;
}

ThetaEvaluation evaluate_theta(double z, const NumeratorCoefficients& numerator, const PoleSet& poles,
                               const ThetaOptions& options)
{
    check_inputs(z, numerator, poles);

    const auto& num = numerator.pairs;
    const auto& pl = poles.poles;
    const std::size_t n_num = num.size();
    const std::size_t n_poles = pl.size();
    const std::size_t slots = 1 + n_num + (n_poles - 1);

    ThetaEvaluation out;
    out.terms = theta_term_count(n_num, poles);
    if (out.terms > options.term_budget) {
        std::ostringstream msg;
        msg << "residue sum needs " << out.terms << " terms, budget is " << options.term_budget;
        throw Error(ErrorCode::ProblemTooLarge, msg.str());
    }

    // -prod (-beta_j)^{b_j}. The (z alpha_l)^{a_l} factors live in the
    // numerator slots, where they pair with (beta_r + z alpha_l)^{-a_l}.
    SignedLogValue prefactor{-1, 0.0L};
    for (const auto& p : pl)
        prefactor *= SignedLogValue{-1, std::log(static_cast<long double>(p.beta))}.pow(p.b);

    // Per-pole tables: factor[slot][q] for q = 0 .. b_r - 1. Slot 0 is the
    // 1/p factor, slots 1..2N the numerator factors, then the other poles in
    // ascending index with pole r skipped.
    std::vector<std::vector<SignedLogValue>> factor(slots);
    std::vector<ScaledSum> direct(n_poles);

    // The same sum with the numerator product h(beta_r) replaced by
    // h(beta_r) - 1 on the compositions that leave every numerator slot at
    // zero. With h = 1 those terms sum to exactly -1, so this sum equals
    // theta - 1 and stays small, with small absolute error, near the upper
    // tail.
    std::vector<ScaledSum> complement(n_poles);

    for (std::size_t r = 0; r < n_poles; ++r) {
        const long double beta_r = pl[r].beta;
        const std::uint32_t depth = pl[r].b - 1;
        for (auto& f : factor)
            f.assign(depth + 1, SignedLogValue{});

        long double log_h = 0.0L;
        for (std::uint32_t q = 0; q <= depth; ++q) {
            const SignedLogValue alt{(q % 2 == 0) ? 1 : -1, 0.0L};
            const SignedLogValue q_factorial = pochhammer_log(1.0, q);

            factor[0][q] = alt / SignedLogValue{1, std::log(beta_r)}.pow(q + 1);

            for (std::size_t l = 0; l < n_num; ++l) {
                const long double za = static_cast<long double>(z) * num[l].alpha;
                // (z alpha)^a / (beta_r + z alpha)^(a + q), kept accurate when
                // beta_r / (z alpha) is small.
                const long double log_ratio = -num[l].a * std::log1p(beta_r / za);
                if (q == 0)
                    log_h += log_ratio;
                factor[1 + l][q] = alt * pochhammer_log(num[l].a, q) / q_factorial
                                   * SignedLogValue{1, log_ratio - q * std::log(beta_r + za)};
            }

            std::size_t slot = 1 + n_num;
            for (std::size_t j = 0; j < n_poles; ++j) {
                if (j == r)
                    continue;
                const auto diff = SignedLogValue::from(beta_r - static_cast<long double>(pl[j].beta));
                factor[slot][q] = alt * pochhammer_log(pl[j].b, q) / q_factorial
                                  / diff.pow(static_cast<std::int64_t>(pl[j].b) + q);
                ++slot;
            }
        }
        // (h - 1) / h
        const auto shift = SignedLogValue::from(-std::expm1(-log_h));

        CompositionStream stream(depth, slots);
        do {
            SignedLogValue term = prefactor;
            const auto q = stream.current();
            bool numerator_idle = true;
            for (std::size_t s = 0; s < slots; ++s) {
                term *= factor[s][q[s]];
                if (s >= 1 && s <= n_num && q[s] != 0)
                    numerator_idle = false;
            }
            direct[r].add(term);
            complement[r].add(numerator_idle ? term * shift : term);
        } while (stream.next());
    }

    const auto direct_sum = reduce(direct);
    const auto complement_sum = reduce(complement);

    // The direct sum is accurate relative to small values, the complement
    // relative to 1 - theta; pick whichever side of 1/2 the value lies on.
    const bool upper = std::isfinite(direct_sum.value) && direct_sum.value > 0.5L;
    long double tail = complement_sum.value;
    // Below its own rounding level 1 - theta carries no information; leaving
    // the noise in would let theta step down between neighbouring z.
    if (std::abs(tail) <= kTailFloor * complement_sum.max_term)
        tail = 0.0L;
    out.raw = static_cast<double>(upper ? 1.0L + tail : direct_sum.value);
    out.max_term = upper ? complement_sum.max_term : direct_sum.max_term;

    if (!std::isfinite(out.raw) || out.raw < -kRangeTolerance || out.raw > 1.0 + kRangeTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "residue sum left the unit interval (raw value " << out.raw
            << "); poles are likely clustered too closely";
        throw Error(ErrorCode::UnstableEvaluation, msg.str());
    }
    if (std::abs(out.raw) < kMinSignificance * out.max_term) {
        std::ostringstream msg;
        msg << "cancellation in residue sum: |result| " << std::abs(out.raw) << " vs largest term "
            << out.max_term << "; cancellation or pole clustering exceeded double precision";
        throw Error(ErrorCode::UnstableEvaluation, msg.str());
    }
    out.value = std::clamp(out.raw, 0.0, 1.0);
    return out;
}

double theta(double z, const NumeratorCoefficients& numerator, const PoleSet& poles, const ThetaOptions& options)
{
    return evaluate_theta(z, numerator, poles, options).value;
}

double theta_tilde(double z, const NumeratorCoefficients& numerator, const PoleSet& nakagami_poles,
                   const ThetaOptions& options)
{
    return evaluate_theta(z, numerator, nakagami_poles, options).value;
}

} // namespace etamu
