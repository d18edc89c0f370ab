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

#ifndef ETAMU_THETA_HPP
#define ETAMU_THETA_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "etamu/coeff_map.hpp"

namespace etamu {

/// A real number stored as sign * exp(log_magnitude). sign == 0 means exactly
/// zero and log_magnitude is then meaningless.
/// Sign and natural-log magnitude. The magnitude is carried in extended
/// precision so that long products of factors keep their low-order bits.
struct SignedLogValue {
    int sign = 0;
    long double log_magnitude = 0.0L;

    static SignedLogValue from(long double x) noexcept;
    double value() const noexcept;
    long double extended_value() const noexcept;

    SignedLogValue& operator*=(const SignedLogValue& rhs) noexcept;
    SignedLogValue& operator/=(const SignedLogValue& rhs) noexcept;
    friend SignedLogValue operator*(SignedLogValue l, const SignedLogValue& r) noexcept { return l *= r; }
    friend SignedLogValue operator/(SignedLogValue l, const SignedLogValue& r) noexcept { return l /= r; }

    /// x^n for an integer exponent, carrying the sign.
    SignedLogValue pow(std::int64_t n) const noexcept;
};

/// Rising factorial (c)_q = c (c+1) ... (c+q-1), c > 0.
SignedLogValue pochhammer_log(double c, std::uint32_t q);

/// Lazy enumeration of every tuple of `slots` nonnegative integers summing to
/// `total`, in colexicographic order starting from (total, 0, ..., 0).
class CompositionStream {
public:
    CompositionStream(std::uint32_t total, std::size_t slots);

    std::span<const std::uint32_t> current() const noexcept { return parts_; }
    /// Advances; returns false once the stream is exhausted.
    bool next() noexcept;

private:
    std::vector<std::uint32_t> parts_;
};

/// C(total + slots - 1, slots - 1), saturating at UINT64_MAX.
std::uint64_t composition_count(std::uint32_t total, std::size_t slots) noexcept;

struct ThetaOptions {
    /// Upper bound on the number of (pole, composition) terms.
    std::uint64_t term_budget = 10'000'000;
};

struct ThetaEvaluation {
    double value = 0.0;        // clamped to [0, 1]
    double raw = 0.0;          // before clamping
    double max_term = 0.0;     // largest |term| in the residue sum
    std::uint64_t terms = 0;
};

/// Number of terms the residue sum would visit.
std::uint64_t theta_term_count(std::size_t numerator_size, const PoleSet& poles) noexcept;

/// Closed-form CDF of (sum of signal powers) / (sum of interference powers)
/// at z, given the numerator MGF pairs and the merged interference poles.
/// Throws ProblemTooLarge when the term count exceeds the budget and
/// UnstableEvaluation when cancellation leaves |result| / max|term| < 1e-10
/// or the unclamped result falls outside [-1e-9, 1 + 1e-9].
ThetaEvaluation evaluate_theta(double z, const NumeratorCoefficients& numerator, const PoleSet& poles,
                               const ThetaOptions& options = {});

double theta(double z, const NumeratorCoefficients& numerator, const PoleSet& poles,
             const ThetaOptions& options = {});

/// Same formal evaluation; the poles are expected to come from
/// nakagami_poles(). Kept separate so call sites read like the two OP types.
double theta_tilde(double z, const NumeratorCoefficients& numerator, const PoleSet& nakagami_poles,
                   const ThetaOptions& options = {});

} // namespace etamu

#endif // ETAMU_THETA_HPP
