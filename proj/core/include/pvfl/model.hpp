/**
 * @file model.hpp
 * @brief Value types for cash streams, rates and risk policies
 *
 * Rates are fractions per year under continuous compounding everywhere in
 * the library (0.01427 means 1.427 %/yr). Percent notation is accepted only
 * by the config parser.
 */

#pragma once

#include <cmath>
#include <string_view>

#include "pvfl/errors.hpp"

namespace pvfl {

/// Annual continuously-compounded rate. Any finite value, including negative.
class Rate {
public:
    constexpr Rate() = default;

    explicit Rate(double value) : value_(value) {
        if (!std::isfinite(value)) {
            throw Error(ErrorCode::InvalidValue, "rate must be finite");
        }
    }

    constexpr double value() const noexcept { return value_; }

    friend constexpr bool operator==(Rate, Rate) = default;

private:
    double value_ = 0.0;
};

enum class StreamKind { Income, Loss };

std::string_view to_string(StreamKind kind) noexcept;

/// Exponential cash stream: sign(kind) * magnitude * exp(growth * t).
///
/// The sign lives in the kind, so a loss stream can never be constructed
/// with a positive initial value.
class StreamSpec {
public:
    StreamSpec(StreamKind kind, double initial_magnitude, Rate growth);

    static StreamSpec income(double initial, double growth) {
        return {StreamKind::Income, initial, Rate(growth)};
    }
    static StreamSpec loss(double magnitude, double growth) {
        return {StreamKind::Loss, magnitude, Rate(growth)};
    }

    StreamKind kind() const noexcept { return kind_; }
    double initial_magnitude() const noexcept { return magnitude_; }
    Rate growth() const noexcept { return growth_; }

    friend bool operator==(const StreamSpec&, const StreamSpec&) = default;

private:
    StreamKind kind_;
    double magnitude_;
    Rate growth_;
};

enum class RiskMode { Multiplicative, Divisive, Subtractive };

std::string_view to_string(RiskMode mode) noexcept;

/// How a risk factor modifies a base discount rate.
///
/// Multiplicative and Divisive carry a dimensionless factor >= 1 (1 is the
/// risk-free identity). Subtractive carries a rate delta.
class RiskPolicy {
public:
    static RiskPolicy multiplicative(double factor);
    static RiskPolicy divisive(double factor);
    static RiskPolicy subtractive(Rate delta);

    RiskMode mode() const noexcept { return mode_; }
    /// Factor for Multiplicative/Divisive; the delta for Subtractive.
    double parameter() const noexcept { return parameter_; }

    friend bool operator==(const RiskPolicy&, const RiskPolicy&) = default;

private:
    RiskPolicy(RiskMode mode, double parameter) : mode_(mode), parameter_(parameter) {}

    RiskMode mode_;
    double parameter_;
};

enum class SignClass { PositiveAdjustment, NegativeAdjustment, Zero };

std::string_view to_string(SignClass sign) noexcept;

inline constexpr double kSignTolerance = 1e-12;

/// Classifies a fitted adjustment: |d| <= 1e-12 is Zero.
SignClass classify_sign(Rate d_rar_fit) noexcept;

/// Fitted risk-adjustment rate with its sign and the worst pointwise
/// mismatch between the adjusted expected stream and the actual stream.
struct FitResult {
    Rate d_rar_fit;
    SignClass sign_class = SignClass::Zero;
    double residual = 0.0;

    friend bool operator==(const FitResult&, const FitResult&) = default;
};

/// +magnitude for income, -magnitude for losses.
double signed_initial(const StreamSpec& spec) noexcept;

/// Ratio of a target rate to a base rate, e.g. a risk-inclusive rate over
/// the time-value rate. Throws ZeroBaseRate when the base is zero.
double risk_ratio(Rate target, Rate base);

}  // namespace pvfl
