#include "pvfl/model.hpp"

#include <string>

namespace pvfl {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidValue: return "InvalidValue";
        case ErrorCode::ZeroBaseRate: return "ZeroBaseRate";
        case ErrorCode::NegativeTime: return "NegativeTime";
        case ErrorCode::IllegalPairing: return "IllegalPairing";
        case ErrorCode::BadGrid: return "BadGrid";
        case ErrorCode::MismatchedKinds: return "MismatchedKinds";
        case ErrorCode::MismatchedInitials: return "MismatchedInitials";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::BadDistribution: return "BadDistribution";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::UnknownKey: return "UnknownKey";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

std::string_view to_string(StreamKind kind) noexcept {
    return kind == StreamKind::Income ? "income" : "loss";
}

std::string_view to_string(RiskMode mode) noexcept {
    switch (mode) {
        case RiskMode::Multiplicative: return "multiplicative";
        case RiskMode::Divisive: return "divisive";
        case RiskMode::Subtractive: return "subtractive";
    }
    return "unknown";
}

std::string_view to_string(SignClass sign) noexcept {
    switch (sign) {
        case SignClass::PositiveAdjustment: return "positive";
        case SignClass::NegativeAdjustment: return "negative";
        case SignClass::Zero: return "zero";
    }
    return "unknown";
}

StreamSpec::StreamSpec(StreamKind kind, double initial_magnitude, Rate growth)
    : kind_(kind), magnitude_(initial_magnitude), growth_(growth) {
    if (!std::isfinite(initial_magnitude) || initial_magnitude <= 0.0) {
        throw Error(ErrorCode::InvalidValue,
                    "initial magnitude must be finite and > 0 (sign comes from the stream kind)");
    }
}

RiskPolicy RiskPolicy::multiplicative(double factor) {
    if (!std::isfinite(factor) || factor < 1.0) {
        throw Error(ErrorCode::InvalidValue, "multiplicative risk factor must be >= 1");
    }
    return {RiskMode::Multiplicative, factor};
}

RiskPolicy RiskPolicy::divisive(double factor) {
    // factor >= 1 already implies > 0
    if (!std::isfinite(factor) || factor < 1.0) {
        throw Error(ErrorCode::InvalidValue, "divisive risk factor must be >= 1");
    }
    return {RiskMode::Divisive, factor};
}

RiskPolicy RiskPolicy::subtractive(Rate delta) {
    return {RiskMode::Subtractive, delta.value()};
}

SignClass classify_sign(Rate d_rar_fit) noexcept {
    if (d_rar_fit.value() > kSignTolerance) return SignClass::PositiveAdjustment;
    if (d_rar_fit.value() < -kSignTolerance) return SignClass::NegativeAdjustment;
    return SignClass::Zero;
}

double signed_initial(const StreamSpec& spec) noexcept {
    return spec.kind() == StreamKind::Income ? spec.initial_magnitude()
                                             : -spec.initial_magnitude();
}

double risk_ratio(Rate target, Rate base) {
    if (base.value() == 0.0) {
        throw Error(ErrorCode::ZeroBaseRate, "base rate is zero");
    }
    return target.value() / base.value();
}

}  // namespace pvfl
