#include "pvfl/discount.hpp"

#include <cmath>
#include <string>

namespace pvfl {

namespace {

constexpr double kGridSnap = 1e-9;

void require_time(double t) {
    if (!std::isfinite(t)) {
        throw Error(ErrorCode::InvalidValue, "time must be finite");
    }
    if (t < 0.0) {
        throw Error(ErrorCode::NegativeTime, "t = " + std::to_string(t) + " is negative");
    }
}

}  // namespace

std::vector<double> time_grid(double horizon, double step) {
    if (!std::isfinite(horizon) || !std::isfinite(step) || horizon <= 0.0 || step <= 0.0 ||
        step > horizon) {
        throw Error(ErrorCode::BadGrid, "need horizon > 0 and 0 < step <= horizon");
    }

    auto n = static_cast<long long>(std::floor(horizon / step));
    // horizon / step may round just below an integer
    if (static_cast<double>(n + 1) * step <= horizon * (1.0 + kGridSnap)) ++n;

    const bool on_grid = std::abs(static_cast<double>(n) * step - horizon) <= kGridSnap * horizon;

    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(n) + 2);
    for (long long i = 0; i < n; ++i) ts.push_back(static_cast<double>(i) * step);
    if (!on_grid) ts.push_back(static_cast<double>(n) * step);
    ts.push_back(horizon);
    return ts;
}

double stream_value(const StreamSpec& spec, double t) {
    require_time(t);
    return signed_initial(spec) * std::exp(spec.growth().value() * t);
}

double discounted_value(const StreamSpec& spec, Rate d, double t) {
    require_time(t);
    return signed_initial(spec) * std::exp((spec.growth().value() - d.value()) * t);
}

Rate apply_policy_unchecked(Rate d_tvm, const RiskPolicy& policy) {
    switch (policy.mode()) {
        case RiskMode::Multiplicative: return Rate(d_tvm.value() * policy.parameter());
        case RiskMode::Divisive: return Rate(d_tvm.value() / policy.parameter());
        case RiskMode::Subtractive: return Rate(d_tvm.value() - policy.parameter());
    }
    return d_tvm;
}

Rate net_rate(Rate d_tvm, const RiskPolicy& policy, StreamKind kind) {
    const auto illegal = [&](const char* why) {
        throw Error(ErrorCode::IllegalPairing, std::string(to_string(kind)) + " stream with " +
                                                   std::string(to_string(policy.mode())) +
                                                   " policy: " + why);
    };

    switch (policy.mode()) {
        case RiskMode::Multiplicative:
            if (kind == StreamKind::Loss) illegal("risk on losses must lower the discount rate");
            break;
        case RiskMode::Divisive:
            if (kind == StreamKind::Income) illegal("risk on income must raise the discount rate");
            break;
        case RiskMode::Subtractive:
            if (kind == StreamKind::Income && policy.parameter() > 0.0) {
                illegal("a positive delta lowers the rate on income");
            }
            if (kind == StreamKind::Loss && policy.parameter() < 0.0) {
                illegal("a negative delta raises the rate on losses");
            }
            break;
    }
    return apply_policy_unchecked(d_tvm, policy);
}

CurveSeries pv_curve(const StreamSpec& spec, Rate d, double horizon, double step) {
    const auto ts = time_grid(horizon, step);
    CurveSeries series{{}, spec, d};
    series.rows.reserve(ts.size());
    for (double t : ts) {
        series.rows.push_back({t, stream_value(spec, t), discounted_value(spec, d, t)});
    }
    return series;
}

}  // namespace pvfl
