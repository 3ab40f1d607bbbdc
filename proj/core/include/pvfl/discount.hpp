/**
 * @file discount.hpp
 * @brief Stream evaluation, time-value/risk discounting and sampled PV curves
 */

#pragma once

#include <vector>

#include "pvfl/model.hpp"

namespace pvfl {

/// One sample of a discounted stream.
struct CurvePoint {
    double t;           // years
    double raw;         // undiscounted stream value
    double discounted;  // value after discounting at the series rate
};

struct CurveSeries {
    std::vector<CurvePoint> rows;
    StreamSpec spec;
    Rate rate;  // net discount rate used for `discounted`
};

/// Sample times 0, step, 2*step, ... and always `horizon` as the last point.
///
/// A horizon within 1e-9 (relative) of a multiple of step is treated as that
/// multiple. Throws BadGrid unless horizon > 0 and 0 < step <= horizon.
std::vector<double> time_grid(double horizon, double step);

/// signed_initial(spec) * exp(g * t). Throws NegativeTime for t < 0.
double stream_value(const StreamSpec& spec, double t);

/// signed_initial(spec) * exp((g - d) * t). Throws NegativeTime for t < 0.
double discounted_value(const StreamSpec& spec, Rate d, double t);

/// Discount net of risk.
///
/// Income streams accept Multiplicative (d * r) or Subtractive with delta <= 0
/// (the rate can only rise). Loss streams accept Divisive (d / r) or
/// Subtractive with delta >= 0 (the rate can only fall). Anything else raises
/// IllegalPairing.
Rate net_rate(Rate d_tvm, const RiskPolicy& policy, StreamKind kind);

/// Applies the policy without the pairing check. Only the scenario runner's
/// counterfactual curve should need this.
Rate apply_policy_unchecked(Rate d_tvm, const RiskPolicy& policy);

/// Samples (t, stream_value, discounted_value) on time_grid(horizon, step).
CurveSeries pv_curve(const StreamSpec& spec, Rate d, double horizon, double step);

}  // namespace pvfl
