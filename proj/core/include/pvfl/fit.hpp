/**
 * @file fit.hpp
 * @brief Correct-fit risk adjustment between an expected and an actual stream
 *
 * Both streams start at the same signed value and are discounted at the same
 * time-value rate. The fitted adjustment d is the extra rate subtracted from
 * the expected stream's exponent so that
 *
 *     s * exp((g_E - d_tvm - d) t) == s * exp((g_A - d_tvm) t)   for all t,
 *
 * which gives d = g_E - g_A independent of d_tvm. For income (actual growth
 * below expectation) d > 0; for losses that outgrow expectation d < 0, i.e.
 * accounting for risk lowers the total discount.
 */

#pragma once

#include <string_view>

#include "pvfl/model.hpp"

namespace pvfl {

struct FitGrid {
    double horizon = 100.0;
    double step = 1.0;
};

class FitProblem {
public:
    /// Throws MismatchedKinds / MismatchedInitials when the two streams are
    /// not comparable, BadGrid for an invalid grid.
    FitProblem(StreamSpec expected, StreamSpec actual, Rate d_tvm, FitGrid grid = {});

    const StreamSpec& expected() const noexcept { return expected_; }
    const StreamSpec& actual() const noexcept { return actual_; }
    Rate d_tvm() const noexcept { return d_tvm_; }
    const FitGrid& grid() const noexcept { return grid_; }

private:
    StreamSpec expected_;
    StreamSpec actual_;
    Rate d_tvm_;
    FitGrid grid_;
};

/// d = g_E - g_A, residual 0.
FitResult fit_closed_form(const FitProblem& problem);

struct NumericFitOptions {
    double initial_half_width = 1.0;  // bracket starts at [-w, +w] per year
    double bracket_tolerance = 1e-15;
    int max_iterations = 200;  // expansions + bisection steps
};

/// Bisection on the grid mismatch between the risk-adjusted expected stream
/// and the actual discounted stream. It only evaluates the two streams on the
/// grid and never forms g_E - g_A, so it is an independent check of
/// fit_closed_form.
///
/// Throws NoConvergence when the bracket cannot be established or narrowed
/// within the iteration budget.
FitResult fit_numeric(const FitProblem& problem, const NumericFitOptions& options = {});

/// Largest |expected_rar(t) - actual_tvm(t)| over the problem grid for a
/// candidate adjustment.
double fit_residual(const FitProblem& problem, Rate d_rar);

/// Whether a fitted sign matches the direction the sign theorem predicts for
/// the stream kind: positive for income, negative for losses.
enum class Direction { Consistent, Contradicts, Degenerate };

std::string_view to_string(Direction direction) noexcept;

Direction classify_direction(StreamKind kind, const FitResult& fit) noexcept;

}  // namespace pvfl
