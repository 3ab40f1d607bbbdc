#include "pvfl/fit.hpp"

#include <cmath>
#include <vector>

#include "pvfl/discount.hpp"

namespace pvfl {

FitProblem::FitProblem(StreamSpec expected, StreamSpec actual, Rate d_tvm, FitGrid grid)
    : expected_(expected), actual_(actual), d_tvm_(d_tvm), grid_(grid) {
    if (expected.kind() != actual.kind()) {
        throw Error(ErrorCode::MismatchedKinds, "expected and actual streams differ in kind");
    }
    if (expected.initial_magnitude() != actual.initial_magnitude()) {
        throw Error(ErrorCode::MismatchedInitials,
                    "expected and actual streams must start at the same value");
    }
    time_grid(grid.horizon, grid.step);  // validates
}

FitResult fit_closed_form(const FitProblem& problem) {
    const Rate d(problem.expected().growth().value() - problem.actual().growth().value());
    return {d, classify_sign(d), 0.0};
}

namespace {

// Signed mismatch (expected_rar - actual_tvm) / sign, taken at the grid point
// where it is largest in magnitude. It is strictly decreasing in d, positive
// below the fit and negative above it.
class Mismatch {
public:
    explicit Mismatch(const FitProblem& p)
        : magnitude_(p.expected().initial_magnitude()),
          expected_rate_(p.expected().growth().value() - p.d_tvm().value()),
          actual_rate_(p.actual().growth().value() - p.d_tvm().value()) {
        for (double t : time_grid(p.grid().horizon, p.grid().step)) {
            if (t > 0.0) times_.push_back(t);
        }
    }

    double operator()(double d) const {
        double worst = 0.0;
        for (double t : times_) {
            const double m = magnitude_ * (std::exp((expected_rate_ - d) * t) -
                                           std::exp(actual_rate_ * t));
            if (std::isnan(m)) return m;
            if (std::abs(m) > std::abs(worst)) worst = m;
        }
        return worst;
    }

private:
    double magnitude_;
    double expected_rate_;
    double actual_rate_;
    std::vector<double> times_;
};

[[noreturn]] void no_convergence(const char* what) {
    throw Error(ErrorCode::NoConvergence, what);
}

}  // namespace

double fit_residual(const FitProblem& problem, Rate d_rar) {
    const double s = signed_initial(problem.expected());
    const double expected_rate =
        problem.expected().growth().value() - problem.d_tvm().value() - d_rar.value();
    const double actual_rate = problem.actual().growth().value() - problem.d_tvm().value();

    double worst = 0.0;
    for (double t : time_grid(problem.grid().horizon, problem.grid().step)) {
        const double diff = s * std::exp(expected_rate * t) - s * std::exp(actual_rate * t);
        worst = std::max(worst, std::abs(diff));
    }
    return worst;
}

FitResult fit_numeric(const FitProblem& problem, const NumericFitOptions& options) {
    const Mismatch mismatch(problem);

    double lo = -options.initial_half_width;
    double hi = options.initial_half_width;
    int iterations = 0;

    auto finish = [&](double d) {
        const Rate fit(d);
        return FitResult{fit, classify_sign(fit), fit_residual(problem, fit)};
    };

    // Expand until mismatch(lo) >= 0 >= mismatch(hi).
    double m_lo = mismatch(lo);
    while (!(m_lo >= 0.0)) {
        if (std::isnan(m_lo) || ++iterations > options.max_iterations) {
            no_convergence("could not bracket the fit from below");
        }
        hi = lo;
        lo *= 2.0;
        m_lo = mismatch(lo);
    }
    double m_hi = mismatch(hi);
    while (!(m_hi <= 0.0)) {
        if (std::isnan(m_hi) || ++iterations > options.max_iterations) {
            no_convergence("could not bracket the fit from above");
        }
        lo = hi;
        hi *= 2.0;
        m_hi = mismatch(hi);
    }
    if (m_lo == 0.0) return finish(lo);
    if (m_hi == 0.0) return finish(hi);

    while (hi - lo > options.bracket_tolerance) {
        if (++iterations > options.max_iterations) {
            no_convergence("bisection exceeded its iteration budget");
        }
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;  // adjacent doubles
        const double m = mismatch(mid);
        if (std::isnan(m)) no_convergence("mismatch is not a number");
        if (m == 0.0) return finish(mid);
        (m > 0.0 ? lo : hi) = mid;
    }
    return finish(0.5 * (lo + hi));
}

std::string_view to_string(Direction direction) noexcept {
    switch (direction) {
        case Direction::Consistent: return "consistent";
        case Direction::Contradicts: return "contradicts";
        case Direction::Degenerate: return "degenerate";
    }
    return "unknown";
}

Direction classify_direction(StreamKind kind, const FitResult& fit) noexcept {
    switch (fit.sign_class) {
        case SignClass::Zero: return Direction::Degenerate;
        case SignClass::PositiveAdjustment:
            return kind == StreamKind::Income ? Direction::Consistent : Direction::Contradicts;
        case SignClass::NegativeAdjustment:
            return kind == StreamKind::Loss ? Direction::Consistent : Direction::Contradicts;
    }
    return Direction::Degenerate;
}

}  // namespace pvfl
