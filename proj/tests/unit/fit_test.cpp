#include <cmath>

#include <gtest/gtest.h>

#include "pvfl/fit.hpp"
#include "support/generators.hpp"

using namespace pvfl;

namespace {

FitProblem problem(StreamKind kind, double g_e, double g_a, double d_tvm = 0.01427,
                   FitGrid grid = {100, 1}, double magnitude = 100) {
    return FitProblem(StreamSpec(kind, magnitude, Rate(g_e)), StreamSpec(kind, magnitude, Rate(g_a)),
                      Rate(d_tvm), grid);
}

}  // namespace

TEST(FitProblemTest, RejectsMismatchedStreams) {
    try {
        FitProblem(StreamSpec::income(1, 0.05), StreamSpec::loss(1, 0.02), Rate(0.01));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MismatchedKinds);
    }
    try {
        FitProblem(StreamSpec::loss(1, 0.05), StreamSpec::loss(2, 0.02), Rate(0.01));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MismatchedInitials);
    }
    EXPECT_THROW(problem(StreamKind::Income, 0.05, 0.02, 0.01, {10, 0}), Error);
}

TEST(FitClosedFormTest, Examples) {
    auto income = fit_closed_form(problem(StreamKind::Income, 0.05, 0.02));
    EXPECT_NEAR(income.d_rar_fit.value(), 0.03, 1e-15);
    EXPECT_EQ(income.sign_class, SignClass::PositiveAdjustment);
    EXPECT_EQ(income.residual, 0.0);

    auto loss = fit_closed_form(problem(StreamKind::Loss, 0.02, 0.05));
    EXPECT_NEAR(loss.d_rar_fit.value(), -0.03, 1e-15);
    EXPECT_EQ(loss.sign_class, SignClass::NegativeAdjustment);

    for (auto kind : {StreamKind::Income, StreamKind::Loss}) {
        auto same = fit_closed_form(problem(kind, 0.013, 0.013));
        EXPECT_EQ(same.d_rar_fit.value(), 0.0);
        EXPECT_EQ(same.sign_class, SignClass::Zero);
    }
}

TEST(FitNumericTest, Examples) {
    const auto income = fit_numeric(problem(StreamKind::Income, 0.05, 0.02, 0.01427, {100, 1}));
    EXPECT_NEAR(income.d_rar_fit.value(), 0.03, 1e-9);
    EXPECT_LT(income.residual, 1e-7);
    EXPECT_EQ(income.sign_class, SignClass::PositiveAdjustment);

    const auto loss = fit_numeric(problem(StreamKind::Loss, 0.02, 0.05, 0.01427, {300, 5}));
    EXPECT_NEAR(loss.d_rar_fit.value(), -0.03, 1e-9);
    EXPECT_EQ(loss.sign_class, SignClass::NegativeAdjustment);

    const auto same = fit_numeric(problem(StreamKind::Loss, 0.01, 0.01));
    EXPECT_NEAR(same.d_rar_fit.value(), 0.0, 1e-9);
    EXPECT_EQ(same.sign_class, SignClass::Zero);
}

TEST(FitNumericTest, ExpandsBracketBeyondUnitRate) {
    // fit = -1.5 lies outside the initial [-1, 1] bracket
    const auto p = FitProblem(StreamSpec::loss(1, 0.0), StreamSpec::loss(1, 1.5), Rate(0.0), {4, 0.5});
    const auto fit = fit_numeric(p);
    EXPECT_NEAR(fit.d_rar_fit.value(), -1.5, 1e-9);
}

TEST(FitNumericTest, NoConvergenceOnTinyBudget) {
    NumericFitOptions options;
    options.max_iterations = 5;
    try {
        fit_numeric(problem(StreamKind::Income, 0.05, 0.02), options);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoConvergence);
    }
}

TEST(FitNumericTest, AgreesWithClosedForm) {
    test_support::Gen gen(31);
    for (int i = 0; i < 1000; ++i) {
        const auto kind = gen.coin() ? StreamKind::Income : StreamKind::Loss;
        const double horizon = gen.open(1, 300);
        const auto p = problem(kind, gen.uniform(-0.1, 0.1), gen.uniform(-0.1, 0.1),
                               gen.uniform(0.0, 0.1), {horizon, horizon / gen.integer(1, 100)},
                               gen.open(0, 1e3));
        const auto numeric = fit_numeric(p);
        const auto closed = fit_closed_form(p);
        ASSERT_NEAR(numeric.d_rar_fit.value(), closed.d_rar_fit.value(), 1e-9);
    }
}

TEST(FitClosedFormTest, BackSubstitution) {
    test_support::Gen gen(32);
    for (int i = 0; i < 500; ++i) {
        const double g_e = gen.uniform(-0.1, 0.1);
        const double g_a = gen.uniform(-0.1, 0.1);
        const double d_tvm = gen.uniform(0, 0.1);
        const auto fit = fit_closed_form(problem(StreamKind::Loss, g_e, g_a, d_tvm, {300, 1}));
        for (int t = 0; t <= 300; ++t) {
            const double lhs = std::exp((g_e - d_tvm - fit.d_rar_fit.value()) * t);
            const double rhs = std::exp((g_a - d_tvm) * t);
            ASSERT_NEAR(lhs, rhs, 1e-12 * rhs);
        }
    }
}

TEST(FitClosedFormTest, IndependentOfTimeValueRate) {
    test_support::Gen gen(33);
    for (int i = 0; i < 200; ++i) {
        const double g_e = gen.uniform(-0.1, 0.1);
        const double g_a = gen.uniform(-0.1, 0.1);
        const auto ref = fit_closed_form(problem(StreamKind::Income, g_e, g_a, 0.0));
        for (int k = 1; k <= 10; ++k) {
            const auto fit = fit_closed_form(problem(StreamKind::Income, g_e, g_a, 0.01 * k));
            EXPECT_EQ(fit.d_rar_fit, ref.d_rar_fit);
        }
    }
}

TEST(FitResidualTest, ZeroAtFitAndGrowsAway) {
    const auto p = problem(StreamKind::Income, 0.05, 0.02, 0.01427, {50, 1}, 1);
    EXPECT_LT(fit_residual(p, Rate(0.03)), 1e-13);
    EXPECT_GT(fit_residual(p, Rate(0.031)), fit_residual(p, Rate(0.0301)));
    // at d = 0 the worst point is t = 50: e^{(0.05-0.01427)50} - e^{(0.02-0.01427)50}
    EXPECT_NEAR(fit_residual(p, Rate(0.0)),
                std::exp(0.03573 * 50) - std::exp(0.00573 * 50), 1e-12);
}

TEST(ClassifyDirectionTest, Examples) {
    const auto fit = [](double d) { return FitResult{Rate(d), classify_sign(Rate(d)), 0}; };
    EXPECT_EQ(classify_direction(StreamKind::Income, fit(0.03)), Direction::Consistent);
    EXPECT_EQ(classify_direction(StreamKind::Loss, fit(-0.03)), Direction::Consistent);
    EXPECT_EQ(classify_direction(StreamKind::Loss, fit(0.01)), Direction::Contradicts);
    EXPECT_EQ(classify_direction(StreamKind::Income, fit(-0.01)), Direction::Contradicts);
    EXPECT_EQ(classify_direction(StreamKind::Income, fit(0.0)), Direction::Degenerate);
    EXPECT_EQ(classify_direction(StreamKind::Loss, fit(5e-13)), Direction::Degenerate);
}

TEST(ClassifyDirectionTest, LossPremiseNotRestrictedToNegativeGrowth) {
    // actual damages outgrow expected ones with both growth rates positive
    const auto fit = fit_closed_form(problem(StreamKind::Loss, 0.01, 0.04));
    EXPECT_EQ(classify_direction(StreamKind::Loss, fit), Direction::Consistent);
}
