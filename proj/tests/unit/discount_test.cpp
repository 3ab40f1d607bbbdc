#include <cmath>

#include <gtest/gtest.h>

#include "pvfl/discount.hpp"
#include "support/generators.hpp"

using namespace pvfl;

namespace {

// Expected values below were computed with mpmath at 30 digits.
constexpr double kRel = 1e-12;

void expect_rel(double actual, double expected, double rel = kRel) {
    EXPECT_NEAR(actual, expected, rel * std::abs(expected)) << "expected " << expected;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidValue;
}

}  // namespace

TEST(StreamValueTest, Examples) {
    expect_rel(stream_value(StreamSpec::income(100, 0.03), 10), 134.985880757600310);
    EXPECT_EQ(stream_value(StreamSpec::income(100, 0.03), 0), 100.0);
    expect_rel(stream_value(StreamSpec::loss(100, 0.02), 50), -271.828182845904524);
}

TEST(StreamValueTest, NegativeTime) {
    EXPECT_EQ(code_of([] { stream_value(StreamSpec::income(1, 0), -1e-9); }),
              ErrorCode::NegativeTime);
    EXPECT_EQ(code_of([] { discounted_value(StreamSpec::income(1, 0), Rate(0.01), -2); }),
              ErrorCode::NegativeTime);
}

TEST(DiscountedValueTest, Examples) {
    expect_rel(discounted_value(StreamSpec::income(100, 0.03), Rate(0.01427), 10),
               117.034666524015185);
    expect_rel(discounted_value(StreamSpec::income(100, 0.0), Rate(0.01427), 100),
               24.0027926978334193);
    expect_rel(discounted_value(StreamSpec::loss(100, 0.02), Rate(0.01427), 50),
               -133.175816789420932);
    EXPECT_EQ(discounted_value(StreamSpec::loss(7, 0.04), Rate(0.04), 123.4), -7.0);
}

TEST(DiscountedValueTest, AnchorAtZero) {
    test_support::Gen gen(21);
    for (int i = 0; i < 1000; ++i) {
        const StreamSpec spec(gen.coin() ? StreamKind::Income : StreamKind::Loss,
                              gen.open(0, 1e4), Rate(gen.uniform(-0.1, 0.1)));
        EXPECT_EQ(discounted_value(spec, Rate(gen.uniform(-0.1, 0.1)), 0.0), signed_initial(spec));
    }
}

TEST(DiscountedValueTest, ComposesWithStreamValue) {
    test_support::Gen gen(22);
    for (int i = 0; i < 10000; ++i) {
        const StreamSpec spec(gen.coin() ? StreamKind::Income : StreamKind::Loss,
                              gen.open(0, 1e4), Rate(gen.uniform(-0.1, 0.1)));
        const Rate d(gen.uniform(-0.1, 0.1));
        const double t = gen.uniform(0, 300);
        expect_rel(discounted_value(spec, d, t), stream_value(spec, t) * std::exp(-d.value() * t));
    }
}

TEST(DiscountedValueTest, IncomeValueFallsWithRate) {
    test_support::Gen gen(23);
    for (int i = 0; i < 1000; ++i) {
        const auto spec = StreamSpec::income(gen.open(0, 1e3), gen.uniform(-0.05, 0.05));
        const double d1 = gen.uniform(0, 0.1);
        const double d2 = d1 + gen.open(1e-4, 0.05);
        const double t = gen.open(0.5, 300);
        EXPECT_GT(discounted_value(spec, Rate(d1), t), discounted_value(spec, Rate(d2), t));
    }
}

TEST(NetRateTest, Examples) {
    EXPECT_NEAR(net_rate(Rate(0.01427), RiskPolicy::multiplicative(3.57), StreamKind::Income).value(),
                0.0509439, 1e-15);
    EXPECT_NEAR(net_rate(Rate(0.01427), RiskPolicy::divisive(3.57), StreamKind::Loss).value(),
                0.00399719887955182073, 1e-16);
    EXPECT_EQ(net_rate(Rate(0.01427), RiskPolicy::multiplicative(1.0), StreamKind::Income).value(),
              0.01427);
    EXPECT_NEAR(net_rate(Rate(0.01427), RiskPolicy::subtractive(Rate(0.0102728)), StreamKind::Loss)
                    .value(),
                0.0039972, 1e-15);
}

TEST(NetRateTest, IllegalPairings) {
    const Rate d(0.01427);
    EXPECT_EQ(code_of([&] { net_rate(d, RiskPolicy::divisive(3.57), StreamKind::Income); }),
              ErrorCode::IllegalPairing);
    EXPECT_EQ(code_of([&] { net_rate(d, RiskPolicy::multiplicative(3.57), StreamKind::Loss); }),
              ErrorCode::IllegalPairing);
    EXPECT_EQ(code_of([&] { net_rate(d, RiskPolicy::subtractive(Rate(0.01)), StreamKind::Income); }),
              ErrorCode::IllegalPairing);
    EXPECT_EQ(code_of([&] { net_rate(d, RiskPolicy::subtractive(Rate(-0.01)), StreamKind::Loss); }),
              ErrorCode::IllegalPairing);
    EXPECT_NEAR(net_rate(d, RiskPolicy::subtractive(Rate(-0.01)), StreamKind::Income).value(),
                0.02427, 1e-15);
    // factor 1 is legal in either direction
    EXPECT_EQ(net_rate(d, RiskPolicy::divisive(1.0), StreamKind::Loss), d);
}

TEST(NetRateTest, DivisiveEqualsSubtractive) {
    test_support::Gen gen(24);
    for (int i = 0; i < 10000; ++i) {
        const double d = gen.uniform(0.0, 0.1);
        const double r = gen.uniform(1.0, 10.0);
        const double div = net_rate(Rate(d), RiskPolicy::divisive(r), StreamKind::Loss).value();
        const double sub =
            net_rate(Rate(d), RiskPolicy::subtractive(Rate(d * (1 - 1 / r))), StreamKind::Loss)
                .value();
        EXPECT_NEAR(div, sub, 1e-15 * std::max(d, 1e-300) + 1e-18);
    }
}

TEST(NetRateTest, RiskDirectionOnCurves) {
    test_support::Gen gen(25);
    for (int i = 0; i < 2000; ++i) {
        const Rate d(gen.open(0.001, 0.1));
        const double r = 1.0 + gen.open(0.01, 5.0);
        const double t = gen.open(1.0, 300);
        const auto loss = StreamSpec::loss(gen.open(0, 1e3), gen.uniform(-0.05, 0.05));
        const auto income = StreamSpec::income(gen.open(0, 1e3), gen.uniform(-0.05, 0.05));

        const Rate d_loss = net_rate(d, RiskPolicy::divisive(r), StreamKind::Loss);
        EXPECT_LT(discounted_value(loss, d_loss, t), discounted_value(loss, d, t));

        const Rate d_income = net_rate(d, RiskPolicy::multiplicative(r), StreamKind::Income);
        EXPECT_LT(discounted_value(income, d_income, t), discounted_value(income, d, t));
    }
}

TEST(TimeGridTest, ExactEndpoint) {
    EXPECT_EQ(time_grid(300, 300), (std::vector<double>{0, 300}));
    EXPECT_EQ(time_grid(10, 3), (std::vector<double>{0, 3, 6, 9, 10}));
    EXPECT_EQ(time_grid(2.5, 0.5).size(), 6u);
    const auto g = time_grid(0.3, 0.1);  // 0.3 / 0.1 rounds below 3
    ASSERT_EQ(g.size(), 4u);
    EXPECT_EQ(g.back(), 0.3);
    EXPECT_EQ(time_grid(300, 1).size(), 301u);
}

TEST(TimeGridTest, BadGrid) {
    EXPECT_EQ(code_of([] { time_grid(0, 1); }), ErrorCode::BadGrid);
    EXPECT_EQ(code_of([] { time_grid(10, 0); }), ErrorCode::BadGrid);
    EXPECT_EQ(code_of([] { time_grid(10, -1); }), ErrorCode::BadGrid);
    EXPECT_EQ(code_of([] { time_grid(10, 11); }), ErrorCode::BadGrid);
    EXPECT_EQ(code_of([] { pv_curve(StreamSpec::income(1, 0), Rate(0.01), -5, 1); }),
              ErrorCode::BadGrid);
}

TEST(TimeGridTest, StrictlyIncreasing) {
    test_support::Gen gen(26);
    for (int i = 0; i < 500; ++i) {
        const double h = gen.open(0.1, 500);
        const double s = gen.open(0.0, 1.0) * h;
        const auto g = time_grid(h, s);
        EXPECT_EQ(g.front(), 0.0);
        EXPECT_EQ(g.back(), h);
        for (std::size_t k = 1; k < g.size(); ++k) ASSERT_LT(g[k - 1], g[k]);
    }
}

TEST(PvCurveTest, Endpoints) {
    const auto tvm = pv_curve(StreamSpec::income(1, 0), Rate(0.01427), 300, 300);
    ASSERT_EQ(tvm.rows.size(), 2u);
    expect_rel(tvm.rows.back().discounted, 0.0138288263434175348);

    const auto dice = pv_curve(StreamSpec::income(1, 0), Rate(0.051), 300, 300);
    expect_rel(dice.rows.back().discounted, 2.26618012776571164e-7);

    const auto loss = pv_curve(StreamSpec::loss(1, 0), Rate(0.0039972), 300, 300);
    expect_rel(loss.rows.back().discounted, -0.301447321341285727);
}

TEST(PvCurveTest, SignNeverFlips) {
    test_support::Gen gen(27);
    for (int i = 0; i < 200; ++i) {
        const StreamSpec spec(gen.coin() ? StreamKind::Income : StreamKind::Loss,
                              gen.open(0, 10), Rate(gen.uniform(-0.1, 0.1)));
        const auto c = pv_curve(spec, Rate(gen.uniform(-0.1, 0.1)), 300, 5);
        EXPECT_EQ(c.rows.front().raw, signed_initial(spec));
        EXPECT_EQ(c.rows.front().discounted, signed_initial(spec));
        for (const auto& row : c.rows) {
            EXPECT_EQ(row.discounted > 0, signed_initial(spec) > 0);
            EXPECT_EQ(row.raw > 0, signed_initial(spec) > 0);
        }
    }
}
