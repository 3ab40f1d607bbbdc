#include "pvfl/risk_mc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pvfl/fit.hpp"
#include "pvfl/format.hpp"
#include "pvfl/rng.hpp"

namespace pvfl {

GrowthDistribution GrowthDistribution::uniform(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw Error(ErrorCode::BadDistribution, "uniform needs finite lo < hi");
    }
    return {Shape::Uniform, lo, hi};
}

GrowthDistribution GrowthDistribution::normal(double mean, double stddev) {
    if (!std::isfinite(mean) || !std::isfinite(stddev) || !(stddev > 0.0)) {
        throw Error(ErrorCode::BadDistribution, "normal needs finite mean and stddev > 0");
    }
    return {Shape::Normal, mean, stddev};
}

std::string GrowthDistribution::describe() const {
    const char* name = shape_ == Shape::Uniform ? "uniform" : "normal";
    return std::string(name) + ":" + format_double(a_) + ":" + format_double(b_);
}

double GrowthDistribution::sample(std::uint64_t seed, std::uint64_t index) const noexcept {
    const CounterRng rng(seed);
    if (shape_ == Shape::Uniform) {
        return a_ + (b_ - a_) * rng.uniform(2 * index);
    }
    const double u1 = rng.uniform_open_zero(2 * index);
    const double u2 = rng.uniform(2 * index + 1);
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    return a_ + b_ * z;
}

double nearest_rank(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw Error(ErrorCode::InvalidValue, "empty sample");
    const auto n = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(p * n));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
}

McReport mc_fit_distribution(StreamKind kind, Rate growth_expected,
                             const GrowthDistribution& dist, Rate d_tvm, std::uint64_t n,
                             std::uint64_t seed) {
    if (n < 1) throw Error(ErrorCode::InvalidValue, "need at least one draw");

    McReport report;
    report.kind = kind;
    report.growth_expected = growth_expected;
    report.d_tvm = d_tvm;
    report.distribution = dist.describe();
    report.n = n;
    report.seed = seed;

    const double g_e = growth_expected.value();
    std::vector<double> fits;
    fits.reserve(n);
    std::uint64_t negative = 0, positive = 0, actual_exceeds = 0, consistent = 0;
    double sum = 0.0;

    for (std::uint64_t i = 0; i < n; ++i) {
        const double g_a = dist.sample(seed, i);
        const double d = g_e - g_a;  // closed-form fit per draw
        fits.push_back(d);
        sum += d;

        // Exact comparisons: the sign of a floating-point difference matches
        // the ordering of its operands.
        if (d < 0.0) ++negative;
        if (d > 0.0) ++positive;
        if (g_a > g_e) ++actual_exceeds;
        if ((kind == StreamKind::Income && d > 0.0) || (kind == StreamKind::Loss && d < 0.0)) {
            ++consistent;
        }
        if (i < kRetainedDraws) report.first_draws.push_back({g_a, d});
    }

    report.count_negative = negative;
    report.count_positive = positive;
    report.count_zero = n - negative - positive;

    const auto total = static_cast<double>(n);
    report.frac_negative_fit = static_cast<double>(negative) / total;
    report.frac_positive_fit = static_cast<double>(positive) / total;
    report.frac_zero_fit = static_cast<double>(report.count_zero) / total;
    report.frac_growth_actual_exceeds_expected = static_cast<double>(actual_exceeds) / total;
    report.frac_consistent = static_cast<double>(consistent) / total;
    report.mean_fit = Rate(sum / total);

    std::sort(fits.begin(), fits.end());
    report.fit_quantiles = {Rate(nearest_rank(fits, 0.05)), Rate(nearest_rank(fits, 0.50)),
                            Rate(nearest_rank(fits, 0.95))};
    return report;
}

}  // namespace pvfl
