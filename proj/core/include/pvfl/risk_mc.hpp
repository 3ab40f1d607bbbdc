/**
 * @file risk_mc.hpp
 * @brief Monte-Carlo distribution of the fitted adjustment under uncertain
 *        realized growth
 *
 * Each draw i samples an actual growth g_A from the distribution and records
 * d_i = g_E - g_A. Draw i uses counter indices 2i and 2i+1 of a CounterRng
 * (SplitMix64), so a report depends only on (dist, n, seed). Uniform draws
 * are lo + (hi - lo) * u with u in [0, 1); normal draws use the Box-Muller
 * cosine branch on (u1 in (0, 1], u2 in [0, 1)).
 */

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pvfl/model.hpp"

namespace pvfl {

class GrowthDistribution {
public:
    enum class Shape { Uniform, Normal };

    /// Throws BadDistribution unless lo < hi and both finite.
    static GrowthDistribution uniform(double lo, double hi);
    /// Throws BadDistribution unless stddev > 0 and both finite.
    static GrowthDistribution normal(double mean, double stddev);

    Shape shape() const noexcept { return shape_; }
    /// (lo, hi) for Uniform, (mean, stddev) for Normal.
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

    /// "uniform:lo:hi" or "normal:mean:stddev".
    std::string describe() const;

    /// The growth rate for draw `index`.
    double sample(std::uint64_t seed, std::uint64_t index) const noexcept;

    friend bool operator==(const GrowthDistribution&, const GrowthDistribution&) = default;

private:
    GrowthDistribution(Shape shape, double a, double b) : shape_(shape), a_(a), b_(b) {}

    Shape shape_;
    double a_;
    double b_;
};

struct McDraw {
    double growth_actual;
    double d_rar_fit;

    friend bool operator==(const McDraw&, const McDraw&) = default;
};

struct McReport {
    StreamKind kind = StreamKind::Loss;
    Rate growth_expected;
    Rate d_tvm;  // echoed only; it cancels out of every fit
    std::string distribution;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;

    std::uint64_t count_negative = 0;
    std::uint64_t count_positive = 0;
    std::uint64_t count_zero = 0;

    double frac_negative_fit = 0.0;
    double frac_positive_fit = 0.0;
    double frac_zero_fit = 0.0;
    double frac_growth_actual_exceeds_expected = 0.0;
    double frac_consistent = 0.0;  // draws whose sign matches the kind's expected direction
    Rate mean_fit;
    std::array<Rate, 3> fit_quantiles;  // nearest-rank 5 %, 50 %, 95 %

    std::vector<McDraw> first_draws;  // up to kRetainedDraws, for spot checks

    friend bool operator==(const McReport&, const McReport&) = default;
};

inline constexpr std::size_t kRetainedDraws = 100;

/// Throws InvalidValue when n < 1.
McReport mc_fit_distribution(StreamKind kind, Rate growth_expected,
                             const GrowthDistribution& dist, Rate d_tvm, std::uint64_t n,
                             std::uint64_t seed);

/// Nearest-rank quantile of an ascending-sorted sample: element ceil(p * n).
double nearest_rank(const std::vector<double>& sorted, double p);

}  // namespace pvfl
