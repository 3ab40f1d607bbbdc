/**
 * @file scenario.hpp
 * @brief Run configuration and the two-curve discounting scenario
 *
 * A config is a flat `key = value` text; keys are the CLI flag names without
 * the leading dashes. Rates may be written as fractions or with a `%` suffix.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvfl/discount.hpp"
#include "pvfl/model.hpp"
#include "pvfl/risk_mc.hpp"

namespace pvfl {

inline constexpr double kDefaultTimeValueRate = 0.01427;
inline constexpr double kDefaultRiskFactor = 3.57;
inline constexpr double kDefaultDiceRate = 0.051;
inline constexpr double kDefaultHorizon = 300.0;
inline constexpr double kDefaultStep = 1.0;

/// Rates above this (in absolute value) are assumed to be percentages typed
/// as fractions, e.g. 1.427 instead of 0.01427.
inline constexpr double kRatePlausibilityBound = 0.5;

enum class OutputFormat { Csv, Json };

struct ScenarioConfig {
    Rate d_tvm{kDefaultTimeValueRate};
    double r_rar = kDefaultRiskFactor;
    Rate d_dice{kDefaultDiceRate};
    double horizon = kDefaultHorizon;
    double step = kDefaultStep;
    StreamSpec stream = StreamSpec::income(1.0, 0.0);
    bool allow_illegal_pairing = false;

    // Used by individual subcommands only.
    std::optional<Rate> growth_actual;  // fit: g_A (stream.growth is g_E)
    std::optional<double> t;            // pv: evaluation time
    std::string series = "tvm";         // curve: tvm | risk
    std::optional<GrowthDistribution> dist;  // mc
    std::uint64_t n = 100000;                // mc
    std::uint64_t seed = 42;                 // mc
    OutputFormat format = OutputFormat::Csv;
    std::string out;  // empty means stdout

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Applies one key. Throws UnknownKey, ParseError or ValidationError.
void apply_config_key(ScenarioConfig& config, std::string_view key, std::string_view value);

/// Checks cross-field invariants. Throws ValidationError.
void validate_config(const ScenarioConfig& config);

/// Parses `key = value` lines (blank lines and `#` comments ignored) on top
/// of `base`, then validates.
ScenarioConfig parse_config_text(std::string_view text, ScenarioConfig base = {});

/// Reads a config file. Throws IoError when it cannot be read.
ScenarioConfig load_config(const std::filesystem::path& path, ScenarioConfig base = {});

/// Every key with its current value, in a fixed order. Unset optionals are
/// omitted.
ConfigEntries config_entries(const ScenarioConfig& config);

/// `key = value` lines that parse_config_text turns back into `config`.
std::string render_config(const ScenarioConfig& config);

struct ScenarioReport {
    CurveSeries tvm;
    CurveSeries risk_adjusted;
    std::optional<CurveSeries> counterfactual;  // only with allow_illegal_pairing
    Rate d_tvm;
    Rate d_net;
    std::optional<Rate> d_counterfactual;
    std::optional<FitResult> fit;  // when growth_actual is configured
    ScenarioConfig config;
    std::string tool_version;
};

/// The risk policy implied by the stream kind: multiply income rates by
/// r_rar, divide loss rates by it.
RiskPolicy default_policy(StreamKind kind, double r_rar);

/// Curves for the stream at d_tvm and at the net-of-risk rate on one grid;
/// with allow_illegal_pairing also the opposite-direction ("counterfactual")
/// curve.
ScenarioReport scenario_run(const ScenarioConfig& config);

}  // namespace pvfl
