#include "pvfl/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pvfl/fit.hpp"
#include "pvfl/format.hpp"
#include "pvfl/version.hpp"

namespace pvfl {

namespace {

[[noreturn]] void invalid(std::string_view key, const std::string& why) {
    throw Error(ErrorCode::ValidationError, std::string(key) + ": " + why);
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

Rate rate_value(std::string_view key, std::string_view text) {
    const double v = parse_rate(text);
    if (std::abs(v) > kRatePlausibilityBound) {
        invalid(key, "rate " + std::string(text) +
                         " exceeds 50%/yr; rates are fractions (0.01427) or percents (1.427%)");
    }
    return Rate(v);
}

std::uint64_t count_value(std::string_view key, std::string_view text) {
    const auto s = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::ParseError,
                    std::string(key) + ": not a non-negative integer: '" + std::string(text) + "'");
    }
    return v;
}

bool bool_value(std::string_view key, std::string_view text) {
    const auto s = trim(text);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw Error(ErrorCode::ParseError, std::string(key) + ": expected true or false");
}

StreamKind kind_value(std::string_view key, std::string_view text) {
    const auto s = trim(text);
    if (s == "income") return StreamKind::Income;
    if (s == "loss") return StreamKind::Loss;
    invalid(key, "expected income or loss, got '" + std::string(s) + "'");
}

GrowthDistribution dist_value(std::string_view key, std::string_view text) {
    // shape:a:b
    const auto s = trim(text);
    const auto c1 = s.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : s.find(':', c1 + 1);
    if (c2 == std::string_view::npos) {
        throw Error(ErrorCode::ParseError, std::string(key) +
                                               ": expected uniform:lo:hi or normal:mean:stddev");
    }
    const auto shape = s.substr(0, c1);
    const double a = parse_rate(s.substr(c1 + 1, c2 - c1 - 1));
    const double b = parse_rate(s.substr(c2 + 1));
    try {
        if (shape == "uniform") return GrowthDistribution::uniform(a, b);
        if (shape == "normal") return GrowthDistribution::normal(a, b);
    } catch (const Error& e) {
        invalid(key, e.what());
    }
    invalid(key, "unknown distribution '" + std::string(shape) + "'");
}

template <typename Fn>
void with_stream(ScenarioConfig& config, std::string_view key, Fn make) {
    try {
        config.stream = make(config.stream);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidValue) throw;
        invalid(key, e.what());
    }
}

}  // namespace

void apply_config_key(ScenarioConfig& config, std::string_view key, std::string_view value) {
    key = trim(key);
    if (key == "d-tvm") {
        config.d_tvm = rate_value(key, value);
    } else if (key == "r-rar") {
        config.r_rar = parse_double(value);
    } else if (key == "d-dice") {
        config.d_dice = rate_value(key, value);
    } else if (key == "horizon") {
        config.horizon = parse_double(value);
    } else if (key == "step") {
        config.step = parse_double(value);
    } else if (key == "kind") {
        const auto kind = kind_value(key, value);
        with_stream(config, key, [&](const StreamSpec& s) {
            return StreamSpec(kind, s.initial_magnitude(), s.growth());
        });
    } else if (key == "initial") {
        const double initial = parse_double(value);
        with_stream(config, key, [&](const StreamSpec& s) {
            return StreamSpec(s.kind(), initial, s.growth());
        });
    } else if (key == "growth") {
        const auto growth = rate_value(key, value);
        with_stream(config, key, [&](const StreamSpec& s) {
            return StreamSpec(s.kind(), s.initial_magnitude(), growth);
        });
    } else if (key == "growth-actual") {
        config.growth_actual = rate_value(key, value);
    } else if (key == "t") {
        config.t = parse_double(value);
    } else if (key == "series") {
        const auto s = trim(value);
        if (s != "tvm" && s != "risk") invalid(key, "expected tvm or risk");
        config.series = std::string(s);
    } else if (key == "dist") {
        config.dist = dist_value(key, value);
    } else if (key == "n") {
        config.n = count_value(key, value);
    } else if (key == "seed") {
        config.seed = count_value(key, value);
    } else if (key == "format") {
        const auto s = trim(value);
        if (s == "csv") {
            config.format = OutputFormat::Csv;
        } else if (s == "json") {
            config.format = OutputFormat::Json;
        } else {
            invalid(key, "expected csv or json");
        }
    } else if (key == "out") {
        config.out = std::string(trim(value));
    } else if (key == "allow-illegal-pairing") {
        config.allow_illegal_pairing = bool_value(key, value);
    } else {
        throw Error(ErrorCode::UnknownKey, "unknown key '" + std::string(key) + "'");
    }
}

void validate_config(const ScenarioConfig& config) {
    if (!(config.horizon > 0.0) || !std::isfinite(config.horizon)) {
        invalid("horizon", "must be > 0");
    }
    if (!(config.step > 0.0) || config.step > config.horizon) {
        invalid("step", "must satisfy 0 < step <= horizon");
    }
    if (!(config.r_rar >= 1.0)) {
        invalid("r-rar", "risk factor must be >= 1 (1 means no risk adjustment)");
    }
    if (config.t && *config.t < 0.0) invalid("t", "must be >= 0");
    if (config.n < 1) invalid("n", "must be >= 1");
}

ScenarioConfig parse_config_text(std::string_view text, ScenarioConfig base) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_no) + ": expected key = value");
        }
        apply_config_key(base, line.substr(0, eq), line.substr(eq + 1));
    }
    validate_config(base);
    return base;
}

ScenarioConfig load_config(const std::filesystem::path& path, ScenarioConfig base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), std::move(base));
}

ConfigEntries config_entries(const ScenarioConfig& c) {
    ConfigEntries entries{
        {"kind", std::string(to_string(c.stream.kind()))},
        {"initial", format_double(c.stream.initial_magnitude())},
        {"growth", format_double(c.stream.growth().value())},
        {"d-tvm", format_double(c.d_tvm.value())},
        {"r-rar", format_double(c.r_rar)},
        {"d-dice", format_double(c.d_dice.value())},
        {"horizon", format_double(c.horizon)},
        {"step", format_double(c.step)},
        {"allow-illegal-pairing", c.allow_illegal_pairing ? "true" : "false"},
    };
    if (c.growth_actual) entries.emplace_back("growth-actual", format_double(c.growth_actual->value()));
    if (c.t) entries.emplace_back("t", format_double(*c.t));
    entries.emplace_back("series", c.series);
    if (c.dist) entries.emplace_back("dist", c.dist->describe());
    entries.emplace_back("n", std::to_string(c.n));
    entries.emplace_back("seed", std::to_string(c.seed));
    entries.emplace_back("format", c.format == OutputFormat::Csv ? "csv" : "json");
    if (!c.out.empty()) entries.emplace_back("out", c.out);
    return entries;
}

std::string render_config(const ScenarioConfig& config) {
    std::string text;
    for (const auto& [key, value] : config_entries(config)) {
        text += key + " = " + value + "\n";
    }
    return text;
}

RiskPolicy default_policy(StreamKind kind, double r_rar) {
    return kind == StreamKind::Income ? RiskPolicy::multiplicative(r_rar)
                                      : RiskPolicy::divisive(r_rar);
}

ScenarioReport scenario_run(const ScenarioConfig& config) {
    validate_config(config);
    const auto kind = config.stream.kind();
    const Rate d_net = net_rate(config.d_tvm, default_policy(kind, config.r_rar), kind);

    ScenarioReport report{
        pv_curve(config.stream, config.d_tvm, config.horizon, config.step),
        pv_curve(config.stream, d_net, config.horizon, config.step),
        std::nullopt,
        config.d_tvm,
        d_net,
        std::nullopt,
        std::nullopt,
        config,
        std::string(kVersion),
    };

    if (config.allow_illegal_pairing) {
        const auto wrong = kind == StreamKind::Income ? RiskPolicy::divisive(config.r_rar)
                                                      : RiskPolicy::multiplicative(config.r_rar);
        const Rate d_wrong = apply_policy_unchecked(config.d_tvm, wrong);
        report.d_counterfactual = d_wrong;
        report.counterfactual = pv_curve(config.stream, d_wrong, config.horizon, config.step);
    }

    if (config.growth_actual) {
        const auto actual = StreamSpec(kind, config.stream.initial_magnitude(), *config.growth_actual);
        report.fit = fit_closed_form(
            FitProblem(config.stream, actual, config.d_tvm, {config.horizon, config.step}));
    }
    return report;
}

}  // namespace pvfl
