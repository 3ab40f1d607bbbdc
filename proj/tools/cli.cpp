#include "cli.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pvfl/discount.hpp"
#include "pvfl/fit.hpp"
#include "pvfl/format.hpp"
#include "pvfl/io.hpp"
#include "pvfl/risk_mc.hpp"
#include "pvfl/scenario.hpp"
#include "pvfl/version.hpp"

namespace pvfl::cli {

namespace {

using Json = nlohmann::ordered_json;

// Value-taking flags; each maps to the config key of the same name.
constexpr std::array kValueKeys{
    "d-tvm", "r-rar", "d-dice", "kind", "initial", "growth", "growth-actual", "horizon",
    "step",  "t",     "series", "dist", "n",       "seed",   "format",        "out",
};

struct Flags {
    std::map<std::string, std::string> values;
    bool allow_illegal_pairing = false;
    std::string config_path;
};

void add_flags(CLI::App& cmd, Flags& flags) {
    for (const char* key : kValueKeys) {
        cmd.add_option_function<std::string>(
            std::string("--") + key, [&flags, key](const std::string& v) { flags.values[key] = v; });
    }
    cmd.add_flag("--allow-illegal-pairing", flags.allow_illegal_pairing,
                 "also emit the wrong-direction risk curve");
    cmd.add_option("--config", flags.config_path, "key = value config file");
}

ScenarioConfig resolve_config(const Flags& flags) {
    ScenarioConfig config;
    if (!flags.config_path.empty()) config = load_config(flags.config_path);
    for (const auto& [key, value] : flags.values) apply_config_key(config, key, value);
    if (flags.allow_illegal_pairing) config.allow_illegal_pairing = true;
    validate_config(config);
    return config;
}

void deliver(const ScenarioConfig& config, const std::string& text, std::ostream& out) {
    if (config.out.empty()) {
        out << text;
        if (!out) throw Error(ErrorCode::IoError, "write to stdout failed");
    } else {
        write_file(config.out, text);
    }
}

std::string key_value_csv(const Json& obj) {
    std::ostringstream s;
    s << "quantity,value\n";
    for (const auto& [key, value] : obj.items()) {
        s << key << ',';
        if (value.is_string()) {
            s << value.get<std::string>();
        } else if (value.is_number_float()) {
            s << format_double(value.get<double>());
        } else {
            s << value.dump();
        }
        s << '\n';
    }
    return s.str();
}

std::string render(const ScenarioConfig& config, Json obj) {
    if (config.format == OutputFormat::Json) {
        Json j{{"schema_version", kJsonSchemaVersion}};
        j.update(obj);
        return j.dump(2) + "\n";
    }
    return key_value_csv(obj);
}

std::string cmd_rate(const ScenarioConfig& c) {
    const double r_df = risk_ratio(c.d_dice, c.d_tvm);
    return render(c, Json{
                         {"type", "rate"},
                         {"d_tvm", c.d_tvm.value()},
                         {"d_dice", c.d_dice.value()},
                         {"r_df", r_df},
                         {"r_df_2dp", std::round(r_df * 100.0) / 100.0},
                         {"r_rar", c.r_rar},
                         {"d_net_income", net_rate(c.d_tvm, RiskPolicy::multiplicative(c.r_rar),
                                                   StreamKind::Income).value()},
                         {"d_net_loss", net_rate(c.d_tvm, RiskPolicy::divisive(c.r_rar),
                                                 StreamKind::Loss).value()},
                     });
}

std::string cmd_pv(const ScenarioConfig& c) {
    if (!c.t) throw Error(ErrorCode::ValidationError, "pv needs --t");
    const auto kind = c.stream.kind();
    const Rate d_net = net_rate(c.d_tvm, default_policy(kind, c.r_rar), kind);
    Json j{
        {"type", "pv"},
        {"kind", std::string(to_string(kind))},
        {"t", *c.t},
        {"raw", stream_value(c.stream, *c.t)},
        {"d_tvm", c.d_tvm.value()},
        {"d_net", d_net.value()},
        {"tvm", discounted_value(c.stream, c.d_tvm, *c.t)},
        {"risk", discounted_value(c.stream, d_net, *c.t)},
    };
    return render(c, std::move(j));
}

std::string cmd_curve(const ScenarioConfig& c) {
    const auto kind = c.stream.kind();
    const Rate d = c.series == "risk" ? net_rate(c.d_tvm, default_policy(kind, c.r_rar), kind)
                                      : c.d_tvm;
    const auto series = pv_curve(c.stream, d, c.horizon, c.step);
    if (c.format == OutputFormat::Json) return to_json(series) + "\n";
    std::ostringstream s;
    emit_csv(series, s);
    return s.str();
}

std::string cmd_scenario(const ScenarioConfig& c) {
    const auto report = scenario_run(c);
    std::ostringstream s;
    if (c.format == OutputFormat::Json) {
        emit_json(report, s);
    } else {
        emit_csv(report, s);
    }
    return s.str();
}

std::string cmd_fit(const ScenarioConfig& c) {
    if (!c.growth_actual) throw Error(ErrorCode::ValidationError, "fit needs --growth-actual");
    const auto kind = c.stream.kind();
    const FitProblem problem(c.stream, StreamSpec(kind, c.stream.initial_magnitude(), *c.growth_actual),
                             c.d_tvm, {c.horizon, c.step});
    const auto closed = fit_closed_form(problem);
    const auto numeric = fit_numeric(problem);

    if (c.format == OutputFormat::Json) {
        const auto fit_obj = [](const FitResult& f) {
            return Json{{"d_rarF", f.d_rar_fit.value()},
                        {"sign_class", std::string(to_string(f.sign_class))},
                        {"residual", f.residual}};
        };
        const Json j{
            {"schema_version", kJsonSchemaVersion},
            {"type", "fit"},
            {"kind", std::string(to_string(kind))},
            {"growth_expected", c.stream.growth().value()},
            {"growth_actual", c.growth_actual->value()},
            {"d_tvm", c.d_tvm.value()},
            {"closed_form", fit_obj(closed)},
            {"numeric", fit_obj(numeric)},
            {"direction", std::string(to_string(classify_direction(kind, closed)))},
        };
        return j.dump(2) + "\n";
    }

    std::ostringstream s;
    s << "method,d_rarF,sign_class,residual,direction\n";
    for (const auto& [name, f] : {std::pair{"closed_form", closed}, std::pair{"numeric", numeric}}) {
        s << name << ',' << format_double(f.d_rar_fit.value()) << ',' << to_string(f.sign_class)
          << ',' << format_double(f.residual) << ',' << to_string(classify_direction(kind, f))
          << '\n';
    }
    return s.str();
}

std::string cmd_mc(const ScenarioConfig& c) {
    if (!c.dist) throw Error(ErrorCode::ValidationError, "mc needs --dist");
    const auto report =
        mc_fit_distribution(c.stream.kind(), c.stream.growth(), *c.dist, c.d_tvm, c.n, c.seed);
    if (c.format == OutputFormat::Json) return to_json(report) + "\n";
    return key_value_csv(Json{
        {"kind", std::string(to_string(report.kind))},
        {"growth_expected", report.growth_expected.value()},
        {"distribution", report.distribution},
        {"n", report.n},
        {"seed", report.seed},
        {"frac_negative_fit", report.frac_negative_fit},
        {"frac_positive_fit", report.frac_positive_fit},
        {"frac_zero_fit", report.frac_zero_fit},
        {"frac_gA_exceeds_gE", report.frac_growth_actual_exceeds_expected},
        {"frac_consistent", report.frac_consistent},
        {"mean_fit", report.mean_fit.value()},
        {"fit_p05", report.fit_quantiles[0].value()},
        {"fit_p50", report.fit_quantiles[1].value()},
        {"fit_p95", report.fit_quantiles[2].value()},
    });
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NoConvergence: return kNumeric;
        case ErrorCode::IoError: return kIo;
        default: return kValidation;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Present value of income and loss streams under risk-adjusted discounting",
                 "pvfl"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    using Command = std::string (*)(const ScenarioConfig&);
    const std::array<std::tuple<const char*, const char*, Command>, 6> commands{{
        {"rate", "risk ratio d_dice/d_tvm and net-of-risk rates", cmd_rate},
        {"pv", "discounted value at a single time --t", cmd_pv},
        {"curve", "one sampled curve (--series tvm|risk)", cmd_curve},
        {"scenario", "TVM and risk-adjusted curves on one grid", cmd_scenario},
        {"fit", "closed-form and numeric fitted risk adjustment", cmd_fit},
        {"mc", "Monte-Carlo distribution of the fitted adjustment", cmd_mc},
    }};

    std::array<Flags, commands.size()> flags;
    std::array<CLI::App*, commands.size()> subs{};
    for (std::size_t i = 0; i < commands.size(); ++i) {
        subs[i] = app.add_subcommand(std::get<0>(commands[i]), std::get<1>(commands[i]));
        add_flags(*subs[i], flags[i]);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kValidation;
    }

    for (std::size_t i = 0; i < commands.size(); ++i) {
        if (!subs[i]->parsed()) continue;
        try {
            const auto config = resolve_config(flags[i]);
            deliver(config, std::get<2>(commands[i])(config), out);
            return kOk;
        } catch (const Error& e) {
            err << "pvfl " << std::get<0>(commands[i]) << ": " << e.what() << '\n';
            return exit_code_for(e.code());
        }
    }
    return kValidation;
}

}  // namespace pvfl::cli
