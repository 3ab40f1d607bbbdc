#include "pvfl/io.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "pvfl/format.hpp"
#include "pvfl/version.hpp"

namespace pvfl {

namespace {

using Json = nlohmann::ordered_json;

void check(const std::ostream& out) {
    if (!out) throw Error(ErrorCode::IoError, "write failed");
}

void provenance_block(const ScenarioConfig& config, std::string_view version, std::ostream& out) {
    out << "# pvfl " << version << '\n';
    for (const auto& [key, value] : config_entries(config)) {
        out << "# " << key << " = " << value << '\n';
    }
}

Json rows_json(const CurveSeries& series) {
    Json rows = Json::array();
    for (const auto& r : series.rows) rows.push_back(Json::array({r.t, r.raw, r.discounted}));
    return rows;
}

Json fit_json(const FitResult& fit) {
    return Json{
        {"d_rarF", fit.d_rar_fit.value()},
        {"sign_class", std::string(to_string(fit.sign_class))},
        {"residual", fit.residual},
    };
}

Json config_json(const ScenarioConfig& config) {
    Json obj = Json::object();
    for (const auto& [key, value] : config_entries(config)) obj[key] = value;
    return obj;
}

}  // namespace

void emit_csv(const ScenarioReport& report, std::ostream& out) {
    provenance_block(report.config, report.tool_version, out);
    out << "# d_tvm = " << format_double(report.d_tvm.value()) << '\n';
    out << "# d_net = " << format_double(report.d_net.value()) << '\n';
    if (report.d_counterfactual) {
        out << "# d_counterfactual = " << format_double(report.d_counterfactual->value()) << '\n';
    }

    out << "t,raw,tvm,risk";
    if (report.counterfactual) out << ",counterfactual";
    out << '\n';
    for (std::size_t i = 0; i < report.tvm.rows.size(); ++i) {
        const auto& row = report.tvm.rows[i];
        out << format_double(row.t) << ',' << format_double(row.raw) << ','
            << format_double(row.discounted) << ','
            << format_double(report.risk_adjusted.rows[i].discounted);
        if (report.counterfactual) {
            out << ',' << format_double(report.counterfactual->rows[i].discounted);
        }
        out << '\n';
    }
    check(out);
}

void emit_csv(const CurveSeries& series, std::ostream& out) {
    out << "# pvfl " << kVersion << '\n';
    out << "# kind = " << to_string(series.spec.kind()) << '\n';
    out << "# initial = " << format_double(series.spec.initial_magnitude()) << '\n';
    out << "# growth = " << format_double(series.spec.growth().value()) << '\n';
    out << "# rate = " << format_double(series.rate.value()) << '\n';
    out << "t,raw,discounted\n";
    for (const auto& r : series.rows) {
        out << format_double(r.t) << ',' << format_double(r.raw) << ','
            << format_double(r.discounted) << '\n';
    }
    check(out);
}

std::string to_json(const ScenarioReport& report) {
    Json rates{{"d_tvm", report.d_tvm.value()}, {"d_net", report.d_net.value()}};
    Json curves{{"tvm", rows_json(report.tvm)}, {"risk_adjusted", rows_json(report.risk_adjusted)}};
    if (report.counterfactual) {
        rates["d_counterfactual"] = report.d_counterfactual->value();
        curves["counterfactual"] = rows_json(*report.counterfactual);
    }

    Json j{
        {"schema_version", kJsonSchemaVersion},
        {"type", "scenario"},
        {"provenance", {{"tool", "pvfl"}, {"version", report.tool_version},
                        {"config", config_json(report.config)}}},
        {"rates_used", std::move(rates)},
        {"curves", std::move(curves)},
    };
    if (report.fit) j["fit"] = fit_json(*report.fit);
    return j.dump(2);
}

std::string to_json(const McReport& r) {
    Json draws = Json::array();
    for (const auto& d : r.first_draws) draws.push_back(Json::array({d.growth_actual, d.d_rar_fit}));

    const Json j{
        {"schema_version", kJsonSchemaVersion},
        {"type", "mc"},
        {"kind", std::string(to_string(r.kind))},
        {"growth_expected", r.growth_expected.value()},
        {"d_tvm", r.d_tvm.value()},
        {"distribution", r.distribution},
        {"n", r.n},
        {"seed", r.seed},
        {"count_negative", r.count_negative},
        {"count_positive", r.count_positive},
        {"count_zero", r.count_zero},
        {"frac_negative_fit", r.frac_negative_fit},
        {"frac_positive_fit", r.frac_positive_fit},
        {"frac_zero_fit", r.frac_zero_fit},
        {"frac_gA_exceeds_gE", r.frac_growth_actual_exceeds_expected},
        {"frac_consistent", r.frac_consistent},
        {"mean_fit", r.mean_fit.value()},
        {"fit_quantiles",
         {{"p05", r.fit_quantiles[0].value()},
          {"p50", r.fit_quantiles[1].value()},
          {"p95", r.fit_quantiles[2].value()}}},
        {"first_draws", std::move(draws)},
    };
    return j.dump(2);
}

std::string to_json(const FitResult& fit) {
    Json j{{"schema_version", kJsonSchemaVersion}};
    j.update(fit_json(fit));
    return j.dump(2);
}

std::string to_json(const CurveSeries& series) {
    const Json j{
        {"schema_version", kJsonSchemaVersion},
        {"type", "curve"},
        {"kind", std::string(to_string(series.spec.kind()))},
        {"initial", series.spec.initial_magnitude()},
        {"growth", series.spec.growth().value()},
        {"rate", series.rate.value()},
        {"rows", rows_json(series)},
    };
    return j.dump(2);
}

void emit_json(const ScenarioReport& report, std::ostream& out) {
    out << to_json(report) << '\n';
    check(out);
}

void emit_json(const McReport& report, std::ostream& out) {
    out << to_json(report) << '\n';
    check(out);
}

void emit_json(const FitResult& fit, std::ostream& out) {
    out << to_json(fit) << '\n';
    check(out);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

}  // namespace pvfl
