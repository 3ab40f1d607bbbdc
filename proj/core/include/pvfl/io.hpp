/**
 * @file io.hpp
 * @brief CSV and JSON serialization of curves, scenario reports, fits and
 *        Monte-Carlo reports
 *
 * Numbers are written in shortest round-trip decimal form. CSV uses LF line
 * endings and starts with a `#` comment block carrying the tool version and
 * the config echo. JSON objects have a fixed key order and a
 * `schema_version` field.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pvfl/discount.hpp"
#include "pvfl/fit.hpp"
#include "pvfl/risk_mc.hpp"
#include "pvfl/scenario.hpp"

namespace pvfl {

inline constexpr int kJsonSchemaVersion = 1;

/// Header `t,raw,tvm,risk[,counterfactual]`, one row per grid point.
void emit_csv(const ScenarioReport& report, std::ostream& out);

/// Header `t,raw,discounted`.
void emit_csv(const CurveSeries& series, std::ostream& out);

std::string to_json(const ScenarioReport& report);
std::string to_json(const McReport& report);
std::string to_json(const FitResult& fit);
std::string to_json(const CurveSeries& series);

void emit_json(const ScenarioReport& report, std::ostream& out);
void emit_json(const McReport& report, std::ostream& out);
void emit_json(const FitResult& fit, std::ostream& out);

/// Writes `text` to `path`, replacing it. Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace pvfl
