#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lctb/boehmian.hpp"
#include "lctb/delta.hpp"
#include "lctb/lct.hpp"
#include "lctb/signal.hpp"
#include "lctb/verify.hpp"

namespace lctb {

/// Relative tolerance on the spacing of CSV time stamps.
inline constexpr double csv_step_tolerance = 1e-9;

/// `t,re,im` with one row per sample. Throws ParseError on malformed rows or
/// a missing header, GridError when the times are not equispaced, and
/// NonFiniteError on NaN or infinite values.
SampledSignal read_signal_csv(std::istream& in, const std::string& source = "<stream>");
SampledSignal read_signal_csv(const std::filesystem::path& path);

/// 17 significant digits, so reading the file back reproduces the samples.
void write_signal_csv(std::ostream& out, const SampledSignal& f);
void write_signal_csv(const std::filesystem::path& path, const SampledSignal& f);

/// Two stacked panels: |F| and arg F against the grid variable.
std::string render_svg_plot(const SampledSignal& f, const std::string& title);
void write_svg_plot(const std::filesystem::path& path, const SampledSignal& f, const std::string& title);

/// "a,b,c,d", or one of "fourier", "identity", "frft:<theta>".
LctParams parse_params(const std::string& text);
/// "start:step:count".
Grid parse_grid(const std::string& text);

struct RunConfig {
    std::optional<LctParams> params;
    std::optional<Grid> tgrid;
    std::optional<Grid> ugrid;
    std::string family = "bump";
    int scale = 16;
    std::size_t depth = 4;
    Tolerances tolerances;
    std::optional<std::uint64_t> seed;
    std::filesystem::path out_dir = ".";
    bool plot = false;
};

/// Reads a JSON run configuration. Unknown keys and invalid values raise
/// ConfigError; parameter and grid errors propagate from their validators.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);

/// Battery defaults overridden by whatever the configuration sets.
TestBattery battery_from_config(const RunConfig& config);

nlohmann::json to_json(const LctParams& p);
nlohmann::json to_json(const Grid& g);
nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const ReportPart& p);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const std::vector<VerificationReport>& reports);
nlohmann::json to_json(const TrendSummary& t);

/// Fixed-width table with one row per report.
std::string format_report_table(const std::vector<VerificationReport>& reports);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace lctb
