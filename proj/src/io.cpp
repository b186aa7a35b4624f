#include "lctb/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "lctb/errors.hpp"

namespace lctb {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(s);
    while (std::getline(is, field, sep)) {
        out.push_back(trim(field));
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

// Accepts "nan"/"inf" so that non-finite values are reported as such rather
// than as syntax errors.
std::optional<double> to_double(const std::string& s) {
    if (s.empty()) {
        return std::nullopt;
    }
    double v = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    if (*begin == '+') {
        ++begin;
    }
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
        return std::nullopt;
    }
    return v;
}

double number(const std::string& s, const std::string& what) {
    const auto v = to_double(s);
    if (!v) {
        throw ParseError("cannot read " + what + " from '" + s + "'");
    }
    return *v;
}

std::ofstream open_for_writing(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

Grid grid_from_json(const nlohmann::json& j, const std::string& key) {
    if (j.is_string()) {
        return parse_grid(j.get<std::string>());
    }
    if (!j.is_object() || !j.contains("start") || !j.contains("step") || !j.contains("count")) {
        throw ConfigError("'" + key + "' must be \"start:step:count\" or an object with start, step and count");
    }
    const auto count = j.at("count").get<long long>();
    if (count < 2) {
        throw GridError("'" + key + "' needs at least 2 points");
    }
    return Grid(j.at("start").get<double>(), j.at("step").get<double>(), static_cast<std::size_t>(count));
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

SampledSignal read_signal_csv(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!trim(line).empty()) {
            break;
        }
    }
    if (trim(line) != "t,re,im") {
        throw ParseError(source + ": expected header 't,re,im', got '" + trim(line) + "'");
    }
    std::vector<double> times;
    std::vector<cplx> values;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split(line, ',');
        const std::string where = source + ":" + std::to_string(line_no);
        if (fields.size() != 3) {
            throw ParseError(where + ": expected 3 fields, got " + std::to_string(fields.size()));
        }
        const double t = number(fields[0], where + " time");
        const double re = number(fields[1], where + " real part");
        const double im = number(fields[2], where + " imaginary part");
        if (!std::isfinite(t) || !std::isfinite(re) || !std::isfinite(im)) {
            throw NonFiniteError(where + ": non-finite value");
        }
        times.push_back(t);
        values.emplace_back(re, im);
    }
    if (times.size() < 2) {
        throw ParseError(source + ": need at least 2 samples");
    }
    const double step = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
    if (!(step > 0.0)) {
        throw GridError(source + ": times must increase");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (std::abs((times[i] - times[i - 1]) - step) > csv_step_tolerance * step) {
            throw GridError(source + ": times are not equispaced near row " + std::to_string(i + 1));
        }
    }
    return SampledSignal(times.front(), step, std::move(values));
}

SampledSignal read_signal_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    return read_signal_csv(in, path.string());
}

void write_signal_csv(std::ostream& out, const SampledSignal& f) {
    out << "t,re,im\n" << std::setprecision(17);
    for (std::size_t i = 0; i < f.size(); ++i) {
        out << f.time(i) << ',' << f[i].real() << ',' << f[i].imag() << '\n';
    }
}

void write_signal_csv(const std::filesystem::path& path, const SampledSignal& f) {
    auto out = open_for_writing(path);
    write_signal_csv(out, f);
}

std::string render_svg_plot(const SampledSignal& f, const std::string& title) {
    constexpr double width = 720.0;
    constexpr double panel = 220.0;
    constexpr double margin = 50.0;
    const double x0 = f.start();
    const double x1 = f.last_time();
    const double peak = std::max(sup_norm(f), std::numeric_limits<double>::min());

    auto x_of = [&](double t) { return margin + (width - 2.0 * margin) * (t - x0) / (x1 - x0); };
    auto polyline = [&](double top, auto value, double lo, double hi) {
        std::ostringstream os;
        os << std::setprecision(6) << "<polyline fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double y = top + panel * (1.0 - (value(f[i]) - lo) / (hi - lo));
            os << x_of(f.time(i)) << ',' << y << ' ';
        }
        os << "\"/>\n";
        return os.str();
    };
    auto frame = [&](double top, const std::string& label, double lo, double hi) {
        std::ostringstream os;
        os << std::setprecision(4) << "<rect x=\"" << margin << "\" y=\"" << top << "\" width=\"" << width - 2.0 * margin
           << "\" height=\"" << panel << "\" fill=\"none\" stroke=\"#999\"/>\n"
           << "<text x=\"" << margin << "\" y=\"" << top - 6.0 << "\" font-size=\"12\">" << label << "</text>\n"
           << "<text x=\"4\" y=\"" << top + 12.0 << "\" font-size=\"10\">" << hi << "</text>\n"
           << "<text x=\"4\" y=\"" << top + panel << "\" font-size=\"10\">" << lo << "</text>\n";
        return os.str();
    };

    const double top1 = 40.0;
    const double top2 = top1 + panel + 50.0;
    std::ostringstream svg;
    svg << std::setprecision(4) << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << top2 + panel + 40.0 << "\">\n"
        << "<text x=\"" << margin << "\" y=\"20\" font-size=\"14\">" << xml_escape(title) << "</text>\n"
        << frame(top1, "|F|", 0.0, peak) << polyline(top1, [](cplx z) { return std::abs(z); }, 0.0, peak)
        << frame(top2, "arg F", -M_PI, M_PI) << polyline(top2, [](cplx z) { return std::arg(z); }, -M_PI, M_PI)
        << "<text x=\"" << margin << "\" y=\"" << top2 + panel + 20.0 << "\" font-size=\"10\">" << x0 << "</text>\n"
        << "<text x=\"" << width - margin - 30.0 << "\" y=\"" << top2 + panel + 20.0 << "\" font-size=\"10\">" << x1
        << "</text>\n</svg>\n";
    return svg.str();
}

void write_svg_plot(const std::filesystem::path& path, const SampledSignal& f, const std::string& title) {
    auto out = open_for_writing(path);
    out << render_svg_plot(f, title);
}

LctParams parse_params(const std::string& text) {
    const std::string s = trim(text);
    if (s == "fourier") {
        return special_params(SpecialKind::fourier);
    }
    if (s == "identity") {
        return special_params(SpecialKind::identity);
    }
    if (s.rfind("frft:", 0) == 0) {
        return special_params(SpecialKind::frft, number(s.substr(5), "fractional angle"));
    }
    const auto fields = split(s, ',');
    if (fields.size() != 4) {
        throw ParseError("parameters must be 'a,b,c,d', 'fourier', 'identity' or 'frft:<theta>', got '" + s + "'");
    }
    return make_params(number(fields[0], "a"), number(fields[1], "b"), number(fields[2], "c"),
                       number(fields[3], "d"));
}

Grid parse_grid(const std::string& text) {
    const auto fields = split(trim(text), ':');
    if (fields.size() != 3) {
        throw ParseError("grid must be 'start:step:count', got '" + text + "'");
    }
    const double count = number(fields[2], "grid count");
    if (count != std::floor(count) || count < 2.0 || count > 1e8) {
        throw GridError("grid count must be an integer of at least 2, got '" + fields[2] + "'");
    }
    return Grid(number(fields[0], "grid start"), number(fields[1], "grid step"), static_cast<std::size_t>(count));
}

RunConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ConfigError("configuration must be a JSON object");
    }
    RunConfig c;
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "params") {
                if (value.is_string()) {
                    c.params = parse_params(value.get<std::string>());
                } else {
                    const auto v = value.get<std::vector<double>>();
                    if (v.size() != 4) {
                        throw ConfigError("'params' needs four entries");
                    }
                    c.params = make_params(v[0], v[1], v[2], v[3]);
                }
            } else if (key == "tgrid") {
                c.tgrid = grid_from_json(value, key);
            } else if (key == "ugrid") {
                c.ugrid = grid_from_json(value, key);
            } else if (key == "family") {
                c.family = value.get<std::string>();
            } else if (key == "scale") {
                c.scale = value.get<int>();
                if (c.scale < 1) {
                    throw ConfigError("'scale' must be a positive integer");
                }
            } else if (key == "depth") {
                const auto depth = value.get<long long>();
                if (depth < 2) {
                    throw ConfigError("'depth' must be at least 2");
                }
                c.depth = static_cast<std::size_t>(depth);
            } else if (key == "seed") {
                c.seed = value.get<std::uint64_t>();
            } else if (key == "out") {
                c.out_dir = value.get<std::string>();
            } else if (key == "plot") {
                c.plot = value.get<bool>();
            } else if (key == "tolerances") {
                Tolerances& t = c.tolerances;
                for (const auto& [name, tol] : value.items()) {
                    double* slot = name == "exact"          ? &t.exact
                                   : name == "symmetry"     ? &t.symmetry
                                   : name == "analytic"     ? &t.analytic
                                   : name == "quadrature"   ? &t.quadrature
                                   : name == "smooth"       ? &t.smooth
                                   : name == "kinked"       ? &t.kinked
                                   : name == "construction" ? &t.construction
                                   : name == "spectral"     ? &t.spectral
                                                            : nullptr;
                    if (slot == nullptr) {
                        throw ConfigError("unknown tolerance '" + name + "'");
                    }
                    *slot = tol.get<double>();
                    if (!(*slot >= 0.0) || !std::isfinite(*slot)) {
                        throw ConfigError("tolerance '" + name + "' must be a finite non-negative number");
                    }
                }
            } else {
                throw ConfigError("unknown configuration key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("configuration value has the wrong type: ") + e.what());
    }
    if (c.params) {
        (void)family_by_name(c.family, *c.params, c.scale);
    }
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open configuration '" + path.string() + "'");
    }
    try {
        return parse_config(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("configuration '" + path.string() + "' is not valid JSON: " + e.what());
    }
}

TestBattery battery_from_config(const RunConfig& config) {
    TestBattery battery = default_battery();
    if (config.params) {
        battery.params.insert(battery.params.begin(), NamedParams{config.params->to_string(), *config.params});
    }
    if (config.tgrid) {
        battery.tgrid = *config.tgrid;
    }
    if (config.ugrid) {
        battery.ugrid = *config.ugrid;
    }
    if (config.seed) {
        battery.seed = *config.seed;
    }
    battery.depth = config.depth;
    battery.bump_scale = config.scale;
    battery.tol = config.tolerances;
    return battery;
}

nlohmann::json to_json(const LctParams& p) { return nlohmann::json::array({p.a(), p.b(), p.c(), p.d()}); }

nlohmann::json to_json(const Grid& g) {
    return {{"start", g.start()}, {"step", g.step()}, {"count", g.count()}};
}

nlohmann::json to_json(const ConditionReport& r) {
    return {{"n", r.n},
            {"condition_i_value", {{"re", r.condition_i_value.real()}, {"im", r.condition_i_value.imag()}}},
            {"tail_mass", r.tail_mass},
            {"tolerance", r.tolerance},
            {"passed", r.passed_i},
            {"passed_i", r.passed_i},
            {"passed_ii", r.passed_ii}};
}

nlohmann::json to_json(const ReportPart& p) {
    const char* rule = p.rule == ReportPart::Rule::bound        ? "bound"
                       : p.rule == ReportPart::Rule::decreasing ? "decreasing"
                                                                : "flagged";
    nlohmann::json j{{"name", p.name},
                     {"rule", rule},
                     {"residual", p.residual},
                     {"tolerance", p.tolerance},
                     {"passed", p.passed}};
    if (!p.sequence.empty()) {
        j["sequence"] = p.sequence;
    }
    if (!p.note.empty()) {
        j["note"] = p.note;
    }
    return j;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : r.parts) {
        parts.push_back(to_json(p));
    }
    return {{"claim_id", r.claim_id}, {"statement", r.statement}, {"inputs", r.inputs},
            {"lhs_norm", r.lhs_norm}, {"rhs_norm", r.rhs_norm},   {"residual", r.residual},
            {"tolerance", r.tolerance}, {"passed", r.passed},    {"gated", r.gated},
            {"runtime_ms", r.runtime_ms}, {"parts", parts},      {"notes", r.notes}};
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) {
        j.push_back(to_json(r));
    }
    return j;
}

nlohmann::json to_json(const TrendSummary& t) {
    return {{"values", t.values},
            {"strictly_decreasing", t.strictly_decreasing},
            {"contraction", t.contraction},
            {"converging", t.converging}};
}

std::string format_report_table(const std::vector<VerificationReport>& reports) {
    std::size_t width = 8;
    for (const auto& r : reports) {
        width = std::max(width, r.claim_id.size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width)) << "claim" << "  status  gated  " << std::setw(11)
       << "residual" << std::setw(11) << "tolerance" << "ms\n";
    for (const auto& r : reports) {
        os << std::left << std::setw(static_cast<int>(width)) << r.claim_id << "  " << std::setw(6)
           << (r.passed ? "pass" : "FAIL") << "  " << std::setw(5) << (r.gated ? "yes" : "no") << "  "
           << std::setprecision(3) << std::setw(11) << r.residual << std::setw(11) << r.tolerance << std::fixed
           << std::setprecision(0) << r.runtime_ms << std::defaultfloat << '\n';
    }
    return os.str();
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    auto out = open_for_writing(path);
    out << j.dump(2) << '\n';
}

}  // namespace lctb
