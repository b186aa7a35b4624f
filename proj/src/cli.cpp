#include "lctb/cli.hpp"

#include <limits>
#include <cmath>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lctb/boehmian.hpp"
#include "lctb/convolution.hpp"
#include "lctb/delta.hpp"
#include "lctb/errors.hpp"
#include "lctb/io.hpp"
#include "lctb/lct.hpp"
#include "lctb/verify.hpp"

namespace lctb {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
    std::string config_path;
    std::string params;
    std::string grid;
    std::string out_dir;
    bool plot = false;

    std::string input;
    std::string second;
    bool inverse = false;

    std::string family;
    int n = 0;
    int scale = 0;
    int depth = 0;
    int k = 2;
    bool literal = false;

    std::string claim = "all";
};

class Session {
public:
    Session(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {
        if (!opt.config_path.empty()) {
            config_ = load_config(opt.config_path);
        }
        if (!opt.params.empty()) {
            config_.params = parse_params(opt.params);
        }
        if (!opt.out_dir.empty()) {
            config_.out_dir = opt.out_dir;
        }
        if (!opt.family.empty()) {
            config_.family = opt.family;
        }
        if (opt.scale != 0) {
            config_.scale = opt.scale;
        }
        if (opt.depth != 0) {
            config_.depth = static_cast<std::size_t>(opt.depth);
        }
        config_.plot = config_.plot || opt.plot;
        if (!opt.grid.empty()) {
            grid_ = parse_grid(opt.grid);
        }
    }

    int transform() {
        const SampledSignal f = read_input(opt_.input);
        const LctParams p = params();
        const Grid target = grid_ ? *grid_ : (opt_.inverse ? config_.tgrid : config_.ugrid).value_or(f.grid());
        const SampledSignal F = opt_.inverse ? lct_inverse(f, p, target) : lct_transform(f, p, target);
        const std::string name = opt_.inverse ? "inverse" : "transform";
        emit(name, F, (opt_.inverse ? "inverse of " : "transform of ") + opt_.input + " @ " + p.to_string());
        return exit_ok;
    }

    int convolve() {
        const SampledSignal f = read_input(opt_.input);
        const SampledSignal g = read_input(opt_.second);
        emit("convolve", a_convolve(f, g, params()), "weighted convolution @ " + params().to_string());
        return exit_ok;
    }

    int delta() {
        if (opt_.n < 1) {
            throw ConfigError("--n must be a positive index, got " + std::to_string(opt_.n));
        }
        const LctParams p = params();
        const DeltaFamily family = family_by_name(config_.family, p, config_.scale);
        const SampledSignal member = grid_ ? sample_member(family, *grid_) : family.member(opt_.n);
        const ConditionReport report = check_condition_i(member, p, config_.tolerances.analytic);
        const std::string stem = "delta_" + config_.family + "_" + std::to_string(opt_.n);
        emit(stem, member, family.name() + " member " + std::to_string(opt_.n));

        json sidecar = to_json(report);
        sidecar["n"] = opt_.n;
        sidecar["family"] = family.name();
        sidecar["params"] = to_json(p);
        sidecar["grid"] = to_json(member.grid());
        sidecar["support_bound"] = family.support_bound(opt_.n);
        sidecar["condition_i"] = std::abs(report.condition_i_value);
        sidecar["passed"] = report.passed_i;
        sidecar.erase("passed_ii");
        write_json(path(stem + ".json"), sidecar);
        out_ << sidecar.dump(2) << '\n';
        return exit_ok;
    }

    int verify() {
        TestBattery battery = battery_from_config(config_);
        if (grid_) {
            battery.tgrid = *grid_;
        }
        for (const auto& name : battery.edge_violations()) {
            warn("edge", "battery signal '" + name + "' is not negligible at the grid edges");
        }
        std::vector<VerificationReport> reports;
        if (opt_.claim == "all") {
            reports = run_all(battery);
        } else {
            reports.push_back(run_claim(opt_.claim, battery));
        }
        write_json(path("verify.json"), to_json(reports));
        out_ << format_report_table(reports);
        return all_gated_passed(reports) ? exit_ok : exit_verification_failed;
    }

    int boehm_embed() {
        const SampledSignal f = read_input(opt_.input);
        const BoehmianRep b = embed_input(f);
        write_sequences(b);
        json summary = rep_summary(b);
        write_json(path("summary.json"), summary);
        out_ << summary.dump(2) << '\n';
        return exit_ok;
    }

    int boehm_lct() {
        const SampledSignal f = read_input(opt_.input);
        const BoehmianRep b = embed_input(f);
        const Grid u = grid_ ? *grid_ : config_.ugrid.value_or(f.grid());
        const SpectralBoehmianRep s = lctb::boehm_lct(b, u, config_.tolerances.spectral);
        const LctLimit limit = boehm_lct_limit(b, u);
        for (std::size_t n = 1; n <= s.numerators.size(); ++n) {
            write_signal_csv(path("lct_numerator_" + std::to_string(n) + ".csv"), s.numerators[n - 1]);
            write_signal_csv(path("lct_denominator_" + std::to_string(n) + ".csv"), s.denominators[n - 1]);
        }
        emit("lct_limit", limit.value, "Boehmian transform limit @ " + b.params().to_string());

        json summary = rep_summary(b);
        summary["ugrid"] = to_json(u);
        summary["cross_residual"] = s.cross_residual;
        summary["cauchy"] = limit.cauchy;
        summary["cauchy_decreasing"] = limit.cauchy_decreasing;
        if (!limit.cauchy_decreasing) {
            warn("cauchy", "Cauchy diagnostic of the transform limit is not decreasing");
        }
        write_json(path("summary.json"), summary);
        out_ << summary.dump(2) << '\n';
        return exit_ok;
    }

    int boehm_converge() {
        const SampledSignal f = read_input(opt_.input);
        const LctParams p = params();
        const DeltaFamily family = family_by_name(config_.family, p, config_.scale);
        const SampledSignal e = perturbation_direction(f.grid(), config_.seed.value_or(default_battery().seed));
        const BoehmianRep limit = embed(f, family, config_.depth, p, config_.tolerances.construction);

        std::vector<BoehmianRep> seq;
        for (std::size_t n = 1; n <= config_.depth; ++n) {
            seq.push_back(embed(axpy(f, std::ldexp(1.0, -static_cast<int>(n)), e), family, config_.depth, p,
                                config_.tolerances.construction));
        }
        std::vector<int> ks(config_.depth);
        for (std::size_t i = 0; i < ks.size(); ++i) {
            ks[i] = static_cast<int>(i + 1);
        }
        const TrendSummary big = delta_convergence_diag(seq, limit);
        const ConvergenceMatrix small = small_delta_convergence_diag(seq, limit, ks);

        json per_k = json::array();
        for (std::size_t j = 0; j < ks.size(); ++j) {
            json row = to_json(small.per_k[j]);
            row["k"] = ks[j];
            per_k.push_back(row);
        }
        json summary{{"sequence", "embed(f + 2^-n e) against embed(f)"},
                     {"family", family.name()},
                     {"depth", config_.depth},
                     {"params", to_json(p)},
                     {"Delta", to_json(big)},
                     {"delta", {{"residuals", small.residuals}, {"per_k", per_k}, {"converging", small.converging}}}};
        write_json(path("converge.json"), summary);
        out_ << summary.dump(2) << '\n';
        return big.converging && small.converging ? exit_ok : exit_verification_failed;
    }

    int boehm_derive() {
        const SampledSignal f = read_input(opt_.input);
        const LctParams p = params();
        const DeltaFamily family = family_by_name(config_.family, p, config_.scale);
        if (opt_.k > family.smoothness()) {
            throw SmoothnessError("family '" + family.name() + "' supports derivatives up to order " +
                                  std::to_string(family.smoothness()) + ", requested " + std::to_string(opt_.k));
        }
        const BoehmianRep b = embed(f, family, config_.depth, p, config_.tolerances.construction);
        const DerivativeRule rule = opt_.literal ? DerivativeRule::literal : DerivativeRule::covariant;
        const BoehmianRep d = boehm_derivative(b, opt_.k, family, rule, std::numeric_limits<double>::infinity());
        write_sequences(d);
        json summary = rep_summary(d);
        summary["k"] = opt_.k;
        summary["rule"] = opt_.literal ? "literal" : "covariant";
        if (d.compat_residual() > config_.tolerances.construction) {
            warn("compatibility", "derivative quotient residual " + std::to_string(d.compat_residual()) +
                                      " exceeds the construction tolerance");
        }
        write_json(path("summary.json"), summary);
        out_ << summary.dump(2) << '\n';
        return exit_ok;
    }

private:
    LctParams params() const {
        if (!config_.params) {
            throw ConfigError("no transform parameters: pass --params or set \"params\" in the configuration");
        }
        return *config_.params;
    }

    fs::path path(const std::string& name) const { return config_.out_dir / name; }

    SampledSignal read_input(const std::string& file) {
        SampledSignal f = read_signal_csv(fs::path(file));
        if (!edges_negligible(f)) {
            warn("edge", "'" + file + "' is not negligible at the grid edges (|f| = " +
                             std::to_string(edge_magnitude(f)) + "); truncation error is uncontrolled");
        }
        return f;
    }

    SampledSignal sample_member(const DeltaFamily& family, const Grid& g) const {
        const SampledSignal m = family.member(opt_.n, g.step());
        std::vector<cplx> values(g.count());
        for (std::size_t i = 0; i < g.count(); ++i) {
            values[i] = m.at(g.at(i));
        }
        return SampledSignal(g, std::move(values));
    }

    BoehmianRep embed_input(const SampledSignal& f) const {
        const LctParams p = params();
        return embed(f, family_by_name(config_.family, p, config_.scale), config_.depth, p,
                     config_.tolerances.construction);
    }

    void write_sequences(const BoehmianRep& b) const {
        for (std::size_t n = 1; n <= b.depth(); ++n) {
            write_signal_csv(path("numerator_" + std::to_string(n) + ".csv"), b.numerator(n));
            write_signal_csv(path("denominator_" + std::to_string(n) + ".csv"), b.denominator(n));
        }
    }

    json rep_summary(const BoehmianRep& b) const {
        return {{"family", config_.family},
                {"scale", config_.scale},
                {"depth", b.depth()},
                {"params", to_json(b.params())},
                {"step", b.step()},
                {"compat_residual", b.compat_residual()},
                {"tolerance", config_.tolerances.construction},
                {"passed", b.compat_residual() <= config_.tolerances.construction}};
    }

    void emit(const std::string& stem, const SampledSignal& s, const std::string& title) const {
        write_signal_csv(path(stem + ".csv"), s);
        if (config_.plot) {
            write_svg_plot(path(stem + ".svg"), s, title);
        }
    }

    void warn(const std::string& kind, const std::string& message) const {
        err_ << json{{"warning", kind}, {"message", message}}.dump() << '\n';
    }

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
    RunConfig config_;
    std::optional<Grid> grid_;
};

void error_line(std::ostream& err, const std::string& kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Linear canonical transforms, weighted convolutions, delta sequences and Boehmians", "lctb"};
    app.require_subcommand(1);
    app.add_option("--config", opt.config_path, "JSON run configuration")->check(CLI::ExistingFile);
    app.add_option("--params", opt.params, "a,b,c,d | fourier | identity | frft:<theta>");
    app.add_option("--grid", opt.grid, "start:step:count");
    app.add_option("--out", opt.out_dir, "Output directory (default .)");
    app.add_flag("--plot", opt.plot, "Also write SVG plots of |F| and arg F");

    auto* transform = app.add_subcommand("transform", "Transform a signal CSV");
    transform->add_option("input", opt.input, "Signal CSV")->required();
    transform->add_flag("--inverse", opt.inverse, "Apply the inverse transform");

    auto* convolve = app.add_subcommand("convolve", "Weighted convolution of two signal CSVs");
    convolve->add_option("f", opt.input, "First signal CSV")->required();
    convolve->add_option("g", opt.second, "Second signal CSV")->required();

    auto* delta = app.add_subcommand("delta", "Sample a delta-sequence member and check its conditions");
    delta->add_option("--family", opt.family, "triangular | paper | bump | fixed")->required();
    delta->add_option("--n", opt.n, "Member index")->required();
    delta->add_option("--scale", opt.scale, "Index multiplier of the family");

    auto* verify = app.add_subcommand("verify", "Run one check or all of them");
    verify->add_option("claim", opt.claim, "Check identifier or 'all'");

    auto* boehm = app.add_subcommand("boehm", "Boehmian operations on an embedded signal");
    boehm->require_subcommand(1);
    boehm->add_option("--family", opt.family, "Delta family (default bump)");
    boehm->add_option("--scale", opt.scale, "Index multiplier of the family");
    boehm->add_option("--depth", opt.depth, "Truncation depth N")->check(CLI::PositiveNumber);
    auto* embed_cmd = boehm->add_subcommand("embed", "Write the numerator and denominator sequences");
    auto* lct_cmd = boehm->add_subcommand("lct", "Entrywise transform and its limit");
    auto* converge_cmd = boehm->add_subcommand("converge", "Convergence diagnostics of a perturbed sequence");
    auto* derive_cmd = boehm->add_subcommand("derive", "k-th derivative quotient");
    derive_cmd->add_option("--k", opt.k, "Derivative order")->check(CLI::NonNegativeNumber);
    derive_cmd->add_flag("--literal", opt.literal, "Differentiate the chirped members directly");
    for (auto* sub : {embed_cmd, lct_cmd, converge_cmd, derive_cmd}) {
        sub->add_option("input", opt.input, "Signal CSV")->required();
    }
    for (auto* sub : {transform, convolve, delta, verify, boehm, embed_cmd, lct_cmd, converge_cmd, derive_cmd}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        error_line(err, "UsageError", e.what());
        return exit_invalid_input;
    }

    try {
        Session session(opt, out, err);
        if (transform->parsed()) {
            return session.transform();
        }
        if (convolve->parsed()) {
            return session.convolve();
        }
        if (delta->parsed()) {
            return session.delta();
        }
        if (verify->parsed()) {
            return session.verify();
        }
        if (embed_cmd->parsed()) {
            return session.boehm_embed();
        }
        if (lct_cmd->parsed()) {
            return session.boehm_lct();
        }
        if (converge_cmd->parsed()) {
            return session.boehm_converge();
        }
        return session.boehm_derive();
    } catch (const Error& e) {
        error_line(err, e.kind(), e.what());
        return e.is_validation_error() ? exit_invalid_input : exit_numerical_error;
    } catch (const fs::filesystem_error& e) {
        error_line(err, "IOError", e.what());
        return exit_invalid_input;
    } catch (const std::exception& e) {
        error_line(err, "InternalError", e.what());
        return exit_numerical_error;
    }
}

}  // namespace lctb
