#include "lctb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "lctb/boehmian.hpp"
#include "lctb/convolution.hpp"
#include "lctb/delta.hpp"
#include "lctb/errors.hpp"

namespace lctb {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(3) << v;
    return os.str();
}

double chirp_rate(const LctParams& p) { return 0.5 * p.a() / p.b(); }

double sup_on(const SampledSignal& f) { return sup_norm(f); }

SampledSignal on(const Grid& grid, const std::function<cplx(double)>& fn) { return SampledSignal::sample(grid, fn); }

// Same samples, relabelled onto `grid` (equal counts).
SampledSignal relabel(const SampledSignal& f, const Grid& grid) {
    return SampledSignal(grid, std::vector<cplx>(f.samples().begin(), f.samples().end()));
}

SampledSignal pointwise(const SampledSignal& f, const std::function<cplx(double)>& fn) { return modulate(f, fn); }

bool all_finite(const SampledSignal& f) {
    return std::all_of(f.samples().begin(), f.samples().end(),
                       [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

std::vector<int> indices(std::size_t depth) {
    std::vector<int> v;
    for (std::size_t n = 1; n <= depth; ++n) {
        v.push_back(static_cast<int>(n));
    }
    return v;
}

class ReportBuilder {
public:
    ReportBuilder(const std::string& id, std::string inputs) : start_(Clock::now()) {
        const ClaimInfo& info = find_claim(id);
        r_.claim_id = info.id;
        r_.statement = info.statement;
        r_.gated = info.gated;
        r_.inputs = std::move(inputs);
    }

    ReportPart& bound(std::string name, double residual, double tolerance, std::string note = {}) {
        ReportPart p;
        p.name = std::move(name);
        p.rule = ReportPart::Rule::bound;
        p.residual = residual;
        p.tolerance = tolerance;
        p.passed = residual <= tolerance;
        p.note = std::move(note);
        return push(std::move(p));
    }

    /// Strictly decreasing sequence. With `contracting`, the last value must
    /// also be at most half the first (or the sequence identically zero).
    ReportPart& decreasing(std::string name, std::vector<double> values, bool contracting = false,
                           std::string note = {}) {
        const TrendSummary trend = summarize_trend(values);
        ReportPart p;
        p.name = std::move(name);
        p.rule = ReportPart::Rule::decreasing;
        p.residual = worst_ratio(values);
        p.tolerance = contracting ? 0.5 : 1.0;
        if (contracting) {
            p.residual = trend.contraction;
        }
        p.passed = contracting ? trend.converging : trend.strictly_decreasing;
        p.sequence = std::move(values);
        p.note = std::move(note);
        return push(std::move(p));
    }

    ReportPart& flagged(std::string name, bool detected, double measured, std::string note = {}) {
        ReportPart p;
        p.name = std::move(name);
        p.rule = ReportPart::Rule::flagged;
        p.residual = measured;
        p.passed = detected;
        p.note = std::move(note);
        return push(std::move(p));
    }

    void norms(double lhs, double rhs) {
        if (!norms_set_) {
            r_.lhs_norm = lhs;
            r_.rhs_norm = rhs;
            norms_set_ = true;
        }
    }

    void note(std::string text) { r_.notes.push_back(std::move(text)); }

    VerificationReport finish() {
        r_.passed = !r_.parts.empty();
        double worst = -1.0;
        for (const auto& p : r_.parts) {
            r_.passed = r_.passed && p.passed;
            if (p.rule == ReportPart::Rule::bound) {
                const double ratio = p.tolerance > 0.0 ? p.residual / p.tolerance
                                                       : (p.residual > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
                if (ratio > worst) {
                    worst = ratio;
                    r_.residual = p.residual;
                    r_.tolerance = p.tolerance;
                }
            }
        }
        if (worst < 0.0) {
            for (const auto& p : r_.parts) {
                if (p.rule == ReportPart::Rule::decreasing && p.residual / p.tolerance > worst) {
                    worst = p.residual / p.tolerance;
                    r_.residual = p.residual;
                    r_.tolerance = p.tolerance;
                }
            }
        }
        r_.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        return r_;
    }

private:
    static double worst_ratio(const std::vector<double>& v) {
        double worst = 0.0;
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i - 1] > 0.0) {
                worst = std::max(worst, v[i] / v[i - 1]);
            } else if (v[i] > 0.0) {
                worst = std::numeric_limits<double>::infinity();
            } else {
                worst = std::max(worst, 1.0);
            }
        }
        return worst;
    }

    ReportPart& push(ReportPart p) {
        r_.parts.push_back(std::move(p));
        return r_.parts.back();
    }

    VerificationReport r_;
    Clock::time_point start_;
    bool norms_set_ = false;
};

std::vector<const BatterySignal*> smooth_signals(const TestBattery& battery) {
    std::vector<const BatterySignal*> out;
    for (const auto& s : battery.signals) {
        if (s.smooth) {
            out.push_back(&s);
        }
    }
    return out;
}

const NamedParams& primary_params(const TestBattery& battery) {
    if (battery.params.empty()) {
        throw ConfigError("test battery has no parameter sets");
    }
    return battery.params.front();
}

std::string battery_inputs(const TestBattery& battery, bool smooth_only = false) {
    std::string s = "signals:";
    for (const auto& sig : battery.signals) {
        if (!smooth_only || sig.smooth) {
            s += " " + sig.name;
        }
    }
    s += "; params:";
    for (const auto& p : battery.params) {
        s += " " + p.name;
    }
    return s;
}

std::string label(const BatterySignal& s, const NamedParams& p) { return s.name + " @ " + p.name; }

// Boehmian battery pieces on the fine grid.
SampledSignal boehm_signal(const TestBattery& battery, const BatterySignal& s) {
    return on(battery.boehm_tgrid, s.fn);
}

SampledSignal boehm_gaussian(const TestBattery& battery) {
    return on(battery.boehm_tgrid, [](double t) { return cplx(std::exp(-0.5 * t * t)); });
}

}  // namespace

const BatterySignal& TestBattery::signal(const std::string& name) const {
    for (const auto& s : signals) {
        if (s.name == name) {
            return s;
        }
    }
    throw ConfigError("test battery has no signal named '" + name + "'");
}

std::vector<std::string> TestBattery::edge_violations() const {
    std::vector<std::string> out;
    for (const auto& s : signals) {
        if (!edges_negligible(on(tgrid, s.fn)) || !edges_negligible(on(boehm_tgrid, s.fn))) {
            out.push_back(s.name);
        }
    }
    return out;
}

TestBattery default_battery() {
    TestBattery battery;
    battery.signals = {
        {"gaussian", [](double t) { return cplx(std::exp(-0.5 * t * t)); }, true},
        {"box", [](double t) { return cplx(std::abs(t) <= 1.0 ? 1.0 : 0.0); }, false},
        {"chirped-gaussian", [](double t) { return std::exp(-0.5 * t * t) * std::polar(1.0, 0.25 * t * t); }, true},
        {"windowed-sine", [](double t) { return cplx(std::sin(2.0 * t) * std::exp(-0.5 * t * t)); }, true},
    };
    battery.params = {
        {"(2,1,3,2)", make_params(2.0, 1.0, 3.0, 2.0)},
        {"fourier", special_params(SpecialKind::fourier)},
        {"frft(pi/4)", special_params(SpecialKind::frft, std::numbers::pi / 4.0)},
        {"(2,-1,-1,1)", make_params(2.0, -1.0, -1.0, 1.0)},
    };
    return battery;
}

SampledSignal perturbation_direction(const Grid& grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<cplx> coeff(4);
    for (auto& c : coeff) {
        const double re = unit(rng);
        c = cplx(re, unit(rng));
    }
    const double centre = 0.5 * unit(rng);
    const SampledSignal e = on(grid, [&](double t) {
        const cplx poly = coeff[0] + t * (coeff[1] + t * (coeff[2] + t * coeff[3]));
        return poly * std::exp(-(t - centre) * (t - centre));
    });
    return scale(e, 1.0 / l2_norm(e));
}

// ---------------------------------------------------------------- lct core

VerificationReport verify_round_trip(const TestBattery& battery) {
    ReportBuilder b("round-trip", battery_inputs(battery, true));
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        for (const BatterySignal* s : smooth_signals(battery)) {
            const SampledSignal f = on(battery.tgrid, s->fn);
            const SampledSignal F = lct_transform(f, p, battery.ugrid);
            const SampledSignal back = lct_inverse(F, p, battery.tgrid);
            b.norms(l2_norm(back), l2_norm(f));
            b.bound(label(*s, np), relative_l2_error(back, f), battery.tol.quadrature);
        }
        const bool involution = invert_params(invert_params(p)) == p;
        b.bound("inverse of inverse parameters " + np.name, involution ? 0.0 : 1.0, 0.0);
    }
    const SampledSignal g = on(battery.tgrid, battery.signals.front().fn);
    const SampledSignal resampled = lct_transform(g, special_params(SpecialKind::identity), battery.tgrid);
    b.bound("identity parameters resample", sup_distance(resampled, g), battery.tol.exact);
    return b.finish();
}

VerificationReport verify_unitarity(const TestBattery& battery) {
    ReportBuilder b("unitarity", battery_inputs(battery, true));
    for (const auto& np : battery.params) {
        for (const BatterySignal* s : smooth_signals(battery)) {
            const SampledSignal f = on(battery.tgrid, s->fn);
            const double out = l2_norm(lct_transform(f, np.params, battery.ugrid));
            const double in = l2_norm(f);
            b.norms(out, in);
            b.bound(label(*s, np), std::abs(out / in - 1.0), battery.tol.smooth, "norm ratio " + fmt(out / in));
        }
    }
    return b.finish();
}

VerificationReport verify_fourier_case(const TestBattery& battery) {
    const Grid ugrid = Grid::spanning(-6.0, 6.0, 513);
    ReportBuilder b("fourier-case", "gaussian exp(-t^2/2) on the battery t-grid; u in [-6,6], 513 points");
    const LctParams p = special_params(SpecialKind::fourier);
    const SampledSignal f = on(battery.tgrid, [](double t) { return cplx(std::exp(-0.5 * t * t)); });
    const SampledSignal F = lct_transform(f, p, ugrid);
    const SampledSignal exact =
        on(ugrid, [](double u) { return std::polar(1.0, -std::numbers::pi / 4.0) * std::exp(-0.5 * u * u); });
    b.norms(l2_norm(F), l2_norm(exact));
    b.bound("analytic transform of the gaussian", relative_l2_error(F, exact), battery.tol.quadrature);
    const bool matrix = p == make_params(0.0, 1.0, -1.0, 0.0) &&
                        special_params(SpecialKind::frft, std::numbers::pi / 2.0) == p;
    b.bound("fractional angle pi/2 gives the fourier matrix", matrix ? 0.0 : 1.0, 0.0);
    return b.finish();
}

VerificationReport verify_branch_consistency(const TestBattery&) {
    const Grid tgrid(-8.0, 1e-4, 160001);
    const Grid ugrid = Grid::spanning(-2.0, 2.0, 41);
    ReportBuilder b("branch-consistency", "gaussian on [-8,8] with step 1e-4; A = (1, eps, 0, 1); u in [-2,2]");
    const SampledSignal f = on(tgrid, [](double t) { return cplx(std::exp(-0.5 * t * t)); });
    const SampledSignal degenerate = lct_transform(f, special_params(SpecialKind::identity), ugrid);
    std::vector<double> gaps;
    for (const double eps : {1e-2, 1e-3}) {
        const SampledSignal near = lct_transform(f, make_params(1.0, eps, 0.0, 1.0), ugrid);
        gaps.push_back(sup_distance(near, degenerate));
        b.norms(l2_norm(near), l2_norm(degenerate));
    }
    b.decreasing("sup gap to the b = 0 branch at eps = 1e-2, 1e-3", gaps);
    return b.finish();
}

// ------------------------------------------------------------ conv algebra

VerificationReport verify_convolution_theorem(const TestBattery& battery) {
    ReportBuilder b("convolution-theorem", battery_inputs(battery) + "; every signal pair");
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        std::vector<SampledSignal> f;
        std::vector<SampledSignal> F;
        for (const auto& s : battery.signals) {
            f.push_back(on(battery.tgrid, s.fn));
            F.push_back(lct_transform(f.back(), p, battery.ugrid));
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = i; j < f.size(); ++j) {
                const SampledSignal lhs = lct_transform(a_convolve(f[i], f[j], p), p, battery.ugrid);
                const SampledSignal rhs = convolution_theorem_rhs(F[i], F[j], p);
                b.norms(l2_norm(lhs), l2_norm(rhs));
                const bool smooth = battery.signals[i].smooth && battery.signals[j].smooth;
                b.bound(battery.signals[i].name + " * " + battery.signals[j].name + " @ " + np.name,
                        relative_l2_error(lhs, rhs), smooth ? battery.tol.smooth : battery.tol.kinked);
            }
        }
        const SampledSignal zero = SampledSignal::zeros(battery.tgrid);
        const SampledSignal lhs0 = lct_transform(a_convolve(zero, f.front(), p), p, battery.ugrid);
        const SampledSignal rhs0 = convolution_theorem_rhs(lct_transform(zero, p, battery.ugrid), F.front(), p);
        b.bound("zero factor @ " + np.name, std::max(sup_norm(lhs0), sup_norm(rhs0)), 0.0);
    }
    return b.finish();
}

VerificationReport verify_semigroup(const TestBattery& battery) {
    ReportBuilder b("semigroup", battery_inputs(battery));
    std::vector<SampledSignal> f;
    for (const auto& s : battery.signals) {
        f.push_back(on(battery.tgrid, s.fn));
    }
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        double commute = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                const SampledSignal fg = a_convolve(f[i], f[j], p);
                commute = std::max(commute, relative_l2_error(a_convolve(f[j], f[i], p), fg));
                b.norms(l2_norm(fg), l2_norm(fg));
            }
        }
        b.bound("commutativity @ " + np.name, commute, battery.tol.symmetry);
        const auto smooth = smooth_signals(battery);
        if (smooth.size() >= 3) {
            const SampledSignal x = on(battery.tgrid, smooth[0]->fn);
            const SampledSignal y = on(battery.tgrid, smooth[1]->fn);
            const SampledSignal z = on(battery.tgrid, smooth[2]->fn);
            const SampledSignal left = a_convolve(a_convolve(x, y, p), z, p);
            const SampledSignal right = a_convolve(x, a_convolve(y, z, p), p);
            b.bound("associativity @ " + np.name, relative_l2_error(left, right), battery.tol.analytic);
        }
    }

    // Direct evaluation of the weighted integral: trapezoid over the overlap
    // of the two supports with W(t, tau) computed per sample.
    auto direct = [](const SampledSignal& x, const SampledSignal& y, const LctParams& p) {
        const std::size_t nx = x.size();
        const std::size_t ny = y.size();
        const double h = x.step();
        std::vector<cplx> out(nx + ny - 1);
        for (std::size_t j = 0; j < out.size(); ++j) {
            const double t = x.start() + y.start() + h * static_cast<double>(j);
            const std::size_t lo = j + 1 > ny ? j + 1 - ny : 0;
            const std::size_t hi = std::min(nx - 1, j);
            if (hi <= lo) {
                continue;
            }
            cplx acc{};
            for (std::size_t k = lo; k <= hi; ++k) {
                const double w = (k == lo || k == hi) ? 0.5 : 1.0;
                acc += w * x[k] * y[j - k] * weight(t, x.time(k), p);
            }
            out[j] = h * acc;
        }
        return SampledSignal(x.start() + y.start(), h, std::move(out));
    };
    const LctParams reduction = special_params(SpecialKind::fourier);
    const SampledSignal x = f.front();
    const SampledSignal y = f.back();
    b.bound("a = 0 reduces to plain convolution", relative_l2_error(a_convolve(x, y, reduction), direct(x, y, reduction)),
            battery.tol.symmetry);
    const LctParams& p = primary_params(battery).params;
    b.bound("direct weighted quadrature @ " + primary_params(battery).name,
            relative_l2_error(a_convolve(x, y, p), direct(x, y, p)), battery.tol.symmetry);
    return b.finish();
}

VerificationReport verify_closure(const TestBattery& battery) {
    ReportBuilder b("l2-closure", battery_inputs(battery) + "; bound ||f*g||_2 <= ||f||_1 ||g||_2 + 1e-8");
    std::vector<SampledSignal> f;
    for (const auto& s : battery.signals) {
        f.push_back(on(battery.tgrid, s.fn));
    }
    for (const auto& np : battery.params) {
        double excess = 0.0;
        bool finite = true;
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = 0; j < f.size(); ++j) {
                const SampledSignal h = a_convolve(f[i], f[j], np.params);
                const double norm = l2_norm(h);
                finite = finite && all_finite(h) && std::isfinite(norm);
                const double bound = l1_norm(f[i]) * l2_norm(f[j]);
                b.norms(norm, bound);
                excess = std::max(excess, norm - bound);
            }
        }
        b.bound("finite samples and norm @ " + np.name, finite ? 0.0 : 1.0, 0.0);
        b.bound("Young bound excess @ " + np.name, std::max(0.0, excess), 1e-8);
        const SampledSignal zero = a_convolve(SampledSignal::zeros(battery.tgrid), f.front(), np.params);
        b.bound("zero input @ " + np.name, l2_norm(zero), 0.0);
    }
    return b.finish();
}

VerificationReport verify_plancherel_continuity(const TestBattery& battery) {
    ReportBuilder b("plancherel-continuity",
                    "gaussian base, f_n = f + 2^-n e with a seeded unit-norm smooth e, n = 1..4; " +
                        battery_inputs(battery, true));
    const SampledSignal f = on(battery.tgrid, [](double t) { return cplx(std::exp(-0.5 * t * t)); });
    const SampledSignal e = perturbation_direction(battery.tgrid, battery.seed);
    for (const auto& np : battery.params) {
        const SampledSignal F = lct_transform(f, np.params, battery.ugrid);
        std::vector<double> gaps;
        double worst = 0.0;
        for (int n = 1; n <= 4; ++n) {
            const double size = std::ldexp(1.0, -n);
            const SampledSignal fn = axpy(f, size, e);
            const SampledSignal Fn = lct_transform(fn, np.params, battery.ugrid);
            const double out = l2_distance(Fn, F);
            const double in = l2_distance(fn, f);
            b.norms(out, in);
            gaps.push_back(out);
            worst = std::max(worst, std::abs(out / in - 1.0));
        }
        b.bound("transform gap / signal gap - 1 @ " + np.name, worst, battery.tol.smooth);
        b.decreasing("transform gaps @ " + np.name, gaps, true);
        const SampledSignal same = lct_transform(axpy(f, 0.0, e), np.params, battery.ugrid);
        b.bound("zero perturbation @ " + np.name, sup_distance(same, F), 0.0);
    }
    return b.finish();
}

// -------------------------------------------------------------- delta seq

VerificationReport verify_delta_axioms(const TestBattery& battery) {
    ReportBuilder b("delta-axioms", "triangular, literal example, fixed-width families; " + battery_inputs(battery));
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        const DeltaFamily tri = triangular_family(p);
        double worst_i = 0.0;
        for (const int n : {1, 2, 4, 8, 16, 32, 64}) {
            worst_i = std::max(worst_i, std::abs(check_condition_i(tri.member(n), p).condition_i_value - 1.0));
        }
        b.bound("triangular condition (i) @ " + np.name, worst_i, battery.tol.analytic);

        const std::vector<int> tail_n{2, 4, 8, 32};
        const TailCheck tails = check_condition_ii(tri, 0.1, tail_n);
        std::vector<double> masses;
        for (const auto& r : tails.reports) {
            masses.push_back(r.tail_mass);
        }
        b.bound("triangular tail beyond 0.1 at n = 32", masses.back(), 0.0).sequence = masses;
        b.decreasing("triangular tails for n = 2, 4, 8 @ " + np.name, {masses[0], masses[1], masses[2]});
        b.bound("triangular tail beyond 0.5 at n = 4", tail_mass(tri.member(4), 0.5), 0.0);

        const DeltaFamily literal = paper_example_family(p);
        double worst_literal = 0.0;
        bool all_flagged = true;
        for (const int n : {1, 2, 4, 8}) {
            const ConditionReport r = check_condition_i(literal.member(n), p);
            const double nn = static_cast<double>(n);
            const double expected = 0.5 + 0.5 / (nn * nn);
            worst_literal = std::max(worst_literal, std::abs(r.condition_i_value - expected));
            // n = 1 has mass exactly 1.
            if (n > 1) {
                all_flagged = all_flagged && !r.passed_i;
            }
            if (n == 2 && np.name == primary_params(battery).name) {
                b.note("literal example at n = 2: condition (i) value " + fmt(r.condition_i_value.real()));
            }
        }
        b.bound("literal example mass equals 1/2 + 1/(2n^2) @ " + np.name, worst_literal, battery.tol.analytic);
        b.flagged("literal example fails condition (i) for n = 2, 4, 8 @ " + np.name, all_flagged, worst_literal);

        const TailCheck fixed = check_condition_ii(fixed_width_family(p), 0.1, tail_n);
        b.flagged("fixed-width family fails condition (ii) @ " + np.name, !fixed.passed,
                  fixed.reports.back().tail_mass);
        b.flagged("zero signal fails condition (i) @ " + np.name,
                  !check_condition_i(SampledSignal::zeros(Grid(0.0, 0.01, 11)), p).passed_i, 0.0);
    }
    return b.finish();
}

VerificationReport verify_delta_closure(const TestBattery& battery) {
    ReportBuilder b("delta-closure", "triangular and bump families, n = 4, 8, 16; " + battery_inputs(battery));
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        const DeltaFamily tri = triangular_family(p);
        const DeltaFamily bump = bump_family(p);
        for (const int n : {4, 8, 16}) {
            for (const auto& [name, other] : {std::pair<std::string, const DeltaFamily*>{"triangular", &tri},
                                              std::pair<std::string, const DeltaFamily*>{"bump", &bump}}) {
                const ConditionReport r = delta_convolve_closure(tri, *other, p, n);
                const std::string tag = "triangular * " + name + " n = " + std::to_string(n) + " @ " + np.name;
                b.bound("condition (i) " + tag, std::abs(r.condition_i_value - 1.0), battery.tol.quadrature);
                b.bound("mass outside the summed supports " + tag, r.tail_mass, 1e-12);
            }
        }
    }
    return b.finish();
}

VerificationReport verify_approximate_identity(const TestBattery& battery) {
    ReportBuilder b("approximate-identity", "triangular family, n = 4, 16, 64; " + battery_inputs(battery));
    const std::vector<int> ns{4, 16, 64};
    for (const auto& np : battery.params) {
        const DeltaFamily tri = triangular_family(np.params);
        for (const auto& s : battery.signals) {
            const SampledSignal f = on(battery.tgrid, s.fn);
            std::vector<double> errors = approx_identity_check(f, tri, np.params, ns);
            b.norms(errors.back(), l2_norm(f));
            b.decreasing(label(s, np), std::move(errors));
        }
        const auto zero = approx_identity_check(SampledSignal::zeros(battery.tgrid), tri, np.params, ns);
        b.bound("zero signal @ " + np.name, *std::max_element(zero.begin(), zero.end()), 0.0);
    }
    return b.finish();
}

VerificationReport verify_normalized_delta_transform(const TestBattery& battery) {
    const Grid compact = Grid::spanning(-2.0, 2.0, 65);
    ReportBuilder b("normalized-delta-transform", "triangular family, n = 4, 16, 64, u in [-2,2]; " +
                                                      battery_inputs(battery));
    const std::vector<int> ns{4, 16, 64};
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        const DeltaFamily tri = triangular_family(p);
        b.decreasing("normalized sup deviation @ " + np.name, normalized_lct_of_delta(tri, p, compact, ns));
        const double at_zero = std::abs(lct_transform(tri.member(64), p, Grid(0.0, 1.0, 2))[0]);
        const double expected = 1.0 / std::sqrt(2.0 * std::numbers::pi * std::abs(p.b()));
        b.bound("unnormalized |L(delta_64)(0)| = 1/sqrt(2 pi |b|) @ " + np.name, std::abs(at_zero - expected),
                battery.tol.analytic);
        b.flagged("unnormalized transform does not tend to 1 @ " + np.name, std::abs(at_zero - 1.0) > 0.1,
                  at_zero);
    }
    return b.finish();
}

VerificationReport verify_pointwise_product(const TestBattery& battery) {
    const NamedParams& np = primary_params(battery);
    const LctParams& p = np.params;
    ReportBuilder b("pointwise-product", "transforms of the smooth battery signals, phi = L(delta_4) @ " + np.name);
    const auto smooth = smooth_signals(battery);
    if (smooth.size() < 3) {
        throw ConfigError("pointwise-product needs three smooth battery signals");
    }
    const SampledSignal F = lct_transform(on(battery.tgrid, smooth[0]->fn), p, battery.ugrid);
    const SampledSignal G = lct_transform(on(battery.tgrid, smooth[1]->fn), p, battery.ugrid);
    const SampledSignal H = lct_transform(on(battery.tgrid, smooth[2]->fn), p, battery.ugrid);
    const SampledSignal phi = lct_transform(triangular_family(p).member(4), p, battery.ugrid);
    const cplx lambda(0.7, -0.3);

    const SampledSignal lhs = spectral_product(add(F, G), phi, p);
    const SampledSignal rhs = add(spectral_product(F, phi, p), spectral_product(G, phi, p));
    b.norms(l2_norm(lhs), l2_norm(rhs));
    b.bound("distributivity", relative_l2_error(lhs, rhs), battery.tol.exact);
    b.bound("commutativity", relative_l2_error(spectral_product(F, G, p), spectral_product(G, F, p)),
            battery.tol.exact);
    b.bound("associativity",
            relative_l2_error(spectral_product(spectral_product(F, G, p), H, p),
                              spectral_product(F, spectral_product(G, H, p), p)),
            battery.tol.symmetry);
    b.bound("scalar homogeneity",
            relative_l2_error(spectral_product(scale(F, lambda), G, p), scale(spectral_product(F, G, p), lambda)),
            battery.tol.exact);
    const SampledSignal unit = spectral_unit(p, battery.ugrid);
    b.bound("neutral element", relative_l2_error(spectral_product(F, unit, p), F), battery.tol.exact);

    const SampledSignal E = lct_transform(perturbation_direction(battery.tgrid, battery.seed), p, battery.ugrid);
    const SampledSignal base = spectral_product(F, phi, p);
    std::vector<double> gaps;
    for (int n = 1; n <= 4; ++n) {
        gaps.push_back(l2_distance(spectral_product(axpy(F, std::ldexp(1.0, -n), E), phi, p), base));
    }
    b.decreasing("continuity under a vanishing perturbation", gaps, true);
    return b.finish();
}

VerificationReport verify_spectral_approx_identity(const TestBattery& battery) {
    ReportBuilder b("spectral-approximate-identity",
                    "F (.) L(delta_n) against F, triangular family n = 4, 16, 64; " + battery_inputs(battery, true));
    const std::vector<int> ns{4, 16, 64};
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        const DeltaFamily tri = triangular_family(p);
        std::vector<SampledSignal> L;
        for (const int n : ns) {
            L.push_back(lct_transform(tri.member(n), p, battery.ugrid));
        }
        for (const BatterySignal* s : smooth_signals(battery)) {
            const SampledSignal F = lct_transform(on(battery.tgrid, s->fn), p, battery.ugrid);
            std::vector<double> errors;
            for (const auto& Ln : L) {
                errors.push_back(relative_l2_error(spectral_product(F, Ln, p), F));
            }
            b.norms(l2_norm(spectral_product(F, L.back(), p)), l2_norm(F));
            b.decreasing(label(*s, np), std::move(errors));
        }
        const SampledSignal zero = SampledSignal::zeros(battery.ugrid);
        b.bound("zero signal @ " + np.name, sup_norm(spectral_product(zero, L.back(), p)), 0.0);

        const DeltaFamily fixed = fixed_width_family(p);
        const SampledSignal F = lct_transform(on(battery.tgrid, battery.signals.front().fn), p, battery.ugrid);
        std::vector<double> stuck;
        for (const int n : ns) {
            stuck.push_back(relative_l2_error(spectral_product(F, lct_transform(fixed.member(n), p, battery.ugrid), p), F));
        }
        const TrendSummary trend = summarize_trend(stuck);
        b.flagged("fixed-width family does not approximate the identity @ " + np.name, !trend.converging,
                  stuck.back());
    }
    return b.finish();
}

VerificationReport verify_spectral_closure(const TestBattery& battery) {
    ReportBuilder b("spectral-closure", "triangular with triangular and bump, n = 4, 8, 16; compact window; " +
                                            battery_inputs(battery));
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        const DeltaFamily tri = triangular_family(p);
        const DeltaFamily bump = bump_family(p);
        for (const int n : {4, 8, 16}) {
            for (const auto& [name, other] : {std::pair<std::string, const DeltaFamily*>{"triangular", &tri},
                                              std::pair<std::string, const DeltaFamily*>{"bump", &bump}}) {
                const SpectralClosure c = spectral_closure(tri, *other, p, n, battery.compact_ugrid);
                const std::string tag = "triangular * " + name + " n = " + std::to_string(n) + " @ " + np.name;
                b.bound("product of transforms " + tag, c.product_residual, battery.tol.smooth);
                b.bound("condition (i) " + tag, std::abs(c.closure.condition_i_value - 1.0), battery.tol.quadrature);
            }
        }
    }
    return b.finish();
}

// --------------------------------------------------------------- boehmians

VerificationReport verify_boehmian_construction(const TestBattery& battery) {
    ReportBuilder b("boehmian-construction", "depth " + std::to_string(battery.depth) + ", bump*" +
                                                 std::to_string(battery.bump_scale) + " and triangular*" +
                                                 std::to_string(battery.bump_scale) + " families on the fine grid; " +
                                                 battery_inputs(battery));
    const SampledSignal e = perturbation_direction(battery.boehm_tgrid, battery.seed);
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        const DeltaFamily bump = bump_family(p, battery.bump_scale);
        const DeltaFamily tri = triangular_family(p, battery.bump_scale);
        for (const auto& s : battery.signals) {
            const SampledSignal f = boehm_signal(battery, s);
            const BoehmianRep B = embed(f, bump, battery.depth, p, std::numeric_limits<double>::infinity());
            b.bound("quotient compatibility " + label(s, np), B.compat_residual(), battery.tol.construction);
            b.bound("reflexivity " + label(s, np), equivalent(B, B), battery.tol.symmetry);
            const BoehmianRep C = embed(f, tri, battery.depth, p, std::numeric_limits<double>::infinity());
            b.bound("bump and triangular embeddings agree " + label(s, np), equivalent(B, C), battery.tol.spectral);
            b.norms(l2_norm(B.numerator(battery.depth)), l2_norm(f));
        }
        const SampledSignal f = boehm_gaussian(battery);
        const BoehmianRep B = embed(f, bump, battery.depth, p);
        const BoehmianRep G = embed(add(f, e), bump, battery.depth, p);
        const double gap = equivalent(B, G);
        b.flagged("embeddings of f and f + e (||e||_2 = 1) differ @ " + np.name, gap > 0.1, gap);
        const BoehmianRep Z = embed(SampledSignal::zeros(battery.boehm_tgrid), bump, battery.depth, p);
        b.bound("zero signal numerators @ " + np.name, sup_norm(Z.numerator(battery.depth)) + Z.compat_residual(), 0.0);
    }
    return b.finish();
}

VerificationReport verify_boehmian_algebra(const TestBattery& battery) {
    const NamedParams& np = primary_params(battery);
    const LctParams& p = np.params;
    ReportBuilder b("boehmian-algebra", "gaussian and windowed-sine on the fine grid, bump*" +
                                            std::to_string(battery.bump_scale) + " and triangular*" +
                                            std::to_string(battery.bump_scale) + " @ " + np.name);
    const DeltaFamily bump = bump_family(p, battery.bump_scale);
    const DeltaFamily tri = triangular_family(p, battery.bump_scale);
    const SampledSignal f = boehm_gaussian(battery);
    const SampledSignal g = boehm_signal(battery, battery.signals.back());
    const cplx lambda(0.7, -0.3);
    const std::size_t N = battery.depth;

    const BoehmianRep F = embed(f, bump, N, p);
    const BoehmianRep G = embed(g, bump, N, p);
    const BoehmianRep Gt = embed(g, tri, N, p);
    b.norms(l2_norm(F.numerator(N)), l2_norm(f));
    b.bound("embed(f) + embed(g) ~ embed(f + g)", equivalent(add(F, G), embed(add(f, g), bump, N, p)),
            battery.tol.spectral);
    b.bound("mixed families: embed(f) + embed(g) ~ embed(f + g)",
            equivalent(add(F, Gt), embed(add(f, g), bump, N, p)), battery.tol.spectral);
    b.bound("lambda embed(f) ~ embed(lambda f)", equivalent(scalar_mul(lambda, F), embed(scale(f, lambda), bump, N, p)),
            battery.tol.symmetry);
    b.bound("1 F ~ F", equivalent(scalar_mul(1.0, F), F), battery.tol.symmetry);
    b.bound("F - F ~ 0", equivalent(subtract(F, F), embed(SampledSignal::zeros(battery.boehm_tgrid), bump, N, p)),
            battery.tol.symmetry);
    b.bound("embed(f) * embed(g) ~ embed(f * g)",
            equivalent(boehm_convolve(F, G), embed(a_convolve(f, g, p), bump, N, p)), battery.tol.spectral);
    const BoehmianRep sum = add(F, Gt);
    b.bound("compatibility of the mixed-family sum", sum.compat_residual(), battery.tol.construction);
    return b.finish();
}

VerificationReport verify_lct_well_defined(const TestBattery& battery) {
    ReportBuilder b("lct-well-defined", "entrywise transforms on the compact window; bump*" +
                                            std::to_string(battery.bump_scale) + " vs triangular*" +
                                            std::to_string(battery.bump_scale) + "; " + battery_inputs(battery, true));
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        const DeltaFamily bump = bump_family(p, battery.bump_scale);
        const DeltaFamily tri = triangular_family(p, battery.bump_scale);
        for (const BatterySignal* s : smooth_signals(battery)) {
            const SampledSignal f = boehm_signal(battery, *s);
            const SpectralBoehmianRep S =
                boehm_lct(embed(f, bump, battery.depth, p), battery.compact_ugrid, std::numeric_limits<double>::infinity());
            const SpectralBoehmianRep T =
                boehm_lct(embed(f, tri, battery.depth, p), battery.compact_ugrid, std::numeric_limits<double>::infinity());
            b.norms(l2_norm(S.numerators.back()), l2_norm(T.numerators.back()));
            b.bound("cross compatibility " + label(*s, np), S.cross_residual, battery.tol.spectral);
            b.bound("equivalent inputs give equivalent transforms " + label(*s, np), spectral_equivalent(S, T),
                    battery.tol.spectral);
        }
        const SpectralBoehmianRep Z = boehm_lct(embed(SampledSignal::zeros(battery.boehm_tgrid), bump, battery.depth, p),
                                                battery.compact_ugrid);
        b.bound("zero Boehmian @ " + np.name, sup_norm(Z.numerators.back()), 0.0);
    }
    return b.finish();
}

VerificationReport verify_lct_limit(const TestBattery& battery) {
    ReportBuilder b("lct-limit", "embedded gaussian, bump*" + std::to_string(battery.bump_scale) + ", depth " +
                                     std::to_string(battery.depth) + ", compact window; " + battery_inputs(battery));
    const SampledSignal f = boehm_gaussian(battery);
    for (const auto& np : battery.params) {
        const DeltaFamily bump = bump_family(np.params, battery.bump_scale);
        const LctLimit lim = boehm_lct_limit(embed(f, bump, battery.depth, np.params), battery.compact_ugrid);
        b.norms(l2_norm(lim.value), l2_norm(lim.value));
        b.decreasing("Cauchy diagnostic @ " + np.name, lim.cauchy);
        const LctLimit zero =
            boehm_lct_limit(embed(SampledSignal::zeros(battery.boehm_tgrid), bump, battery.depth, np.params),
                            battery.compact_ugrid);
        b.bound("zero Boehmian @ " + np.name, sup_norm(zero.value), 0.0);
    }
    return b.finish();
}

VerificationReport verify_consistency(const TestBattery& battery) {
    ReportBuilder b("consistency", "limit of embed(f) vs direct transform on the compact window; bump*" +
                                       std::to_string(battery.bump_scale) + ", depth " + std::to_string(battery.depth) +
                                       "; " + battery_inputs(battery));
    for (const auto& np : battery.params) {
        const DeltaFamily bump = bump_family(np.params, battery.bump_scale);
        for (const auto& s : battery.signals) {
            const SampledSignal f = boehm_signal(battery, s);
            const SampledSignal lim =
                boehm_lct_limit(embed(f, bump, battery.depth, np.params), battery.compact_ugrid).value;
            const SampledSignal direct = lct_transform(f, np.params, battery.compact_ugrid);
            b.norms(l2_norm(lim), l2_norm(direct));
            b.bound(label(s, np), relative_l2_error(lim, direct), battery.tol.smooth);
        }
    }
    return b.finish();
}

namespace {

std::vector<BoehmianRep> perturbed_sequence(const SampledSignal& f, const SampledSignal& e, const DeltaFamily& family,
                                            std::size_t depth, const LctParams& p, bool vanishing) {
    std::vector<BoehmianRep> seq;
    for (std::size_t n = 1; n <= depth; ++n) {
        const double size = vanishing ? std::ldexp(1.0, -static_cast<int>(n)) : 1.0;
        seq.push_back(embed(axpy(f, size, e), family, depth, p));
    }
    return seq;
}

}  // namespace

VerificationReport verify_convergence_diagnostics(const TestBattery& battery) {
    const NamedParams& np = primary_params(battery);
    const LctParams& p = np.params;
    ReportBuilder b("convergence-diagnostics",
                    "F_n = embed(f + 2^-n e), F = embed(f), gaussian f, seeded unit e, bump*" +
                        std::to_string(battery.bump_scale) + ", depth " + std::to_string(battery.depth) + " @ " +
                        np.name);
    const DeltaFamily bump = bump_family(p, battery.bump_scale);
    const SampledSignal f = boehm_gaussian(battery);
    const SampledSignal e = perturbation_direction(battery.boehm_tgrid, battery.seed);
    const BoehmianRep F = embed(f, bump, battery.depth, p);
    const auto good = perturbed_sequence(f, e, bump, battery.depth, p, true);
    const auto bad = perturbed_sequence(f, e, bump, battery.depth, p, false);
    const std::vector<BoehmianRep> still(battery.depth, F);
    const std::vector<int> ks = indices(battery.depth);

    const TrendSummary big = delta_convergence_diag(good, F);
    b.norms(big.values.front(), big.values.back());
    b.decreasing("Delta-convergence residuals", big.values, true);
    const ConvergenceMatrix small = small_delta_convergence_diag(good, F, ks);
    for (std::size_t j = 0; j < ks.size(); ++j) {
        b.decreasing("delta-convergence residuals, mollifier k = " + std::to_string(ks[j]), small.per_k[j].values, true);
    }
    const TrendSummary big_bad = delta_convergence_diag(bad, F);
    b.flagged("fixed perturbation flagged non-convergent (Delta)", !big_bad.converging, big_bad.contraction);
    const ConvergenceMatrix small_bad = small_delta_convergence_diag(bad, F, ks);
    b.flagged("fixed perturbation flagged non-convergent (delta)", !small_bad.converging,
              small_bad.per_k.front().contraction);
    const TrendSummary constant = delta_convergence_diag(still, F);
    b.bound("constant sequence residuals", *std::max_element(constant.values.begin(), constant.values.end()), 1e-12);
    return b.finish();
}

// ------------------------------------------------------------ properties

VerificationReport verify_linearity(const TestBattery& battery) {
    ReportBuilder b("linearity", "plain and embedded signals, lambda = 0.7 - 0.3i; " + battery_inputs(battery));
    const cplx lambda(0.7, -0.3);
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        const SampledSignal f = on(battery.tgrid, battery.signals.front().fn);
        const SampledSignal g = on(battery.tgrid, battery.signals.back().fn);
        const SampledSignal lhs = lct_transform(axpy(f, lambda, g), p, battery.ugrid);
        const SampledSignal rhs = axpy(lct_transform(f, p, battery.ugrid), lambda, lct_transform(g, p, battery.ugrid));
        b.norms(l2_norm(lhs), l2_norm(rhs));
        b.bound("plain signals @ " + np.name, relative_l2_error(lhs, rhs), battery.tol.exact);

        const DeltaFamily bump = bump_family(p, battery.bump_scale);
        const BoehmianRep F = embed(boehm_signal(battery, battery.signals.front()), bump, battery.depth, p);
        const BoehmianRep G = embed(boehm_signal(battery, battery.signals.back()), bump, battery.depth, p);
        const SampledSignal blhs = boehm_lct_limit(add(F, scalar_mul(lambda, G)), battery.compact_ugrid).value;
        const SampledSignal brhs = axpy(boehm_lct_limit(F, battery.compact_ugrid).value, lambda,
                                        boehm_lct_limit(G, battery.compact_ugrid).value);
        b.bound("embedded signals @ " + np.name, relative_l2_error(blhs, brhs), battery.tol.exact);
    }
    return b.finish();
}

VerificationReport verify_modulation(const TestBattery& battery) {
    ReportBuilder b("modulation", "k = 1, embedded and plain gaussian, compact window; " + battery_inputs(battery));
    const double k = 1.0;
    double worst_printed = 0.0;
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        const double bk = p.b() * k;
        auto phase = [&](double sign) {
            return [&p, k, sign](double u) { return std::polar(1.0, sign * p.d() * k * (2.0 * u - p.b() * k) / 2.0); };
        };
        const Grid shifted = battery.compact_ugrid.shifted(-bk);

        const SampledSignal f = boehm_gaussian(battery);
        const SampledSignal lhs = lct_transform(modulate(f, [k](double t) { return std::polar(1.0, k * t); }), p,
                                                battery.compact_ugrid);
        const SampledSignal base = relabel(lct_transform(f, p, shifted), battery.compact_ugrid);
        const SampledSignal rhs = pointwise(base, phase(1.0));
        b.norms(l2_norm(lhs), l2_norm(rhs));
        b.bound("plain gaussian @ " + np.name, relative_l2_error(lhs, rhs), battery.tol.smooth);

        const DeltaFamily bump = bump_family(p, battery.bump_scale);
        const BoehmianRep B = embed(f, bump, battery.depth, p);
        const SampledSignal blhs = boehm_lct_limit(modulate(B, k), battery.compact_ugrid).value;
        const SampledSignal bbase = relabel(boehm_lct_limit(B, shifted).value, battery.compact_ugrid);
        b.bound("embedded gaussian @ " + np.name, relative_l2_error(blhs, pointwise(bbase, phase(1.0))),
                battery.tol.smooth);
        const double printed = relative_l2_error(blhs, pointwise(bbase, phase(-1.0)));
        worst_printed = std::max(worst_printed, printed);
        if (p.d() != 0.0) {
            b.flagged("phase exp(-i d k (2u - bk)/2) disagrees with the kernel @ " + np.name, printed > 0.1, printed);
        }
    }
    b.note("phase factor checked: exp(+i d k (2u - b k)/2); with the opposite sign the worst relative residual is " +
           fmt(worst_printed));
    return b.finish();
}

VerificationReport verify_shift(const TestBattery& battery) {
    const double tau = 0.5;
    ReportBuilder b("shift", "tau = 0.5 and tau = 0, embedded and plain gaussian, compact window; " +
                                 battery_inputs(battery));
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        const double rate = -p.a() * tau / p.b();
        auto outer = [&p](double shift) {
            return [&p, shift](double u) { return std::polar(1.0, (2.0 * u + p.a() * shift) * shift / (2.0 * p.b())); };
        };
        const SampledSignal f = boehm_gaussian(battery);
        const SampledSignal shifted(f.start() - tau, f.step(), std::vector<cplx>(f.samples().begin(), f.samples().end()));
        const SampledSignal lhs = lct_transform(shifted, p, battery.compact_ugrid);
        const SampledSignal rhs = pointwise(
            lct_transform(modulate(f, [rate](double x) { return std::polar(1.0, rate * x); }), p, battery.compact_ugrid),
            outer(tau));
        b.norms(l2_norm(lhs), l2_norm(rhs));
        b.bound("plain gaussian @ " + np.name, relative_l2_error(lhs, rhs), battery.tol.smooth);

        const DeltaFamily bump = bump_family(p, battery.bump_scale);
        const BoehmianRep B = embed(f, bump, battery.depth, p);
        const SampledSignal blhs = boehm_lct_limit(translate(B, tau), battery.compact_ugrid).value;
        const SampledSignal brhs =
            pointwise(boehm_lct_limit(modulate(B, rate), battery.compact_ugrid).value, outer(tau));
        b.bound("embedded gaussian @ " + np.name, relative_l2_error(blhs, brhs), battery.tol.smooth);

        const SampledSignal still = boehm_lct_limit(translate(B, 0.0), battery.compact_ugrid).value;
        b.bound("zero shift @ " + np.name, sup_distance(still, boehm_lct_limit(B, battery.compact_ugrid).value),
                battery.tol.exact);
    }
    return b.finish();
}

VerificationReport verify_second_derivative(const TestBattery& battery) {
    ReportBuilder b("second-derivative",
                    "embedded gaussian, bump*" + std::to_string(battery.derivative_scale) + ", depth " +
                        std::to_string(battery.depth) + ", compact window; analytic oracle on the fine grid; " +
                        battery_inputs(battery));
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        const double alpha = chirp_rate(p);
        const cplx i(0.0, 1.0);
        auto printed = [&p, i](double u) { return (i * u / p.b()) * (i * u / p.b()) + i * p.a() / p.b(); };
        auto pure = [&p, i](double u) { return (i * u / p.b()) * (i * u / p.b()); };

        // Oracle: with g = exp(i alpha t^2) f = exp(-c t^2), c = 1/2 - i alpha,
        // g'' = (4 c^2 t^2 - 2 c) g.
        const cplx c = 0.5 - i * alpha;
        const SampledSignal f = boehm_gaussian(battery);
        auto gpp = [c, alpha](double t) {
            const cplx g = std::exp(-c * t * t);
            return std::polar(1.0, -alpha * t * t) * (4.0 * c * c * t * t - 2.0 * c) * g;
        };
        const SampledSignal covariant_limit = on(battery.boehm_tgrid, gpp);
        const SampledSignal literal_limit = on(battery.boehm_tgrid, [&](double t) {
            return gpp(t) + 2.0 * i * alpha * std::exp(-0.5 * t * t);
        });
        const SampledSignal Lf = lct_transform(f, p, battery.compact_ugrid);
        const SampledSignal literal_oracle = lct_transform(literal_limit, p, battery.compact_ugrid);
        b.norms(l2_norm(literal_oracle), l2_norm(pointwise(Lf, printed)));
        b.bound("oracle: (exp(-i a t^2/2b) ...)'' limit against [(iu/b)^2 + ia/b] @ " + np.name,
                relative_l2_error(literal_oracle, pointwise(Lf, printed)), battery.tol.quadrature);
        b.bound("oracle: chirp-covariant second derivative against (iu/b)^2 @ " + np.name,
                relative_l2_error(lct_transform(covariant_limit, p, battery.compact_ugrid), pointwise(Lf, pure)),
                battery.tol.quadrature);

        const DeltaFamily bump = bump_family(p, battery.derivative_scale);
        const BoehmianRep B = embed(f, bump, battery.depth, p);
        const SpectralBoehmianRep SB = boehm_lct(B, battery.compact_ugrid);
        const SampledSignal base = boehm_lct_limit(B, battery.compact_ugrid).value;
        const double unlimited = std::numeric_limits<double>::infinity();
        const BoehmianRep lit = boehm_derivative(B, 2, bump, DerivativeRule::literal, unlimited);
        const BoehmianRep cov = boehm_derivative(B, 2, bump, DerivativeRule::covariant);

        // L[F''] ~ m L[F] as spectral quotients: L(g_n) (.) L(delta_n) against
        // m L(f_n) (.) L(psi_n), with g_n / psi_n the derivative quotient.
        auto quotient_gap = [&](const BoehmianRep& D, const std::function<cplx(double)>& m) {
            const SpectralBoehmianRep SD = boehm_lct(D, battery.compact_ugrid, unlimited);
            double worst = 0.0;
            for (std::size_t n = 0; n < SD.numerators.size(); ++n) {
                const SampledSignal lhs = spectral_product(SD.numerators[n], SB.denominators[n], p);
                const SampledSignal rhs = pointwise(spectral_product(SB.numerators[n], SD.denominators[n], p), m);
                worst = std::max(worst, relative_l2_error(lhs, rhs));
            }
            return worst;
        };
        b.bound("quotients, literal derivative, [(iu/b)^2 + ia/b] @ " + np.name, quotient_gap(lit, printed),
                battery.tol.smooth, "quotient compatibility " + fmt(lit.compat_residual()));
        b.bound("quotients, chirp-covariant derivative, (iu/b)^2 @ " + np.name, quotient_gap(cov, pure),
                battery.tol.smooth);
        const std::string bias = "depth-" + std::to_string(battery.depth) + " limit includes one extra mollification";
        b.bound("limit, literal derivative, [(iu/b)^2 + ia/b] @ " + np.name,
                relative_l2_error(boehm_lct_limit(lit, battery.compact_ugrid).value, pointwise(base, printed)),
                battery.tol.kinked, bias);
        b.bound("limit, chirp-covariant derivative, (iu/b)^2 @ " + np.name,
                relative_l2_error(boehm_lct_limit(cov, battery.compact_ugrid).value, pointwise(base, pure)),
                battery.tol.kinked, bias);
        if (p.a() != 0.0) {
            b.flagged("literal derivative quotient is not compatible for a != 0 @ " + np.name,
                      lit.compat_residual() > battery.tol.construction, lit.compat_residual());
        }
    }
    b.note("reported, not gated: the literal derivative gives the [(iu/b)^2 + ia/b] factor only in the limit and is not "
           "a quotient for a != 0; the chirp-covariant derivative gives (iu/b)^2");
    return b.finish();
}

VerificationReport verify_exchange(const TestBattery& battery) {
    ReportBuilder b("exchange", "embedded pairs, bump*" + std::to_string(battery.bump_scale) + ", depth " +
                                    std::to_string(battery.depth) + ", compact window; " + battery_inputs(battery));
    auto relative_equivalence = [](const SpectralBoehmianRep& lhs, const SpectralBoehmianRep& rhs) {
        double worst = 0.0;
        for (std::size_t n = 0; n < lhs.numerators.size(); ++n) {
            const SampledSignal ref = spectral_product(rhs.numerators[n], lhs.denominators[n], lhs.params);
            worst = std::max(worst, relative_l2_error(spectral_product(lhs.numerators[n], rhs.denominators[n], lhs.params),
                                                      ref));
        }
        return worst;
    };
    const double unlimited = std::numeric_limits<double>::infinity();
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        const DeltaFamily bump = bump_family(p, battery.bump_scale);
        std::vector<std::pair<const BatterySignal*, const BatterySignal*>> pairs;
        const auto smooth = smooth_signals(battery);
        for (std::size_t j = 0; j < smooth.size(); ++j) {
            pairs.emplace_back(smooth.front(), smooth[j]);
        }
        for (const auto& s : battery.signals) {
            if (!s.smooth) {
                pairs.emplace_back(&s, &s);
            }
        }
        for (const auto& [x, y] : pairs) {
            const BoehmianRep F = embed(boehm_signal(battery, *x), bump, battery.depth, p);
            const BoehmianRep G = embed(boehm_signal(battery, *y), bump, battery.depth, p);
            const SpectralBoehmianRep lhs = boehm_lct(boehm_convolve(F, G), battery.compact_ugrid, unlimited);
            const SpectralBoehmianRep rhs = spectral_convolve(boehm_lct(F, battery.compact_ugrid, unlimited),
                                                              boehm_lct(G, battery.compact_ugrid, unlimited));
            const double tol = x->smooth && y->smooth ? battery.tol.smooth : battery.tol.kinked;
            const std::string tag = x->name + " * " + y->name + " @ " + np.name;
            b.norms(l2_norm(lhs.numerators.back()), l2_norm(rhs.numerators.back()));
            b.bound("quotients " + tag, relative_equivalence(lhs, rhs), tol);
            const SampledSignal lim = boehm_lct_limit(boehm_convolve(F, G), battery.compact_ugrid).value;
            const SampledSignal prod = spectral_product(boehm_lct_limit(F, battery.compact_ugrid).value,
                                                        boehm_lct_limit(G, battery.compact_ugrid).value, p);
            b.bound("limits " + tag, relative_l2_error(lim, prod), tol);
        }
        const BoehmianRep Z = embed(SampledSignal::zeros(battery.boehm_tgrid), bump, battery.depth, p);
        const BoehmianRep G = embed(boehm_gaussian(battery), bump, battery.depth, p);
        b.bound("zero Boehmian @ " + np.name,
                sup_norm(boehm_lct_limit(boehm_convolve(Z, G), battery.compact_ugrid).value), 0.0);
    }
    return b.finish();
}

VerificationReport verify_boehmian_continuity(const TestBattery& battery) {
    const NamedParams& np = primary_params(battery);
    const LctParams& p = np.params;
    ReportBuilder b("boehmian-continuity", "F_n = embed(f + 2^-n e), gaussian f, seeded unit e, bump*" +
                                               std::to_string(battery.bump_scale) + ", compact window @ " + np.name);
    const DeltaFamily bump = bump_family(p, battery.bump_scale);
    const SampledSignal f = boehm_gaussian(battery);
    const SampledSignal e = perturbation_direction(battery.boehm_tgrid, battery.seed);
    const BoehmianRep F = embed(f, bump, battery.depth, p);
    const SampledSignal limit = boehm_lct_limit(F, battery.compact_ugrid).value;

    auto spectral_residuals = [&](const std::vector<BoehmianRep>& seq) {
        // rows: mollifier index m; columns: sequence index n
        std::vector<std::vector<double>> rows(battery.depth);
        std::vector<double> limits;
        for (const auto& Fn : seq) {
            const BoehmianRep diff = subtract(Fn, F);
            for (std::size_t m = 1; m <= battery.depth; ++m) {
                rows[m - 1].push_back(sup_on(lct_transform(diff.numerator(m), p, battery.compact_ugrid)));
            }
            limits.push_back(sup_distance(boehm_lct_limit(Fn, battery.compact_ugrid).value, limit));
        }
        return std::pair{rows, limits};
    };

    const auto [rows, limits] = spectral_residuals(perturbed_sequence(f, e, bump, battery.depth, p, true));
    b.norms(rows.front().front(), rows.front().back());
    for (std::size_t m = 0; m < rows.size(); ++m) {
        b.decreasing("sup |L((F_n - F) * delta_" + std::to_string(m + 1) + ")|", rows[m], true);
    }
    b.decreasing("sup |L[F_n] - L[F]|", limits, true);

    const auto [bad_rows, bad_limits] = spectral_residuals(perturbed_sequence(f, e, bump, battery.depth, p, false));
    const TrendSummary bad = summarize_trend(bad_rows.front());
    b.flagged("fixed perturbation flagged non-convergent", !bad.converging, bad.contraction);

    const auto [still_rows, still_limits] = spectral_residuals(std::vector<BoehmianRep>(battery.depth, F));
    double worst = 0.0;
    for (const auto& row : still_rows) {
        worst = std::max(worst, *std::max_element(row.begin(), row.end()));
    }
    b.bound("constant sequence", worst, 1e-12);
    return b.finish();
}

VerificationReport verify_derivative_continuity(const TestBattery& battery) {
    const NamedParams& np = primary_params(battery);
    const LctParams& p = np.params;
    ReportBuilder b("derivative-continuity", "first derivatives of F_n = embed(f + 2^-n e), gaussian f, bump*" +
                                                 std::to_string(battery.derivative_scale) + ", depth " +
                                                 std::to_string(battery.depth) + " @ " + np.name);
    const DeltaFamily bump = bump_family(p, battery.derivative_scale);
    const SampledSignal f = boehm_gaussian(battery);
    const SampledSignal e = perturbation_direction(battery.boehm_tgrid, battery.seed);
    const BoehmianRep F = embed(f, bump, battery.depth, p);
    const auto seq = perturbed_sequence(f, e, bump, battery.depth, p, true);

    std::vector<BoehmianRep> derived;
    for (const auto& Fn : seq) {
        derived.push_back(boehm_derivative(Fn, 1, bump));
    }
    const BoehmianRep DF = boehm_derivative(F, 1, bump);
    const TrendSummary trend = delta_convergence_diag(derived, DF);
    b.norms(trend.values.front(), trend.values.back());
    b.decreasing("Delta-convergence residuals of the derivatives", trend.values, true);

    std::vector<BoehmianRep> zeroth;
    for (const auto& Fn : seq) {
        zeroth.push_back(boehm_derivative(Fn, 0, bump));
    }
    const TrendSummary plain = delta_convergence_diag(seq, F);
    const TrendSummary k0 = delta_convergence_diag(zeroth, boehm_derivative(F, 0, bump));
    double gap = 0.0;
    for (std::size_t i = 0; i < plain.values.size(); ++i) {
        gap = std::max(gap, std::abs(plain.values[i] - k0.values[i]));
    }
    b.bound("k = 0 reproduces the input diagnostics", gap, 0.0);

    bool rejected = false;
    try {
        (void)boehm_derivative(F, 2, triangular_family(p, battery.derivative_scale));
    } catch (const SmoothnessError&) {
        rejected = true;
    }
    b.flagged("triangular family rejected for k = 2", rejected, 0.0);
    return b.finish();
}

VerificationReport verify_bijection_round_trip(const TestBattery& battery) {
    ReportBuilder b("bijection-round-trip", "numerators of embed(f) with the bump family on the battery t-grid, "
                                            "transformed and inverted; " + battery_inputs(battery, true));
    for (const auto& np : battery.params) {
        const LctParams& p = np.params;
        const DeltaFamily bump = bump_family(p);
        for (const BatterySignal* s : smooth_signals(battery)) {
            const BoehmianRep B = embed(on(battery.tgrid, s->fn), bump, battery.depth, p);
            double worst = 0.0;
            for (const auto& fn : B.numerators()) {
                const SampledSignal back = lct_inverse(lct_transform(fn, p, battery.ugrid), p, fn.grid());
                worst = std::max(worst, relative_l2_error(back, fn));
            }
            b.norms(l2_norm(B.numerator(battery.depth)), l2_norm(B.numerator(battery.depth)));
            b.bound(label(*s, np), worst, battery.tol.quadrature);
        }
    }
    return b.finish();
}

// ---------------------------------------------------------------- registry

const std::vector<ClaimInfo>& claim_registry() {
    static const std::vector<ClaimInfo> registry{
        {"round-trip", "transforming with A and then with (d,-b,-c,a) returns the input", true, verify_round_trip},
        {"unitarity", "the transform preserves the L2 norm", true, verify_unitarity},
        {"fourier-case", "A = (0,1,-1,0) maps exp(-t^2/2) to exp(-i pi/4) exp(-u^2/2)", true, verify_fourier_case},
        {"branch-consistency", "as b -> 0+ the integral branch approaches the b = 0 branch", true,
         verify_branch_consistency},
        {"convolution-theorem", "L(f *A g) = sqrt(2 pi i b) exp(-i d u^2/2b) L(f) L(g)", true,
         verify_convolution_theorem},
        {"l2-closure", "the weighted convolution of integrable signals is square integrable", true, verify_closure},
        {"semigroup", "the weighted convolution is commutative and associative", true, verify_semigroup},
        {"plancherel-continuity", "L2 convergence of signals carries over to their transforms", true,
         verify_plancherel_continuity},
        {"delta-axioms", "delta sequences have unit chirped mass and vanishing tails", true, verify_delta_axioms},
        {"delta-closure", "the weighted convolution of two delta sequences is a delta sequence", true,
         verify_delta_closure},
        {"approximate-identity", "f *A delta_n -> f in L2", true, verify_approximate_identity},
        {"normalized-delta-transform",
         "sqrt(2 pi i b) exp(-i d u^2/2b) L(delta_n) -> 1 uniformly on compact sets", true,
         verify_normalized_delta_transform},
        {"pointwise-product", "the normalized spectral product is a commutative algebra product, continuous in L2",
         true, verify_pointwise_product},
        {"spectral-approximate-identity", "F (.) L(delta_n) -> F in L2", true, verify_spectral_approx_identity},
        {"spectral-closure", "transforms of convolved delta sequences are normalized products of their transforms",
         true, verify_spectral_closure},
        {"boehmian-construction", "embedded signals form compatible quotients; equivalence is reflexive", true,
         verify_boehmian_construction},
        {"boehmian-algebra", "sum, scalar multiple and convolution of Boehmians agree with the embedded operations",
         true, verify_boehmian_algebra},
        {"lct-well-defined", "entrywise transforms of equivalent quotients are equivalent", true,
         verify_lct_well_defined},
        {"lct-limit", "transforms of the numerators form a Cauchy sequence on compact sets", true, verify_lct_limit},
        {"consistency", "the Boehmian transform of an embedded signal is its ordinary transform", true,
         verify_consistency},
        {"convergence-diagnostics", "Delta- and delta-convergent sequences have vanishing residuals", true,
         verify_convergence_diagnostics},
        {"linearity", "L[F + lambda G] = L[F] + lambda L[G]", true, verify_linearity},
        {"modulation", "L[exp(ikt) F](u) = exp(i d k (2u - bk)/2) L[F](u - bk)", true, verify_modulation},
        {"shift", "L[F(t + tau)](u) = exp(i (2u + a tau) tau/2b) L[exp(-i a x tau/b) F(x)](u)", true, verify_shift},
        {"second-derivative", "L[F''](u) = [(iu/b)^2 + ia/b] L[F](u)", false, verify_second_derivative},
        {"exchange", "L[F *A G] = L[F] (.) L[G]", true, verify_exchange},
        {"boehmian-continuity", "delta-convergence of Boehmians carries over to their transforms", true,
         verify_boehmian_continuity},
        {"derivative-continuity", "Delta-limits commute with differentiation", true, verify_derivative_continuity},
        {"bijection-round-trip", "inverting the transform recovers every numerator of an embedded signal", true,
         verify_bijection_round_trip},
    };
    return registry;
}

const ClaimInfo& find_claim(const std::string& id) {
    for (const auto& c : claim_registry()) {
        if (c.id == id) {
            return c;
        }
    }
    throw ConfigError("unknown claim id '" + id + "'");
}

VerificationReport run_claim(const std::string& id, const TestBattery& battery) { return find_claim(id).run(battery); }

std::vector<VerificationReport> run_all(const TestBattery& battery) {
    std::vector<VerificationReport> reports;
    for (const auto& c : claim_registry()) {
        reports.push_back(c.run(battery));
    }
    return reports;
}

bool all_gated_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return !r.gated || r.passed; });
}

}  // namespace lctb
