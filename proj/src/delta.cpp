#include "lctb/delta.hpp"

#include <algorithm>
#include <cmath>

#include "lctb/convolution.hpp"
#include "lctb/errors.hpp"

namespace lctb {

namespace {

double chirp_rate(const LctParams& p) {
    if (p.b_is_zero()) {
        throw BranchError("delta sequences need b != 0");
    }
    return 0.5 * p.a() / p.b();
}

void require_index(int n) {
    if (n < 1) {
        throw ConfigError("delta sequence index must be a positive integer, got " + std::to_string(n));
    }
}

// Lattice of the given step from 0 (or -m*step) through `hi` plus one
// trailing node, so the sampled support is closed by a zero sample.
Grid lattice(double lo, double hi, double step) {
    const double tol = 1e-9;
    const long first = static_cast<long>(std::floor(lo / step + tol));
    const long last = static_cast<long>(std::ceil(hi / step - tol)) + 1;
    return Grid(static_cast<double>(first) * step, step, static_cast<std::size_t>(last - first + 1));
}

double bump_profile(double x) {
    const double r = 1.0 - x * x;
    return r > 0.0 ? std::exp(-1.0 / r) : 0.0;
}

}  // namespace

DeltaFamily::DeltaFamily(std::string name, LctParams params, Generator generator, Bound support_bound,
                         int smoothness)
    : name_(std::move(name)),
      params_(params),
      generator_(std::move(generator)),
      support_bound_(std::move(support_bound)),
      smoothness_(smoothness) {}

double DeltaFamily::support_bound(int n) const {
    require_index(n);
    return support_bound_(n);
}

SampledSignal DeltaFamily::member(int n, double step) const {
    require_index(n);
    if (!(step > 0.0)) {
        throw GridError("member step must be positive");
    }
    return generator_(n, step);
}

double DeltaFamily::auto_step(int n) const { return support_bound(n) / 64.0; }

SampledSignal paper_example_delta(int n, const LctParams& p, const Grid& grid) {
    require_index(n);
    const double alpha = chirp_rate(p);
    const double nn = static_cast<double>(n);
    const double knee = 1.0 / nn;
    const double tol = 1e-9 * grid.step();
    return SampledSignal::sample(grid, [&](double t) -> cplx {
        double v = 0.0;
        if (std::abs(t - knee) <= tol) {
            v = 0.5 * (knee + nn * nn * knee);
        } else if (t >= 0.0 && t < knee) {
            v = t;
        } else if (t > knee && t <= 2.0 * knee) {
            v = nn * nn * (2.0 * knee - t);
        }
        return v * std::polar(1.0, -alpha * t * t);
    });
}

SampledSignal triangular_delta(int n, const LctParams& p, const Grid& grid) {
    require_index(n);
    const double alpha = chirp_rate(p);
    const double nn = static_cast<double>(n);
    return SampledSignal::sample(grid, [&](double t) -> cplx {
        double v = 0.0;
        if (t >= 0.0 && t <= 1.0 / nn) {
            v = nn * nn * t;
        } else if (t > 1.0 / nn && t <= 2.0 / nn) {
            v = nn * nn * (2.0 / nn - t);
        }
        return v * std::polar(1.0, -alpha * t * t);
    });
}

SampledSignal bump_delta(int n, const LctParams& p, const Grid& grid) {
    require_index(n);
    const double alpha = chirp_rate(p);
    const double nn = static_cast<double>(n);
    const SampledSignal profile = SampledSignal::sample(grid, [&](double t) { return cplx(bump_profile(nn * t)); });
    const double mass = trapezoid(profile).real();
    if (!(mass > 0.0)) {
        throw GridError("grid does not resolve the bump of index " + std::to_string(n));
    }
    return modulate(profile, [&](double t) { return std::polar(1.0 / mass, -alpha * t * t); });
}

DeltaFamily triangular_family(const LctParams& p, int scale) {
    require_index(scale);
    const std::string name = scale == 1 ? "triangular" : "triangular*" + std::to_string(scale);
    return DeltaFamily(
        name, p,
        [p, scale](int n, double step) {
            const int m = n * scale;
            return triangular_delta(m, p, lattice(0.0, 2.0 / m, step));
        },
        [scale](int n) { return 2.0 / (n * scale); }, 1);
}

DeltaFamily paper_example_family(const LctParams& p) {
    return DeltaFamily(
        "paper", p, [p](int n, double step) { return paper_example_delta(n, p, lattice(0.0, 2.0 / n, step)); },
        [](int n) { return 2.0 / n; }, 0);
}

DeltaFamily bump_family(const LctParams& p, int scale) {
    require_index(scale);
    const std::string name = scale == 1 ? "bump" : "bump*" + std::to_string(scale);
    return DeltaFamily(
        name, p,
        [p, scale](int n, double step) {
            const double half = 1.0 / (n * scale);
            return bump_delta(n * scale, p, lattice(-half - step, half, step));
        },
        [scale](int n) { return 1.0 / (n * scale); }, infinitely_smooth);
}

DeltaFamily fixed_width_family(const LctParams& p) {
    return DeltaFamily(
        "fixed", p,
        [p](int, double step) {
            const double alpha = chirp_rate(p);
            return SampledSignal::sample(lattice(-1.0 - step, 1.0, step), [alpha](double t) {
                return std::max(0.0, 1.0 - std::abs(t)) * std::polar(1.0, -alpha * t * t);
            });
        },
        [](int) { return 1.0; }, 1);
}

DeltaFamily family_by_name(const std::string& name, const LctParams& p, int scale) {
    if (name == "triangular") {
        return triangular_family(p, scale);
    }
    if (name == "paper") {
        return paper_example_family(p);
    }
    if (name == "bump") {
        return bump_family(p, scale);
    }
    if (name == "fixed") {
        return fixed_width_family(p);
    }
    throw ConfigError("unknown delta family '" + name + "' (expected triangular, paper, bump or fixed)");
}

ConditionReport check_condition_i(const SampledSignal& delta, const LctParams& p, double tol) {
    const double alpha = chirp_rate(p);
    const cplx value = trapezoid(modulate(delta, [alpha](double t) { return std::polar(1.0, alpha * t * t); }));
    ConditionReport r;
    r.condition_i_value = value;
    r.tolerance = tol;
    r.passed_i = std::abs(value - 1.0) <= tol;
    return r;
}

double tail_mass(const SampledSignal& f, double eps) {
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
        const double t0 = f.time(k);
        const double t1 = f.time(k + 1);
        const double y0 = std::abs(f[k]);
        const double y1 = std::abs(f[k + 1]);
        auto value = [&](double x) { return y0 + (y1 - y0) * (x - t0) / (t1 - t0); };
        auto piece = [&](double lo, double hi) {
            if (hi > lo) {
                total += (hi - lo) * 0.5 * (value(lo) + value(hi));
            }
        };
        piece(t0, std::min(t1, -eps));
        piece(std::max(t0, eps), t1);
    }
    return total;
}

TailCheck check_condition_ii(const DeltaFamily& family, double eps, std::span<const int> n_list, double tol) {
    if (!(eps > 0.0)) {
        throw ConfigError("condition (ii) needs eps > 0");
    }
    TailCheck out;
    bool monotone = true;
    double previous = std::numeric_limits<double>::infinity();
    for (const int n : n_list) {
        ConditionReport r;
        r.n = n;
        r.tolerance = tol;
        r.tail_mass = tail_mass(family.member(n), eps);
        r.passed_ii = r.tail_mass <= tol;
        monotone = monotone && r.tail_mass <= previous;
        previous = r.tail_mass;
        out.reports.push_back(r);
    }
    out.passed = !out.reports.empty() && monotone && out.reports.back().passed_ii;
    return out;
}

ConditionReport delta_convolve_closure(const DeltaFamily& phi, const DeltaFamily& psi, const LctParams& p, int n,
                                       double tol) {
    const double step = std::min(phi.auto_step(n), psi.auto_step(n));
    const SampledSignal h = a_convolve(phi.member(n, step), psi.member(n, step), p);
    ConditionReport r = check_condition_i(h, p, tol);
    r.n = n;
    const double bound = (phi.support_bound(n) + psi.support_bound(n)) * (1.0 + 1e-9);
    r.tail_mass = tail_mass(h, bound);
    r.passed_ii = r.tail_mass <= 1e-12;
    return r;
}

std::vector<double> approx_identity_check(const SampledSignal& f, const DeltaFamily& family, const LctParams& p,
                                          std::span<const int> n_list) {
    std::vector<double> errors;
    errors.reserve(n_list.size());
    for (const int n : n_list) {
        errors.push_back(l2_distance(a_convolve(f, family.member(n, f.step()), p), f));
    }
    return errors;
}

std::vector<double> normalized_lct_of_delta(const DeltaFamily& family, const LctParams& p, const Grid& compact,
                                            std::span<const int> n_list) {
    const cplx prefactor = product_prefactor(p);
    const double beta = 0.5 * p.d() / p.b();
    std::vector<double> deviations;
    for (const int n : n_list) {
        const SampledSignal L = lct_transform(family.member(n), p, compact);
        double sup = 0.0;
        for (std::size_t j = 0; j < L.size(); ++j) {
            const double u = L.time(j);
            sup = std::max(sup, std::abs(prefactor * std::polar(1.0, -beta * u * u) * L[j] - 1.0));
        }
        deviations.push_back(sup);
    }
    return deviations;
}

SpectralClosure spectral_closure(const DeltaFamily& phi, const DeltaFamily& psi, const LctParams& p, int n,
                                 const Grid& ugrid) {
    const double step = std::min(phi.auto_step(n), psi.auto_step(n));
    const SampledSignal a = phi.member(n, step);
    const SampledSignal b = psi.member(n, step);
    const SampledSignal conv = a_convolve(a, b, p);
    SpectralClosure out;
    out.product_residual = relative_l2_error(
        spectral_product(lct_transform(a, p, ugrid), lct_transform(b, p, ugrid), p), lct_transform(conv, p, ugrid));
    out.closure = check_condition_i(conv, p);
    out.closure.n = n;
    return out;
}

bool validate_family(const DeltaFamily& family, const LctParams& p, std::span<const int> n_list, double eps,
                     double tol) {
    for (const int n : n_list) {
        if (!check_condition_i(family.member(n), p, tol).passed_i) {
            return false;
        }
    }
    for (std::size_t i = 1; i < n_list.size(); ++i) {
        if (!(family.support_bound(n_list[i]) < family.support_bound(n_list[i - 1]))) {
            return false;
        }
    }
    return check_condition_ii(family, eps, n_list, tol).passed;
}

}  // namespace lctb
