#include "lctb/lct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "lctb/errors.hpp"
#include "lctb/parallel.hpp"

namespace lctb {

std::string LctParams::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << "(" << a_ << "," << b_ << "," << c_ << "," << d_ << ")";
    return os.str();
}

LctParams make_params(double a, double b, double c, double d) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
        throw NonFiniteError("LCT parameters must be finite real numbers");
    }
    const double det = a * d - b * c;
    if (std::abs(det - 1.0) > determinant_tolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "ad - bc must equal 1, got " << det;
        throw DeterminantError(os.str());
    }
    return LctParams(a, b, c, d);
}

LctParams invert_params(const LctParams& p) { return make_params(p.d(), -p.b(), -p.c(), p.a()); }

LctParams special_params(SpecialKind kind, double theta) {
    switch (kind) {
        case SpecialKind::fourier:
            return make_params(0.0, 1.0, -1.0, 0.0);
        case SpecialKind::identity:
            return make_params(1.0, 0.0, 0.0, 1.0);
        case SpecialKind::frft: {
            double cs = std::cos(theta);
            double sn = std::sin(theta);
            constexpr double snap = 1e-15;
            if (std::abs(cs) < snap) {
                cs = 0.0;
                sn = std::copysign(1.0, sn);
            } else if (std::abs(sn) < snap) {
                sn = 0.0;
                cs = std::copysign(1.0, cs);
            }
            return make_params(cs, sn, -sn, cs);
        }
    }
    throw ConfigError("unknown special parameter kind");
}

cplx kernel_prefactor(const LctParams& p) {
    if (p.b_is_zero()) {
        throw BranchError("kernel prefactor needs b != 0");
    }
    return std::sqrt(cplx(1.0, 0.0) / cplx(0.0, 2.0 * std::numbers::pi * p.b()));
}

cplx product_prefactor(const LctParams& p) {
    if (p.b_is_zero()) {
        throw BranchError("product prefactor needs b != 0");
    }
    return std::sqrt(cplx(0.0, 2.0 * std::numbers::pi * p.b()));
}

namespace {

SampledSignal transform_degenerate(const SampledSignal& f, const LctParams& p, const Grid& ugrid) {
    if (!(p.d() > 0.0)) {
        throw BranchError("b = 0 branch needs d > 0 for the real square root");
    }
    const double tol = 1e-9 * f.step();
    const double root_d = std::sqrt(p.d());
    std::vector<cplx> out(ugrid.count());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const double u = ugrid.at(j);
        const double t = p.d() * u;
        if (t < f.start() - tol || t > f.last_time() + tol) {
            throw DomainError("b = 0 branch samples f(d*u) outside the input grid at u = " + std::to_string(u));
        }
        out[j] = root_d * std::polar(1.0, 0.5 * p.c() * p.d() * u * u) * f.at(t);
    }
    return SampledSignal(ugrid, std::move(out));
}

}  // namespace

SampledSignal lct_transform(const SampledSignal& f, const LctParams& p, const Grid& ugrid) {
    if (p.b_is_zero()) {
        return transform_degenerate(f, p, ugrid);
    }
    const double b = p.b();
    const double alpha = 0.5 * p.a() / b;
    const double beta = 0.5 * p.d() / b;
    const cplx prefactor = kernel_prefactor(p);

    // Input chirp and trapezoid weights folded into the samples once.
    const std::size_t n = f.size();
    std::vector<cplx> weighted(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = f.time(k);
        const double w = (n > 1 && (k == 0 || k + 1 == n)) ? 0.5 : 1.0;
        weighted[k] = w * f.step() * std::polar(1.0, alpha * t * t) * f[k];
    }

    // exp(-i u t_k / b) advances geometrically along the grid; the phasor is
    // re-anchored periodically so round-off stays at the 1e-15 level.
    constexpr std::size_t anchor_every = 32;
    std::vector<cplx> out(ugrid.count());
    parallel_for(out.size(), [&](std::size_t j) {
        const double u = ugrid.at(j);
        const double omega = -u / b;
        const cplx ratio = std::polar(1.0, omega * f.step());
        const double rr = ratio.real();
        const double ri = ratio.imag();
        double acc_re = 0.0;
        double acc_im = 0.0;
        for (std::size_t block = 0; block < n; block += anchor_every) {
            const cplx start = std::polar(1.0, omega * f.time(block));
            double pr = start.real();
            double pi = start.imag();
            const std::size_t end = std::min(n, block + anchor_every);
            for (std::size_t k = block; k < end; ++k) {
                const double wr = weighted[k].real();
                const double wi = weighted[k].imag();
                acc_re += wr * pr - wi * pi;
                acc_im += wr * pi + wi * pr;
                const double next_r = pr * rr - pi * ri;
                pi = pr * ri + pi * rr;
                pr = next_r;
            }
        }
        out[j] = prefactor * std::polar(1.0, beta * u * u) * cplx(acc_re, acc_im);
    });
    return SampledSignal(ugrid, std::move(out));
}

SampledSignal lct_inverse(const SampledSignal& F, const LctParams& p, const Grid& tgrid) {
    return lct_transform(F, invert_params(p), tgrid);
}

}  // namespace lctb
