#include "lctb/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lctb/errors.hpp"
#include "lctb/parallel.hpp"

namespace lctb {

cplx weight(double t, double tau, const LctParams& p) {
    if (p.b_is_zero()) {
        throw BranchError("convolution weight needs b != 0");
    }
    return std::polar(1.0, tau * (tau - t) * p.a() / p.b());
}

SampledSignal a_convolve(const SampledSignal& f, const SampledSignal& g, const LctParams& p) {
    if (p.b_is_zero()) {
        throw BranchError("weighted convolution needs b != 0");
    }
    if (!steps_match(f.step(), g.step())) {
        throw GridError("weighted convolution needs matching grid steps");
    }
    const double h = f.step();
    const double alpha = 0.5 * p.a() / p.b();

    // tau (tau - t) = [tau^2 + (t - tau)^2 - t^2] / 2, so the weight splits
    // into a chirp on each factor and one on the output.
    const std::size_t nf = f.size();
    const std::size_t ng = g.size();
    std::vector<double> fr(nf), fi(nf), gr(ng), gi(ng);
    for (std::size_t k = 0; k < nf; ++k) {
        const double t = f.time(k);
        const cplx z = std::polar(1.0, alpha * t * t) * f[k];
        fr[k] = z.real();
        fi[k] = z.imag();
    }
    // g stored reversed so both inner-loop operands advance forward.
    for (std::size_t m = 0; m < ng; ++m) {
        const double s = g.time(m);
        const cplx z = std::polar(1.0, alpha * s * s) * g[m];
        gr[ng - 1 - m] = z.real();
        gi[ng - 1 - m] = z.imag();
    }

    const std::size_t nout = nf + ng - 1;
    const double out_start = f.start() + g.start();
    std::vector<cplx> out(nout);
    parallel_for(nout, [&](std::size_t j) {
        const std::size_t k_lo = j + 1 > ng ? j + 1 - ng : 0;
        const std::size_t k_hi = std::min(nf - 1, j);
        if (k_hi <= k_lo) {
            return;  // single node: zero-width interval
        }
        // g index j - k  <->  reversed index ng - 1 - j + k
        const std::size_t shift = ng - 1 - j;
        double sr = 0.0;
        double si = 0.0;
        for (std::size_t k = k_lo; k <= k_hi; ++k) {
            const std::size_t m = shift + k;
            sr += fr[k] * gr[m] - fi[k] * gi[m];
            si += fr[k] * gi[m] + fi[k] * gr[m];
        }
        const std::size_t m_lo = shift + k_lo;
        const std::size_t m_hi = shift + k_hi;
        sr -= 0.5 * (fr[k_lo] * gr[m_lo] - fi[k_lo] * gi[m_lo] + fr[k_hi] * gr[m_hi] - fi[k_hi] * gi[m_hi]);
        si -= 0.5 * (fr[k_lo] * gi[m_lo] + fi[k_lo] * gr[m_lo] + fr[k_hi] * gi[m_hi] + fi[k_hi] * gr[m_hi]);
        const double t = out_start + h * static_cast<double>(j);
        out[j] = h * std::polar(1.0, -alpha * t * t) * cplx(sr, si);
    });
    return SampledSignal(out_start, h, std::move(out));
}

SampledSignal convolution_theorem_rhs(const SampledSignal& F, const SampledSignal& G, const LctParams& p) {
    if (!same_grid(F.grid(), G.grid())) {
        throw GridError("spectral factors must share one u-grid");
    }
    const cplx prefactor = product_prefactor(p);
    const double beta = 0.5 * p.d() / p.b();
    std::vector<cplx> out(F.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const double u = F.time(j);
        out[j] = prefactor * std::polar(1.0, -beta * u * u) * F[j] * G[j];
    }
    return SampledSignal(F.start(), F.step(), std::move(out));
}

SampledSignal spectral_product(const SampledSignal& F, const SampledSignal& G, const LctParams& p) {
    return convolution_theorem_rhs(F, G, p);
}

SampledSignal spectral_unit(const LctParams& p, const Grid& ugrid) {
    const cplx prefactor = kernel_prefactor(p);
    const double beta = 0.5 * p.d() / p.b();
    return SampledSignal::sample(ugrid, [&](double u) { return prefactor * std::polar(1.0, beta * u * u); });
}

}  // namespace lctb
