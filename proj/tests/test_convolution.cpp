#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lctb/convolution.hpp"
#include "lctb/errors.hpp"
#include "lctb/lct.hpp"

using namespace lctb;

namespace {

SampledSignal on(const Grid& g, double (*fn)(double)) {
    return SampledSignal::sample(g, [fn](double t) { return cplx(fn(t)); });
}

double gauss(double t) { return std::exp(-0.5 * t * t); }
double box(double t) { return std::abs(t) <= 1.0 ? 1.0 : 0.0; }

// Direct evaluation of int f(tau) g(t - tau) W(t, tau) dtau: for each output
// time, collect the tau samples where both factors are on-grid and apply the
// trapezoidal rule to the weighted products.
SampledSignal direct_convolution(const SampledSignal& f, const SampledSignal& g, const LctParams& p) {
    const double h = f.step();
    const std::size_t n = f.size() + g.size() - 1;
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = f.start() + g.start() + h * static_cast<double>(k);
        std::vector<cplx> terms;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const long j = static_cast<long>(k) - static_cast<long>(i);
            if (j < 0 || j >= static_cast<long>(g.size())) {
                continue;
            }
            const double tau = f.time(i);
            terms.push_back(f[i] * g[static_cast<std::size_t>(j)] * std::exp(cplx(0.0, tau * (tau - t) * p.a() / p.b())));
        }
        cplx s = 0.0;
        if (terms.size() >= 2) {
            s = 0.5 * (terms.front() + terms.back());
            for (std::size_t m = 1; m + 1 < terms.size(); ++m) {
                s += terms[m];
            }
        }
        out[k] = s * h;
    }
    return SampledSignal(f.start() + g.start(), h, std::move(out));
}

}  // namespace

TEST(Weight, UnitModulusAndBranchError) {
    const LctParams p = make_params(2.0, 1.0, 3.0, 2.0);
    EXPECT_NEAR(std::abs(weight(0.3, -1.7, p)), 1.0, 1e-15);
    EXPECT_EQ(weight(0.3, 0.0, p), cplx(1.0));
    EXPECT_THROW(weight(0.0, 1.0, special_params(SpecialKind::identity)), BranchError);
}

TEST(AConvolve, MatchesDirectWeightedSum) {
    const Grid g1(-2.0, 1.0 / 32.0, 129);
    const Grid g2(-1.0, 1.0 / 32.0, 97);
    const SampledSignal f = SampledSignal::sample(g1, [](double t) { return std::polar(gauss(t), 0.3 * t); });
    const SampledSignal g = on(g2, gauss);
    for (const LctParams& p : {make_params(2.0, 1.0, 3.0, 2.0), make_params(2.0, -1.0, -1.0, 1.0)}) {
        const SampledSignal h = a_convolve(f, g, p);
        const SampledSignal d = direct_convolution(f, g, p);
        ASSERT_EQ(h.size(), d.size());
        EXPECT_DOUBLE_EQ(h.start(), d.start());
        EXPECT_LT(sup_distance(h, d), 1e-13);
    }
}

TEST(AConvolve, FourierCaseIsOrdinaryConvolution) {
    // exp(-t^2/2) * exp(-t^2/2) = sqrt(pi) exp(-t^2/4)
    const Grid g(-8.0, 1.0 / 64.0, 1025);
    const SampledSignal h = a_convolve(on(g, gauss), on(g, gauss), special_params(SpecialKind::fourier));
    const SampledSignal expected = SampledSignal::sample(
        h.grid(), [](double t) { return cplx(std::sqrt(std::numbers::pi) * std::exp(-0.25 * t * t)); });
    EXPECT_LT(relative_l2_error(h, expected), 1e-10);
}

TEST(AConvolve, BoxWithBoxIsTriangle) {
    const Grid g(-1.0, 1.0 / 16.0, 33);
    const SampledSignal h = a_convolve(on(g, box), on(g, box), special_params(SpecialKind::fourier));
    ASSERT_EQ(h.size(), 65u);
    for (std::size_t i = 0; i < h.size(); ++i) {
        EXPECT_NEAR(h[i].real(), 2.0 - std::abs(h.time(i)), 1e-14);
        EXPECT_EQ(h[i].imag(), 0.0);
    }
}

TEST(AConvolve, CommutativeUnderTheWeight) {
    const Grid g1(-3.0, 1.0 / 32.0, 193);
    const Grid g2(-2.0, 1.0 / 32.0, 129);
    const SampledSignal f = on(g1, gauss);
    const SampledSignal g = SampledSignal::sample(g2, [](double t) { return cplx(std::sin(2.0 * t) * gauss(t)); });
    const LctParams p = make_params(2.0, 1.0, 3.0, 2.0);
    EXPECT_LT(sup_distance(a_convolve(f, g, p), a_convolve(g, f, p)), 1e-14);
}

TEST(AConvolve, GridErrors) {
    const SampledSignal f = on(Grid(-1.0, 1.0 / 16.0, 33), box);
    const SampledSignal g = on(Grid(-1.0, 1.0 / 32.0, 65), box);
    EXPECT_THROW(a_convolve(f, g, special_params(SpecialKind::fourier)), GridError);
    EXPECT_THROW(a_convolve(f, f, special_params(SpecialKind::identity)), BranchError);
}

TEST(ConvolutionTheorem, GaussianAndBoxPairs) {
    const Grid t(-8.0, 1.0 / 64.0, 1025);
    const Grid u(-16.0, 1.0 / 32.0, 1025);
    for (const LctParams& p : {make_params(2.0, 1.0, 3.0, 2.0), make_params(2.0, -1.0, -1.0, 1.0)}) {
        for (auto fn : {gauss, box}) {
            const SampledSignal f = on(t, fn);
            const SampledSignal F = lct_transform(f, p, u);
            const SampledSignal lhs = lct_transform(a_convolve(f, f, p), p, u);
            EXPECT_LT(relative_l2_error(lhs, convolution_theorem_rhs(F, F, p)), fn == gauss ? 1e-3 : 1e-2);
        }
    }
}

TEST(SpectralProduct, UnitIsNeutral) {
    const LctParams p = make_params(2.0, 1.0, 3.0, 2.0);
    const Grid u(-4.0, 1.0 / 32.0, 257);
    const SampledSignal F = lct_transform(on(Grid(-8.0, 1.0 / 64.0, 1025), gauss), p, u);
    EXPECT_LT(sup_distance(spectral_product(F, spectral_unit(p, u), p), F), 1e-14);
}
