#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lctb/boehmian.hpp"
#include "lctb/convolution.hpp"
#include "lctb/errors.hpp"

using namespace lctb;

namespace {

const LctParams P = make_params(2.0, 1.0, 3.0, 2.0);
const Grid T(-8.0, 1.0 / 256.0, 4097);
const Grid U(-4.0, 1.0 / 32.0, 257);

SampledSignal gaussian(double centre = 0.0) {
    return SampledSignal::sample(T, [centre](double t) { return cplx(std::exp(-0.5 * (t - centre) * (t - centre))); });
}

class BoehmianTest : public ::testing::Test {
protected:
    DeltaFamily bump = bump_family(P, 16);
    DeltaFamily tri = triangular_family(P, 16);
    BoehmianRep F = embed(gaussian(), bump, 4, P);
};

}  // namespace

TEST_F(BoehmianTest, EmbedIsAQuotient) {
    EXPECT_EQ(F.depth(), 4u);
    EXPECT_LT(F.compat_residual(), 1e-4);
    EXPECT_LT(equivalent(F, F), 1e-10);
    EXPECT_LT(equivalent(F, embed(gaussian(), tri, 4, P)), 1e-3);
}

TEST_F(BoehmianTest, DistinctSignalsAreNotEquivalent) {
    EXPECT_GT(equivalent(F, embed(gaussian(0.5), bump, 4, P)), 0.01);
}

TEST_F(BoehmianTest, IncompatibleSequencesRejected) {
    std::vector<SampledSignal> nums{gaussian(), gaussian(1.0)};
    std::vector<SampledSignal> dens{F.denominator(1), F.denominator(2)};
    EXPECT_THROW(BoehmianRep(nums, dens, P, bump.smoothness()), ToleranceError);
}

TEST_F(BoehmianTest, NonDeltaFamilyRejected) {
    EXPECT_THROW(embed(gaussian(), paper_example_family(P), 4, P), ConfigError);
}

TEST_F(BoehmianTest, AlgebraMatchesSignalAlgebra) {
    const SampledSignal f = gaussian();
    const SampledSignal g = gaussian(0.5);
    const BoehmianRep G = embed(g, tri, 4, P);
    EXPECT_LT(equivalent(add(F, G), embed(add(f, g), bump, 4, P)), 1e-3);
    EXPECT_LT(equivalent(scalar_mul(cplx(0.7, -0.3), F), embed(scale(f, cplx(0.7, -0.3)), bump, 4, P)), 1e-10);
    EXPECT_LT(equivalent(boehm_convolve(F, embed(g, bump, 4, P)), embed(a_convolve(f, g, P), bump, 4, P)), 1e-3);
}

TEST_F(BoehmianTest, DiracIsTheUnit) {
    const BoehmianRep D = dirac(bump, 4, T.step(), P);
    EXPECT_LT(D.compat_residual(), 1e-12);
    EXPECT_LT(equivalent(boehm_convolve(F, D), F), 1e-3);
}

TEST_F(BoehmianTest, ModulationAndTranslation) {
    const SampledSignal f = gaussian();
    const double k = 1.5;
    const SampledSignal fk = modulate(f, [k](double t) { return std::polar(1.0, k * t); });
    EXPECT_LT(equivalent(modulate(F, k), embed(fk, bump, 4, P)), 1e-3);
    const double tau = 0.5;
    EXPECT_LT(equivalent(translate(F, tau), embed(gaussian(-tau), bump, 4, P)), 1e-3);
}

TEST_F(BoehmianTest, CovariantDerivativeIsAQuotient) {
    const DeltaFamily smooth = bump_family(P, 4);
    const BoehmianRep D = boehm_derivative(F, 2, smooth);
    EXPECT_LT(D.compat_residual(), 1e-4);
    EXPECT_THROW(boehm_derivative(F, 2, smooth, DerivativeRule::literal), ToleranceError);
    EXPECT_THROW(boehm_derivative(F, 2, triangular_family(P, 4)), SmoothnessError);
    EXPECT_LT(equivalent(boehm_derivative(F, 0, smooth), F), 1e-12);
}

TEST(BoehmianDerivative, LiteralAndCovariantAgreeWithoutChirp) {
    const LctParams q = special_params(SpecialKind::fourier);
    const SampledSignal d = bump_family(q, 4).member(2, T.step());
    EXPECT_EQ(sup_distance(delta_derivative(d, 2, q, DerivativeRule::literal),
                           delta_derivative(d, 2, q, DerivativeRule::covariant)),
              0.0);
}

TEST(FiniteDifference, SecondDerivativeOfGaussian) {
    const SampledSignal f = gaussian();
    const SampledSignal d2 = finite_difference(f, 2);
    EXPECT_EQ(d2.size(), f.size() + 4);
    double worst = 0.0;
    for (std::size_t i = 0; i < d2.size(); ++i) {
        const double t = d2.time(i);
        worst = std::max(worst, std::abs(d2[i] - (t * t - 1.0) * std::exp(-0.5 * t * t)));
    }
    EXPECT_LT(worst, 1e-5);
}

TEST_F(BoehmianTest, TransformLimitMatchesDirectTransform) {
    const SpectralBoehmianRep S = boehm_lct(F, U);
    EXPECT_LT(S.cross_residual, 1e-3);
    const LctLimit lim = boehm_lct_limit(F, U);
    EXPECT_TRUE(lim.cauchy_decreasing);
    EXPECT_LT(relative_l2_error(lim.value, lct_transform(gaussian(), P, U)), 1e-3);
    EXPECT_LT(spectral_equivalent(S, boehm_lct(embed(gaussian(), tri, 4, P), U)), 1e-3);
}

TEST(TrendSummary, Classification) {
    EXPECT_TRUE(summarize_trend({1.0, 0.4, 0.1}).converging);
    EXPECT_FALSE(summarize_trend({1.0, 0.9, 0.8}).converging);
    EXPECT_TRUE(summarize_trend({1.0, 0.9, 0.8}).strictly_decreasing);
    EXPECT_FALSE(summarize_trend({1.0, 1.0, 0.1}).strictly_decreasing);
    EXPECT_TRUE(summarize_trend({0.0, 0.0}).converging);
    EXPECT_DOUBLE_EQ(summarize_trend({2.0, 0.5}).contraction, 0.25);
}

TEST_F(BoehmianTest, ConvergenceDiagnosticsSeparateSequences) {
    const SampledSignal e = scale(gaussian(0.3), 0.5);
    std::vector<BoehmianRep> vanishing;
    std::vector<BoehmianRep> fixed;
    for (int n = 1; n <= 4; ++n) {
        vanishing.push_back(embed(axpy(gaussian(), std::ldexp(1.0, -n), e), bump, 4, P));
        fixed.push_back(embed(add(gaussian(), e), bump, 4, P));
    }
    EXPECT_TRUE(delta_convergence_diag(vanishing, F).converging);
    EXPECT_FALSE(delta_convergence_diag(fixed, F).converging);
    const std::vector<int> ks{1, 2, 3, 4};
    EXPECT_TRUE(small_delta_convergence_diag(vanishing, F, ks).converging);
    EXPECT_FALSE(small_delta_convergence_diag(fixed, F, ks).converging);
}
