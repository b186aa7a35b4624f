#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lctb/errors.hpp"
#include "lctb/lct.hpp"
#include "lctb/signal.hpp"

using namespace lctb;

namespace {

const Grid tgrid(-8.0, 1.0 / 64.0, 1025);
const Grid ugrid(-16.0, 1.0 / 32.0, 1025);

SampledSignal gaussian() {
    return SampledSignal::sample(tgrid, [](double t) { return cplx(std::exp(-0.5 * t * t)); });
}

// Closed form of the transform of exp(-t^2/2) for b != 0:
// sqrt(1/(2 pi i b)) exp(i d u^2/2b) sqrt(pi/p) exp(-u^2/(4 b^2 p)), p = 1/2 - i a/2b.
SampledSignal gaussian_transform(const LctParams& p, const Grid& u) {
    using namespace std::complex_literals;
    const double a = p.a(), b = p.b(), d = p.d();
    const cplx K = std::sqrt(1.0 / (2.0 * std::numbers::pi * 1i * b));
    const cplx q = 0.5 - 1i * a / (2.0 * b);
    return SampledSignal::sample(u, [&](double x) {
        return K * std::exp(1i * d * x * x / (2.0 * b)) * std::sqrt(std::numbers::pi / q) *
               std::exp(-x * x / (4.0 * b * b * q));
    });
}

}  // namespace

TEST(LctParams, RejectsNonUnitDeterminant) {
    EXPECT_THROW(make_params(1.0, 1.0, 1.0, 1.0), DeterminantError);
    EXPECT_THROW(make_params(2.0, 1.0, 3.0, 2.0 + 1e-9), DeterminantError);
    EXPECT_NO_THROW(make_params(2.0, 1.0, 3.0, 2.0));
}

TEST(LctParams, RejectsNonFiniteEntries) {
    EXPECT_THROW(make_params(NAN, 1.0, -1.0, 0.0), NonFiniteError);
    EXPECT_THROW(make_params(0.0, INFINITY, -1.0, 0.0), NonFiniteError);
}

TEST(LctParams, InverseParameters) {
    const LctParams p = make_params(2.0, 1.0, 3.0, 2.0);
    const LctParams q = invert_params(p);
    EXPECT_EQ(q, make_params(2.0, -1.0, -3.0, 2.0));
    EXPECT_EQ(invert_params(q), p);
}

TEST(LctParams, SpecialMatrices) {
    EXPECT_EQ(special_params(SpecialKind::fourier), make_params(0.0, 1.0, -1.0, 0.0));
    EXPECT_EQ(special_params(SpecialKind::identity), make_params(1.0, 0.0, 0.0, 1.0));
    EXPECT_EQ(special_params(SpecialKind::frft, std::numbers::pi / 2.0), special_params(SpecialKind::fourier));
    const LctParams r = special_params(SpecialKind::frft, 0.3);
    EXPECT_DOUBLE_EQ(r.a(), std::cos(0.3));
    EXPECT_DOUBLE_EQ(r.b(), std::sin(0.3));
}

TEST(LctPrefactor, PrincipalBranch) {
    const cplx k = kernel_prefactor(special_params(SpecialKind::fourier));
    const cplx expected = std::polar(1.0 / std::sqrt(2.0 * std::numbers::pi), -std::numbers::pi / 4.0);
    EXPECT_NEAR(std::abs(k - expected), 0.0, 1e-15);
    const cplx neg = kernel_prefactor(make_params(2.0, -1.0, -1.0, 1.0));
    EXPECT_GT(neg.real(), 0.0);
    EXPECT_NEAR(std::abs(neg * product_prefactor(make_params(2.0, -1.0, -1.0, 1.0)) - 1.0), 0.0, 1e-15);
}

TEST(LctTransform, FourierCaseOfGaussian) {
    const Grid u = Grid::spanning(-6.0, 6.0, 385);
    const SampledSignal F = lct_transform(gaussian(), special_params(SpecialKind::fourier), u);
    const SampledSignal expected = SampledSignal::sample(
        u, [](double x) { return std::polar(std::exp(-0.5 * x * x), -std::numbers::pi / 4.0); });
    EXPECT_LT(relative_l2_error(F, expected), 1e-10);
}

class GaussianOracle : public ::testing::TestWithParam<std::array<double, 4>> {};

TEST_P(GaussianOracle, MatchesClosedForm) {
    const auto [a, b, c, d] = GetParam();
    const LctParams p = make_params(a, b, c, d);
    const SampledSignal F = lct_transform(gaussian(), p, ugrid);
    EXPECT_LT(relative_l2_error(F, gaussian_transform(p, ugrid)), 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Params, GaussianOracle,
                         ::testing::Values(std::array<double, 4>{2.0, 1.0, 3.0, 2.0},
                                           std::array<double, 4>{2.0, -1.0, -1.0, 1.0},
                                           std::array<double, 4>{0.0, 1.0, -1.0, 0.0},
                                           std::array<double, 4>{0.5, 2.0, -0.375, 0.5}));

TEST(LctTransform, RoundTripAndUnitarity) {
    const SampledSignal f = SampledSignal::sample(
        tgrid, [](double t) { return std::exp(-0.5 * t * t) * std::polar(1.0, 0.25 * t * t); });
    for (const LctParams& p : {make_params(2.0, 1.0, 3.0, 2.0), special_params(SpecialKind::frft, 0.7)}) {
        const SampledSignal F = lct_transform(f, p, ugrid);
        EXPECT_NEAR(l2_norm(F) / l2_norm(f), 1.0, 1e-6);
        EXPECT_LT(relative_l2_error(lct_inverse(F, p, tgrid), f), 1e-6);
    }
}

TEST(LctTransform, IdentityResamples) {
    const SampledSignal f = gaussian();
    const Grid coarse(-4.0, 1.0 / 16.0, 129);
    const SampledSignal g = lct_transform(f, special_params(SpecialKind::identity), coarse);
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_EQ(g[i], f.at(coarse.at(i)));
    }
}

TEST(LctTransform, DegenerateBranchScalesAndChirps) {
    const LctParams p = make_params(2.0, 0.0, 3.0, 0.5);
    const Grid u = Grid::spanning(-4.0, 4.0, 129);
    const SampledSignal F = lct_transform(gaussian(), p, u);
    for (std::size_t i = 0; i < F.size(); ++i) {
        const double x = u.at(i);
        const cplx expected = std::sqrt(0.5) * std::polar(std::exp(-0.125 * x * x), 0.75 * x * x);
        EXPECT_NEAR(std::abs(F[i] - expected), 0.0, 1e-12) << x;
    }
}

TEST(LctTransform, DegenerateBranchErrors) {
    EXPECT_THROW(lct_transform(gaussian(), make_params(-1.0, 0.0, 0.0, -1.0), ugrid), BranchError);
    EXPECT_THROW(lct_transform(gaussian(), make_params(0.5, 0.0, 0.0, 2.0), ugrid), DomainError);
}

TEST(LctTransform, ZeroSignal) {
    const SampledSignal F = lct_transform(SampledSignal::zeros(tgrid), make_params(2.0, 1.0, 3.0, 2.0), ugrid);
    EXPECT_EQ(sup_norm(F), 0.0);
}
