#include <gtest/gtest.h>

#include <set>

#include "lctb/errors.hpp"
#include "lctb/verify.hpp"

using namespace lctb;

TEST(ClaimRegistry, UniqueIdsAndLookup) {
    std::set<std::string> ids;
    for (const auto& c : claim_registry()) {
        EXPECT_TRUE(ids.insert(c.id).second) << c.id;
        EXPECT_FALSE(c.statement.empty()) << c.id;
    }
    EXPECT_EQ(ids.size(), 29u);
    EXPECT_EQ(find_claim("round-trip").id, "round-trip");
    EXPECT_THROW(find_claim("no-such-claim"), ConfigError);
}

TEST(ClaimRegistry, OnlyTheOpenDerivativeFactorIsUngated) {
    for (const auto& c : claim_registry()) {
        EXPECT_EQ(c.gated, c.id != "second-derivative") << c.id;
    }
}

TEST(DefaultBattery, SignalsVanishAtTheEdges) {
    const TestBattery battery = default_battery();
    EXPECT_TRUE(battery.edge_violations().empty());
    EXPECT_EQ(battery.signal("box").smooth, false);
    EXPECT_THROW(battery.signal("sawtooth"), ConfigError);
}

TEST(PerturbationDirection, SeededAndNormalized) {
    const Grid g(-8.0, 1.0 / 64.0, 1025);
    const SampledSignal a = perturbation_direction(g, 7);
    EXPECT_NEAR(l2_norm(a), 1.0, 1e-14);
    EXPECT_EQ(sup_distance(a, perturbation_direction(g, 7)), 0.0);
    EXPECT_GT(sup_distance(a, perturbation_direction(g, 8)), 0.0);
}

TEST(Reports, PassingClaimCarriesParts) {
    const VerificationReport r = run_claim("delta-axioms", default_battery());
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.gated);
    EXPECT_FALSE(r.parts.empty());
    EXPECT_LE(r.residual, r.tolerance);
    for (const auto& p : r.parts) {
        EXPECT_TRUE(p.passed) << p.name;
    }
}

TEST(Reports, TighterTolerancesFailHonestly) {
    TestBattery battery = default_battery();
    battery.tol.quadrature = 1e-300;
    const VerificationReport r = run_claim("round-trip", battery);
    EXPECT_FALSE(r.passed);
    EXPECT_FALSE(all_gated_passed({r}));
}

TEST(Reports, UngatedFailureDoesNotGate) {
    VerificationReport r;
    r.gated = false;
    r.passed = false;
    EXPECT_TRUE(all_gated_passed({r}));
}

TEST(Reports, SecondDerivativeReportsOracleStatus) {
    const VerificationReport r = run_claim("second-derivative", default_battery());
    EXPECT_FALSE(r.gated);
    bool oracle_seen = false;
    for (const auto& p : r.parts) {
        if (p.name.find("oracle") != std::string::npos) {
            oracle_seen = true;
            EXPECT_TRUE(p.passed) << p.name << ": " << p.residual;
        }
    }
    EXPECT_TRUE(oracle_seen);
}
