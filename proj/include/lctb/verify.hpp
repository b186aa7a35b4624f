#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lctb/lct.hpp"
#include "lctb/signal.hpp"

namespace lctb {

/// One measured sub-claim of a report.
struct ReportPart {
    enum class Rule {
        bound,       // residual <= tolerance
        decreasing,  // `sequence` strictly decreasing
        flagged,     // a negative control that must be detected
    };

    std::string name;
    Rule rule = Rule::bound;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::vector<double> sequence;
    std::string note;
};

struct VerificationReport {
    std::string claim_id;
    std::string statement;
    std::string inputs;
    double lhs_norm = 0.0;
    double rhs_norm = 0.0;
    /// Taken from the bound part with the largest residual / tolerance.
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    /// Ungated reports never change the harness outcome.
    bool gated = true;
    double runtime_ms = 0.0;
    std::vector<ReportPart> parts;
    std::vector<std::string> notes;
};

struct Tolerances {
    double exact = 1e-12;
    double symmetry = 1e-10;
    double analytic = 1e-6;
    double quadrature = 1e-4;
    double smooth = 1e-3;
    double kinked = 1e-2;
    double construction = 1e-4;
    double spectral = 1e-3;
};

struct BatterySignal {
    std::string name;
    std::function<cplx(double)> fn;
    bool smooth = true;
};

struct NamedParams {
    std::string name;
    LctParams params;
};

struct TestBattery {
    std::vector<BatterySignal> signals;
    std::vector<NamedParams> params;
    /// Plain-signal checks.
    Grid tgrid{-8.0, 1.0 / 64.0, 1025};
    Grid ugrid{-16.0, 1.0 / 32.0, 1025};
    /// Finer grid for Boehmian checks and the compact spectral window.
    Grid boehm_tgrid{-8.0, 1.0 / 256.0, 4097};
    Grid compact_ugrid{-4.0, 1.0 / 32.0, 257};
    std::size_t depth = 4;
    /// Member n of the smooth family is the bump of index n * bump_scale.
    int bump_scale = 16;
    /// Coarser bump schedule used where members are differentiated.
    int derivative_scale = 4;
    std::uint64_t seed = 20240917;
    Tolerances tol;

    const BatterySignal& signal(const std::string& name) const;
    /// Names of signals whose end samples exceed 1e-10 on either grid.
    std::vector<std::string> edge_violations() const;
};

TestBattery default_battery();

/// Unit-norm smooth perturbation direction drawn from the battery seed.
SampledSignal perturbation_direction(const Grid& grid, std::uint64_t seed);

struct ClaimInfo {
    std::string id;
    std::string statement;
    bool gated = true;
    std::function<VerificationReport(const TestBattery&)> run;
};

/// Every check in run order. Identifiers are unique.
const std::vector<ClaimInfo>& claim_registry();

/// Throws ConfigError for an unknown identifier.
const ClaimInfo& find_claim(const std::string& id);

VerificationReport run_claim(const std::string& id, const TestBattery& battery);
std::vector<VerificationReport> run_all(const TestBattery& battery);

/// True when every gated report passed.
bool all_gated_passed(const std::vector<VerificationReport>& reports);

VerificationReport verify_round_trip(const TestBattery& battery);
VerificationReport verify_unitarity(const TestBattery& battery);
VerificationReport verify_fourier_case(const TestBattery& battery);
VerificationReport verify_branch_consistency(const TestBattery& battery);
VerificationReport verify_convolution_theorem(const TestBattery& battery);
VerificationReport verify_semigroup(const TestBattery& battery);
VerificationReport verify_closure(const TestBattery& battery);
VerificationReport verify_plancherel_continuity(const TestBattery& battery);
VerificationReport verify_delta_axioms(const TestBattery& battery);
VerificationReport verify_delta_closure(const TestBattery& battery);
VerificationReport verify_approximate_identity(const TestBattery& battery);
VerificationReport verify_normalized_delta_transform(const TestBattery& battery);
VerificationReport verify_pointwise_product(const TestBattery& battery);
VerificationReport verify_spectral_approx_identity(const TestBattery& battery);
VerificationReport verify_spectral_closure(const TestBattery& battery);
VerificationReport verify_boehmian_construction(const TestBattery& battery);
VerificationReport verify_boehmian_algebra(const TestBattery& battery);
VerificationReport verify_lct_well_defined(const TestBattery& battery);
VerificationReport verify_lct_limit(const TestBattery& battery);
VerificationReport verify_consistency(const TestBattery& battery);
VerificationReport verify_convergence_diagnostics(const TestBattery& battery);
VerificationReport verify_linearity(const TestBattery& battery);
VerificationReport verify_modulation(const TestBattery& battery);
VerificationReport verify_shift(const TestBattery& battery);
VerificationReport verify_second_derivative(const TestBattery& battery);
VerificationReport verify_exchange(const TestBattery& battery);
VerificationReport verify_boehmian_continuity(const TestBattery& battery);
VerificationReport verify_derivative_continuity(const TestBattery& battery);
VerificationReport verify_bijection_round_trip(const TestBattery& battery);

}  // namespace lctb
