#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lctb/lct.hpp"
#include "lctb/signal.hpp"

namespace lctb {

/// Outcome of the delta-sequence conditions for one member.
///   (i)  int exp(i a t^2 / 2b) delta_n(t) dt = 1
///   (ii) int_{|t| > eps} |delta_n(t)| dt -> 0
struct ConditionReport {
    int n = 0;
    cplx condition_i_value{0.0, 0.0};
    double tail_mass = 0.0;
    double tolerance = 0.0;
    bool passed_i = false;
    bool passed_ii = false;
};

/// An indexed generator of compactly supported signals delta_n carrying the
/// chirp exp(-i a t^2 / 2b) of its parameter set.
///
/// Members are sampled on lattices that contain t = 0, so signals built from
/// the same step stay aligned under convolution and addition.
class DeltaFamily {
public:
    using Generator = std::function<SampledSignal(int n, double step)>;
    using Bound = std::function<double(int n)>;

    /// `smoothness` is the highest derivative order the members support.
    DeltaFamily(std::string name, LctParams params, Generator generator, Bound support_bound, int smoothness);

    const std::string& name() const noexcept { return name_; }
    const LctParams& params() const noexcept { return params_; }
    int smoothness() const noexcept { return smoothness_; }

    /// Half-width of an interval around 0 containing the support of delta_n.
    double support_bound(int n) const;

    /// Member sampled with the given step. Throws ConfigError for n < 1.
    SampledSignal member(int n, double step) const;

    /// Member on an automatically refined grid: 64 steps per support half-width.
    SampledSignal member(int n) const { return member(n, auto_step(n)); }
    double auto_step(int n) const;

private:
    std::string name_;
    LctParams params_;
    Generator generator_;
    Bound support_bound_;
    int smoothness_;
};

inline constexpr int infinitely_smooth = std::numeric_limits<int>::max();

/// exp(-i a t^2/2b) t on [0,1/n], exp(-i a t^2/2b) n^2 (2/n - t) on
/// [1/n,2/n], zero elsewhere. At t = 1/n, where the two pieces disagree,
/// the sample takes the mean of the one-sided values.
SampledSignal paper_example_delta(int n, const LctParams& p, const Grid& grid);

/// The unit-mass hat: exp(-i a t^2/2b) n^2 t on [0,1/n] and
/// exp(-i a t^2/2b) n^2 (2/n - t) on [1/n,2/n].
SampledSignal triangular_delta(int n, const LctParams& p, const Grid& grid);

/// exp(-i a t^2/2b) c exp(-1/(1 - (n t)^2)) on |t| < 1/n with c fixed so the
/// trapezoidal condition-(i) integral on `grid` is exactly 1.
SampledSignal bump_delta(int n, const LctParams& p, const Grid& grid);

DeltaFamily triangular_family(const LctParams& p, int scale = 1);
DeltaFamily paper_example_family(const LctParams& p);
/// Member n is the bump of index n * scale.
DeltaFamily bump_family(const LctParams& p, int scale = 1);
/// Unit-mass hat on [-1, 1] for every n: satisfies (i), never (ii).
DeltaFamily fixed_width_family(const LctParams& p);

/// Names accepted: "triangular", "paper", "bump", "fixed".
DeltaFamily family_by_name(const std::string& name, const LctParams& p, int scale = 1);

inline constexpr double analytic_tolerance = 1e-6;
inline constexpr double quadrature_tolerance = 1e-4;

ConditionReport check_condition_i(const SampledSignal& delta, const LctParams& p,
                                  double tol = analytic_tolerance);

/// int_{|t| > eps} |f| using the piecewise-linear interpolant of |f|.
double tail_mass(const SampledSignal& f, double eps);

struct TailCheck {
    std::vector<ConditionReport> reports;
    /// Tails non-increasing in n and the last one at most `tol`.
    bool passed = false;
};

TailCheck check_condition_ii(const DeltaFamily& family, double eps, std::span<const int> n_list,
                             double tol = analytic_tolerance);

/// Runs (i) on phi_n *A psi_n and measures its mass outside the summed
/// support bounds (expected exactly zero).
ConditionReport delta_convolve_closure(const DeltaFamily& phi, const DeltaFamily& psi, const LctParams& p, int n,
                                       double tol = quadrature_tolerance);

/// ||f *A delta_n - f||_2 for each n; members sampled with f's step.
std::vector<double> approx_identity_check(const SampledSignal& f, const DeltaFamily& family, const LctParams& p,
                                          std::span<const int> n_list);

/// sup over `compact` of |sqrt(2 pi i b) exp(-i d u^2/2b) L_A(delta_n)(u) - 1|.
std::vector<double> normalized_lct_of_delta(const DeltaFamily& family, const LctParams& p, const Grid& compact,
                                            std::span<const int> n_list);

struct SpectralClosure {
    /// Relative L2 gap between L(phi_n) (.) L(psi_n) and L(phi_n *A psi_n).
    double product_residual = 0.0;
    ConditionReport closure;
};

SpectralClosure spectral_closure(const DeltaFamily& phi, const DeltaFamily& psi, const LctParams& p, int n,
                                 const Grid& ugrid);

/// Conditions (i) on every listed member plus (ii) at `eps`.
bool validate_family(const DeltaFamily& family, const LctParams& p, std::span<const int> n_list, double eps,
                     double tol = analytic_tolerance);

}  // namespace lctb
