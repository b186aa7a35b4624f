#pragma once

#include <span>
#include <string>
#include <vector>

#include "lctb/delta.hpp"
#include "lctb/lct.hpp"
#include "lctb/signal.hpp"

namespace lctb {

inline constexpr double construction_tolerance = 1e-4;
inline constexpr double spectral_tolerance = 1e-3;

/// Depth-N truncation of a quotient of sequences f_n / delta_n.
///
/// Immutable. Construction measures the quotient compatibility
///   max_{m,n} || f_m *A delta_n - f_n *A delta_m ||_2
/// and throws ToleranceError when it exceeds the tolerance.
class BoehmianRep {
public:
    BoehmianRep(std::vector<SampledSignal> numerators, std::vector<SampledSignal> denominators, LctParams params,
                int smoothness, double tolerance = construction_tolerance);

    std::size_t depth() const noexcept { return numerators_.size(); }
    const std::vector<SampledSignal>& numerators() const noexcept { return numerators_; }
    const std::vector<SampledSignal>& denominators() const noexcept { return denominators_; }
    /// 1-based, matching the sequence index.
    const SampledSignal& numerator(std::size_t n) const { return numerators_.at(n - 1); }
    const SampledSignal& denominator(std::size_t n) const { return denominators_.at(n - 1); }
    const LctParams& params() const noexcept { return params_; }
    /// Highest derivative order the denominators support.
    int smoothness() const noexcept { return smoothness_; }
    double compat_residual() const noexcept { return compat_residual_; }
    double step() const noexcept { return numerators_.front().step(); }

private:
    std::vector<SampledSignal> numerators_;
    std::vector<SampledSignal> denominators_;
    LctParams params_;
    int smoothness_;
    double compat_residual_ = 0.0;
};

/// max_{m,n} || f_m *A delta_n - f_n *A delta_m ||_2.
double quotient_compat_residual(std::span<const SampledSignal> numerators, std::span<const SampledSignal> denominators,
                                const LctParams& p);

/// [(f *A delta_n) / delta_n] for n = 1..depth with members sampled at f's
/// step. The family is validated first (ConfigError when it is not a delta
/// sequence over 1..depth).
BoehmianRep embed(const SampledSignal& f, const DeltaFamily& family, std::size_t depth, const LctParams& p,
                  double tolerance = construction_tolerance);

/// [delta_n / delta_n], the point mass.
BoehmianRep dirac(const DeltaFamily& family, std::size_t depth, double step, const LctParams& p);

/// max_n || f_n *A psi_n - g_n *A phi_n ||_2. ShapeError on depth or
/// parameter mismatch.
double equivalent(const BoehmianRep& lhs, const BoehmianRep& rhs);

/// [(f_n *A psi_n + g_n *A phi_n) / (phi_n *A psi_n)]. When both operands
/// already share their denominators the equivalent [(f_n + g_n) / phi_n] is
/// returned instead.
BoehmianRep add(const BoehmianRep& lhs, const BoehmianRep& rhs);
BoehmianRep scalar_mul(cplx lambda, const BoehmianRep& b);
BoehmianRep subtract(const BoehmianRep& lhs, const BoehmianRep& rhs);
/// [(f_n *A g_n) / (phi_n *A psi_n)].
BoehmianRep boehm_convolve(const BoehmianRep& lhs, const BoehmianRep& rhs,
                           double tolerance = construction_tolerance);

/// Order-2 central finite-difference k-th derivative, zero-padded by k
/// samples on both sides.
SampledSignal finite_difference(const SampledSignal& f, int k);

/// How delta_n^(k) is formed from a chirped member delta_n.
enum class DerivativeRule {
    /// exp(-i a t^2/2b) (d/dt)^k [exp(i a t^2/2b) delta_n]. Commutes with the
    /// weighted convolution, so [delta_n^(k) / delta_n] is an exact quotient.
    covariant,
    /// (d/dt)^k delta_n. Only a quotient when a = 0; for a != 0 the
    /// compatibility residual stays O(1) in the mollifier width.
    literal,
};

/// Finite-difference derivative under `rule`.
SampledSignal delta_derivative(const SampledSignal& delta, int k, const LctParams& p, DerivativeRule rule);

/// F^(k) = F *A [delta_n^(k) / delta_n] with delta_n from `smooth_family`
/// sampled at B's step. k = 0 returns B. Throws SmoothnessError when k
/// exceeds the family's smoothness.
BoehmianRep boehm_derivative(const BoehmianRep& b, int k, const DeltaFamily& smooth_family,
                             DerivativeRule rule = DerivativeRule::covariant,
                             double tolerance = construction_tolerance);

/// exp(i k t) F: both sequences multiplied by exp(i k t), which preserves
/// the weighted convolution.
BoehmianRep modulate(const BoehmianRep& b, double k);

/// F(t + tau): numerators shifted, denominators multiplied by
/// exp(-i a tau t / b) so the quotient stays compatible.
BoehmianRep translate(const BoehmianRep& b, double tau);

struct TrendSummary {
    std::vector<double> values;
    bool strictly_decreasing = false;
    /// last / first (0 when both vanish).
    double contraction = 0.0;
    /// Strictly decreasing with contraction at most 1/2, or identically zero.
    bool converging = false;
};

TrendSummary summarize_trend(std::vector<double> values);

/// ||(F_n - F) *A chi_n||_2 for n = 1..size(seq), where chi_n are the
/// denominators of the difference quotient (the witnessing delta sequence).
TrendSummary delta_convergence_diag(std::span<const BoehmianRep> seq, const BoehmianRep& limit);

struct ConvergenceMatrix {
    /// residuals[i][j] = ||(F_{i+1} - F) *A chi_{k_j}||_2
    std::vector<std::vector<double>> residuals;
    std::vector<int> k_list;
    /// Trend along n for each fixed k.
    std::vector<TrendSummary> per_k;
    bool converging = false;
};

ConvergenceMatrix small_delta_convergence_diag(std::span<const BoehmianRep> seq, const BoehmianRep& limit,
                                               std::span<const int> k_list);

/// Entrywise transforms L(f_n) / L(delta_n) on a common u-grid.
struct SpectralBoehmianRep {
    std::vector<SampledSignal> numerators;
    std::vector<SampledSignal> denominators;
    LctParams params;
    /// max_{m,n} || L(f_n) (.) L(delta_m) - L(f_m) (.) L(delta_n) ||_2
    double cross_residual = 0.0;
};

/// Throws ToleranceError when the cross residual exceeds `tolerance`.
SpectralBoehmianRep boehm_lct(const BoehmianRep& b, const Grid& ugrid, double tolerance = spectral_tolerance);

/// max_n || P_n (.) S_n - R_n (.) Q_n ||_2 for P/Q and R/S.
double spectral_equivalent(const SpectralBoehmianRep& lhs, const SpectralBoehmianRep& rhs);

/// Entrywise (.) product of two spectral quotients.
SpectralBoehmianRep spectral_convolve(const SpectralBoehmianRep& lhs, const SpectralBoehmianRep& rhs);

struct LctLimit {
    /// L(f_N) on the requested grid.
    SampledSignal value;
    /// sup_u |L(f_{n+1}) - L(f_n)| for n = 1..N-1.
    std::vector<double> cauchy;
    /// False signals a non-decreasing Cauchy diagnostic (a warning, not an
    /// error: the deepest term is still returned).
    bool cauchy_decreasing = false;
};

LctLimit boehm_lct_limit(const BoehmianRep& b, const Grid& ugrid);

}  // namespace lctb
