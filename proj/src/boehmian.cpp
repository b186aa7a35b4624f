#include "lctb/boehmian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lctb/convolution.hpp"
#include "lctb/errors.hpp"

namespace lctb {

namespace {

void require_same_shape(const BoehmianRep& lhs, const BoehmianRep& rhs) {
    if (lhs.depth() != rhs.depth()) {
        throw ShapeError("Boehmian depths differ: " + std::to_string(lhs.depth()) + " vs " +
                         std::to_string(rhs.depth()));
    }
    if (!(lhs.params() == rhs.params())) {
        throw ShapeError("Boehmians use different LCT parameters");
    }
}

bool identical(const SampledSignal& a, const SampledSignal& b) {
    if (!same_grid(a.grid(), b.grid())) {
        return false;
    }
    const double scale = std::max(sup_norm(a), sup_norm(b));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > 1e-14 * scale) {
            return false;
        }
    }
    return true;
}

bool shared_denominators(const BoehmianRep& lhs, const BoehmianRep& rhs) {
    for (std::size_t n = 1; n <= lhs.depth(); ++n) {
        if (!identical(lhs.denominator(n), rhs.denominator(n))) {
            return false;
        }
    }
    return true;
}

std::vector<int> one_to(std::size_t depth) {
    std::vector<int> v(depth);
    std::iota(v.begin(), v.end(), 1);
    return v;
}

}  // namespace

double quotient_compat_residual(std::span<const SampledSignal> numerators, std::span<const SampledSignal> denominators,
                                const LctParams& p) {
    double worst = 0.0;
    for (std::size_t m = 0; m < numerators.size(); ++m) {
        for (std::size_t n = m + 1; n < numerators.size(); ++n) {
            const SampledSignal lhs = a_convolve(numerators[m], denominators[n], p);
            const SampledSignal rhs = a_convolve(numerators[n], denominators[m], p);
            worst = std::max(worst, l2_distance(lhs, rhs));
        }
    }
    return worst;
}

BoehmianRep::BoehmianRep(std::vector<SampledSignal> numerators, std::vector<SampledSignal> denominators,
                         LctParams params, int smoothness, double tolerance)
    : numerators_(std::move(numerators)),
      denominators_(std::move(denominators)),
      params_(params),
      smoothness_(smoothness) {
    if (numerators_.size() != denominators_.size()) {
        throw ShapeError("numerator and denominator sequences differ in length");
    }
    if (numerators_.size() < 2) {
        throw ShapeError("Boehmian truncation depth must be at least 2");
    }
    compat_residual_ = quotient_compat_residual(numerators_, denominators_, params_);
    if (compat_residual_ > tolerance) {
        std::ostringstream os;
        os << "quotient compatibility residual " << compat_residual_ << " exceeds " << tolerance;
        throw ToleranceError(os.str());
    }
}

BoehmianRep embed(const SampledSignal& f, const DeltaFamily& family, std::size_t depth, const LctParams& p,
                  double tolerance) {
    if (depth < 2) {
        throw ShapeError("Boehmian truncation depth must be at least 2");
    }
    const std::vector<int> indices = one_to(depth);
    const double eps = family.support_bound(static_cast<int>(depth)) * (1.0 + 1e-9);
    if (!validate_family(family, p, indices, eps)) {
        throw ConfigError("family '" + family.name() + "' is not a delta sequence on indices 1.." +
                          std::to_string(depth));
    }
    std::vector<SampledSignal> nums;
    std::vector<SampledSignal> dens;
    for (const int n : indices) {
        dens.push_back(family.member(n, f.step()));
        nums.push_back(a_convolve(f, dens.back(), p));
    }
    return BoehmianRep(std::move(nums), std::move(dens), p, family.smoothness(), tolerance);
}

BoehmianRep dirac(const DeltaFamily& family, std::size_t depth, double step, const LctParams& p) {
    std::vector<SampledSignal> dens;
    for (const int n : one_to(depth)) {
        dens.push_back(family.member(n, step));
    }
    std::vector<SampledSignal> nums = dens;
    return BoehmianRep(std::move(nums), std::move(dens), p, family.smoothness());
}

double equivalent(const BoehmianRep& lhs, const BoehmianRep& rhs) {
    require_same_shape(lhs, rhs);
    const LctParams& p = lhs.params();
    double worst = 0.0;
    for (std::size_t n = 1; n <= lhs.depth(); ++n) {
        worst = std::max(worst, l2_distance(a_convolve(lhs.numerator(n), rhs.denominator(n), p),
                                            a_convolve(rhs.numerator(n), lhs.denominator(n), p)));
    }
    return worst;
}

BoehmianRep add(const BoehmianRep& lhs, const BoehmianRep& rhs) {
    require_same_shape(lhs, rhs);
    const LctParams& p = lhs.params();
    std::vector<SampledSignal> nums;
    std::vector<SampledSignal> dens;
    if (shared_denominators(lhs, rhs)) {
        for (std::size_t n = 1; n <= lhs.depth(); ++n) {
            nums.push_back(lctb::add(lhs.numerator(n), rhs.numerator(n)));
        }
        dens = lhs.denominators();
    } else {
        for (std::size_t n = 1; n <= lhs.depth(); ++n) {
            nums.push_back(lctb::add(a_convolve(lhs.numerator(n), rhs.denominator(n), p),
                                     a_convolve(rhs.numerator(n), lhs.denominator(n), p)));
            dens.push_back(a_convolve(lhs.denominator(n), rhs.denominator(n), p));
        }
    }
    return BoehmianRep(std::move(nums), std::move(dens), p, std::min(lhs.smoothness(), rhs.smoothness()));
}

BoehmianRep scalar_mul(cplx lambda, const BoehmianRep& b) {
    std::vector<SampledSignal> nums;
    for (const auto& f : b.numerators()) {
        nums.push_back(scale(f, lambda));
    }
    return BoehmianRep(std::move(nums), b.denominators(), b.params(), b.smoothness());
}

BoehmianRep subtract(const BoehmianRep& lhs, const BoehmianRep& rhs) { return add(lhs, scalar_mul(-1.0, rhs)); }

BoehmianRep boehm_convolve(const BoehmianRep& lhs, const BoehmianRep& rhs, double tolerance) {
    require_same_shape(lhs, rhs);
    const LctParams& p = lhs.params();
    std::vector<SampledSignal> nums;
    std::vector<SampledSignal> dens;
    for (std::size_t n = 1; n <= lhs.depth(); ++n) {
        nums.push_back(a_convolve(lhs.numerator(n), rhs.numerator(n), p));
        dens.push_back(a_convolve(lhs.denominator(n), rhs.denominator(n), p));
    }
    return BoehmianRep(std::move(nums), std::move(dens), p, std::min(lhs.smoothness(), rhs.smoothness()),
                       tolerance);
}

SampledSignal finite_difference(const SampledSignal& f, int k) {
    if (k < 0) {
        throw ConfigError("derivative order must be non-negative");
    }
    if (k == 0) {
        return f;
    }
    const double h = f.step();
    const std::size_t pad = static_cast<std::size_t>(k);
    std::vector<cplx> v(f.size() + 2 * pad);
    std::copy(f.samples().begin(), f.samples().end(), v.begin() + static_cast<long>(pad));
    std::vector<cplx> w(v.size());
    auto at = [&](long i) { return (i < 0 || i >= static_cast<long>(v.size())) ? cplx{} : v[static_cast<std::size_t>(i)]; };
    for (int second = 0; second < k / 2; ++second) {
        for (long i = 0; i < static_cast<long>(v.size()); ++i) {
            w[static_cast<std::size_t>(i)] = (at(i + 1) - 2.0 * at(i) + at(i - 1)) / (h * h);
        }
        v.swap(w);
    }
    if (k % 2 == 1) {
        for (long i = 0; i < static_cast<long>(v.size()); ++i) {
            w[static_cast<std::size_t>(i)] = (at(i + 1) - at(i - 1)) / (2.0 * h);
        }
        v.swap(w);
    }
    return SampledSignal(f.start() - static_cast<double>(pad) * h, h, std::move(v));
}

SampledSignal delta_derivative(const SampledSignal& delta, int k, const LctParams& p, DerivativeRule rule) {
    if (rule == DerivativeRule::literal || p.a() == 0.0) {
        return finite_difference(delta, k);
    }
    const double alpha = 0.5 * p.a() / p.b();
    const SampledSignal stripped = lctb::modulate(delta, [alpha](double t) { return std::polar(1.0, alpha * t * t); });
    return lctb::modulate(finite_difference(stripped, k), [alpha](double t) { return std::polar(1.0, -alpha * t * t); });
}

BoehmianRep boehm_derivative(const BoehmianRep& b, int k, const DeltaFamily& smooth_family, DerivativeRule rule,
                             double tolerance) {
    if (k < 0) {
        throw ConfigError("derivative order must be non-negative");
    }
    if (k == 0) {
        return b;
    }
    if (k > smooth_family.smoothness()) {
        throw SmoothnessError("family '" + smooth_family.name() + "' supports derivatives up to order " +
                              std::to_string(smooth_family.smoothness()) + ", requested " + std::to_string(k));
    }
    std::vector<SampledSignal> nums;
    std::vector<SampledSignal> dens;
    for (std::size_t n = 1; n <= b.depth(); ++n) {
        const SampledSignal delta = smooth_family.member(static_cast<int>(n), b.step());
        dens.push_back(delta);
        nums.push_back(delta_derivative(delta, k, b.params(), rule));
    }
    const BoehmianRep derivative_of_dirac(std::move(nums), std::move(dens), b.params(), smooth_family.smoothness() - k,
                                          tolerance);
    return boehm_convolve(b, derivative_of_dirac, tolerance);
}

BoehmianRep modulate(const BoehmianRep& b, double k) {
    auto phase = [k](double t) { return std::polar(1.0, k * t); };
    std::vector<SampledSignal> nums;
    std::vector<SampledSignal> dens;
    for (std::size_t n = 1; n <= b.depth(); ++n) {
        nums.push_back(lctb::modulate(b.numerator(n), phase));
        dens.push_back(lctb::modulate(b.denominator(n), phase));
    }
    return BoehmianRep(std::move(nums), std::move(dens), b.params(), b.smoothness());
}

BoehmianRep translate(const BoehmianRep& b, double tau) {
    const double rate = -b.params().a() * tau / b.params().b();
    auto phase = [rate](double t) { return std::polar(1.0, rate * t); };
    std::vector<SampledSignal> nums;
    std::vector<SampledSignal> dens;
    for (std::size_t n = 1; n <= b.depth(); ++n) {
        const SampledSignal& f = b.numerator(n);
        nums.emplace_back(f.start() - tau, f.step(), std::vector<cplx>(f.samples().begin(), f.samples().end()));
        dens.push_back(lctb::modulate(b.denominator(n), phase));
    }
    return BoehmianRep(std::move(nums), std::move(dens), b.params(), b.smoothness());
}

TrendSummary summarize_trend(std::vector<double> values) {
    TrendSummary s;
    s.values = std::move(values);
    if (s.values.empty()) {
        return s;
    }
    constexpr double negligible = 1e-12;
    const double peak = *std::max_element(s.values.begin(), s.values.end());
    s.strictly_decreasing = s.values.size() >= 2;
    for (std::size_t i = 1; i < s.values.size(); ++i) {
        s.strictly_decreasing = s.strictly_decreasing && s.values[i] < s.values[i - 1];
    }
    const double first = s.values.front();
    s.contraction = first > 0.0 ? s.values.back() / first : 0.0;
    s.converging = peak <= negligible || (s.strictly_decreasing && s.contraction <= 0.5);
    return s;
}

TrendSummary delta_convergence_diag(std::span<const BoehmianRep> seq, const BoehmianRep& limit) {
    std::vector<double> residuals;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const std::size_t n = i + 1;
        if (seq[i].depth() < n || limit.depth() < n) {
            throw ShapeError("sequence element " + std::to_string(n) + " is shallower than its index");
        }
        residuals.push_back(l2_norm(subtract(seq[i], limit).numerator(n)));
    }
    return summarize_trend(std::move(residuals));
}

ConvergenceMatrix small_delta_convergence_diag(std::span<const BoehmianRep> seq, const BoehmianRep& limit,
                                               std::span<const int> k_list) {
    ConvergenceMatrix out;
    out.k_list.assign(k_list.begin(), k_list.end());
    for (const auto& f : seq) {
        const BoehmianRep diff = subtract(f, limit);
        std::vector<double> row;
        for (const int k : k_list) {
            if (k < 1 || static_cast<std::size_t>(k) > diff.depth()) {
                throw ShapeError("mollifier index " + std::to_string(k) + " outside the truncation depth");
            }
            row.push_back(l2_norm(diff.numerator(static_cast<std::size_t>(k))));
        }
        out.residuals.push_back(std::move(row));
    }
    out.converging = !k_list.empty();
    for (std::size_t j = 0; j < k_list.size(); ++j) {
        std::vector<double> column;
        for (const auto& row : out.residuals) {
            column.push_back(row[j]);
        }
        out.per_k.push_back(summarize_trend(std::move(column)));
        out.converging = out.converging && out.per_k.back().converging;
    }
    return out;
}

SpectralBoehmianRep boehm_lct(const BoehmianRep& b, const Grid& ugrid, double tolerance) {
    SpectralBoehmianRep s{{}, {}, b.params(), 0.0};
    for (std::size_t n = 1; n <= b.depth(); ++n) {
        s.numerators.push_back(lct_transform(b.numerator(n), b.params(), ugrid));
        s.denominators.push_back(lct_transform(b.denominator(n), b.params(), ugrid));
    }
    for (std::size_t m = 0; m < b.depth(); ++m) {
        for (std::size_t n = m + 1; n < b.depth(); ++n) {
            s.cross_residual = std::max(
                s.cross_residual, l2_distance(spectral_product(s.numerators[n], s.denominators[m], s.params),
                                              spectral_product(s.numerators[m], s.denominators[n], s.params)));
        }
    }
    if (s.cross_residual > tolerance) {
        std::ostringstream os;
        os << "transformed quotient cross residual " << s.cross_residual << " exceeds " << tolerance;
        throw ToleranceError(os.str());
    }
    return s;
}

double spectral_equivalent(const SpectralBoehmianRep& lhs, const SpectralBoehmianRep& rhs) {
    if (lhs.numerators.size() != rhs.numerators.size()) {
        throw ShapeError("spectral quotients differ in depth");
    }
    double worst = 0.0;
    for (std::size_t n = 0; n < lhs.numerators.size(); ++n) {
        worst = std::max(worst, l2_distance(spectral_product(lhs.numerators[n], rhs.denominators[n], lhs.params),
                                            spectral_product(rhs.numerators[n], lhs.denominators[n], lhs.params)));
    }
    return worst;
}

SpectralBoehmianRep spectral_convolve(const SpectralBoehmianRep& lhs, const SpectralBoehmianRep& rhs) {
    if (lhs.numerators.size() != rhs.numerators.size()) {
        throw ShapeError("spectral quotients differ in depth");
    }
    SpectralBoehmianRep s{{}, {}, lhs.params, 0.0};
    for (std::size_t n = 0; n < lhs.numerators.size(); ++n) {
        s.numerators.push_back(spectral_product(lhs.numerators[n], rhs.numerators[n], lhs.params));
        s.denominators.push_back(spectral_product(lhs.denominators[n], rhs.denominators[n], lhs.params));
    }
    return s;
}

LctLimit boehm_lct_limit(const BoehmianRep& b, const Grid& ugrid) {
    std::vector<SampledSignal> transforms;
    for (const auto& f : b.numerators()) {
        transforms.push_back(lct_transform(f, b.params(), ugrid));
    }
    std::vector<double> cauchy;
    for (std::size_t n = 0; n + 1 < transforms.size(); ++n) {
        cauchy.push_back(sup_distance(transforms[n + 1], transforms[n]));
    }
    const TrendSummary trend = summarize_trend(cauchy);
    return LctLimit{transforms.back(), std::move(cauchy), trend.strictly_decreasing || trend.converging};
}

}  // namespace lctb
