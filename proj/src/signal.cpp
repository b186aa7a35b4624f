#include "lctb/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lctb/errors.hpp"

namespace lctb {

Grid::Grid(double start, double step, std::size_t count) : start_(start), step_(step), count_(count) {
    if (!std::isfinite(start) || !std::isfinite(step)) {
        throw NonFiniteError("grid start/step must be finite");
    }
    if (!(step > 0.0)) {
        throw GridError("grid step must be positive, got " + std::to_string(step));
    }
    if (count < 2) {
        throw GridError("grid needs at least 2 points, got " + std::to_string(count));
    }
}

Grid Grid::spanning(double lo, double hi, std::size_t count) {
    if (count < 2 || !(hi > lo)) {
        throw GridError("invalid span for grid");
    }
    return Grid(lo, (hi - lo) / static_cast<double>(count - 1), count);
}

SampledSignal::SampledSignal(double start, double step, std::vector<cplx> samples)
    : start_(start), step_(step), samples_(std::move(samples)) {
    if (!std::isfinite(start) || !std::isfinite(step)) {
        throw NonFiniteError("signal start/step must be finite");
    }
    if (!(step > 0.0)) {
        throw GridError("signal step must be positive");
    }
    if (samples_.empty()) {
        throw GridError("signal must hold at least one sample");
    }
    for (const auto& z : samples_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw NonFiniteError("signal contains a non-finite sample");
        }
    }
}

SampledSignal::SampledSignal(const Grid& grid, std::vector<cplx> samples)
    : SampledSignal(grid.start(), grid.step(), std::move(samples)) {
    if (samples_.size() != grid.count()) {
        throw GridError("sample count does not match grid");
    }
}

SampledSignal SampledSignal::zeros(const Grid& grid) {
    return SampledSignal(grid, std::vector<cplx>(grid.count()));
}

SampledSignal SampledSignal::sample(const Grid& grid, const std::function<cplx(double)>& fn) {
    std::vector<cplx> v(grid.count());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = fn(grid.at(i));
    }
    return SampledSignal(grid, std::move(v));
}

cplx SampledSignal::at(double t) const noexcept {
    const double x = (t - start_) / step_;
    const double n = static_cast<double>(samples_.size() - 1);
    constexpr double snap = 1e-9;
    if (x < -snap || x > n + snap) {
        return {0.0, 0.0};
    }
    if (x <= 0.0) {
        return samples_.front();
    }
    if (x >= n) {
        return samples_.back();
    }
    const auto i = static_cast<std::size_t>(x);
    const double w = x - static_cast<double>(i);
    if (w < snap) {
        return samples_[i];
    }
    return samples_[i] * (1.0 - w) + samples_[i + 1] * w;
}

double l1_norm(const SampledSignal& f) {
    double s = 0.0;
    for (const auto& z : f.samples()) {
        s += std::abs(z);
    }
    return s * f.step();
}

double l2_norm(const SampledSignal& f) {
    double s = 0.0;
    for (const auto& z : f.samples()) {
        s += std::norm(z);
    }
    return std::sqrt(s * f.step());
}

double sup_norm(const SampledSignal& f) {
    double m = 0.0;
    for (const auto& z : f.samples()) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double edge_magnitude(const SampledSignal& f) {
    return std::max(std::abs(f.samples().front()), std::abs(f.samples().back()));
}

bool edges_negligible(const SampledSignal& f, double threshold) { return edge_magnitude(f) < threshold; }

bool steps_match(double step_a, double step_b, double tol) {
    return std::abs(step_a - step_b) <= tol * std::max(1.0, std::max(step_a, step_b));
}

long aligned_offset(const SampledSignal& a, const SampledSignal& b) {
    if (!steps_match(a.step(), b.step())) {
        throw GridError("grid steps differ: " + std::to_string(a.step()) + " vs " + std::to_string(b.step()));
    }
    const double x = (b.start() - a.start()) / a.step();
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-6) {
        throw GridError("grids are not aligned on a common lattice");
    }
    return static_cast<long>(r);
}

SampledSignal axpy(const SampledSignal& a, cplx factor, const SampledSignal& b) {
    const long off = aligned_offset(a, b);
    const long lo = std::min(0L, off);
    const long hi = std::max(static_cast<long>(a.size()), off + static_cast<long>(b.size()));
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo));
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[static_cast<std::size_t>(static_cast<long>(i) - lo)] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[static_cast<std::size_t>(static_cast<long>(i) + off - lo)] += factor * b[i];
    }
    return SampledSignal(a.start() + static_cast<double>(lo) * a.step(), a.step(), std::move(out));
}

SampledSignal add(const SampledSignal& a, const SampledSignal& b) { return axpy(a, 1.0, b); }

SampledSignal subtract(const SampledSignal& a, const SampledSignal& b) { return axpy(a, -1.0, b); }

SampledSignal scale(const SampledSignal& f, cplx factor) {
    std::vector<cplx> v(f.samples().begin(), f.samples().end());
    for (auto& z : v) {
        z *= factor;
    }
    return SampledSignal(f.start(), f.step(), std::move(v));
}

bool same_grid(const Grid& a, const Grid& b, double tol) {
    return a.count() == b.count() && steps_match(a.step(), b.step(), tol) &&
           std::abs(a.start() - b.start()) <= tol * std::max(1.0, std::abs(a.start())) + 1e-9 * a.step();
}

SampledSignal multiply(const SampledSignal& f, const SampledSignal& g) {
    if (!same_grid(f.grid(), g.grid())) {
        throw GridError("pointwise product needs identical grids");
    }
    std::vector<cplx> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = f[i] * g[i];
    }
    return SampledSignal(f.start(), f.step(), std::move(v));
}

SampledSignal modulate(const SampledSignal& f, const std::function<cplx(double)>& fn) {
    std::vector<cplx> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = f[i] * fn(f.time(i));
    }
    return SampledSignal(f.start(), f.step(), std::move(v));
}

double l2_distance(const SampledSignal& a, const SampledSignal& b) { return l2_norm(subtract(a, b)); }

double relative_l2_error(const SampledSignal& a, const SampledSignal& reference) {
    const double d = l2_distance(a, reference);
    const double r = l2_norm(reference);
    return r > 0.0 ? d / r : d;
}

double sup_distance(const SampledSignal& a, const SampledSignal& b) {
    if (!same_grid(a.grid(), b.grid())) {
        throw GridError("sup distance needs identical grids");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

SampledSignal restrict_to(const SampledSignal& f, double lo, double hi) {
    const double tol = 1e-9 * f.step();
    std::vector<cplx> v;
    double start = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double t = f.time(i);
        if (t >= lo - tol && t <= hi + tol) {
            if (v.empty()) {
                start = t;
            }
            v.push_back(f[i]);
        }
    }
    if (v.empty()) {
        throw GridError("window does not intersect the signal grid");
    }
    return SampledSignal(start, f.step(), std::move(v));
}

cplx trapezoid(const SampledSignal& f) {
    if (f.size() < 2) {
        return {0.0, 0.0};
    }
    cplx s = 0.5 * (f.samples().front() + f.samples().back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
        s += f[i];
    }
    return s * f.step();
}

}  // namespace lctb
