#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace lctb {

using cplx = std::complex<double>;

/// Uniform sampling of a real axis: start + i*step for i in [0, count).
class Grid {
public:
    Grid(double start, double step, std::size_t count);

    /// `count` points from `lo` to `hi` inclusive.
    static Grid spanning(double lo, double hi, std::size_t count);

    double start() const noexcept { return start_; }
    double step() const noexcept { return step_; }
    std::size_t count() const noexcept { return count_; }
    double at(std::size_t i) const noexcept { return start_ + step_ * static_cast<double>(i); }
    double last() const noexcept { return at(count_ - 1); }

    /// Same grid shifted by `offset` along the axis.
    Grid shifted(double offset) const { return Grid(start_ + offset, step_, count_); }

private:
    double start_;
    double step_;
    std::size_t count_;
};

/// A complex function sampled on a uniform grid; zero outside the grid.
class SampledSignal {
public:
    SampledSignal(double start, double step, std::vector<cplx> samples);
    SampledSignal(const Grid& grid, std::vector<cplx> samples);

    static SampledSignal zeros(const Grid& grid);
    static SampledSignal sample(const Grid& grid, const std::function<cplx(double)>& fn);

    double start() const noexcept { return start_; }
    double step() const noexcept { return step_; }
    std::size_t size() const noexcept { return samples_.size(); }
    double time(std::size_t i) const noexcept { return start_ + step_ * static_cast<double>(i); }
    double last_time() const noexcept { return time(samples_.size() - 1); }
    Grid grid() const { return Grid(start_, step_, samples_.size()); }

    std::span<const cplx> samples() const noexcept { return samples_; }
    const cplx& operator[](std::size_t i) const noexcept { return samples_[i]; }

    /// Linear interpolation; zero outside [start, last_time].
    cplx at(double t) const noexcept;

private:
    double start_;
    double step_;
    std::vector<cplx> samples_;
};

// Discrete norms are Riemann sums weighted by the grid step.
double l1_norm(const SampledSignal& f);
double l2_norm(const SampledSignal& f);
double sup_norm(const SampledSignal& f);

/// Largest sample magnitude at either end of the grid.
double edge_magnitude(const SampledSignal& f);
/// True when both end samples are below `threshold` in magnitude.
bool edges_negligible(const SampledSignal& f, double threshold = 1e-10);

bool steps_match(double step_a, double step_b, double tol = 1e-12);

/// Integer sample offset of b's grid relative to a's. Throws GridError when
/// the steps differ or the grids are not aligned on a common lattice.
long aligned_offset(const SampledSignal& a, const SampledSignal& b);

/// a + scale*b on the union of the two (aligned) grids.
SampledSignal axpy(const SampledSignal& a, cplx scale, const SampledSignal& b);
SampledSignal add(const SampledSignal& a, const SampledSignal& b);
SampledSignal subtract(const SampledSignal& a, const SampledSignal& b);
SampledSignal scale(const SampledSignal& f, cplx factor);

/// Pointwise product on an identical grid.
SampledSignal multiply(const SampledSignal& f, const SampledSignal& g);
/// Multiply every sample by fn(t).
SampledSignal modulate(const SampledSignal& f, const std::function<cplx(double)>& fn);

/// ||a - b||_2 with both treated as zero off-grid (aligned grids).
double l2_distance(const SampledSignal& a, const SampledSignal& b);
/// ||a - reference||_2 / ||reference||_2; absolute distance when the
/// reference has zero norm.
double relative_l2_error(const SampledSignal& a, const SampledSignal& reference);
/// sup |a - b| over samples of identical grids.
double sup_distance(const SampledSignal& a, const SampledSignal& b);

/// Samples whose time lies in [lo, hi] (tolerant at the ends).
SampledSignal restrict_to(const SampledSignal& f, double lo, double hi);

bool same_grid(const Grid& a, const Grid& b, double tol = 1e-12);

/// Composite trapezoidal integral of the samples.
cplx trapezoid(const SampledSignal& f);

}  // namespace lctb
