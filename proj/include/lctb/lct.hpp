#pragma once

#include <string>

#include "lctb/signal.hpp"

namespace lctb {

/// Real unimodular parameter matrix (a b; c d) of a linear canonical
/// transform. Only constructible through make_params, so every instance
/// satisfies |ad - bc - 1| <= 1e-12 with finite entries.
class LctParams {
public:
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }
    double d() const noexcept { return d_; }

    /// Selects the degenerate (pure chirp-and-scale) branch.
    bool b_is_zero() const noexcept { return b_ == 0.0; }

    double determinant() const noexcept { return a_ * d_ - b_ * c_; }

    std::string to_string() const;

    friend bool operator==(const LctParams&, const LctParams&) = default;

private:
    LctParams(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {}
    friend LctParams make_params(double a, double b, double c, double d);

    double a_;
    double b_;
    double c_;
    double d_;
};

inline constexpr double determinant_tolerance = 1e-12;

/// Throws NonFiniteError or DeterminantError.
LctParams make_params(double a, double b, double c, double d);

/// (d, -b, -c, a).
LctParams invert_params(const LctParams& p);

enum class SpecialKind { fourier, frft, identity };

/// fourier -> (0,1,-1,0); identity -> (1,0,0,1);
/// frft(theta) -> (cos, sin, -sin, cos) with round-off below 1e-15 snapped
/// so that theta = 0, pi/2, ... land exactly on the special matrices.
LctParams special_params(SpecialKind kind, double theta = 0.0);

/// Principal sqrt(1/(2*pi*i*b)), the kernel prefactor. Requires b != 0.
cplx kernel_prefactor(const LctParams& p);

/// Principal sqrt(2*pi*i*b), the scale of the product-side convolution
/// identity. Requires b != 0.
cplx product_prefactor(const LctParams& p);

/// Transform of f evaluated on `ugrid`.
///
/// b != 0: trapezoidal quadrature of
///   sqrt(1/(2 pi i b)) * int exp(i/2 [a/b t^2 - 2/b u t + d/b u^2]) f(t) dt
/// over f's grid (f is zero off-grid), cost O(size(f) * count(ugrid)).
///
/// b == 0: sqrt(d) exp(i c d u^2 / 2) f(d u) with f linearly interpolated.
/// Throws BranchError when d <= 0 and DomainError when some d*u leaves f's
/// grid.
SampledSignal lct_transform(const SampledSignal& f, const LctParams& p, const Grid& ugrid);

/// lct_transform with the inverse parameters.
SampledSignal lct_inverse(const SampledSignal& F, const LctParams& p, const Grid& tgrid);

}  // namespace lctb
