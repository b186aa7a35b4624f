#pragma once

#include "lctb/lct.hpp"
#include "lctb/signal.hpp"

namespace lctb {

/// Convolution weight exp(i tau (tau - t) a / b). Unit modulus.
/// Throws BranchError when b = 0.
cplx weight(double t, double tau, const LctParams& p);

/// Weighted convolution h(t) = int f(tau) g(t - tau) W(t, tau) dtau.
///
/// Output grid: start f.start + g.start, the common step, and
/// size(f) + size(g) - 1 points, so t - tau always lands on g's grid.
/// Each output sample is the trapezoidal rule over the interval where both
/// factors are defined; the rule is symmetric under swapping f and g.
/// Throws BranchError (b = 0) or GridError (steps differ by more than 1e-12).
SampledSignal a_convolve(const SampledSignal& f, const SampledSignal& g, const LctParams& p);

/// sqrt(2 pi i b) exp(-i d u^2 / (2b)) F(u) G(u), both on the same u-grid.
SampledSignal convolution_theorem_rhs(const SampledSignal& F, const SampledSignal& G, const LctParams& p);

/// The product used on the transform side of Boehmian quotients. Equal to
/// convolution_theorem_rhs, which makes the transform map weighted
/// convolution onto this product.
SampledSignal spectral_product(const SampledSignal& F, const SampledSignal& G, const LctParams& p);

/// Neutral element of spectral_product on `ugrid`: the transform of a unit
/// point mass, sqrt(1/(2 pi i b)) exp(i d u^2 / (2b)).
SampledSignal spectral_unit(const LctParams& p, const Grid& ugrid);

}  // namespace lctb
