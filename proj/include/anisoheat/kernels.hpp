#pragma once

#include "anisoheat/magnetics.hpp"

#include <span>
#include <vector>

namespace anisoheat {

/// Complementary error function to better than 1e-15 relative accuracy:
/// alternating series below 1, Lentz continued fraction above.
double erfc_accurate(double x);
double erf_accurate(double x);

/// Heat kernel G(s,t) = exp(-s^2/4t)/sqrt(4 pi t), t > 0.
double kernel_G(double s, double t);

/// Time-integrated kernel
///   U(s,tau) = tau^{-1/2} [ exp(-s^2/4tau)/sqrt(pi) - |s|/(2 sqrt(tau)) *
///              erfc(|s|/(2 sqrt(tau))) ],
/// the per-timestep weight of a constant-in-time source; unit integral
/// over the real line.
double kernel_U(double s, double tau);

enum class KernelKind { Green, TimeIntegrated, Flat };

/// Smooth compactly supported window, all derivatives vanishing at |v| = 1.
/// Used to close field-line integrals whose kernel width exceeds the
/// integration window (long or winding field lines); the smooth cutoff makes
/// windowed line averages converge rapidly and kills integration-by-parts
/// boundary terms.
double bump_window(double v, double strength);

struct WeightOptions {
  bool taper = false;        // multiply the kernel by bump_window(offset/span)
  double taper_strength = 1.0;
  double moment_width_fraction = 0.5;  // use closed-form moments when the
                                       // cell width exceeds this * sqrt(tau)
};

/// Quadrature weights for sum_k w_k A(offset_k) ~ integral K(s) A(s) ds over
/// the span of the (sorted, zero-containing) offsets. Piecewise-cubic
/// reconstruction of A integrated against the exact kernel, per-interval
/// Gauss rule when the kernel is smooth on the cell and closed-form
/// erf/erfc moments when it is not. Weights are normalized to unit sum.
void kernel_weights(std::span<const double> offsets, double tau, KernelKind kind,
                    const WeightOptions& opt, std::span<double> weights);

/// Per-launch-point quadrature over a field-line trace.
struct KernelQuadrature {
  KernelKind kind = KernelKind::Green;
  double tau = 0.0;
  double half_width = 0.0;
  std::vector<double> offsets;
  std::vector<double> weights;  // unit sum
};

struct QuadratureOptions {
  double c_trunc = 10.0;  // kernel support is cut at c_trunc * sqrt(tau)
  bool allow_short = false;  // short traces switch on the taper instead of failing
  double taper_strength = 1.0;
};

/// Build the quadrature for a trace; fails if the trace does not span the
/// truncated kernel support (unless allow_short requests the windowed form).
KernelQuadrature build_quadrature(const FieldLineTrace& trace, double tau, KernelKind kind,
                                  const QuadratureOptions& opt = {});

namespace detail {
// Lower moments used by the closed-form path, exposed for oracle tests.
// E_m(u) = int_0^u t^m exp(-t^2) dt, I_n(u) = int_0^u t^n ierfc(t) dt.
double gauss_moment(int m, double u);
double ierfc_moment(int n, double u);
}  // namespace detail

}  // namespace anisoheat
