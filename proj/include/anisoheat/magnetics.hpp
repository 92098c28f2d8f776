#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace anisoheat {

struct NullPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfinementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// In-plane flux-function magnetic field plus a constant guide field:
///   psi = x + delta*sin(2 pi x)*cos(2 pi y)
///   B = z x grad(psi) + B0 z
/// Bx = -d(psi)/dy and By = d(psi)/dx, so the in-plane field is
/// divergence-free and Bx vanishes identically on x = 0 and x = 1 (field
/// lines never leave the unit square).
struct MagneticFieldModel {
  double delta = 0.1;
  double guide_field = 0.0;  // B0
  double b_min = 1e-10;      // below this |B| a point counts as a null

  struct Sample {
    double bx, by, bz, mag;
  };

  double psi(double x, double y) const;
  Sample eval(double x, double y) const;
  double mag(double x, double y) const;

  /// Analytic partial derivatives of the in-plane components.
  struct Gradients {
    double dbx_dx, dbx_dy, dby_dx, dby_dy;
  };
  Gradients gradients(double x, double y) const;

  /// d/dk (B_a B_b / B^2) for in-plane a,b,k; used by the perpendicular
  /// Laplacian and the manufactured source. Undefined at nulls.
  struct TensorDivergence {
    double dxx_dx;  // d/dx (Bx Bx / B^2)
    double dxy_dx;  // d/dx (Bx By / B^2)
    double dxy_dy;  // d/dy (Bx By / B^2)
    double dyy_dy;  // d/dy (By By / B^2)
  };
  TensorDivergence bb_divergence_terms(double x, double y) const;
};

enum class TraceParam { Lambda, ArcLength };

/// Field-line trajectory sampled at uniform parameter steps, launch point at
/// index `launch`. The y coordinate is left unwrapped; wrap only when
/// interpolating. Parameter values are offsets from the launch point.
struct FieldLineTrace {
  TraceParam param = TraceParam::Lambda;
  double x0 = 0, y0 = 0;
  double step = 0;  // uniform spacing
  int launch = 0;   // index of the launch sample
  std::vector<double> offsets;  // offsets[k] = (k - launch) * step
  std::vector<double> xs, ys, bmag;

  int size() const { return static_cast<int>(xs.size()); }
  double half_span() const { return offsets.empty() ? 0.0 : -offsets.front(); }
};

struct TraceRequest {
  TraceParam param = TraceParam::Lambda;
  double half_span = 1.0;     // desired parameter extent per side
  double arc_cap = 0.0;       // per-side in-plane arc-length cap, 0 = none
  double max_displacement = 4e-3;  // in-plane displacement bound per step
  int min_samples_per_side = 16;
};

/// Bidirectional RK4 integration of the field-line ODE:
///   Lambda:    dx/dl = Bx/B^2, dy/dl = By/B^2   (dl/ds = B)
///   ArcLength: dx/ds = Bx/B,   dy/ds = By/B
/// A scouting pass determines the fastest in-plane speed over the window so
/// a single uniform step honors the displacement bound; the span is
/// symmetrized to the shorter of the two sides when the arc cap engages.
FieldLineTrace trace_field_line(const MagneticFieldModel& model, double x0, double y0,
                                const TraceRequest& req);

/// Convenience wrappers matching the two parameterizations.
FieldLineTrace trace_lambda(const MagneticFieldModel& model, double x0, double y0,
                            double half_span, double step_hint);
FieldLineTrace trace_arclength(const MagneticFieldModel& model, double x0, double y0,
                               double half_span, double step_hint);

void dump_trace_csv(const FieldLineTrace& tr, const MagneticFieldModel& model,
                    const std::string& path);

}  // namespace anisoheat
