#include "anisoheat/magnetics.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>

namespace anisoheat {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

inline void clamp_x(double& x) {
  if (x < 0.0) {
    if (x < -1e-9) throw ConfinementError("field line left the domain at x=" + std::to_string(x));
    x = 0.0;
  } else if (x > 1.0) {
    if (x > 1.0 + 1e-9)
      throw ConfinementError("field line left the domain at x=" + std::to_string(x));
    x = 1.0;
  }
}
}  // namespace

double MagneticFieldModel::psi(double x, double y) const {
  return x + delta * std::sin(kTwoPi * x) * std::cos(kTwoPi * y);
}

MagneticFieldModel::Sample MagneticFieldModel::eval(double x, double y) const {
  const double sx = std::sin(kTwoPi * x), cx = std::cos(kTwoPi * x);
  const double sy = std::sin(kTwoPi * y), cy = std::cos(kTwoPi * y);
  Sample s;
  s.bx = kTwoPi * delta * sx * sy;
  s.by = 1.0 + kTwoPi * delta * cx * cy;
  s.bz = guide_field;
  s.mag = std::sqrt(s.bx * s.bx + s.by * s.by + s.bz * s.bz);
  return s;
}

double MagneticFieldModel::mag(double x, double y) const { return eval(x, y).mag; }

MagneticFieldModel::Gradients MagneticFieldModel::gradients(double x, double y) const {
  const double sx = std::sin(kTwoPi * x), cx = std::cos(kTwoPi * x);
  const double sy = std::sin(kTwoPi * y), cy = std::cos(kTwoPi * y);
  const double a = kTwoPi * kTwoPi * delta;
  Gradients g;
  g.dbx_dx = a * cx * sy;
  g.dbx_dy = a * sx * cy;
  g.dby_dx = -a * sx * cy;
  g.dby_dy = -a * cx * sy;
  return g;
}

MagneticFieldModel::TensorDivergence MagneticFieldModel::bb_divergence_terms(double x,
                                                                             double y) const {
  const Sample s = eval(x, y);
  const Gradients g = gradients(x, y);
  const double b2 = s.mag * s.mag;
  // d/dk (Ba Bb / B^2) = (dBa Bb + Ba dBb)/B^2 - 2 Ba Bb (Bx dBx + By dBy)/B^4
  auto term = [&](double ba, double bb, double dba, double dbb, double dbx, double dby) {
    const double dot = s.bx * dbx + s.by * dby;
    return (dba * bb + ba * dbb) / b2 - 2.0 * ba * bb * dot / (b2 * b2);
  };
  TensorDivergence t;
  t.dxx_dx = term(s.bx, s.bx, g.dbx_dx, g.dbx_dx, g.dbx_dx, g.dby_dx);
  t.dxy_dx = term(s.bx, s.by, g.dbx_dx, g.dby_dx, g.dbx_dx, g.dby_dx);
  t.dxy_dy = term(s.bx, s.by, g.dbx_dy, g.dby_dy, g.dbx_dy, g.dby_dy);
  t.dyy_dy = term(s.by, s.by, g.dby_dy, g.dby_dy, g.dbx_dy, g.dby_dy);
  return t;
}

namespace {

struct Velocity {
  double vx, vy, speed;  // speed = in-plane |v|
};

inline Velocity velocity(const MagneticFieldModel& m, TraceParam param, double x, double y) {
  const auto s = m.eval(x, y);
  const double denom = (param == TraceParam::Lambda) ? s.mag * s.mag : s.mag;
  Velocity v;
  v.vx = s.bx / denom;
  v.vy = s.by / denom;
  v.speed = std::sqrt(v.vx * v.vx + v.vy * v.vy);
  return v;
}

// Coarse adaptive walk in one direction. Returns the parameter offset at
// which either the requested span or the arc cap is reached, and folds the
// largest in-plane speed seen into max_speed.
double scout(const MagneticFieldModel& m, TraceParam param, double x, double y, double dir,
             double half_span, double arc_cap, double scout_disp, double& max_speed) {
  double par = 0.0, arc = 0.0;
  int guard = 0;
  while (par < half_span && guard++ < 2000000) {
    Velocity v = velocity(m, param, x, y);
    if (v.speed > max_speed) max_speed = v.speed;
    double dp = half_span - par;
    if (v.speed > 0.0) dp = std::min(dp, scout_disp / v.speed);
    // midpoint step is plenty for scouting
    const double xm = x + 0.5 * dir * dp * v.vx;
    const double ym = y + 0.5 * dir * dp * v.vy;
    double xmc = xm;
    clamp_x(xmc);
    Velocity vm = velocity(m, param, xmc, ym);
    if (vm.speed > max_speed) max_speed = vm.speed;
    x += dir * dp * vm.vx;
    y += dir * dp * vm.vy;
    clamp_x(x);
    par += dp;
    arc += dp * vm.speed;
    if (arc_cap > 0.0 && arc >= arc_cap) break;
  }
  return par;
}

inline void rk4_step(const MagneticFieldModel& m, TraceParam param, double h, double& x,
                     double& y) {
  const Velocity k1 = velocity(m, param, x, y);
  double x2 = x + 0.5 * h * k1.vx, y2 = y + 0.5 * h * k1.vy;
  clamp_x(x2);
  const Velocity k2 = velocity(m, param, x2, y2);
  double x3 = x + 0.5 * h * k2.vx, y3 = y + 0.5 * h * k2.vy;
  clamp_x(x3);
  const Velocity k3 = velocity(m, param, x3, y3);
  double x4 = x + h * k3.vx, y4 = y + h * k3.vy;
  clamp_x(x4);
  const Velocity k4 = velocity(m, param, x4, y4);
  x += h / 6.0 * (k1.vx + 2.0 * (k2.vx + k3.vx) + k4.vx);
  y += h / 6.0 * (k1.vy + 2.0 * (k2.vy + k3.vy) + k4.vy);
  clamp_x(x);
}

}  // namespace

FieldLineTrace trace_field_line(const MagneticFieldModel& model, double x0, double y0,
                                const TraceRequest& req) {
  if (model.mag(x0, y0) < model.b_min)
    throw NullPointError("field-line launch at a magnetic null (" + std::to_string(x0) + "," +
                         std::to_string(y0) + ")");
  if (req.half_span <= 0) throw std::invalid_argument("trace_field_line: half_span must be > 0");

  double max_speed = 0.0;
  const double scout_disp = 2.0 * req.max_displacement;
  const double span_p = scout(model, req.param, x0, y0, +1.0, req.half_span, req.arc_cap,
                              scout_disp, max_speed);
  const double span_m = scout(model, req.param, x0, y0, -1.0, req.half_span, req.arc_cap,
                              scout_disp, max_speed);
  const double span = std::min({req.half_span, span_p, span_m});

  double step = span / req.min_samples_per_side;
  if (max_speed > 0.0) step = std::min(step, req.max_displacement / max_speed);
  const int n_side = std::max(req.min_samples_per_side, static_cast<int>(std::ceil(span / step)));
  step = span / n_side;

  FieldLineTrace tr;
  tr.param = req.param;
  tr.x0 = x0;
  tr.y0 = y0;
  tr.step = step;
  tr.launch = n_side;
  const int n = 2 * n_side + 1;
  tr.offsets.resize(n);
  tr.xs.resize(n);
  tr.ys.resize(n);
  tr.bmag.resize(n);

  tr.offsets[n_side] = 0.0;
  tr.xs[n_side] = x0;
  tr.ys[n_side] = y0;
  tr.bmag[n_side] = model.mag(x0, y0);
  for (int dir = -1; dir <= 1; dir += 2) {
    double x = x0, y = y0;
    for (int k = 1; k <= n_side; ++k) {
      rk4_step(model, req.param, dir * step, x, y);
      const int idx = n_side + dir * k;
      tr.offsets[idx] = dir * k * step;
      tr.xs[idx] = x;
      tr.ys[idx] = y;
      tr.bmag[idx] = model.mag(x, y);
    }
  }
  return tr;
}

FieldLineTrace trace_lambda(const MagneticFieldModel& model, double x0, double y0,
                            double half_span, double step_hint) {
  TraceRequest req;
  req.param = TraceParam::Lambda;
  req.half_span = half_span;
  const auto s = model.eval(x0, y0);
  const double speed = std::hypot(s.bx, s.by) / (s.mag * s.mag);
  req.max_displacement = step_hint * std::max(speed, 1e-30);
  return trace_field_line(model, x0, y0, req);
}

FieldLineTrace trace_arclength(const MagneticFieldModel& model, double x0, double y0,
                               double half_span, double step_hint) {
  TraceRequest req;
  req.param = TraceParam::ArcLength;
  req.half_span = half_span;
  const auto s = model.eval(x0, y0);
  const double speed = std::hypot(s.bx, s.by) / s.mag;
  req.max_displacement = step_hint * std::max(speed, 1e-30);
  return trace_field_line(model, x0, y0, req);
}

void dump_trace_csv(const FieldLineTrace& tr, const MagneticFieldModel& model,
                    const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("dump_trace_csv: cannot open " + path);
  os << "param,x,y,bmag,psi\n" << std::setprecision(17);
  for (int k = 0; k < tr.size(); ++k) {
    const double ywrapped = tr.ys[k] - std::floor(tr.ys[k]);
    os << tr.offsets[k] << ',' << tr.xs[k] << ',' << tr.ys[k] << ',' << tr.bmag[k] << ','
       << model.psi(tr.xs[k], ywrapped) << '\n';
  }
  os << std::flush;
}

}  // namespace anisoheat
