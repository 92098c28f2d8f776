#include "anisoheat/operators.hpp"

namespace anisoheat {

namespace {

// Fourth-order stencil tables. One-sided closures from standard difference
// tables; all verified by the operator order tests.
constexpr double kC1[5] = {1.0, -8.0, 0.0, 8.0, -1.0};              // centered d1, /12h
constexpr double kF1_0[5] = {-25.0, 48.0, -36.0, 16.0, -3.0};       // d1 at node 0, /12h
constexpr double kF1_1[5] = {-3.0, -10.0, 18.0, -6.0, 1.0};         // d1 at node 1, /12h
constexpr double kC2[5] = {-1.0, 16.0, -30.0, 16.0, -1.0};          // centered d2, /12h^2
constexpr double kF2_0[6] = {45.0, -154.0, 214.0, -156.0, 61.0, -10.0};  // d2 at node 0
constexpr double kF2_1[6] = {10.0, -15.0, -4.0, 14.0, -6.0, 1.0};        // d2 at node 1

inline int wrap(int j, int ny) {
  j %= ny;
  return j < 0 ? j + ny : j;
}

void check_size(const Mesh2D& m) {
  if (m.nx < 6 || m.ny < 5)
    throw std::invalid_argument("operators: mesh too small for fourth-order stencils");
}

}  // namespace

ScalarField2D d1x(const ScalarField2D& f) {
  check_size(f.mesh);
  const int nx = f.mesh.nx, ny = f.mesh.ny;
  const double s = 1.0 / (12.0 * f.mesh.hx);
  ScalarField2D out(f.mesh, f.role);
  for (int j = 0; j < ny; ++j) {
    const double* c = &f.values(0, j);
    double* o = &out.values(0, j);
    o[0] = s * (kF1_0[0] * c[0] + kF1_0[1] * c[1] + kF1_0[2] * c[2] + kF1_0[3] * c[3] +
                kF1_0[4] * c[4]);
    o[1] = s * (kF1_1[0] * c[0] + kF1_1[1] * c[1] + kF1_1[2] * c[2] + kF1_1[3] * c[3] +
                kF1_1[4] * c[4]);
    for (int i = 2; i < nx - 2; ++i)
      o[i] = s * (kC1[0] * c[i - 2] + kC1[1] * c[i - 1] + kC1[3] * c[i + 1] + kC1[4] * c[i + 2]);
    o[nx - 2] = -s * (kF1_1[0] * c[nx - 1] + kF1_1[1] * c[nx - 2] + kF1_1[2] * c[nx - 3] +
                      kF1_1[3] * c[nx - 4] + kF1_1[4] * c[nx - 5]);
    o[nx - 1] = -s * (kF1_0[0] * c[nx - 1] + kF1_0[1] * c[nx - 2] + kF1_0[2] * c[nx - 3] +
                      kF1_0[3] * c[nx - 4] + kF1_0[4] * c[nx - 5]);
  }
  return out;
}

ScalarField2D d1y(const ScalarField2D& f) {
  check_size(f.mesh);
  const int nx = f.mesh.nx, ny = f.mesh.ny;
  const double s = 1.0 / (12.0 * f.mesh.hy);
  ScalarField2D out(f.mesh, f.role);
  for (int j = 0; j < ny; ++j) {
    const int jm2 = wrap(j - 2, ny), jm1 = wrap(j - 1, ny);
    const int jp1 = wrap(j + 1, ny), jp2 = wrap(j + 2, ny);
    for (int i = 0; i < nx; ++i)
      out.values(i, j) = s * (kC1[0] * f.values(i, jm2) + kC1[1] * f.values(i, jm1) +
                              kC1[3] * f.values(i, jp1) + kC1[4] * f.values(i, jp2));
  }
  return out;
}

ScalarField2D d2x(const ScalarField2D& f) {
  check_size(f.mesh);
  const int nx = f.mesh.nx, ny = f.mesh.ny;
  const double s = 1.0 / (12.0 * f.mesh.hx * f.mesh.hx);
  ScalarField2D out(f.mesh, f.role);
  for (int j = 0; j < ny; ++j) {
    const double* c = &f.values(0, j);
    double* o = &out.values(0, j);
    o[0] = s * (kF2_0[0] * c[0] + kF2_0[1] * c[1] + kF2_0[2] * c[2] + kF2_0[3] * c[3] +
                kF2_0[4] * c[4] + kF2_0[5] * c[5]);
    o[1] = s * (kF2_1[0] * c[0] + kF2_1[1] * c[1] + kF2_1[2] * c[2] + kF2_1[3] * c[3] +
                kF2_1[4] * c[4] + kF2_1[5] * c[5]);
    for (int i = 2; i < nx - 2; ++i)
      o[i] = s * (kC2[0] * c[i - 2] + kC2[1] * c[i - 1] + kC2[2] * c[i] + kC2[1] * c[i + 1] +
                  kC2[0] * c[i + 2]);
    o[nx - 2] = s * (kF2_1[0] * c[nx - 1] + kF2_1[1] * c[nx - 2] + kF2_1[2] * c[nx - 3] +
                     kF2_1[3] * c[nx - 4] + kF2_1[4] * c[nx - 5] + kF2_1[5] * c[nx - 6]);
    o[nx - 1] = s * (kF2_0[0] * c[nx - 1] + kF2_0[1] * c[nx - 2] + kF2_0[2] * c[nx - 3] +
                     kF2_0[3] * c[nx - 4] + kF2_0[4] * c[nx - 5] + kF2_0[5] * c[nx - 6]);
  }
  return out;
}

ScalarField2D d2y(const ScalarField2D& f) {
  check_size(f.mesh);
  const int nx = f.mesh.nx, ny = f.mesh.ny;
  const double s = 1.0 / (12.0 * f.mesh.hy * f.mesh.hy);
  ScalarField2D out(f.mesh, f.role);
  for (int j = 0; j < ny; ++j) {
    const int jm2 = wrap(j - 2, ny), jm1 = wrap(j - 1, ny);
    const int jp1 = wrap(j + 1, ny), jp2 = wrap(j + 2, ny);
    for (int i = 0; i < nx; ++i)
      out.values(i, j) = s * (kC2[0] * f.values(i, jm2) + kC2[1] * f.values(i, jm1) +
                              kC2[2] * f.values(i, j) + kC2[1] * f.values(i, jp1) +
                              kC2[0] * f.values(i, jp2));
  }
  return out;
}

ScalarField2D dxy(const ScalarField2D& f) { return d1x(d1y(f)); }

ScalarField2D laplacian(const ScalarField2D& f) {
  ScalarField2D out = d2x(f);
  out.values += d2y(f).values;
  return out;
}

ScalarField2D par_laplacian(const ScalarField2D& f, const MagneticFieldModel& model) {
  const Mesh2D& m = f.mesh;
  const ScalarField2D fx = d1x(f), fy = d1y(f);
  const ScalarField2D fxx = d2x(f), fyy = d2y(f), fxy = dxy(f);
  ScalarField2D out(m, f.role);
  for (int j = 0; j < m.ny; ++j) {
    for (int i = 0; i < m.nx; ++i) {
      const auto s = model.eval(m.x(i), m.y(j));
      if (s.mag < model.b_min) {
        out(i, j) = 0.0;  // isotropic limit: no parallel part
        continue;
      }
      const double b2 = s.mag * s.mag;
      const double bxbx = s.bx * s.bx / b2, bxby = s.bx * s.by / b2, byby = s.by * s.by / b2;
      const auto t = model.bb_divergence_terms(m.x(i), m.y(j));
      out(i, j) = bxbx * fxx(i, j) + 2.0 * bxby * fxy(i, j) + byby * fyy(i, j) +
                  (t.dxx_dx + t.dxy_dy) * fx(i, j) + (t.dxy_dx + t.dyy_dy) * fy(i, j);
    }
  }
  return out;
}

ScalarField2D perp_laplacian(const ScalarField2D& f, const MagneticFieldModel& model) {
  ScalarField2D out = laplacian(f);
  out.values -= par_laplacian(f, model).values;
  return out;
}

}  // namespace anisoheat
