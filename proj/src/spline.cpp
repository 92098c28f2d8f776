#include "anisoheat/spline.hpp"

#include <cmath>
#include <vector>

namespace anisoheat {

void uniform_bspline_basis(int degree, double t, double* w) {
  // Cox-de Boor on integer knots; all knot differences are 1 so the
  // denominators reduce to the degree.
  w[0] = 1.0;
  for (int j = 1; j <= degree; ++j) {
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double temp = w[r] / j;
      w[r] = saved + (r + 1 - t) * temp;
      saved = (t - 1 + j - r) * temp;
    }
    w[j] = saved;
  }
}

SplineInterpolant::Pos SplineInterpolant::locate(double x, double y) const {
  if (x < -1e-9 || x > 1.0 + 1e-9)
    throw std::domain_error("SplineInterpolant: x=" + std::to_string(x) + " outside [0,1]");
  x = std::min(std::max(x, 0.0), 1.0);
  double yw = y - std::floor(y);
  if (yw >= 1.0) yw = 0.0;
  Pos q;
  const double xh = x / hx;
  q.ic = std::min(static_cast<int>(xh), nx - 2);
  q.tx = xh - q.ic;
  const double yh = yw / hy;
  q.jc = std::min(static_cast<int>(yh), ny - 1);
  q.ty = yh - q.jc;
  return q;
}

double SplineInterpolant::eval(double x, double y) const {
  const Pos q = locate(x, y);
  double wx[8], wy[8];
  uniform_bspline_basis(order, q.tx, wx);
  uniform_bspline_basis(order, q.ty, wy);
  double acc = 0.0;
  for (int b = 0; b <= order; ++b) {
    const double* col = coef.data() + coef_index(q.ic, q.jc, 0, b);
    double ax = 0.0;
    for (int a = 0; a <= order; ++a) ax += wx[a] * col[a];
    acc += wy[b] * ax;
  }
  return acc;
}

namespace {

long binom(int n, int r) {
  long v = 1;
  for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

}  // namespace

SplineFitter::SplineFitter(const Mesh2D& mesh, int order)
    : mesh_(mesh), order_(order), p_((order - 1) / 2), mx_(mesh.nx + order - 1) {
  if (order < 3 || order > 7 || order % 2 == 0)
    throw std::invalid_argument("SplineFitter: order must be odd and within [3,7]");
  if (mesh.nx < order + 2 || mesh.ny < order + 2)
    throw std::invalid_argument("SplineFitter: mesh too small for the requested order");

  const int k = order_, p = p_, nx = mesh_.nx, ny = mesh_.ny;

  // Nodal values of the cardinal B-spline of degree k at integer offsets.
  double nodal[8];
  uniform_bspline_basis(k, 0.0, nodal);  // nodal[a] = B_k(p - a + 0) pairing offsets a-p

  using Trip = Eigen::Triplet<double>;
  {
    std::vector<Trip> trips;
    // interpolation rows: sum_d B_k(d) c_{i+d} = f_i, coefficient column = m + p
    for (int i = 0; i < nx; ++i)
      for (int a = 0; a <= k; ++a)
        if (nodal[a] != 0.0) trips.emplace_back(i, i + a, nodal[a]);
    // not-a-knot rows: vanishing jump of the k-th derivative at the knots
    // nearest each boundary, i.e. zero (k+1)-th difference of coefficients.
    int row = nx;
    const int half = (k + 1) / 2;
    auto add_nak = [&](int q) {
      for (int r = 0; r <= k + 1; ++r) {
        const double c = ((r % 2) ? -1.0 : 1.0) * static_cast<double>(binom(k + 1, r));
        trips.emplace_back(row, q - half + r + p, c);
      }
      ++row;
    };
    for (int q = 1; q <= p; ++q) add_nak(q);
    for (int q = nx - 1 - p; q <= nx - 2; ++q) add_nak(q);

    Eigen::SparseMatrix<double> ax(mx_, mx_);
    ax.setFromTriplets(trips.begin(), trips.end());
    lux_.compute(ax);
    if (lux_.info() != Eigen::Success)
      throw std::runtime_error("SplineFitter: x-direction factorization failed");
  }
  {
    std::vector<Trip> trips;
    for (int j = 0; j < ny; ++j)
      for (int a = 0; a <= k; ++a) {
        int col = (j + a - p) % ny;
        if (col < 0) col += ny;
        trips.emplace_back(j, col, nodal[a]);
      }
    Eigen::SparseMatrix<double> ay(ny, ny);
    ay.setFromTriplets(trips.begin(), trips.end());
    luy_.compute(ay);
    if (luy_.info() != Eigen::Success)
      throw std::runtime_error("SplineFitter: y-direction factorization failed");
  }
}

void SplineFitter::fit_into(const ScalarField2D& f, SplineInterpolant& out) const {
  if (!f.mesh.same_as(mesh_)) throw std::invalid_argument("SplineFitter: mesh mismatch");
  const int k = order_, p = p_, nx = mesh_.nx, ny = mesh_.ny;

  // x pass: one banded solve per y row
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(mx_, ny);
  rhs.topRows(nx) = f.values.matrix();
  Eigen::MatrixXd dx = lux_.solve(rhs);

  // y pass: periodic solve per x coefficient, via the transposed layout
  Eigen::MatrixXd cy = luy_.solve(dx.transpose());  // (ny, mx)

  out.order = k;
  out.p = p;
  out.nx = nx;
  out.ny = ny;
  out.mx = mx_;
  out.hx = mesh_.hx;
  out.hy = mesh_.hy;
  out.coef.resize(mx_, ny + k);
  for (int g = 0; g < ny + k; ++g) {
    int j = (g - p) % ny;
    if (j < 0) j += ny;
    out.coef.col(g) = cy.row(j).transpose();
  }
}

SplineInterpolant SplineFitter::fit(const ScalarField2D& f) const {
  SplineInterpolant s;
  fit_into(f, s);
  return s;
}

SplineInterpolant build_interpolant(const ScalarField2D& f, int order) {
  return SplineFitter(f.mesh, order).fit(f);
}

}  // namespace anisoheat
