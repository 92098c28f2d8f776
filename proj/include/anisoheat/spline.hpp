#pragma once

#include "anisoheat/mesh.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <memory>

namespace anisoheat {

/// Values of the k+1 uniform B-spline basis functions of degree k that are
/// nonzero on the knot cell containing the evaluation point, at local
/// coordinate t in [0,1). w[a] pairs with coefficient index cell - (k-1)/2 + a.
void uniform_bspline_basis(int degree, double t, double* w);

/// Tensor-product B-spline reconstruction of a nodal field. Coefficients are
/// stored with the y direction ghost-padded for periodic evaluation, so the
/// (k+1)x(k+1) coefficient window of any point is contiguous.
struct SplineInterpolant {
  int order = 5;  // polynomial degree, odd
  int p = 2;      // (order-1)/2
  int nx = 0, ny = 0;
  int mx = 0;  // coefficient count in x: nx + order - 1
  double hx = 0, hy = 0;
  Eigen::ArrayXXd coef;  // (mx, ny + order)

  /// Evaluate at (x, y); y is wrapped into [0,1), x must lie in [0,1]
  /// up to round-off.
  double eval(double x, double y) const;

  /// Cell index and local coordinate of an evaluation point.
  struct Pos {
    int ic, jc;
    double tx, ty;
  };
  Pos locate(double x, double y) const;

  /// Flat index of coefficient (ic - p + a, jc - p + b) in coef.data(),
  /// valid for a,b in [0, order].
  std::ptrdiff_t coef_index(int ic, int jc, int a, int b) const {
    return (ic + a) + static_cast<std::ptrdiff_t>(mx) * (jc + b);
  }
};

/// Factors the two 1D interpolation systems once per (mesh, order) and fits
/// interpolants repeatedly. x direction uses not-a-knot end conditions (the
/// k-1 interior knots nearest each boundary are inactive); y direction is
/// periodic.
class SplineFitter {
 public:
  SplineFitter(const Mesh2D& mesh, int order = 5);

  SplineInterpolant fit(const ScalarField2D& f) const;
  void fit_into(const ScalarField2D& f, SplineInterpolant& out) const;

  const Mesh2D& mesh() const { return mesh_; }
  int order() const { return order_; }

 private:
  Mesh2D mesh_;
  int order_, p_, mx_;
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lux_, luy_;
};

/// Spec-level conveniences.
SplineInterpolant build_interpolant(const ScalarField2D& f, int order = 5);
inline double eval(const SplineInterpolant& s, double x, double y) { return s.eval(x, y); }

}  // namespace anisoheat
