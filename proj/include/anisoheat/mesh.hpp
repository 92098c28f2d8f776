#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace anisoheat {

/// Structured node-centered mesh on the unit square. The x direction carries
/// Dirichlet boundaries and includes both boundary node columns, so
/// hx = 1/(nx-1). The y direction is periodic with nodes at j*hy, hy = 1/ny
/// (node ny would alias node 0 and is not stored).
struct Mesh2D {
  int nx = 0;
  int ny = 0;
  double hx = 0.0;
  double hy = 0.0;

  Mesh2D() = default;
  Mesh2D(int nx_, int ny_);

  double x(int i) const { return i * hx; }
  double y(int j) const { return j * hy; }
  std::ptrdiff_t size() const { return static_cast<std::ptrdiff_t>(nx) * ny; }
  std::ptrdiff_t index(int i, int j) const { return i + static_cast<std::ptrdiff_t>(nx) * j; }

  /// Node volume for norms: full cells everywhere except half cells on the
  /// two Dirichlet columns, so the weights sum to exactly 1.
  double cell_weight(int i, int /*j*/) const {
    const double wx = (i == 0 || i == nx - 1) ? 0.5 * hx : hx;
    return wx * hy;
  }

  bool same_as(const Mesh2D& o) const { return nx == o.nx && ny == o.ny; }
};

enum class FieldRole { Temperature, Source, Beta, Error, Generic };

/// Scalar values collocated on mesh nodes, x index fastest.
struct ScalarField2D {
  Mesh2D mesh;
  FieldRole role = FieldRole::Generic;
  Eigen::ArrayXXd values;  // (nx, ny), column j holds the y = j*hy row

  ScalarField2D() = default;
  explicit ScalarField2D(const Mesh2D& m, FieldRole r = FieldRole::Generic)
      : mesh(m), role(r), values(Eigen::ArrayXXd::Zero(m.nx, m.ny)) {}

  double& operator()(int i, int j) { return values(i, j); }
  double operator()(int i, int j) const { return values(i, j); }

  Eigen::Map<Eigen::VectorXd> flat() { return {values.data(), values.size()}; }
  Eigen::Map<const Eigen::VectorXd> flat() const { return {values.data(), values.size()}; }

  /// Fill from a function of the node coordinates.
  template <class F>
  void fill(F&& f) {
    for (int j = 0; j < mesh.ny; ++j)
      for (int i = 0; i < mesh.nx; ++i) values(i, j) = f(mesh.x(i), mesh.y(j));
  }

  bool all_finite() const { return values.allFinite(); }
};

/// Volume-weighted squared l2 difference and its square root.
struct FieldError {
  double weighted_sq = 0.0;  // sum_ij dx_i dy_j (f - ref)^2
  double root = 0.0;         // sqrt of the above
};

/// Weighted l2 error between two fields on the same mesh. Compensated
/// summation keeps the result deterministic and accurate.
FieldError l2_error(const ScalarField2D& f, const ScalarField2D& ref);

double max_abs_diff(const ScalarField2D& f, const ScalarField2D& ref);

/// Plain-text field dump: header "nx ny hx hy", then one value per line with
/// x fastest, 17 significant digits.
void dump_field(const ScalarField2D& f, std::ostream& os);
void dump_field(const ScalarField2D& f, const std::string& path);
ScalarField2D load_field(std::istream& is);
ScalarField2D load_field(const std::string& path);

}  // namespace anisoheat
