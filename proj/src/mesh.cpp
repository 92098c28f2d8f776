#include "anisoheat/mesh.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace anisoheat {

Mesh2D::Mesh2D(int nx_, int ny_) : nx(nx_), ny(ny_) {
  if (nx < 8 || ny < 8)
    throw std::invalid_argument("Mesh2D: nx and ny must be at least 8, got " +
                                std::to_string(nx) + "x" + std::to_string(ny));
  hx = 1.0 / (nx - 1);
  hy = 1.0 / ny;
}

FieldError l2_error(const ScalarField2D& f, const ScalarField2D& ref) {
  if (!f.mesh.same_as(ref.mesh)) throw std::invalid_argument("l2_error: mesh mismatch");
  const Mesh2D& m = f.mesh;
  double sum = 0.0, comp = 0.0;  // Neumaier compensation
  for (int j = 0; j < m.ny; ++j) {
    for (int i = 0; i < m.nx; ++i) {
      const double d = f(i, j) - ref(i, j);
      const double term = m.cell_weight(i, j) * d * d;
      const double t = sum + term;
      comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
      sum = t;
    }
  }
  FieldError e;
  e.weighted_sq = sum + comp;
  e.root = std::sqrt(e.weighted_sq);
  return e;
}

double max_abs_diff(const ScalarField2D& f, const ScalarField2D& ref) {
  if (!f.mesh.same_as(ref.mesh)) throw std::invalid_argument("max_abs_diff: mesh mismatch");
  return (f.values - ref.values).abs().maxCoeff();
}

void dump_field(const ScalarField2D& f, std::ostream& os) {
  os << f.mesh.nx << ' ' << f.mesh.ny << ' ' << std::setprecision(17) << f.mesh.hx << ' '
     << f.mesh.hy << '\n';
  os << std::setprecision(17);
  for (int j = 0; j < f.mesh.ny; ++j)
    for (int i = 0; i < f.mesh.nx; ++i) os << f(i, j) << '\n';
}

void dump_field(const ScalarField2D& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("dump_field: cannot open " + path);
  dump_field(f, os);
}

ScalarField2D load_field(std::istream& is) {
  int nx = 0, ny = 0;
  double hx = 0, hy = 0;
  if (!(is >> nx >> ny >> hx >> hy)) throw std::runtime_error("load_field: bad header");
  Mesh2D m(nx, ny);
  ScalarField2D f(m);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (!(is >> f(i, j))) throw std::runtime_error("load_field: truncated data");
  return f;
}

ScalarField2D load_field(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("load_field: cannot open " + path);
  return load_field(is);
}

}  // namespace anisoheat
