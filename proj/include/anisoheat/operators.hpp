#pragma once

#include "anisoheat/magnetics.hpp"
#include "anisoheat/mesh.hpp"

namespace anisoheat {

/// Fourth-order finite-difference first and second derivatives on the mesh.
/// x direction: centered stencils in the interior, one-sided closures of the
/// same order on the two Dirichlet columns and their neighbors. y direction:
/// centered stencils with periodic wrap.
ScalarField2D d1x(const ScalarField2D& f);
ScalarField2D d1y(const ScalarField2D& f);
ScalarField2D d2x(const ScalarField2D& f);
ScalarField2D d2y(const ScalarField2D& f);
ScalarField2D dxy(const ScalarField2D& f);

/// Full Laplacian, fourth order at every node including boundaries.
ScalarField2D laplacian(const ScalarField2D& f);

/// Perpendicular Laplacian in expanded non-conservative form,
///   lap(f) - bb:grad(grad f) - div(bb).grad(f),
/// with the unit-vector terms evaluated analytically from the field model.
/// Nodes where |B| < b_min fall back to the full Laplacian (isotropic limit).
ScalarField2D perp_laplacian(const ScalarField2D& f, const MagneticFieldModel& model);

/// Parallel Laplacian div(bb.grad f); perp_laplacian = laplacian - this.
ScalarField2D par_laplacian(const ScalarField2D& f, const MagneticFieldModel& model);

}  // namespace anisoheat
