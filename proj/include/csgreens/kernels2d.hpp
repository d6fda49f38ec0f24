#pragma once

#include "csgreens/material.hpp"
#include "csgreens/tensor.hpp"

namespace csg {

/// Plane-strain influence functions for a unit line force along the
/// out-of-plane axis, per unit length. Columns indexed by the in-plane
/// load direction rho. U grows like log r; only displacement
/// differences between field points are physical.
struct KernelBundle2DForce {
  Mat2 U;       // U(a,rho)
  Vec2 Omega;   // Omega(rho), scalar rotation per load direction
  Ten32 Sigma;  // Sigma(b,a,rho)
  Mat2 Mu;      // Mu(a,rho), in-plane couple-stress vector
};

/// Influence functions for a unit line couple about the out-of-plane
/// axis (the only couple direction compatible with plane strain).
struct KernelBundle2DCouple {
  Vec2 U;
  double Omega = 0.0;
  Mat2 Sigma;  // Sigma(b,a)
  Vec2 Mu;
};

/// Out-of-plane stress components that accompany a plane-strain bundle:
/// sigma_33 = nu sigma_gg and mu_3a = -4 eta omega_,a. They act on
/// planes parallel to the plane of deformation and do not enter the
/// in-plane boundary value problem.
struct OutOfPlane2DForce {
  Vec2 sigma33;  // per load column
  Mat2 mu3;      // mu3(a,rho)
};

struct OutOfPlane2DCouple {
  double sigma33 = 0.0;
  Vec2 mu3;
};

/// Line-force kernels. l = 0 yields the classical plane-strain Kelvin
/// limit with zero couple-stress entries. Throws SingularPointError for
/// r = 0 or r < 1e-12 l.
KernelBundle2DForce line_force_kernels_2d(const MaterialParams& p, const Vec2& x);

/// Line-couple kernels; l = 0 throws UnsupportedLimitError.
KernelBundle2DCouple line_couple_kernels_2d(const MaterialParams& p, const Vec2& x);

/// Traction influences on a cut with unit normal n.
Mat2 force_traction_2d(const KernelBundle2DForce& b, const Vec2& n);   // T(a,rho)
Vec2 force_traction_2d(const KernelBundle2DCouple& b, const Vec2& n);  // T(a)

/// Moment-traction influences m = eps_ba mu_a n_b per column.
Vec2 moment_traction_2d(const KernelBundle2DForce& b, const Vec2& n);     // M(rho)
double moment_traction_2d(const KernelBundle2DCouple& b, const Vec2& n);  // M

OutOfPlane2DForce out_of_plane_components_2d(const MaterialParams& p,
                                             const KernelBundle2DForce& b);
OutOfPlane2DCouple out_of_plane_components_2d(const MaterialParams& p,
                                              const KernelBundle2DCouple& b);

namespace detail {
Mat2 contract_first(const Ten32& sigma, const Vec2& n);
}

}  // namespace csg
