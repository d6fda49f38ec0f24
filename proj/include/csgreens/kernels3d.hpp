#pragma once

#include "csgreens/material.hpp"
#include "csgreens/tensor.hpp"

namespace csg {

/// Influence tensors at a field point for a unit concentrated source at
/// the origin. Columns are indexed by the source direction q:
///   U(i,q)       displacement                [length/force]
///   Omega(i,q)   rotation                    [1/force]
///   Sigma(j,i,q) force-stress sigma_jiq      [1/area]
///   Mu(i,q)      couple-stress vector        [1/length]
/// Contraction with a load direction a_q gives the physical fields.
struct KernelBundle3D {
  Mat3 U;
  Mat3 Omega;
  Ten33 Sigma;
  Mat3 Mu;
};

/// Kernels for a unit point force. l = 0 yields the classical Kelvin
/// limit with zero couple-stress entries. Throws SingularPointError for
/// r = 0 or r < 1e-12 l; there is no regularization near the source.
KernelBundle3D point_force_kernels_3d(const MaterialParams& p, const Vec3& x);

/// Kernels for a unit point couple. The displacement bundle equals the
/// rotation bundle of the point force (shared evaluation path, so the
/// equality is exact). l = 0 throws UnsupportedLimitError: the couple
/// kernels have no classical limit.
KernelBundle3D point_couple_kernels_3d(const MaterialParams& p, const Vec3& x);

/// Force-traction influence T(i,q) = Sigma(j,i,q) n_j on a cut with
/// unit normal n.
Mat3 force_traction_3d(const KernelBundle3D& b, const Vec3& n);

/// Moment-traction influence M(i,q) = eps_ijk n_j Mu(k,q), i.e. n x Mu
/// column by column.
Mat3 moment_traction_3d(const KernelBundle3D& b, const Vec3& n);

namespace detail {
/// Rotation influence of the point force; also the displacement
/// influence of the point couple.
Mat3 force_rotation_influence_3d(const MaterialParams& p, const Vec3& x);
/// Contraction of Sigma with an arbitrary (unchecked) vector.
Mat3 contract_first(const Ten33& sigma, const Vec3& n);
}  // namespace detail

}  // namespace csg
