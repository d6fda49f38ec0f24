#pragma once

#include "csgreens/tensor.hpp"

namespace csg {

/// Isotropic material data for size-dependent couple stress elasticity:
/// shear modulus mu, Poisson ratio nu, and the characteristic material
/// length l. The couple-stress modulus eta = mu l^2 and the Lame
/// constant lambda are derived, never stored. l = 0 is the classical
/// (Cauchy) limit.
struct MaterialParams {
  double mu;
  double nu;
  double l;

  /// Validates mu > 0, -1 < nu < 0.5 and l >= 0; throws
  /// std::invalid_argument otherwise (nu = 0.5 makes lambda singular).
  MaterialParams(double mu_, double nu_, double l_);

  double lambda() const;  // 2 mu nu / (1 - 2 nu)
  double eta() const;     // mu l^2
};

/// Strain, rotation and mean-curvature measures of a displacement field
/// at a point. The rotation is the axial vector of the skew part of the
/// displacement gradient; the curvature is the axial vector of the skew
/// part of the rotation gradient.
struct KinematicFields3 {
  Mat3 strain;
  Vec3 rotation;
  Vec3 curvature;
};

/// Plane-strain counterpart: scalar rotation, in-plane curvature.
struct KinematicFields2 {
  Mat2 strain;
  double rotation = 0.0;
  Vec2 curvature;
};

/// Force-stress (generally non-symmetric, entry (j,i) is sigma_ji),
/// couple-stress vector, and the axial vector s dual to the skew part
/// of the force-stress.
struct StressState3 {
  Mat3 force_stress;
  Vec3 couple_stress;
  Vec3 skew_vector;
};

/// sigma_(ji) = lambda e_kk delta_ij + 2 mu e_ij, for symmetric strain.
Mat3 symmetric_stress(const MaterialParams& p, const Mat3& strain);
Mat2 symmetric_stress(const MaterialParams& p, const Mat2& strain);

/// mu_i = -8 eta kappa_i.
Vec3 couple_stress_from_curvature(const MaterialParams& p, const Vec3& curvature);
Vec2 couple_stress_from_curvature(const MaterialParams& p, const Vec2& curvature);

/// Total force-stress from the displacement gradient G(i,j) = du_i/dx_j
/// and the Laplacian of the rotation vector:
///   sigma_ji = lambda u_k,k delta_ij + mu (u_i,j + u_j,i)
///              + 2 eta eps_ijk lap(omega_k).
Mat3 total_stress_from_gradients(const MaterialParams& p, const Mat3& grad_u,
                                 const Vec3& lap_rotation);

/// Plane-strain form with the scalar rotation Laplacian:
///   sigma_ba = lambda e_gg delta_ab + 2 mu e_ab - 2 eta eps_ba lap(omega).
Mat2 total_stress_from_gradients(const MaterialParams& p, const Mat2& grad_u,
                                 double lap_rotation);

/// Force traction t_i = sigma_ji n_j. The normal must be unit length
/// within 1e-12 or std::invalid_argument is thrown.
Vec3 traction(const Mat3& sigma, const Vec3& n);
Vec2 traction(const Mat2& sigma, const Vec2& n);

/// Moment traction m = n x mu (3D) or the scalar eps_ba mu_a n_b (2D).
Vec3 moment_traction(const Vec3& couple_stress, const Vec3& n);
double moment_traction(const Vec2& couple_stress, const Vec2& n);

/// Reconstructs the (skew-symmetric) couple-stress tensor from its dual
/// vector, entry (j,i) = mu_ji = eps_ijk mu_k.
Mat3 couple_stress_tensor(const Vec3& couple_stress);

/// Axial vector dual to the skew part of sigma: s_m = eps_ijm sigma_[ji] / 2.
Vec3 axial_vector(const Mat3& sigma);

/// Out-of-plane normal stress sigma_33 = nu sigma_gg (plane strain).
double sigma33(const MaterialParams& p, const Mat2& sigma_inplane);

/// Assembles a StressState3 from a force-stress tensor and the
/// couple-stress vector.
StressState3 make_stress_state(const Mat3& sigma, const Vec3& couple_stress);

namespace detail {
void require_unit(double n2, const char* fn);  // n2 = |n|^2
}

}  // namespace csg
