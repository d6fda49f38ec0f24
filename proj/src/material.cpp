#include "csgreens/material.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace csg {

MaterialParams::MaterialParams(double mu_, double nu_, double l_)
    : mu(mu_), nu(nu_), l(l_) {
  if (!std::isfinite(mu) || mu <= 0.0)
    throw std::invalid_argument("MaterialParams: mu must be positive and finite");
  if (!std::isfinite(nu) || nu <= -1.0 || nu >= 0.5)
    throw std::invalid_argument("MaterialParams: nu must lie in (-1, 0.5)");
  if (!std::isfinite(l) || l < 0.0)
    throw std::invalid_argument("MaterialParams: l must be non-negative and finite");
}

double MaterialParams::lambda() const { return 2.0 * mu * nu / (1.0 - 2.0 * nu); }

double MaterialParams::eta() const { return mu * l * l; }

Mat3 symmetric_stress(const MaterialParams& p, const Mat3& strain) {
  const double lam = p.lambda();
  const double tre = trace(strain);
  Mat3 s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      s(i, j) = lam * tre * kron(i, j) + 2.0 * p.mu * strain(i, j);
  return s;
}

Mat2 symmetric_stress(const MaterialParams& p, const Mat2& strain) {
  const double lam = p.lambda();
  const double tre = trace(strain);
  Mat2 s;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      s(a, b) = lam * tre * kron(a, b) + 2.0 * p.mu * strain(a, b);
  return s;
}

Vec3 couple_stress_from_curvature(const MaterialParams& p, const Vec3& curvature) {
  return -8.0 * p.eta() * curvature;
}

Vec2 couple_stress_from_curvature(const MaterialParams& p, const Vec2& curvature) {
  return -8.0 * p.eta() * curvature;
}

Mat3 total_stress_from_gradients(const MaterialParams& p, const Mat3& grad_u,
                                 const Vec3& lap_rotation) {
  const double lam = p.lambda();
  const double eta = p.eta();
  const double div_u = trace(grad_u);
  Mat3 s;
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      double v = lam * div_u * kron(i, j) + p.mu * (grad_u(i, j) + grad_u(j, i));
      for (int k = 0; k < 3; ++k) v += 2.0 * eta * levi3(i, j, k) * lap_rotation[k];
      s(j, i) = v;
    }
  }
  return s;
}

Mat2 total_stress_from_gradients(const MaterialParams& p, const Mat2& grad_u,
                                 double lap_rotation) {
  const double lam = p.lambda();
  const double eta = p.eta();
  const double div_u = trace(grad_u);
  Mat2 s;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a)
      s(b, a) = lam * div_u * kron(a, b) + p.mu * (grad_u(a, b) + grad_u(b, a)) -
                2.0 * eta * levi2(b, a) * lap_rotation;
  return s;
}

namespace detail {
void require_unit(double n2, const char* fn) {
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
    throw std::invalid_argument(std::string(fn) + ": normal must be a unit vector");
}
}  // namespace detail

Vec3 traction(const Mat3& sigma, const Vec3& n) {
  detail::require_unit(dot(n, n), "traction");
  Vec3 t;
  for (int i = 0; i < 3; ++i) {
    double v = 0.0;
    for (int j = 0; j < 3; ++j) v += sigma(j, i) * n[j];
    t[i] = v;
  }
  return t;
}

Vec2 traction(const Mat2& sigma, const Vec2& n) {
  detail::require_unit(dot(n, n), "traction");
  Vec2 t;
  for (int a = 0; a < 2; ++a) {
    double v = 0.0;
    for (int b = 0; b < 2; ++b) v += sigma(b, a) * n[b];
    t[a] = v;
  }
  return t;
}

Vec3 moment_traction(const Vec3& couple_stress, const Vec3& n) {
  detail::require_unit(dot(n, n), "moment_traction");
  return cross(n, couple_stress);
}

double moment_traction(const Vec2& couple_stress, const Vec2& n) {
  detail::require_unit(dot(n, n), "moment_traction");
  double m = 0.0;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a) m += levi2(b, a) * couple_stress[a] * n[b];
  return m;
}

Mat3 couple_stress_tensor(const Vec3& couple_stress) {
  Mat3 t;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      double v = 0.0;
      for (int k = 0; k < 3; ++k) v += levi3(i, j, k) * couple_stress[k];
      t(j, i) = v;
    }
  return t;
}

Vec3 axial_vector(const Mat3& sigma) {
  const Mat3 sk = skew_part(sigma);
  Vec3 s{};
  for (int m = 0; m < 3; ++m) {
    double v = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) v += levi3(i, j, m) * sk(j, i);
    s[m] = 0.5 * v;
  }
  return s;
}

double sigma33(const MaterialParams& p, const Mat2& sigma_inplane) {
  return p.nu * trace(sigma_inplane);
}

StressState3 make_stress_state(const Mat3& sigma, const Vec3& couple_stress) {
  return {sigma, couple_stress, axial_vector(sigma)};
}

}  // namespace csg
