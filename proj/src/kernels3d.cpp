#include "csgreens/kernels3d.hpp"

#include <cmath>
#include <numbers>

#include "csgreens/errors.hpp"
#include "csgreens/specfun.hpp"

namespace csg {

namespace {

constexpr double kPi = std::numbers::pi;

struct Point {
  Vec3 xh;  // unit direction
  double r;
};

Point checked_point(const Vec3& x, double l) {
  const double r = norm(x);
  if (r == 0.0 || r < 1e-12 * l)
    throw SingularPointError("kernel evaluation at the source point (r = 0)");
  return {{{x[0] / r, x[1] / r, x[2] / r}}, r};
}

}  // namespace

namespace detail {

Mat3 force_rotation_influence_3d(const MaterialParams& p, const Vec3& x) {
  const auto [xh, r] = checked_point(x, p.l);
  const double h1m = p.l > 0.0 ? specfun::bracket_h1m(r / p.l) : -1.0;
  const double c = h1m / (8.0 * kPi * p.mu * r * r);
  Mat3 w;
  for (int i = 0; i < 3; ++i)
    for (int q = 0; q < 3; ++q) {
      double v = 0.0;
      for (int pp = 0; pp < 3; ++pp) v += levi3(i, pp, q) * xh[pp];
      w(i, q) = c * v;
    }
  return w;
}

Mat3 contract_first(const Ten33& sigma, const Vec3& n) {
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int q = 0; q < 3; ++q) {
      double v = 0.0;
      for (int j = 0; j < 3; ++j) v += n[j] * sigma(j, i, q);
      t(i, q) = v;
    }
  return t;
}

}  // namespace detail

KernelBundle3D point_force_kernels_3d(const MaterialParams& p, const Vec3& x) {
  const auto [xh, r] = checked_point(x, p.l);
  const double mu = p.mu;
  const double nu = p.nu;
  const double l = p.l;

  double h1 = 0.0, h2 = 0.0, h3 = 0.0, h4 = 0.0;
  if (l > 0.0) {
    const double s = r / l;
    h1 = specfun::bracket_h1(s);
    h2 = specfun::bracket_h2(s);
    h3 = specfun::bracket_h3(s);
    h4 = specfun::bracket_h4(s);
  }
  const double l2 = l * l;

  KernelBundle3D b;
  b.Omega = detail::force_rotation_influence_3d(p, x);

  const double cu_cl = 1.0 / (16.0 * kPi * mu * (1.0 - nu) * r);
  const double cu_cs = l2 / (4.0 * kPi * mu * r * r * r);
  for (int i = 0; i < 3; ++i)
    for (int q = 0; q < 3; ++q)
      b.U(i, q) = cu_cl * ((3.0 - 4.0 * nu) * kron(i, q) + xh[i] * xh[q]) +
                  cu_cs * (-h3 * xh[i] * xh[q] + h2 * kron(i, q));

  const double cs_cl = -1.0 / (8.0 * kPi * (1.0 - nu) * r * r);
  const double cs_cs = l2 / (2.0 * kPi * r * r * r * r);
  const double cs_sk = h1 / (2.0 * kPi * r * r);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      for (int q = 0; q < 3; ++q) {
        const double xxx = xh[i] * xh[j] * xh[q];
        double v = cs_cl * ((1.0 - 2.0 * nu) * (xh[j] * kron(i, q) + xh[i] * kron(j, q) -
                                                xh[q] * kron(i, j)) +
                            3.0 * xxx);
        v += cs_cs * (h4 * xxx - h3 * (kron(i, j) * xh[q] + kron(j, q) * xh[i] +
                                       kron(i, q) * xh[j]));
        v += cs_sk * xh[i] * kron(j, q);
        b.Sigma(j, i, q) = v;
      }

  const double cm = l2 / (2.0 * kPi * r * r * r);
  for (int i = 0; i < 3; ++i)
    for (int q = 0; q < 3; ++q)
      b.Mu(i, q) = cm * (-h3 * xh[i] * xh[q] + h2 * kron(i, q));

  return b;
}

KernelBundle3D point_couple_kernels_3d(const MaterialParams& p, const Vec3& x) {
  if (p.l <= 0.0)
    throw UnsupportedLimitError(
        "point_couple_kernels_3d: the couple kernels are undefined at l = 0");
  const auto [xh, r] = checked_point(x, p.l);
  const double mu = p.mu;
  const double s = r / p.l;
  const double h1 = specfun::bracket_h1(s);
  const double h1m = specfun::bracket_h1m(s);
  const double h3 = specfun::bracket_h3(s);
  const double r3 = r * r * r;

  KernelBundle3D b;
  b.U = detail::force_rotation_influence_3d(p, x);

  const double cw1 = h3 / (16.0 * kPi * mu * r3);
  const double cw2 = h1m / (8.0 * kPi * mu * r3);
  for (int i = 0; i < 3; ++i)
    for (int q = 0; q < 3; ++q)
      b.Omega(i, q) = cw1 * (xh[i] * xh[q] - kron(i, q)) - cw2 * kron(i, q);

  const double ca = 3.0 / (8.0 * kPi * r3);
  const double cb = (2.0 * h3 - 3.0) / (8.0 * kPi * r3);
  const double cc = h1 / (4.0 * kPi * r3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      for (int q = 0; q < 3; ++q) {
        double t1 = 0.0, t2 = 0.0;
        for (int pp = 0; pp < 3; ++pp) {
          t1 += xh[j] * xh[pp] * levi3(i, pp, q);
          t2 += xh[i] * xh[pp] * levi3(j, pp, q);
        }
        b.Sigma(j, i, q) = ca * t1 + cb * t2 - cc * levi3(i, j, q);
      }

  const double cm = h1 / (4.0 * kPi * r * r);
  for (int i = 0; i < 3; ++i)
    for (int q = 0; q < 3; ++q) {
      double v = 0.0;
      for (int pp = 0; pp < 3; ++pp) v += levi3(i, pp, q) * xh[pp];
      b.Mu(i, q) = cm * v;
    }

  return b;
}

Mat3 force_traction_3d(const KernelBundle3D& b, const Vec3& n) {
  detail::require_unit(dot(n, n), "force_traction_3d");
  return detail::contract_first(b.Sigma, n);
}

Mat3 moment_traction_3d(const KernelBundle3D& b, const Vec3& n) {
  detail::require_unit(dot(n, n), "moment_traction_3d");
  Mat3 m;
  for (int q = 0; q < 3; ++q) {
    const Vec3 col{{b.Mu(0, q), b.Mu(1, q), b.Mu(2, q)}};
    const Vec3 mc = cross(n, col);
    for (int i = 0; i < 3; ++i) m(i, q) = mc[i];
  }
  return m;
}

}  // namespace csg
