#include "csgreens/kernels2d.hpp"

#include <cmath>
#include <numbers>

#include "csgreens/errors.hpp"
#include "csgreens/specfun.hpp"

namespace csg {

namespace {

constexpr double kPi = std::numbers::pi;

struct Point {
  Vec2 xh;
  double r;
};

Point checked_point(const Vec2& x, double l) {
  const double r = norm(x);
  if (r == 0.0 || r < 1e-12 * l)
    throw SingularPointError("kernel evaluation at the source point (r = 0)");
  return {{{x[0] / r, x[1] / r}}, r};
}

}  // namespace

KernelBundle2DForce line_force_kernels_2d(const MaterialParams& p, const Vec2& x) {
  const auto [xh, r] = checked_point(x, p.l);
  const double mu = p.mu;
  const double nu = p.nu;
  const double l = p.l;

  // Bessel brackets; at l = 0 all couple-stress contributions vanish and
  // the rotation coefficient K1(s)-1/s tends to -l/r.
  double g1 = 0.0, g2 = 0.0, k1 = 0.0;
  double c_omega;
  if (l > 0.0) {
    const double s = r / l;
    g1 = specfun::bracket_g1(s);
    g2 = specfun::bracket_g2(s);
    k1 = specfun::bessel_k1(s);
    c_omega = specfun::bracket_k1m(s) / (4.0 * kPi * mu * l);
  } else {
    c_omega = -1.0 / (4.0 * kPi * mu * r);
  }

  KernelBundle2DForce b;

  const double cu_cl = -1.0 / (8.0 * kPi * mu * (1.0 - nu));
  const double cu_cs = 1.0 / (2.0 * kPi * mu);
  const double logr = std::log(r);
  for (int a = 0; a < 2; ++a)
    for (int rho = 0; rho < 2; ++rho)
      b.U(a, rho) = cu_cl * ((3.0 - 4.0 * nu) * logr * kron(a, rho) - xh[a] * xh[rho]) +
                    cu_cs * (g1 * xh[a] * xh[rho] - g2 * kron(a, rho));

  for (int rho = 0; rho < 2; ++rho) {
    double v = 0.0;
    for (int a = 0; a < 2; ++a) v += levi2(a, rho) * xh[a];
    b.Omega[rho] = c_omega * v;
  }

  const double cs_cl = -1.0 / (4.0 * kPi * (1.0 - nu) * r);
  const double cs_cs = g1 / (kPi * r);
  const double cs_sk = l > 0.0 ? k1 / (kPi * l) : 0.0;
  for (int bb = 0; bb < 2; ++bb)
    for (int a = 0; a < 2; ++a)
      for (int rho = 0; rho < 2; ++rho) {
        const double xxx = xh[a] * xh[bb] * xh[rho];
        double v = cs_cl * ((1.0 - 2.0 * nu) * (kron(bb, rho) * xh[a] +
                                                kron(a, rho) * xh[bb] -
                                                kron(a, bb) * xh[rho]) +
                            2.0 * xxx);
        v += cs_cs * (kron(a, bb) * xh[rho] + kron(bb, rho) * xh[a] +
                      kron(a, rho) * xh[bb] - 4.0 * xxx);
        v += cs_sk * (kron(bb, rho) * xh[a] - xxx);
        b.Sigma(bb, a, rho) = v;
      }

  for (int a = 0; a < 2; ++a)
    for (int rho = 0; rho < 2; ++rho)
      b.Mu(a, rho) = (g1 * xh[a] * xh[rho] - g2 * kron(a, rho)) / kPi;

  return b;
}

KernelBundle2DCouple line_couple_kernels_2d(const MaterialParams& p, const Vec2& x) {
  if (p.l <= 0.0)
    throw UnsupportedLimitError(
        "line_couple_kernels_2d: the couple kernels are undefined at l = 0");
  const auto [xh, r] = checked_point(x, p.l);
  const double mu = p.mu;
  const double l = p.l;
  const double s = r / l;
  const double k0 = specfun::bessel_k0(s);
  const double k1 = specfun::bessel_k1(s);
  const double g1 = specfun::bracket_g1(s);
  const double k1m = specfun::bracket_k1m(s);

  KernelBundle2DCouple b;

  const double cu = k1m / (4.0 * kPi * mu * l);
  for (int a = 0; a < 2; ++a) {
    double v = 0.0;
    for (int g = 0; g < 2; ++g) v += levi2(a, g) * xh[g];
    b.U[a] = cu * v;
  }

  b.Omega = k0 / (8.0 * kPi * mu * l * l);

  const double cs = -g1 / (4.0 * kPi * l * l);
  const double ck = k0 / (4.0 * kPi * l * l);
  for (int bb = 0; bb < 2; ++bb)
    for (int a = 0; a < 2; ++a) {
      double v = 0.0;
      for (int g = 0; g < 2; ++g)
        v += levi2(a, g) * xh[g] * xh[bb] + levi2(bb, g) * xh[g] * xh[a];
      b.Sigma(bb, a) = cs * v + ck * levi2(a, bb);
    }

  const double cm = k1 / (2.0 * kPi * l);
  for (int a = 0; a < 2; ++a) {
    double v = 0.0;
    for (int bb = 0; bb < 2; ++bb) v += levi2(a, bb) * xh[bb];
    b.Mu[a] = cm * v;
  }

  return b;
}

namespace detail {
Mat2 contract_first(const Ten32& sigma, const Vec2& n) {
  Mat2 t;
  for (int a = 0; a < 2; ++a)
    for (int rho = 0; rho < 2; ++rho) {
      double v = 0.0;
      for (int b = 0; b < 2; ++b) v += n[b] * sigma(b, a, rho);
      t(a, rho) = v;
    }
  return t;
}
}  // namespace detail

Mat2 force_traction_2d(const KernelBundle2DForce& b, const Vec2& n) {
  detail::require_unit(dot(n, n), "force_traction_2d");
  return detail::contract_first(b.Sigma, n);
}

Vec2 force_traction_2d(const KernelBundle2DCouple& b, const Vec2& n) {
  detail::require_unit(dot(n, n), "force_traction_2d");
  Vec2 t;
  for (int a = 0; a < 2; ++a) {
    double v = 0.0;
    for (int bb = 0; bb < 2; ++bb) v += n[bb] * b.Sigma(bb, a);
    t[a] = v;
  }
  return t;
}

Vec2 moment_traction_2d(const KernelBundle2DForce& b, const Vec2& n) {
  detail::require_unit(dot(n, n), "moment_traction_2d");
  Vec2 m;
  for (int rho = 0; rho < 2; ++rho) {
    const Vec2 col{{b.Mu(0, rho), b.Mu(1, rho)}};
    m[rho] = moment_traction(col, n);
  }
  return m;
}

double moment_traction_2d(const KernelBundle2DCouple& b, const Vec2& n) {
  return moment_traction(b.Mu, n);
}

OutOfPlane2DForce out_of_plane_components_2d(const MaterialParams& p,
                                             const KernelBundle2DForce& b) {
  OutOfPlane2DForce o;
  for (int rho = 0; rho < 2; ++rho) {
    Mat2 sig;
    for (int bb = 0; bb < 2; ++bb)
      for (int a = 0; a < 2; ++a) sig(bb, a) = b.Sigma(bb, a, rho);
    o.sigma33[rho] = sigma33(p, sig);
    // mu_3g = 8 eta eps_ga kappa_a = -eps_ga Mu_a, independent of eta.
    o.mu3(0, rho) = -b.Mu(1, rho);
    o.mu3(1, rho) = b.Mu(0, rho);
  }
  return o;
}

OutOfPlane2DCouple out_of_plane_components_2d(const MaterialParams& p,
                                              const KernelBundle2DCouple& b) {
  OutOfPlane2DCouple o;
  o.sigma33 = sigma33(p, b.Sigma);
  o.mu3[0] = -b.Mu[1];
  o.mu3[1] = b.Mu[0];
  return o;
}

}  // namespace csg
