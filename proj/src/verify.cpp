#include "csgreens/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "csgreens/errors.hpp"

namespace csg::verify {

namespace {

constexpr double kPi = std::numbers::pi;

template <int N>
Vec<N> shifted(Vec<N> x, int axis, double d) {
  x[axis] += d;
  return x;
}

void validate_scheme(const FDScheme& s) {
  if (s.order != 2 && s.order != 4)
    throw std::invalid_argument("FDScheme: order must be 2 or 4");
  if (!(s.c > 0.0) || s.c >= 0.1)
    throw std::invalid_argument("FDScheme: step constant must lie in (0, 0.1)");
}

template <int N>
void require_clearance(double r, double h, const FDScheme& s, int levels) {
  if (r <= levels * s.reach() * h * 1.0000001)
    throw StencilCollisionError("finite-difference stencil collides with the source");
}

// First/second derivative of a scalar-valued callable along one axis,
// fixed step h.
template <int N, class F>
double d1_axis(const F& f, const Vec<N>& x, int axis, double h, const FDScheme& s) {
  auto base = [&](double hh) {
    if (s.order == 2)
      return (f(shifted(x, axis, hh)) - f(shifted(x, axis, -hh))) / (2.0 * hh);
    return (-f(shifted(x, axis, 2.0 * hh)) + 8.0 * f(shifted(x, axis, hh)) -
            8.0 * f(shifted(x, axis, -hh)) + f(shifted(x, axis, -2.0 * hh))) /
           (12.0 * hh);
  };
  if (!s.richardson) return base(h);
  const double p = s.order == 4 ? 16.0 : 4.0;
  return (p * base(h / 2.0) - base(h)) / (p - 1.0);
}

template <int N, class F>
double d2_axis(const F& f, const Vec<N>& x, int axis, double h, const FDScheme& s) {
  auto base = [&](double hh) {
    if (s.order == 2)
      return (f(shifted(x, axis, hh)) - 2.0 * f(x) + f(shifted(x, axis, -hh))) /
             (hh * hh);
    return (-f(shifted(x, axis, 2.0 * hh)) + 16.0 * f(shifted(x, axis, hh)) -
            30.0 * f(x) + 16.0 * f(shifted(x, axis, -hh)) -
            f(shifted(x, axis, -2.0 * hh))) /
           (12.0 * hh * hh);
  };
  if (!s.richardson) return base(h);
  const double p = s.order == 4 ? 16.0 : 4.0;
  return (p * base(h / 2.0) - base(h)) / (p - 1.0);
}

template <int N, class F>
double laplacian(const F& f, const Vec<N>& x, double h, const FDScheme& s) {
  double v = 0.0;
  for (int d = 0; d < N; ++d) v += d2_axis<N>(f, x, d, h, s);
  return v;
}

template <int N, class F>
Mat<N> gradient_fixed_h(const F& u, const Vec<N>& x, double h, const FDScheme& s) {
  Mat<N> g;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      g(i, j) = d1_axis<N>([&](const Vec<N>& y) { return u(y)[i]; }, x, j, h, s);
  return g;
}

Vec3 rotation_from_grad(const Mat3& g) {
  return {{0.5 * (g(2, 1) - g(1, 2)), 0.5 * (g(0, 2) - g(2, 0)),
           0.5 * (g(1, 0) - g(0, 1))}};
}

double rotation_from_grad(const Mat2& g) { return 0.5 * (g(1, 0) - g(0, 1)); }

Vec3 mat_col(const Mat3& m, int q) { return {{m(0, q), m(1, q), m(2, q)}}; }
Vec2 mat_col(const Mat2& m, int q) { return {{m(0, q), m(1, q)}}; }

Mat3 sigma_col(const Ten33& s, int q) {
  Mat3 m;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) m(j, i) = s(j, i, q);
  return m;
}

Mat2 sigma_col(const Ten32& s, int q) {
  Mat2 m;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a) m(b, a) = s(b, a, q);
  return m;
}

}  // namespace

double FDScheme::step(double r, double length_scale) const {
  validate_scheme(*this);
  return c * std::max(r, length_scale);
}

void ResidualReport::add(double r, double abs_err, double rel_err) {
  samples.push_back({r, abs_err, rel_err});
  max_abs = std::max(max_abs, abs_err);
  max_rel = std::max(max_rel, rel_err);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

// ---------------------------------------------------------------------
// Finite-difference oracles
// ---------------------------------------------------------------------

Mat3 fd_gradient(const VecField3& u, const Vec3& x, const FDScheme& s,
                 double length_scale) {
  const double r = norm(x);
  const double h = s.step(r, length_scale);
  require_clearance<3>(r, h, s, 1);
  return gradient_fixed_h<3>(u, x, h, s);
}

Mat2 fd_gradient(const VecField2& u, const Vec2& x, const FDScheme& s,
                 double length_scale) {
  const double r = norm(x);
  const double h = s.step(r, length_scale);
  require_clearance<2>(r, h, s, 1);
  return gradient_fixed_h<2>(u, x, h, s);
}

Vec3 fd_gradient(const ScalarField3& f, const Vec3& x, const FDScheme& s,
                 double length_scale) {
  const double r = norm(x);
  const double h = s.step(r, length_scale);
  require_clearance<3>(r, h, s, 1);
  Vec3 g;
  for (int j = 0; j < 3; ++j) g[j] = d1_axis<3>(f, x, j, h, s);
  return g;
}

Vec2 fd_gradient(const ScalarField2& f, const Vec2& x, const FDScheme& s,
                 double length_scale) {
  const double r = norm(x);
  const double h = s.step(r, length_scale);
  require_clearance<2>(r, h, s, 1);
  Vec2 g;
  for (int j = 0; j < 2; ++j) g[j] = d1_axis<2>(f, x, j, h, s);
  return g;
}

KinematicFields3 kinematics_of(const VecField3& u, const Vec3& x, const FDScheme& s,
                               double length_scale) {
  const double r = norm(x);
  const double h = s.step(r, length_scale);
  require_clearance<3>(r, h, s, 2);
  const Mat3 g = gradient_fixed_h<3>(u, x, h, s);
  KinematicFields3 k;
  k.strain = symmetric_part(g);
  k.rotation = rotation_from_grad(g);
  auto rotf = [&](const Vec3& y) {
    return rotation_from_grad(gradient_fixed_h<3>(u, y, h, s));
  };
  const Mat3 gw = gradient_fixed_h<3>(rotf, x, h, s);
  k.curvature = rotation_from_grad(gw);
  return k;
}

KinematicFields2 kinematics_of(const VecField2& u, const Vec2& x, const FDScheme& s,
                               double length_scale) {
  const double r = norm(x);
  const double h = s.step(r, length_scale);
  require_clearance<2>(r, h, s, 2);
  const Mat2 g = gradient_fixed_h<2>(u, x, h, s);
  KinematicFields2 k;
  k.strain = symmetric_part(g);
  k.rotation = rotation_from_grad(g);
  auto rotf = [&](const Vec2& y) {
    return rotation_from_grad(gradient_fixed_h<2>(u, y, h, s));
  };
  Vec2 gw;
  for (int b = 0; b < 2; ++b) gw[b] = d1_axis<2>(rotf, x, b, h, s);
  k.curvature = {{0.5 * gw[1], -0.5 * gw[0]}};
  return k;
}

namespace {

template <int N, class UField>
Vec<N> pde_residual_impl(const UField& u, const MaterialParams& p, const Vec<N>& x,
                         const FDScheme& s) {
  const double r = norm(x);
  const double h = s.step(r, p.l);
  require_clearance<N>(r, h, s, 3);
  const double lam = p.lambda();
  const double mu = p.mu;
  const double eta = p.eta();

  auto divu = [&](const Vec<N>& y) {
    double v = 0.0;
    for (int k = 0; k < N; ++k)
      v += d1_axis<N>([&](const Vec<N>& z) { return u(z)[k]; }, y, k, h, s);
    return v;
  };

  Vec<N> res;
  for (int i = 0; i < N; ++i) {
    auto ui = [&](const Vec<N>& y) { return u(y)[i]; };
    const double graddiv = d1_axis<N>(divu, x, i, h, s);
    const double lap_graddiv = laplacian<N>(
        [&](const Vec<N>& y) { return d1_axis<N>(divu, y, i, h, s); }, x, h, s);
    const double lap_u = laplacian<N>(ui, x, h, s);
    const double bilap_u = laplacian<N>(
        [&](const Vec<N>& y) { return laplacian<N>(ui, y, h, s); }, x, h, s);
    res[i] = (lam + mu) * graddiv + eta * lap_graddiv + mu * lap_u - eta * bilap_u;
  }
  return res;
}

}  // namespace

Vec3 pde_residual(const VecField3& u, const MaterialParams& p, const Vec3& x,
                  const FDScheme& s) {
  return pde_residual_impl<3>(u, p, x, s);
}

Vec2 pde_residual(const VecField2& u, const MaterialParams& p, const Vec2& x,
                  const FDScheme& s) {
  return pde_residual_impl<2>(u, p, x, s);
}

std::pair<Vec3, Vec3> equilibrium_residuals(const MatField3& sigma,
                                            const VecField3& couple_stress,
                                            const Vec3& x, const FDScheme& s,
                                            double length_scale) {
  const double r = norm(x);
  const double h = s.step(r, length_scale);
  require_clearance<3>(r, h, s, 1);
  Vec3 fres;
  for (int i = 0; i < 3; ++i) {
    double v = 0.0;
    for (int j = 0; j < 3; ++j)
      v += d1_axis<3>([&](const Vec3& y) { return sigma(y)(j, i); }, x, j, h, s);
    fres[i] = v;
  }
  const Mat3 gm = gradient_fixed_h<3>(couple_stress, x, h, s);
  const Mat3 sig = sigma(x);
  Vec3 mres;
  for (int i = 0; i < 3; ++i) {
    double v = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) v += levi3(i, j, k) * (gm(k, j) + sig(j, k));
    mres[i] = v;
  }
  return {fres, mres};
}

std::pair<Vec2, double> equilibrium_residuals(const MatField2& sigma,
                                              const VecField2& couple_stress,
                                              const Vec2& x, const FDScheme& s,
                                              double length_scale) {
  const double r = norm(x);
  const double h = s.step(r, length_scale);
  require_clearance<2>(r, h, s, 1);
  Vec2 fres;
  for (int a = 0; a < 2; ++a) {
    double v = 0.0;
    for (int b = 0; b < 2; ++b)
      v += d1_axis<2>([&](const Vec2& y) { return sigma(y)(b, a); }, x, b, h, s);
    fres[a] = v;
  }
  const Mat2 gm = gradient_fixed_h<2>(couple_stress, x, h, s);
  const Mat2 sig = sigma(x);
  double mres = 0.0;
  for (int b = 0; b < 2; ++b)
    for (int g = 0; g < 2; ++g) mres += levi2(b, g) * gm(g, b);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) mres += levi2(a, b) * sig(a, b);
  return {fres, mres};
}

// ---------------------------------------------------------------------
// Balance integrals
// ---------------------------------------------------------------------

namespace {
void validate_quad(const QuadratureSpec& q) {
  if (q.polar < 8 || q.azimuth < 8)
    throw std::invalid_argument("QuadratureSpec: need at least 8 nodes per angular dimension");
}
}  // namespace

Balance3 balance_integrals_3d(const std::function<KernelBundle3D(const Vec3&)>& bundle_at,
                              double radius, const QuadratureSpec& quad) {
  validate_quad(quad);
  if (!(radius > 0.0)) throw std::invalid_argument("balance_integrals_3d: radius must be positive");
  std::vector<double> gx, gw;
  gauss_legendre(quad.polar, gx, gw);
  Balance3 out{};
  for (int ip = 0; ip < quad.polar; ++ip) {
    const double ct = gx[ip];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (int ia = 0; ia < quad.azimuth; ++ia) {
      const double phi = 2.0 * kPi * ia / quad.azimuth;
      Vec3 n{{st * std::cos(phi), st * std::sin(phi), ct}};
      n *= 1.0 / norm(n);
      const Vec3 xs = radius * n;
      const double w = gw[ip] * (2.0 * kPi / quad.azimuth) * radius * radius;
      const KernelBundle3D b = bundle_at(xs);
      const Mat3 t = force_traction_3d(b, n);
      const Mat3 m = moment_traction_3d(b, n);
      for (int i = 0; i < 3; ++i)
        for (int q = 0; q < 3; ++q) {
          out.force(i, q) += w * t(i, q);
          double xt = 0.0;
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) xt += levi3(i, j, k) * xs[j] * t(k, q);
          out.moment(i, q) += w * (xt + m(i, q));
        }
    }
  }
  return out;
}

Balance2Force balance_integrals_2d(
    const std::function<KernelBundle2DForce(const Vec2&)>& bundle_at, double radius,
    const QuadratureSpec& quad) {
  validate_quad(quad);
  if (!(radius > 0.0)) throw std::invalid_argument("balance_integrals_2d: radius must be positive");
  Balance2Force out{};
  const int n = quad.azimuth;
  const double w = 2.0 * kPi * radius / n;
  for (int ia = 0; ia < n; ++ia) {
    const double phi = 2.0 * kPi * ia / n;
    Vec2 nn{{std::cos(phi), std::sin(phi)}};
    nn *= 1.0 / norm(nn);
    const Vec2 xs = radius * nn;
    const KernelBundle2DForce b = bundle_at(xs);
    const Mat2 t = force_traction_2d(b, nn);
    const Vec2 m = moment_traction_2d(b, nn);
    for (int a = 0; a < 2; ++a)
      for (int rho = 0; rho < 2; ++rho) out.force(a, rho) += w * t(a, rho);
    for (int rho = 0; rho < 2; ++rho)
      out.moment[rho] += w * (xs[0] * t(1, rho) - xs[1] * t(0, rho) + m[rho]);
  }
  return out;
}

Balance2Couple balance_integrals_2d(
    const std::function<KernelBundle2DCouple(const Vec2&)>& bundle_at, double radius,
    const QuadratureSpec& quad) {
  validate_quad(quad);
  if (!(radius > 0.0)) throw std::invalid_argument("balance_integrals_2d: radius must be positive");
  Balance2Couple out{};
  const int n = quad.azimuth;
  const double w = 2.0 * kPi * radius / n;
  for (int ia = 0; ia < n; ++ia) {
    const double phi = 2.0 * kPi * ia / n;
    Vec2 nn{{std::cos(phi), std::sin(phi)}};
    nn *= 1.0 / norm(nn);
    const Vec2 xs = radius * nn;
    const KernelBundle2DCouple b = bundle_at(xs);
    const Vec2 t = force_traction_2d(b, nn);
    const double m = moment_traction_2d(b, nn);
    for (int a = 0; a < 2; ++a) out.force[a] += w * t[a];
    out.moment += w * (xs[0] * t[1] - xs[1] * t[0] + m);
  }
  return out;
}

// ---------------------------------------------------------------------
// Deterministic sampling
// ---------------------------------------------------------------------

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Vec3 random_unit_vec3(SplitMix64& rng) {
  const double z = 2.0 * rng.uniform01() - 1.0;
  const double phi = 2.0 * kPi * rng.uniform01();
  const double st = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {{st * std::cos(phi), st * std::sin(phi), z}};
}

Vec2 random_unit_vec2(SplitMix64& rng) {
  const double phi = 2.0 * kPi * rng.uniform01();
  return {{std::cos(phi), std::sin(phi)}};
}

std::vector<Vec3> seeded_points_3d(const MaterialParams& p, int n, std::uint64_t seed,
                                   double rmin_over_l, double rmax_over_l) {
  SplitMix64 rng(seed);
  const double scale = p.l > 0.0 ? p.l : 1.0;
  std::vector<Vec3> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double u = rng.uniform01();
    const double r = rmin_over_l * scale * std::pow(rmax_over_l / rmin_over_l, u);
    pts.push_back(r * random_unit_vec3(rng));
  }
  return pts;
}

std::vector<Vec2> seeded_points_2d(const MaterialParams& p, int n, std::uint64_t seed,
                                   double rmin_over_l, double rmax_over_l) {
  SplitMix64 rng(seed ^ 0x2d2d2d2d2d2d2d2dull);
  const double scale = p.l > 0.0 ? p.l : 1.0;
  std::vector<Vec2> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double u = rng.uniform01();
    const double r = rmin_over_l * scale * std::pow(rmax_over_l / rmin_over_l, u);
    pts.push_back(r * random_unit_vec2(rng));
  }
  return pts;
}

// ---------------------------------------------------------------------
// Aggregated kernel checks
// ---------------------------------------------------------------------

namespace {

// step constant for checks built on first derivatives
const FDScheme kFirstDeriv{4, 1e-3, false};

// step constants for the batch third/fourth-derivative checks; the
// step is tied to the distance from the source via sample_scheme (see
// docs/numerics.md for the error model)
constexpr double kC0Constitutive = 2e-2;
constexpr double kC0Pde = 2e-2;

double rel_to(double err, double denom) { return denom > 0.0 ? err / denom : err; }

}  // namespace

FDScheme sample_scheme(double c0, double r, double length_scale) {
  // express h = c0 * r through the c * max(r, l) step rule
  const double m = std::max(r, length_scale);
  return FDScheme{4, c0 * r / m, true};
}

double constitutive_error_3d(const MaterialParams& p, SourceKind kind, const Vec3& x,
                             const FDScheme& sc) {
  auto at = [&](const Vec3& y) {
    return kind == SourceKind::Force ? point_force_kernels_3d(p, y)
                                     : point_couple_kernels_3d(p, y);
  };
  const KernelBundle3D b = at(x);
  const double denom_s = max_abs(b.Sigma);
  const double denom_m = max_abs(b.Mu);
  const double h = sc.step(norm(x), p.l);
  double worst = 0.0;
  for (int q = 0; q < 3; ++q) {
    auto ucol = [&](const Vec3& y) { return mat_col(at(y).U, q); };
    const Mat3 g = gradient_fixed_h<3>(ucol, x, h, sc);
    auto rotf = [&](const Vec3& y) {
      return rotation_from_grad(gradient_fixed_h<3>(ucol, y, h, sc));
    };
    Vec3 lapw;
    for (int k = 0; k < 3; ++k)
      lapw[k] = laplacian<3>([&](const Vec3& y) { return rotf(y)[k]; }, x, h, sc);
    const Mat3 sig_fd = total_stress_from_gradients(p, g, lapw);
    const Mat3 gw = gradient_fixed_h<3>(rotf, x, h, sc);
    const Vec3 mu_fd = couple_stress_from_curvature(p, rotation_from_grad(gw));
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i)
        worst = std::max(worst,
                         rel_to(std::abs(sig_fd(j, i) - b.Sigma(j, i, q)), denom_s));
    if (denom_m > 0.0)
      for (int i = 0; i < 3; ++i)
        worst = std::max(worst, rel_to(std::abs(mu_fd[i] - b.Mu(i, q)), denom_m));
  }
  return worst;
}

double constitutive_error_2d(const MaterialParams& p, SourceKind kind, const Vec2& x,
                             const FDScheme& sc) {
  const double h = sc.step(norm(x), p.l);
  double worst = 0.0;
  if (kind == SourceKind::Force) {
    const KernelBundle2DForce b = line_force_kernels_2d(p, x);
    const double denom_s = max_abs(b.Sigma);
    const double denom_m = max_abs(b.Mu);
    for (int rho = 0; rho < 2; ++rho) {
      auto ucol = [&](const Vec2& y) {
        return mat_col(line_force_kernels_2d(p, y).U, rho);
      };
      const Mat2 g = gradient_fixed_h<2>(ucol, x, h, sc);
      auto rotf = [&](const Vec2& y) {
        return rotation_from_grad(gradient_fixed_h<2>(ucol, y, h, sc));
      };
      const double lapw = laplacian<2>(rotf, x, h, sc);
      const Mat2 sig_fd = total_stress_from_gradients(p, g, lapw);
      Vec2 gw;
      for (int bb = 0; bb < 2; ++bb) gw[bb] = d1_axis<2>(rotf, x, bb, h, sc);
      const Vec2 kappa{{0.5 * gw[1], -0.5 * gw[0]}};
      const Vec2 mu_fd = couple_stress_from_curvature(p, kappa);
      for (int bb = 0; bb < 2; ++bb)
        for (int a = 0; a < 2; ++a)
          worst = std::max(
              worst, rel_to(std::abs(sig_fd(bb, a) - b.Sigma(bb, a, rho)), denom_s));
      if (denom_m > 0.0)
        for (int a = 0; a < 2; ++a)
          worst = std::max(worst, rel_to(std::abs(mu_fd[a] - b.Mu(a, rho)), denom_m));
    }
  } else {
    const KernelBundle2DCouple b = line_couple_kernels_2d(p, x);
    const double denom_s = max_abs(b.Sigma);
    const double denom_m = max_abs(b.Mu);
    auto ucol = [&](const Vec2& y) { return line_couple_kernels_2d(p, y).U; };
    const Mat2 g = gradient_fixed_h<2>(ucol, x, h, sc);
    auto rotf = [&](const Vec2& y) {
      return rotation_from_grad(gradient_fixed_h<2>(ucol, y, h, sc));
    };
    const double lapw = laplacian<2>(rotf, x, h, sc);
    const Mat2 sig_fd = total_stress_from_gradients(p, g, lapw);
    Vec2 gw;
    for (int bb = 0; bb < 2; ++bb) gw[bb] = d1_axis<2>(rotf, x, bb, h, sc);
    const Vec2 kappa{{0.5 * gw[1], -0.5 * gw[0]}};
    const Vec2 mu_fd = couple_stress_from_curvature(p, kappa);
    for (int bb = 0; bb < 2; ++bb)
      for (int a = 0; a < 2; ++a)
        worst =
            std::max(worst, rel_to(std::abs(sig_fd(bb, a) - b.Sigma(bb, a)), denom_s));
    for (int a = 0; a < 2; ++a)
      worst = std::max(worst, rel_to(std::abs(mu_fd[a] - b.Mu[a]), denom_m));
  }
  return worst;
}

double pde_error_3d(const MaterialParams& p, SourceKind kind, const Vec3& x,
                    const FDScheme& sc) {
  auto at = [&](const Vec3& y) {
    return kind == SourceKind::Force ? point_force_kernels_3d(p, y)
                                     : point_couple_kernels_3d(p, y);
  };
  const KernelBundle3D b = at(x);
  const double r = norm(x);
  const double scale = p.mu * max_abs(b.U) / (r * r);
  double worst = 0.0;
  for (int q = 0; q < 3; ++q) {
    auto ucol = [&](const Vec3& y) { return mat_col(at(y).U, q); };
    const Vec3 res = pde_residual_impl<3>(ucol, p, x, sc);
    worst = std::max(worst, max_abs(res) / scale);
  }
  return worst;
}

double pde_error_2d(const MaterialParams& p, SourceKind kind, const Vec2& x,
                    const FDScheme& sc) {
  const double r = norm(x);
  if (kind == SourceKind::Force) {
    const KernelBundle2DForce b = line_force_kernels_2d(p, x);
    const double scale = p.mu * max_abs(b.U) / (r * r);
    double worst = 0.0;
    for (int rho = 0; rho < 2; ++rho) {
      auto ucol = [&](const Vec2& y) {
        return mat_col(line_force_kernels_2d(p, y).U, rho);
      };
      const Vec2 res = pde_residual_impl<2>(ucol, p, x, sc);
      worst = std::max(worst, max_abs(res) / scale);
    }
    return worst;
  }
  const KernelBundle2DCouple b = line_couple_kernels_2d(p, x);
  const double scale = p.mu * max_abs(b.U) / (r * r);
  auto ucol = [&](const Vec2& y) { return line_couple_kernels_2d(p, y).U; };
  const Vec2 res = pde_residual_impl<2>(ucol, p, x, sc);
  return max_abs(res) / scale;
}

double max_constitutive_error(const MaterialParams& p, std::uint64_t seed,
                              int npoints) {
  double worst = 0.0;
  for (const Vec3& x : seeded_points_3d(p, npoints, seed)) {
    const FDScheme sc = sample_scheme(kC0Constitutive, norm(x), p.l);
    worst = std::max(worst, constitutive_error_3d(p, SourceKind::Force, x, sc));
    worst = std::max(worst, constitutive_error_3d(p, SourceKind::Couple, x, sc));
  }
  for (const Vec2& x : seeded_points_2d(p, npoints, seed)) {
    const FDScheme sc = sample_scheme(kC0Constitutive, norm(x), p.l);
    worst = std::max(worst, constitutive_error_2d(p, SourceKind::Force, x, sc));
    worst = std::max(worst, constitutive_error_2d(p, SourceKind::Couple, x, sc));
  }
  return worst;
}

double max_pde_residual(const MaterialParams& p, std::uint64_t seed, int npoints) {
  double worst = 0.0;
  for (const Vec3& x : seeded_points_3d(p, npoints, seed)) {
    const FDScheme sc = sample_scheme(kC0Pde, norm(x), p.l);
    worst = std::max(worst, pde_error_3d(p, SourceKind::Force, x, sc));
    worst = std::max(worst, pde_error_3d(p, SourceKind::Couple, x, sc));
  }
  for (const Vec2& x : seeded_points_2d(p, npoints, seed)) {
    const FDScheme sc = sample_scheme(kC0Pde, norm(x), p.l);
    worst = std::max(worst, pde_error_2d(p, SourceKind::Force, x, sc));
    worst = std::max(worst, pde_error_2d(p, SourceKind::Couple, x, sc));
  }
  return worst;
}

double max_equilibrium_residual(const MaterialParams& p, std::uint64_t seed,
                                int npoints) {
  const FDScheme& sc = kFirstDeriv;
  double worst = 0.0;

  const auto pts3 = seeded_points_3d(p, npoints, seed);
  for (int fam = 0; fam < 2; ++fam) {
    auto at = [&](const Vec3& y) {
      return fam == 0 ? point_force_kernels_3d(p, y) : point_couple_kernels_3d(p, y);
    };
    for (const Vec3& x : pts3) {
      const KernelBundle3D b = at(x);
      const double scale = max_abs(b.Sigma) / norm(x);
      for (int q = 0; q < 3; ++q) {
        auto sigf = [&](const Vec3& y) { return sigma_col(at(y).Sigma, q); };
        auto muf = [&](const Vec3& y) { return mat_col(at(y).Mu, q); };
        const auto [fres, mres] = equilibrium_residuals(sigf, muf, x, sc, p.l);
        worst = std::max(worst, std::max(max_abs(fres), max_abs(mres)) / scale);
      }
    }
  }

  const auto pts2 = seeded_points_2d(p, npoints, seed);
  for (const Vec2& x : pts2) {
    {
      const KernelBundle2DForce b = line_force_kernels_2d(p, x);
      const double scale = max_abs(b.Sigma) / norm(x);
      for (int rho = 0; rho < 2; ++rho) {
        auto sigf = [&](const Vec2& y) {
          return sigma_col(line_force_kernels_2d(p, y).Sigma, rho);
        };
        auto muf = [&](const Vec2& y) {
          return mat_col(line_force_kernels_2d(p, y).Mu, rho);
        };
        const auto [fres, mres] = equilibrium_residuals(sigf, muf, x, sc, p.l);
        worst = std::max(worst, std::max(max_abs(fres), std::abs(mres)) / scale);
      }
    }
    {
      const KernelBundle2DCouple b = line_couple_kernels_2d(p, x);
      const double scale = max_abs(b.Sigma) / norm(x);
      auto sigf = [&](const Vec2& y) { return line_couple_kernels_2d(p, y).Sigma; };
      auto muf = [&](const Vec2& y) { return line_couple_kernels_2d(p, y).Mu; };
      const auto [fres, mres] = equilibrium_residuals(sigf, muf, x, sc, p.l);
      worst = std::max(worst, std::max(max_abs(fres), std::abs(mres)) / scale);
    }
  }
  return worst;
}

double max_balance_error_3d(const MaterialParams& p, const QuadratureSpec& quad) {
  const double scale = p.l > 0.0 ? p.l : 1.0;
  double worst = 0.0;
  for (const double rr : {0.5, 2.0, 10.0}) {
    const double radius = rr * scale;
    {
      const Balance3 b = balance_integrals_3d(
          [&](const Vec3& y) { return point_force_kernels_3d(p, y); }, radius, quad);
      for (int i = 0; i < 3; ++i)
        for (int q = 0; q < 3; ++q) {
          worst = std::max(worst, std::abs(b.force(i, q) + kron(i, q)));
          worst = std::max(worst, std::abs(b.moment(i, q)));
        }
    }
    if (p.l > 0.0) {
      const Balance3 b = balance_integrals_3d(
          [&](const Vec3& y) { return point_couple_kernels_3d(p, y); }, radius, quad);
      for (int i = 0; i < 3; ++i)
        for (int q = 0; q < 3; ++q) {
          worst = std::max(worst, std::abs(b.force(i, q)));
          worst = std::max(worst, std::abs(b.moment(i, q) + kron(i, q)));
        }
    }
  }
  return worst;
}

double max_balance_error_2d(const MaterialParams& p, const QuadratureSpec& quad) {
  const double scale = p.l > 0.0 ? p.l : 1.0;
  double worst = 0.0;
  for (const double rr : {0.5, 2.0, 10.0}) {
    const double radius = rr * scale;
    {
      const Balance2Force b = balance_integrals_2d(
          [&](const Vec2& y) { return line_force_kernels_2d(p, y); }, radius, quad);
      for (int a = 0; a < 2; ++a) {
        for (int rho = 0; rho < 2; ++rho)
          worst = std::max(worst, std::abs(b.force(a, rho) + kron(a, rho)));
        worst = std::max(worst, std::abs(b.moment[a]));
      }
    }
    if (p.l > 0.0) {
      const Balance2Couple b = balance_integrals_2d(
          [&](const Vec2& y) { return line_couple_kernels_2d(p, y); }, radius, quad);
      worst = std::max(worst, std::max(std::abs(b.force[0]), std::abs(b.force[1])));
      worst = std::max(worst, std::abs(b.moment + 1.0));
    }
  }
  return worst;
}

double duality_3d_max_diff(const MaterialParams& p, std::uint64_t seed, int npoints) {
  double worst = 0.0;
  for (const Vec3& x : seeded_points_3d(p, npoints, seed)) {
    const KernelBundle3D bc = point_couple_kernels_3d(p, x);
    const KernelBundle3D bf = point_force_kernels_3d(p, x);
    for (int i = 0; i < 3; ++i)
      for (int q = 0; q < 3; ++q)
        worst = std::max(worst, std::abs(bc.U(i, q) - bf.Omega(i, q)));
  }
  return worst;
}

double duality_2d_max_rel(const MaterialParams& p, std::uint64_t seed, int npoints) {
  const FDScheme& sc = kFirstDeriv;
  double worst = 0.0;
  for (const Vec2& x : seeded_points_2d(p, npoints, seed)) {
    const Vec2 uc = line_couple_kernels_2d(p, x).U;
    const double denom = std::max(std::abs(uc[0]), std::abs(uc[1]));
    const double h = sc.step(norm(x), p.l);
    for (int a = 0; a < 2; ++a) {
      double v = 0.0;
      for (int g = 0; g < 2; ++g)
        for (int b = 0; b < 2; ++b) {
          const double e = levi2(g, b);
          if (e == 0.0) continue;
          v += 0.5 * e *
               d1_axis<2>(
                   [&](const Vec2& y) { return line_force_kernels_2d(p, y).U(a, g); },
                   x, b, h, sc);
        }
      worst = std::max(worst, rel_to(std::abs(v - uc[a]), denom));
    }
  }
  return worst;
}

double equivoluminal_max_rel(const MaterialParams& p, std::uint64_t seed, int npoints) {
  const double lam = p.lambda();
  double worst = 0.0;
  for (const Vec3& x : seeded_points_3d(p, npoints, seed)) {
    const KernelBundle3D b = point_couple_kernels_3d(p, x);
    for (int q = 0; q < 3; ++q) {
      const Mat3 sig = sigma_col(b.Sigma, q);
      const double tre = trace(sig) / (3.0 * lam + 2.0 * p.mu);
      const Mat3 sym = symmetric_part(sig);
      double edom = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          edom = std::max(edom,
                          std::abs((sym(i, j) - lam * tre * kron(i, j)) / (2.0 * p.mu)));
      worst = std::max(worst, rel_to(std::abs(tre), edom));
    }
  }
  for (const Vec2& x : seeded_points_2d(p, npoints, seed)) {
    const KernelBundle2DCouple b = line_couple_kernels_2d(p, x);
    const double tre = trace(b.Sigma) / (2.0 * (lam + p.mu));
    const Mat2 sym = symmetric_part(b.Sigma);
    double edom = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int bb = 0; bb < 2; ++bb)
        edom = std::max(edom,
                        std::abs((sym(a, bb) - lam * tre * kron(a, bb)) / (2.0 * p.mu)));
    worst = std::max(worst, rel_to(std::abs(tre), edom));
  }
  return worst;
}

double dilatation_max_rel(const MaterialParams& p, std::uint64_t seed, int npoints) {
  const double lam = p.lambda();
  double worst = 0.0;
  for (const Vec3& x : seeded_points_3d(p, npoints, seed)) {
    const KernelBundle3D b = point_force_kernels_3d(p, x);
    const double r = norm(x);
    double denom = 0.0;
    Vec3 got, want;
    for (int q = 0; q < 3; ++q) {
      got[q] = trace(sigma_col(b.Sigma, q)) / (3.0 * lam + 2.0 * p.mu);
      want[q] = -(1.0 - 2.0 * p.nu) * (x[q] / r) /
                (8.0 * kPi * p.mu * (1.0 - p.nu) * r * r);
      denom = std::max(denom, std::abs(want[q]));
    }
    for (int q = 0; q < 3; ++q)
      worst = std::max(worst, rel_to(std::abs(got[q] - want[q]), denom));
  }
  for (const Vec2& x : seeded_points_2d(p, npoints, seed)) {
    const KernelBundle2DForce b = line_force_kernels_2d(p, x);
    const double r = norm(x);
    double denom = 0.0;
    Vec2 got, want;
    for (int rho = 0; rho < 2; ++rho) {
      got[rho] = trace(sigma_col(b.Sigma, rho)) / (2.0 * (lam + p.mu));
      want[rho] =
          -(1.0 - 2.0 * p.nu) * (x[rho] / r) / (4.0 * kPi * p.mu * (1.0 - p.nu) * r);
      denom = std::max(denom, std::abs(want[rho]));
    }
    for (int rho = 0; rho < 2; ++rho)
      worst = std::max(worst, rel_to(std::abs(got[rho] - want[rho]), denom));
  }
  return worst;
}

double cauchy_limit_max_rel(const MaterialParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0xca0c41ull);
  const Vec3 xh = random_unit_vec3(rng);
  const MaterialParams small{p.mu, p.nu, 1e-4};
  const KernelBundle3D b = point_force_kernels_3d(small, xh);  // r = 1

  Mat3 kelvin;
  const double c = 1.0 / (16.0 * kPi * p.mu * (1.0 - p.nu));
  for (int i = 0; i < 3; ++i)
    for (int q = 0; q < 3; ++q)
      kelvin(i, q) = c * ((3.0 - 4.0 * p.nu) * kron(i, q) + xh[i] * xh[q]);

  double err = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int q = 0; q < 3; ++q)
      err = std::max(err, std::abs(b.U(i, q) - kelvin(i, q)));
  err /= max_abs(kelvin);

  const MaterialParams classical{p.mu, p.nu, 0.0};
  const double sigma_scale =
      max_abs(point_force_kernels_3d(classical, xh).Sigma);
  const double mu_rel = max_abs(b.Mu) / sigma_scale;
  return std::max(err, mu_rel);
}

double skew_structure_max_rel(const MaterialParams& p, std::uint64_t seed,
                              int npoints) {
  const FDScheme& sc = kFirstDeriv;
  double worst = 0.0;

  const auto pts3 = seeded_points_3d(p, npoints, seed);
  for (int fam = 0; fam < 2; ++fam) {
    auto at = [&](const Vec3& y) {
      return fam == 0 ? point_force_kernels_3d(p, y) : point_couple_kernels_3d(p, y);
    };
    for (const Vec3& x : pts3) {
      const KernelBundle3D b = at(x);
      const double denom = max_abs(b.Sigma);
      const double h = sc.step(norm(x), p.l);
      for (int q = 0; q < 3; ++q) {
        auto muf = [&](const Vec3& y) { return mat_col(at(y).Mu, q); };
        const Mat3 gm = gradient_fixed_h<3>(muf, x, h, sc);
        for (int j = 0; j < 3; ++j)
          for (int i = 0; i < 3; ++i) {
            const double sk = 0.5 * (b.Sigma(j, i, q) - b.Sigma(i, j, q));
            const double musk = 0.5 * (gm(i, j) - gm(j, i));
            worst = std::max(worst, rel_to(std::abs(sk + musk), denom));
          }
      }
    }
  }

  const auto pts2 = seeded_points_2d(p, npoints, seed);
  for (const Vec2& x : pts2) {
    const double h = sc.step(norm(x), p.l);
    {
      const KernelBundle2DForce b = line_force_kernels_2d(p, x);
      const double denom = max_abs(b.Sigma);
      for (int rho = 0; rho < 2; ++rho) {
        auto muf = [&](const Vec2& y) {
          return mat_col(line_force_kernels_2d(p, y).Mu, rho);
        };
        const Mat2 gm = gradient_fixed_h<2>(muf, x, h, sc);
        const double sk = 0.5 * (b.Sigma(1, 0, rho) - b.Sigma(0, 1, rho));
        const double musk = 0.5 * (gm(0, 1) - gm(1, 0));
        worst = std::max(worst, rel_to(std::abs(sk + musk), denom));
      }
    }
    {
      const KernelBundle2DCouple b = line_couple_kernels_2d(p, x);
      const double denom = max_abs(b.Sigma);
      auto muf = [&](const Vec2& y) { return line_couple_kernels_2d(p, y).Mu; };
      const Mat2 gm = gradient_fixed_h<2>(muf, x, h, sc);
      const double sk = 0.5 * (b.Sigma(1, 0) - b.Sigma(0, 1));
      const double musk = 0.5 * (gm(0, 1) - gm(1, 0));
      worst = std::max(worst, rel_to(std::abs(sk + musk), denom));
    }
  }
  return worst;
}

double div_skew_vector_max_rel(const MaterialParams& p, std::uint64_t seed,
                               int npoints) {
  const FDScheme& sc = kFirstDeriv;
  double worst = 0.0;
  for (int fam = 0; fam < 2; ++fam) {
    auto at = [&](const Vec3& y) {
      return fam == 0 ? point_force_kernels_3d(p, y) : point_couple_kernels_3d(p, y);
    };
    for (const Vec3& x : seeded_points_3d(p, npoints, seed)) {
      const KernelBundle3D b = at(x);
      const double r = norm(x);
      const double h = sc.step(r, p.l);
      for (int q = 0; q < 3; ++q) {
        auto sfield = [&](const Vec3& y) {
          return axial_vector(sigma_col(at(y).Sigma, q));
        };
        double div = 0.0;
        for (int m = 0; m < 3; ++m)
          div += d1_axis<3>([&](const Vec3& y) { return sfield(y)[m]; }, x, m, h, sc);
        const Vec3 s0 = sfield(x);
        // A skew part below ~1e-6 of the stress scale is numerically
        // indistinguishable from zero in double precision; floor the
        // normalization at that level.
        const double denom =
            std::max(norm(s0), 1e-6 * max_abs(b.Sigma)) / r;
        worst = std::max(worst, rel_to(std::abs(div), denom));
      }
    }
  }
  return worst;
}

double moment_traction_identity_max_rel(const MaterialParams& p, std::uint64_t seed,
                                        int npoints) {
  const FDScheme& sc = kFirstDeriv;
  SplitMix64 rng(seed ^ 0x6d747261ull);
  double worst = 0.0;
  for (const Vec2& x : seeded_points_2d(p, npoints, seed)) {
    const Vec2 n = random_unit_vec2(rng);
    const double eta = p.eta();
    const double h = sc.step(norm(x), p.l);
    {
      const KernelBundle2DForce b = line_force_kernels_2d(p, x);
      const Vec2 m = moment_traction_2d(b, n);
      double denom = 0.0;
      Vec2 want;
      for (int rho = 0; rho < 2; ++rho) {
        Vec2 gw;
        for (int bb = 0; bb < 2; ++bb)
          gw[bb] = d1_axis<2>(
              [&](const Vec2& y) { return line_force_kernels_2d(p, y).Omega[rho]; },
              x, bb, h, sc);
        want[rho] = 4.0 * eta * dot(gw, n);
        denom = std::max({denom, std::abs(m[rho]), std::abs(want[rho])});
      }
      for (int rho = 0; rho < 2; ++rho)
        worst = std::max(worst, rel_to(std::abs(m[rho] - want[rho]), denom));
    }
    {
      const KernelBundle2DCouple b = line_couple_kernels_2d(p, x);
      const double m = moment_traction_2d(b, n);
      Vec2 gw;
      for (int bb = 0; bb < 2; ++bb)
        gw[bb] = d1_axis<2>(
            [&](const Vec2& y) { return line_couple_kernels_2d(p, y).Omega; }, x, bb,
            h, sc);
      const double want = 4.0 * eta * dot(gw, n);
      const double denom = std::max(std::abs(m), std::abs(want));
      worst = std::max(worst, rel_to(std::abs(m - want), denom));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------

std::vector<CheckResult> run_verification_suite(const MaterialParams& p,
                                                std::uint64_t seed) {
  std::vector<CheckResult> out;
  auto add = [&](const char* name, double v, double thr) {
    out.push_back({name, v, thr, v <= thr});
  };
  add("constitutive-consistency", max_constitutive_error(p, seed),
      thresholds::kConstitutive);
  add("pde-residual", max_pde_residual(p, seed), thresholds::kPde);
  add("equilibrium-residual", max_equilibrium_residual(p, seed),
      thresholds::kEquilibrium);
  add("balance-integrals-3d", max_balance_error_3d(p), thresholds::kBalance3d);
  add("balance-integrals-2d", max_balance_error_2d(p), thresholds::kBalance2d);
  add("duality-3d", duality_3d_max_diff(p, seed), thresholds::kDuality3d);
  add("duality-2d", duality_2d_max_rel(p, seed), thresholds::kDuality2d);
  add("equivoluminal-couple", equivoluminal_max_rel(p, seed),
      thresholds::kEquivoluminal);
  add("dilatation-force", dilatation_max_rel(p, seed), thresholds::kDilatation);
  add("cauchy-limit", cauchy_limit_max_rel(p, seed), thresholds::kCauchyLimit);
  add("skew-structure", skew_structure_max_rel(p, seed), thresholds::kSkewStructure);
  add("div-skew-vector", div_skew_vector_max_rel(p, seed),
      thresholds::kDivSkewVector);
  add("moment-traction-2d", moment_traction_identity_max_rel(p, seed),
      thresholds::kMomentTraction2d);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

void print_report(const std::vector<CheckResult>& results, std::ostream& os) {
  for (const auto& r : results) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-26s max_rel=%.3e  threshold=%.1e  %s",
                  r.name.c_str(), r.max_rel, r.threshold, r.pass ? "PASS" : "FAIL");
    os << buf << "\n";
  }
}

}  // namespace csg::verify
