#include "csgreens/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#ifndef CSGREENS_G_SWITCH
#define CSGREENS_G_SWITCH 0.05
#endif
#ifndef CSGREENS_H_SWITCH
#define CSGREENS_H_SWITCH 0.25
#endif

namespace csg::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209;

void require_positive(double x, const char* fn) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error(std::string(fn) + ": argument must be positive and finite");
}

void require_nonnegative(double x, const char* fn) {
  if (!std::isfinite(x) || x < 0.0)
    throw std::domain_error(std::string(fn) + ": argument must be non-negative and finite");
}

template <std::size_t N>
double poly_eval(const std::array<double, N>& p, double x) {
  double s = p[N - 1];
  for (int i = static_cast<int>(N) - 2; i >= 0; --i) s = s * x + p[i];
  return s;
}

// ---------------------------------------------------------------------
// K0, K1: rational minimax approximations after Russon & Blair (Chalk
// River report AECL-3461) as revised by Holoborodko. Coefficients are
// the double-precision tables from Boost.Math:
//   Copyright (c) 2006 Xiaogang Zhang, (c) 2017 John Maddock
//   Distributed under the Boost Software License, Version 1.0.
//   http://www.boost.org/LICENSE_1_0.txt
// Max relative error of each branch is below 3e-16.
// ---------------------------------------------------------------------

double k0_small(double x) {  // 0 < x <= 1
  static constexpr double Y = 1.137250900268554688;
  static constexpr std::array<double, 5> P = {
      -1.372509002685546267e-01, 2.574916117833312855e-01,
      1.395474602146869316e-02, 5.445476986653926759e-04,
      7.125159422136622118e-06};
  static constexpr std::array<double, 4> Q = {
      1.000000000000000000e+00, -5.458333438017788530e-02,
      1.291052816975251298e-03, -1.367653946978586591e-05};
  static constexpr std::array<double, 8> P2 = {
      1.159315156584124484e-01, 2.789828789146031732e-01,
      2.524892993216121934e-02, 8.460350907213637784e-04,
      1.491471924309617534e-05, 1.627106892422088488e-07,
      1.208266102392756055e-09, 6.611686391749704310e-12};
  const double t = x * x / 4.0;
  const double a = (poly_eval(P, t) / poly_eval(Q, t) + Y) * t + 1.0;
  return poly_eval(P2, x * x) - std::log(x) * a;
}

double k0_large(double x) {  // x > 1
  static constexpr std::array<double, 9> P = {
      2.533141373155002416e-01, 3.628342133984595192e+00,
      1.868441889406606057e+01, 4.306243981063412784e+01,
      4.424116209627428189e+01, 1.562095339356220468e+01,
      -1.810138978229410898e+00, -1.414237994269995877e+00,
      -9.369168119754924625e-02};
  static constexpr std::array<double, 9> Q = {
      1.000000000000000000e+00, 1.494194694879908328e+01,
      8.265296455388554217e+01, 2.162779506621866970e+02,
      2.845145155184222157e+02, 1.851714491916334995e+02,
      5.486540717439723515e+01, 6.118075837628957015e+00,
      1.586261269326235053e-01};
  const double rat = poly_eval(P, 1.0 / x) / poly_eval(Q, 1.0 / x) + 1.0;
  if (x < 705.0) return rat * std::exp(-x) / std::sqrt(x);
  const double ex = std::exp(-x / 2.0);
  return (rat * ex / std::sqrt(x)) * ex;
}

double k1_small(double x) {  // 0 < x <= 1
  static constexpr double Y = 8.69547128677368164e-02;
  static constexpr std::array<double, 4> P = {
      -3.62137953440350228e-03, 7.11842087490330300e-03,
      1.00302560256614306e-05, 1.77231085381040811e-06};
  static constexpr std::array<double, 4> Q = {
      1.00000000000000000e+00, -4.80414794429043831e-02,
      9.85972641934416525e-04, -8.91196859397070326e-06};
  static constexpr std::array<double, 4> P2 = {
      -3.07965757829206184e-01, -7.80929703673074907e-02,
      -2.70619343754051620e-03, -2.49549522229072008e-05};
  static constexpr std::array<double, 4> Q2 = {
      1.00000000000000000e+00, -2.36316836412163098e-02,
      2.64524577525962719e-04, -1.49749618004162787e-06};
  const double t = x * x / 4.0;
  const double a =
      ((poly_eval(P, t) / poly_eval(Q, t) + Y) * t * t + t / 2.0 + 1.0) * x / 2.0;
  return poly_eval(P2, x * x) / poly_eval(Q2, x * x) * x + 1.0 / x + std::log(x) * a;
}

double k1_large(double x) {  // x > 1
  static constexpr double Y = 1.45034217834472656;
  static constexpr std::array<double, 9> P = {
      -1.97028041029226295e-01, -2.32408961548087617e+00,
      -7.98269784507699938e+00, -2.39968410774221632e+00,
      3.28314043780858713e+01, 5.67713761158496058e+01,
      3.30907788466509823e+01, 6.62582288933739787e+00,
      3.08851840645286691e-01};
  static constexpr std::array<double, 9> Q = {
      1.00000000000000000e+00, 1.41811409298826118e+01,
      7.35979466317556420e+01, 1.77821793937080859e+02,
      2.11014501598705982e+02, 1.19425262951064454e+02,
      2.88448064302447607e+01, 2.27912927104139732e+00,
      2.50358186953478678e-02};
  const double rat = poly_eval(P, 1.0 / x) / poly_eval(Q, 1.0 / x) + Y;
  if (x < 705.0) return rat * std::exp(-x) / std::sqrt(x);
  const double ex = std::exp(-x / 2.0);
  return (rat * ex / std::sqrt(x)) * ex;
}

// ---------------------------------------------------------------------
// Small-argument series for the cancellation-prone brackets.
//
// With t = x^2/4 and L = log(x/2), the standard expansions of K0 and
// K1 give
//   g1(x)      = sum_k t^k (c_k + d_k L)
//   g2(x)      = sum_k t^k (a_k + b_k L)
//   K1(x)-1/x  = x * sum_k t^k (q_k + p_k L)
// where the coefficients involve 1/(k!)^2, 1/(k!(k+1)!) and the
// harmonic numbers. The algebraic 1/x^2 and 1/x singularities cancel
// exactly against the leading terms of K1, which is what makes the
// direct formulas unusable for small x.
// ---------------------------------------------------------------------

struct LogSeriesTables {
  static constexpr int kN = 18;
  std::array<double, kN> g1a{}, g1b{}, g2a{}, g2b{}, k1ma{}, k1mb{};
};

const LogSeriesTables& tables() {
  static const LogSeriesTables t = [] {
    LogSeriesTables s;
    double inv_kf2 = 1.0;   // 1/(k!)^2
    double inv_kfk1 = 1.0;  // 1/(k!(k+1)!)
    double hk = 0.0;        // harmonic number H_k
    for (int k = 0; k < LogSeriesTables::kN; ++k) {
      if (k > 0) {
        inv_kf2 /= static_cast<double>(k) * k;
        inv_kfk1 /= static_cast<double>(k) * (k + 1);
        hk += 1.0 / k;
      }
      const double hg = hk - kEulerGamma;
      const double w = 2.0 * hg + 1.0 / (k + 1);
      s.g1b[k] = inv_kfk1 - inv_kf2;
      s.g1a[k] = hg * inv_kf2 - 0.5 * w * inv_kfk1;
      s.g2b[k] = 0.5 * inv_kfk1 - inv_kf2;
      s.g2a[k] = hg * inv_kf2 - 0.25 * w * inv_kfk1;
      s.k1mb[k] = 0.5 * inv_kfk1;
      s.k1ma[k] = -0.25 * w * inv_kfk1;
    }
    return s;
  }();
  return t;
}

template <std::size_t N>
double log_series(const std::array<double, N>& a, const std::array<double, N>& b,
                  double x) {
  const double t = 0.25 * x * x;
  const double L = std::log(0.5 * x);
  double sa = a[N - 1];
  double sb = b[N - 1];
  for (int k = static_cast<int>(N) - 2; k >= 0; --k) {
    sa = sa * t + a[k];
    sb = sb * t + b[k];
  }
  return sa + L * sb;
}

// sum_{k>=m} x^k / k!
double exp_tail(double x, int m) {
  if (x == 0.0) return 0.0;
  double term = 1.0;
  for (int k = 1; k <= m; ++k) term *= x / k;
  double sum = term;
  for (int k = m + 1; k < m + 60; ++k) {
    term *= x / k;
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum;
}

constexpr double kGSwitch = CSGREENS_G_SWITCH;
constexpr double kHSwitch = CSGREENS_H_SWITCH;
constexpr double kK1mSwitch = 0.5;

}  // namespace

double bessel_k0(double x) {
  require_positive(x, "bessel_k0");
  return x <= 1.0 ? k0_small(x) : k0_large(x);
}

double bessel_k1(double x) {
  require_positive(x, "bessel_k1");
  return x <= 1.0 ? k1_small(x) : k1_large(x);
}

namespace detail {

double g1_series(double x) { return log_series(tables().g1a, tables().g1b, x); }
double g2_series(double x) { return log_series(tables().g2a, tables().g2b, x); }
double k1m_series(double x) { return x * log_series(tables().k1ma, tables().k1mb, x); }

double g1_direct(double x) {
  return bessel_k0(x) + 2.0 * bessel_k1(x) / x - 2.0 / (x * x);
}

double g2_direct(double x) {
  return bessel_k0(x) + bessel_k1(x) / x - 1.0 / (x * x);
}

double h2_series(double x) { return std::exp(-x) * (exp_tail(x, 3) - 0.5 * x * x); }

double h3_series(double x) { return std::exp(-x) * (0.5 * x * x + 3.0 * exp_tail(x, 3)); }

double h4_series(double x) {
  return std::exp(-x) * (1.5 * x * x * (1.0 + x) + 15.0 * exp_tail(x, 4));
}

double h2_direct(double x) { return 1.0 - (1.0 + x * (1.0 + x)) * std::exp(-x); }

double h3_direct(double x) { return 3.0 - (3.0 + x * (3.0 + x)) * std::exp(-x); }

double h4_direct(double x) {
  return 15.0 - (15.0 + x * (15.0 + x * (6.0 + x))) * std::exp(-x);
}

double h1m_series(double x) {
  // (1+x)e^{-x} - 1 = sum_{k>=2} (-1)^{k+1} (k-1) x^k / k!
  double xk = x * x;
  double kfact = 2.0;
  double sign = -1.0;
  double sum = 0.0;
  for (int k = 2; k < 40; ++k) {
    const double term = sign * (k - 1) * xk / kfact;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-18) break;
    xk *= x;
    kfact *= k + 1;
    sign = -sign;
  }
  return sum;
}

double g_switch() { return kGSwitch; }
double h_switch() { return kHSwitch; }

}  // namespace detail

double bracket_g1(double x) {
  require_positive(x, "bracket_g1");
  if (x < kGSwitch) return detail::g1_series(x);
  return bessel_k0(x) + 2.0 * bracket_k1m(x) / x;
}

double bracket_g2(double x) {
  require_positive(x, "bracket_g2");
  if (x < kGSwitch) return detail::g2_series(x);
  return bessel_k0(x) + bracket_k1m(x) / x;
}

double bracket_k1m(double x) {
  require_positive(x, "bracket_k1m");
  if (x < kK1mSwitch) return detail::k1m_series(x);
  return bessel_k1(x) - 1.0 / x;
}

double bracket_h1(double x) {
  require_nonnegative(x, "bracket_h1");
  return (1.0 + x) * std::exp(-x);
}

double bracket_h1m(double x) {
  require_nonnegative(x, "bracket_h1m");
  if (x < kHSwitch) return detail::h1m_series(x);
  return (1.0 + x) * std::exp(-x) - 1.0;
}

double bracket_h2(double x) {
  require_nonnegative(x, "bracket_h2");
  return x < kHSwitch ? detail::h2_series(x) : detail::h2_direct(x);
}

double bracket_h3(double x) {
  require_nonnegative(x, "bracket_h3");
  return x < kHSwitch ? detail::h3_series(x) : detail::h3_direct(x);
}

double bracket_h4(double x) {
  require_nonnegative(x, "bracket_h4");
  return x < kHSwitch ? detail::h4_series(x) : detail::h4_direct(x);
}

}  // namespace csg::specfun
