#pragma once

namespace csg::specfun {

/// Modified Bessel function of the second kind, order zero.
/// Relative accuracy a few ulps over the double range; underflows to 0
/// for x beyond roughly 746. Throws std::domain_error for x <= 0 or
/// non-finite x.
double bessel_k0(double x);

/// Modified Bessel function of the second kind, order one. Same domain
/// contract as bessel_k0.
double bessel_k1(double x);

// Bracket combinations appearing in the influence functions. All take
// the dimensionless argument x = r/l. The combinations below suffer
// catastrophic cancellation for small x when evaluated term by term;
// each switches to a series representation below a threshold fixed at
// build time (CSGREENS_G_SWITCH, CSGREENS_H_SWITCH).

/// K0(x) + (2/x) K1(x) - 2/x^2. Finite limit -1/2 as x -> 0+.
double bracket_g1(double x);

/// K0(x) + (1/x) K1(x) - 1/x^2. Diverges like -log(x)/2 as x -> 0+.
double bracket_g2(double x);

/// (1 + x) e^{-x}.
double bracket_h1(double x);

/// 1 - (1 + x + x^2) e^{-x}.
double bracket_h2(double x);

/// 3 - (3 + 3x + x^2) e^{-x}.
double bracket_h3(double x);

/// 15 - (15 + 15x + 6x^2 + x^3) e^{-x}.
double bracket_h4(double x);

/// (1 + x) e^{-x} - 1; the stable form of h1 - 1 needed by the
/// rotation kernels (h1 -> 1 as x -> 0).
double bracket_h1m(double x);

/// K1(x) - 1/x; the stable form needed by the planar rotation kernels.
double bracket_k1m(double x);

namespace detail {

// Both evaluation routes exposed for the crossover tests around the
// series/direct switch thresholds.
double g1_series(double x);
double g1_direct(double x);
double g2_series(double x);
double g2_direct(double x);
double h2_series(double x);
double h2_direct(double x);
double h3_series(double x);
double h3_direct(double x);
double h4_series(double x);
double h4_direct(double x);
double h1m_series(double x);
double k1m_series(double x);

double g_switch();
double h_switch();

}  // namespace detail

}  // namespace csg::specfun
