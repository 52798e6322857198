#pragma once

// Special functions needed by the hydrogenic pipelines. Everything is plain
// double precision; recurrence orders stay small (k <= ~30) so upward
// three-term recurrences are safe throughout. Formula references:
// Abramowitz & Stegun ch. 6, 8, 10, 13, 22.

namespace hatom::specfun {

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Digamma psi(x) = d/dx ln Gamma(x) for x > 0.
double digamma(double x);

// Generalized Laguerre polynomial L_k^{(a)}(x).
double assoc_laguerre(int k, double a, double x);

// Gegenbauer (ultraspherical) polynomial C_k^{(eta)}(t).
double gegenbauer(int k, double eta, double t);

// Associated Legendre function P_l^m(x) for |x| <= 1, 0 <= m <= l,
// without the Condon-Shortley phase (P_m^m = (2m-1)!! (1-x^2)^{m/2}).
// Only densities |Y|^2 are consumed downstream, so the phase is moot.
double assoc_legendre(int l, int m, double x);

// Kummer confluent hypergeometric M(a, b, z) = 1F1(a; b; z) for real
// arguments, b not a non-positive integer. Negative z goes through the
// Kummer transformation M(a,b,z) = e^z M(b-a, b, -z) to avoid cancellation.
double kummer_m(double a, double b, double z);

// Spherical Bessel function j_l(x) for x >= 0. Upward recurrence when it is
// stable (x >= l), Miller's downward algorithm otherwise, power series for
// small x.
double spherical_bessel_j(int l, double x);

}  // namespace hatom::specfun
