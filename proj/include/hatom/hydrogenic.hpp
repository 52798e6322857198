#pragma once

#include <functional>
#include <vector>

#include "hatom/numerics.hpp"

// Radial amplitudes and energies for the hydrogen atom, free and confined to
// an impenetrable sphere of radius r_c (Dirichlet wall). Atomic units
// throughout: lengths in Bohr radii, energies in Hartree.

namespace hatom::hydrogenic {

struct QuantumState {
    int n = 1;
    int l = 0;
    int m = 0;
    double Z = 1.0;
};

struct ConfinedLevel {
    int n = 0;
    int l = 0;
    double Z = 1.0;
    double r_c = 0.0;
    double energy = 0.0;
    int node_count = 0;
};

// A one-dimensional radial amplitude psi(x) normalized so that
// integral psi(x)^2 x^2 dx = 1. The probability density is psi^2.
struct RadialAmplitude {
    std::function<double(double)> value;

    // Quadrature domain: [0, domain_end] carries essentially all of the
    // density. When semi_infinite is set the amplitude extends beyond
    // domain_end with a decaying tail and integrators should keep doubling
    // the cutoff until contributions settle.
    double domain_end = 0.0;
    bool semi_infinite = false;

    int node_count = 0;

    // Norm deviation |integral psi^2 x^2 dx - 1| measured before the final
    // renormalization. Zero for analytic amplitudes.
    double norm_defect = 0.0;

    // Tail model for momentum amplitudes of confined states. Beyond
    // tail_from the squared amplitude follows
    //   psi^2 ~ tail_c * sin^2(p * tail_rc - l * pi / 2) / p^6
    //           + tail_smooth / p^(2 l + 8),
    // the oscillatory part from the derivative discontinuity at the hard
    // wall and the smooth part from the short-range (cusp) behavior at the
    // origin. Zero coefficients mean no tail model (free atom).
    double tail_c = 0.0;
    double tail_smooth = 0.0;
    double tail_rc = 0.0;
    int tail_l = 0;
    double tail_from = 0.0;

    bool has_tail() const { return tail_c > 0.0 || tail_smooth > 0.0; }
};

struct ExpectationSet {
    double r_avg = 0.0;
    double r2_avg = 0.0;
    double rm2_avg = 0.0;  // <r^-2>
    double p_avg = 0.0;
    double p2_avg = 0.0;
    double pm2_avg = 0.0;  // <p^-2>
    double delta_r = 0.0;
    double delta_p = 0.0;
    bool pm2_diverged = false;
};

// Free-atom energy -Z^2/(2 n^2).
double fha_energy(const QuantumState& state);

// Normalized free-atom radial amplitudes in position and momentum space.
// Both are closed forms (associated Laguerre, Gegenbauer); the momentum
// amplitude drops the global (-i)^l phase since only densities are used.
RadialAmplitude fha_radial_r(const QuantumState& state);
RadialAmplitude fha_radial_p(const QuantumState& state);

// Energy of the confined level with quantum numbers (n, l). The level is
// bracketed by Sturm-sequence bisection on a finite-difference
// discretization (the negative-pivot count of the shifted factorization
// counts eigenvalues, so the (n-l-1)-node level is found even where
// boundary shooting would be swamped by the growing exponential of a wide
// box), then polished to ~1e-12 relative as the root of the matching-point
// Wronskian of outward and inward Numerov sweeps run in extended precision
// on two independent grids. Bound results (E < 0) are cross-checked against
// the confluent hypergeometric wall condition M(l+1-Z/kappa, 2l+2,
// 2 kappa r_c) = 0 with kappa = sqrt(-2E). Throws std::runtime_error on
// bracketing failure, grid drift, or a failed wall-condition check.
ConfinedLevel cha_energy(int n, int l, double Z, double r_c);

// Normalized confined radial amplitude on [0, r_c]: outward and inward
// Numerov branches glued at the matching index (cubic spline through
// u_i / r_i with series-limit endpoint). The two-sided composition keeps
// the decaying tail of a wide-box bound level clean.
RadialAmplitude cha_radial_r(const ConfinedLevel& level, int grid_size);

// Spherical Bessel transform psi(p) = sqrt(2/pi) integral_0^rc psi(r)
// j_l(p r) r^2 dr, sampled on an internally chosen hybrid grid, spline
// interpolated, renormalized, and equipped with the wall-kink tail model.
// p_grid_size controls the base sample count (0 picks the default) and
// p_max_scale multiplies the automatic grid cutoff max(30, 130/r_c).
// Throws std::runtime_error if the pre-renormalization norm deviates from 1
// by more than 10%, which signals an inadequate grid.
RadialAmplitude radial_to_momentum(const RadialAmplitude& amp, int l,
                                   int p_grid_size = 0,
                                   double p_max_scale = 1.0);

// Angular density chi(theta) = |Y_lm|^2, phi-independent, normalized so that
// the full solid-angle integral of chi is 1.
std::function<double(double)> angular_density(int l, int m);

// Six radial moments <r>, <r^2>, <r^-2>, <p>, <p^2>, <p^-2> by quadrature on
// the given densities, plus the standard deviations. Momentum moments of
// confined states complete the truncated grid with the analytic kink tail.
ExpectationSet expectation_values(const RadialAmplitude& rho_r,
                                  const RadialAmplitude& rho_p);

namespace detail {

// Analytic tail of integral c sin^2(p rc - l pi/2) p^(k-6) dp from P to
// infinity for the kink amplitude model: k is the full power of p in the
// radial-density integrand (2 for the norm, 4 for <p^2>, 0 for <p^-2>).
// Derived by splitting sin^2 and integrating the oscillatory part by parts
// twice.
double kink_tail_moment(double c, double rc, int l, double P, int k);

// Analytic tail of integral c p^(k - 2l - 8) dp from P to infinity for the
// smooth component of the amplitude model, with k as above.
double smooth_tail_moment(double c, int l, double P, int k);

}  // namespace detail

}  // namespace hatom::hydrogenic
