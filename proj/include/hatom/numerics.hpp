#pragma once

#include <functional>
#include <vector>

// Quadrature, root finding, and the Numerov integrator for the radial
// Schroedinger equation. All integrators take plain std::function callbacks;
// tolerances are treated as relative against 1 + |integral|.

namespace hatom::numerics {

using Fn = std::function<double(double)>;

struct QuadratureRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
    int order = 0;
};

// Gauss-Legendre nodes and weights, order 2..4096. Computed by Newton
// iteration on P_n with the Chebyshev initial guess; rules are cached.
QuadratureRule gauss_legendre(int order);

// Apply a rule to f on [a, b].
double apply_rule(const QuadratureRule& rule, const Fn& f, double a, double b);

// Adaptive integral of f over the finite interval [a, b]. Panels are
// bisected until the 16-point rule and its two-half refinement agree to
// tol * (1 + |I|). Throws on non-convergence (depth cap).
double integrate_finite(const Fn& f, double a, double b, double tol);

// Integral of f over [0, inf) for integrands that decay at least like a
// steep power law. The cutoff starts at `initial` and doubles until two
// consecutive tail additions are negligible against tol.
double integrate_semi_infinite(const Fn& f, double tol, double initial = 16.0);

// Brent's method on a bracketing interval [lo, hi] with f(lo) f(hi) <= 0.
// tol is the absolute x tolerance (a relative term is added internally).
double find_root_bracketed(const Fn& f, double lo, double hi, double tol);

struct ShootingResult {
    // u(r_c) normalized by max_i |u(r_i)|, so it is scale-free but keeps
    // the sign and vanishes exactly at an eigenvalue.
    double boundary_value = 0.0;
    int node_count = 0;             // strict interior sign changes of u
    std::vector<double> grid_values;  // u on the uniform grid, unnormalized
};

// Numerov integration of u'' = [l(l+1)/r^2 - 2Z/r - 2E] u outward from
// u(0) = 0 with the regular series start, on grid_size uniform steps over
// [0, r_c]. grid_values has grid_size + 1 entries.
ShootingResult solve_radial_ode(int l, double Z, double E, double r_c,
                                int grid_size);

// Natural workhorse used by several modules: cubic spline with clamped end
// slopes over an ascending knot set.
class CubicSpline {
  public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y,
                double slope_left, double slope_right);
    double operator()(double x) const;
    double derivative(double x) const;
    bool empty() const { return x_.empty(); }

  private:
    std::vector<double> x_, y_, y2_;  // y2_: second derivatives at knots
};

}  // namespace hatom::numerics
