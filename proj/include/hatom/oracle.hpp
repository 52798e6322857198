#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hatom/hydrogenic.hpp"

// Independent verification routes. Everything here deliberately uses a
// different discretization than the production path (composite Simpson
// instead of adaptive Gauss-Legendre, finite-difference matrices instead of
// Numerov shooting, gradient functionals instead of expectation-value
// identities) so that agreement between the two is meaningful evidence and
// their failure modes differ.

namespace hatom::oracle {

using hydrogenic::RadialAmplitude;

// Composite Simpson integration on a uniform grid with `points` samples
// (rounded up to an odd count). Requires points >= 100000 so that the
// low-order rule still reaches crosscheck accuracy.
double dense_grid_integrate(const std::function<double(double)>& f, double a,
                            double b, int points);

// Lowest five eigenvalues of the radial Hamiltonian
//   -u''/2 + [l(l+1)/(2 r^2) - Z/r] u = E u,  u(0) = u(r_c) = 0,
// discretized with the three-point stencil on a uniform mesh of `mesh`
// subintervals. Eigenvalues of the tridiagonal matrix are extracted by
// Sturm-sequence bisection; since the stencil error is O(h^2) the routine
// solves at `mesh` and `2 * mesh` and returns the Richardson combination
// (4 E_fine - E_coarse) / 3. Requires mesh >= 5000.
std::vector<double> fd_matrix_energies(int l, double Z, double r_c, int mesh);

// Radial probability density sampled on a uniform grid, rho[i] = rho_r(r[i]),
// normalized so that integral rho_r(r) r^2 dr = 1.
struct DensityGrid {
    std::vector<double> r;
    std::vector<double> rho;
};

struct GradientFisherResult {
    double value = 0.0;

    // Relative change when the functional is re-evaluated on the grid
    // coarsened by a factor of two; above 1e-5 the flag is set.
    double halving_change = 0.0;
    bool grid_too_coarse = false;
};

// Position-space Fisher information evaluated from the defining gradient
// functional integral |grad rho|^2 / rho d^3r with centered finite
// differences on the sampled density. For an m = 0 state the angular
// gradient integrates to 4 l (l+1) integral rho_r dr on top of the radial
// term. Requires an odd number of samples on a uniform grid so the coarsened
// pass covers the same interval.
GradientFisherResult fisher_gradient_form(const DensityGrid& grid, int l);

// Uniform sampling helper: rho = psi^2 on [0, r_end] with `samples` points.
DensityGrid sample_density(const RadialAmplitude& psi, double r_end,
                           int samples);

// <p^2> evaluated entirely in position space through u = r psi,
//   <p^2> = integral u'^2 dr + l(l+1) integral (u/r)^2 dr,
// the integration-by-parts identity. u' comes from centered differences and
// the result is Richardson-extrapolated over step halving, so this route
// never touches the momentum-space pipeline.
double kinetic_from_position(const RadialAmplitude& psi, int l,
                             int samples = 200001);

struct CrosscheckReport {
    std::string name;
    double production = 0.0;
    double oracle = 0.0;
    double abs_dev = 0.0;
    double rel_dev = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// rel_dev scales by max(|production|, |oracle|, 1e-12), so quantities that
// are legitimately near zero get compared absolutely.
CrosscheckReport crosscheck(const std::string& name, double production,
                            double oracle, double rel_tol);

}  // namespace hatom::oracle
