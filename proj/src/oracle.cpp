#include "hatom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hatom::oracle {

namespace {

// Kahan-compensated accumulation; with 1e5+ Simpson terms the naive sum
// would lose a couple of digits we care about.
struct Accumulator {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Number of eigenvalues of the symmetric tridiagonal matrix (diagonal d,
// constant off-diagonal e) strictly below x, by the classic Sturm sequence
// q_i = d_i - x - e^2 / q_{i-1} counting negative pivots. Tiny pivots are
// pushed away from zero so e^2 / q cannot overflow.
int sturm_count_below(const std::vector<double>& d, double e2, double x) {
    int count = 0;
    double q = d[0] - x;
    if (std::abs(q) < 1.0e-250) q = (q < 0.0) ? -1.0e-250 : 1.0e-250;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        q = d[i] - x - e2 / q;
        if (std::abs(q) < 1.0e-250) q = (q < 0.0) ? -1.0e-250 : 1.0e-250;
        if (q < 0.0) ++count;
    }
    return count;
}

// k-th smallest eigenvalue (0-based) by bisection on the Sturm count.
double sturm_eigenvalue(const std::vector<double>& d, double e2, int k,
                        double lo, double hi) {
    for (int iter = 0; iter < 220 && hi - lo >
         1.0e-14 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
         ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count_below(d, e2, mid) <= k) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Lowest `count` eigenvalues of the finite-difference radial Hamiltonian on
// a mesh of n subintervals.
std::vector<double> fd_spectrum(int l, double Z, double r_c, int n,
                                int count) {
    const double h = r_c / n;
    const double inv_h2 = 1.0 / (h * h);
    std::vector<double> d(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i < n; ++i) {
        const double r = i * h;
        d[i - 1] = inv_h2 + 0.5 * l * (l + 1.0) / (r * r) - Z / r;
    }
    const double e = -0.5 * inv_h2;
    const double e2 = e * e;

    double lo = d[0] - 2.0 * std::abs(e);
    double hi = d[0] + 2.0 * std::abs(e);
    for (double di : d) {
        lo = std::min(lo, di - 2.0 * std::abs(e));
        hi = std::max(hi, di + 2.0 * std::abs(e));
    }

    std::vector<double> out;
    out.reserve(count);
    double floor_bound = lo;
    for (int k = 0; k < count; ++k) {
        const double ek = sturm_eigenvalue(d, e2, k, floor_bound, hi);
        out.push_back(ek);
        // Eigenvalues are ordered, so the next search can start here.
        floor_bound = ek - 1.0e-10 * (1.0 + std::abs(ek));
    }
    return out;
}

// Centered first derivative with second-order one-sided ends.
std::vector<double> fd_derivative(const std::vector<double>& y, double h) {
    const std::size_t n = y.size();
    std::vector<double> dy(n);
    dy[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        dy[i] = (y[i + 1] - y[i - 1]) / (2.0 * h);
    }
    dy[n - 1] = (3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * h);
    return dy;
}

double trapezoid(const std::vector<double>& y, double h) {
    Accumulator acc;
    acc.add(0.5 * y.front());
    for (std::size_t i = 1; i + 1 < y.size(); ++i) acc.add(y[i]);
    acc.add(0.5 * y.back());
    return acc.sum * h;
}

// One pass of the gradient functional on uniformly spaced samples.
double gradient_functional(const std::vector<double>& r,
                           const std::vector<double>& rho, int l, double h) {
    const std::size_t n = r.size();
    const std::vector<double> drho = fd_derivative(rho, h);

    std::vector<double> radial(n);
    for (std::size_t i = 0; i < n; ++i) {
        radial[i] = drho[i] * drho[i] / (rho[i] + 1.0e-300) * r[i] * r[i];
    }
    // (rho')^2 / rho stays finite wherever the density vanishes smoothly
    // (it equals 4 psi'^2 for rho = psi^2), but the sampled ratio turns
    // into noise over tiny once rho falls below roundoff scale: at a node
    // that lands on a sample, in the deep shadow of a wide box, and at the
    // hard wall itself. Bridge every such run of samples linearly between
    // its healthy neighbors.
    double rho_max = 0.0;
    for (double v : rho) rho_max = std::max(rho_max, v);
    const double rho_floor = 1.0e-13 * rho_max;
    std::size_t i = 0;
    while (i < n) {
        if (rho[i] >= rho_floor) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && rho[j] < rho_floor) ++j;
        const bool has_lo = i > 0;
        const bool has_hi = j < n;
        for (std::size_t k = i; k < j; ++k) {
            if (has_lo && has_hi) {
                const double t = static_cast<double>(k - i + 1) /
                                 static_cast<double>(j - i + 1);
                radial[k] = radial[i - 1] + t * (radial[j] - radial[i - 1]);
            } else if (has_lo) {
                radial[k] = radial[i - 1];
            } else if (has_hi) {
                radial[k] = radial[j];
            } else {
                radial[k] = 0.0;
            }
        }
        i = j;
    }

    const double radial_term = trapezoid(radial, h);
    const double angular_term =
        (l > 0) ? 4.0 * l * (l + 1.0) * trapezoid(rho, h) : 0.0;
    return radial_term + angular_term;
}

}  // namespace

double dense_grid_integrate(const std::function<double(double)>& f, double a,
                            double b, int points) {
    if (points < 100000) {
        throw std::invalid_argument(
            "dense_grid_integrate: needs at least 100000 points");
    }
    if (!(b > a)) {
        throw std::invalid_argument("dense_grid_integrate: needs b > a");
    }
    if (points % 2 == 0) ++points;  // composite Simpson wants even intervals

    const double h = (b - a) / (points - 1);
    Accumulator acc;
    acc.add(f(a));
    acc.add(f(b));
    for (int i = 1; i < points - 1; ++i) {
        const double w = (i % 2 == 1) ? 4.0 : 2.0;
        acc.add(w * f(a + i * h));
    }
    return acc.sum * h / 3.0;
}

std::vector<double> fd_matrix_energies(int l, double Z, double r_c,
                                       int mesh) {
    if (mesh < 5000) {
        throw std::invalid_argument(
            "fd_matrix_energies: needs mesh >= 5000");
    }
    if (l < 0 || !(r_c > 0.0)) {
        throw std::invalid_argument(
            "fd_matrix_energies: needs l >= 0 and r_c > 0");
    }
    constexpr int kCount = 5;
    const std::vector<double> coarse = fd_spectrum(l, Z, r_c, mesh, kCount);
    const std::vector<double> fine = fd_spectrum(l, Z, r_c, 2 * mesh, kCount);
    std::vector<double> out(kCount);
    for (int k = 0; k < kCount; ++k) {
        out[k] = (4.0 * fine[k] - coarse[k]) / 3.0;
    }
    return out;
}

GradientFisherResult fisher_gradient_form(const DensityGrid& grid, int l) {
    const std::size_t n = grid.r.size();
    if (n < 9 || grid.rho.size() != n) {
        throw std::invalid_argument(
            "fisher_gradient_form: needs matching grids with >= 9 samples");
    }
    if (n % 2 == 0) {
        throw std::invalid_argument(
            "fisher_gradient_form: needs an odd sample count so the "
            "coarsened pass covers the same interval");
    }
    const double h = grid.r[1] - grid.r[0];
    const double h_last = grid.r[n - 1] - grid.r[n - 2];
    if (!(h > 0.0) || std::abs(h_last - h) > 1.0e-9 * h) {
        throw std::invalid_argument(
            "fisher_gradient_form: needs a uniform grid");
    }

    GradientFisherResult result;
    result.value = gradient_functional(grid.r, grid.rho, l, h);

    std::vector<double> r2, rho2;
    r2.reserve(n / 2 + 1);
    rho2.reserve(n / 2 + 1);
    for (std::size_t i = 0; i < n; i += 2) {
        r2.push_back(grid.r[i]);
        rho2.push_back(grid.rho[i]);
    }
    const double coarse = gradient_functional(r2, rho2, l, 2.0 * h);

    result.halving_change = std::abs(result.value - coarse) /
                            std::max(std::abs(result.value), 1.0e-300);
    result.grid_too_coarse = result.halving_change > 1.0e-5;
    return result;
}

DensityGrid sample_density(const RadialAmplitude& psi, double r_end,
                           int samples) {
    if (samples < 9 || !(r_end > 0.0)) {
        throw std::invalid_argument("sample_density: bad arguments");
    }
    DensityGrid grid;
    grid.r.resize(samples);
    grid.rho.resize(samples);
    const double h = r_end / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double r = i * h;
        const double v = psi.value(r);
        grid.r[i] = r;
        grid.rho[i] = v * v;
    }
    return grid;
}

double kinetic_from_position(const RadialAmplitude& psi, int l,
                             int samples) {
    if (samples < 9) {
        throw std::invalid_argument(
            "kinetic_from_position: needs >= 9 samples");
    }
    if (samples % 2 == 0) ++samples;
    const double r_end = psi.domain_end;

    const auto pass = [&](int m) {
        const double h = r_end / (m - 1);
        std::vector<double> u(m), psi2(m);
        for (int i = 0; i < m; ++i) {
            const double r = i * h;
            const double v = psi.value(r);
            u[i] = r * v;
            psi2[i] = v * v;
        }
        const std::vector<double> du = fd_derivative(u, h);
        std::vector<double> integrand(m);
        for (int i = 0; i < m; ++i) {
            integrand[i] = du[i] * du[i] + l * (l + 1.0) * psi2[i];
        }
        return trapezoid(integrand, h);
    };

    // Both the derivative stencil and the trapezoid carry O(h^2) error, so
    // one Richardson step over grid halving removes the leading term.
    const double fine = pass(samples);
    const double coarse = pass(samples / 2 + 1);
    return (4.0 * fine - coarse) / 3.0;
}

CrosscheckReport crosscheck(const std::string& name, double production,
                            double oracle, double rel_tol) {
    CrosscheckReport report;
    report.name = name;
    report.production = production;
    report.oracle = oracle;
    report.abs_dev = std::abs(production - oracle);
    const double scale = std::max(
        {std::abs(production), std::abs(oracle), 1.0e-12});
    report.rel_dev = report.abs_dev / scale;
    report.tolerance = rel_tol;
    report.pass = report.rel_dev <= rel_tol;
    return report;
}

}  // namespace hatom::oracle
