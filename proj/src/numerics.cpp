#include "hatom/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hatom::numerics {

QuadratureRule gauss_legendre(int order) {
    if (order < 2 || order > 4096)
        throw std::domain_error("gauss_legendre: order must be in [2, 4096]");

    static std::mutex mu;
    static std::map<int, QuadratureRule> cache;
    {
        std::scoped_lock lock(mu);
        if (auto it = cache.find(order); it != cache.end()) return it->second;
    }

    QuadratureRule rule;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev guess, then Newton on P_n (Numerical Recipes gauleg).
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }

    std::scoped_lock lock(mu);
    return cache.emplace(order, std::move(rule)).first->second;
}

double apply_rule(const QuadratureRule& rule, const Fn& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < rule.order; ++i)
        acc += rule.weights[i] * f(mid + hw * rule.nodes[i]);
    return acc * hw;
}

namespace {

struct AdaptiveCtx {
    const Fn& f;
    const QuadratureRule& rule;
    double tol;
    int max_depth;
};

double adapt_panel(const AdaptiveCtx& ctx, double a, double b, double coarse,
                   int depth) {
    const double mid = 0.5 * (a + b);
    const double left = apply_rule(ctx.rule, ctx.f, a, mid);
    const double right = apply_rule(ctx.rule, ctx.f, mid, b);
    const double fine = left + right;
    if (std::abs(fine - coarse) <= ctx.tol * (1.0 + std::abs(fine)))
        return fine;
    if (depth >= ctx.max_depth)
        throw std::runtime_error(
            "integrate_finite: no convergence on [" + std::to_string(a) + ", " +
            std::to_string(b) + "]");
    return adapt_panel(ctx, a, mid, left, depth + 1) +
           adapt_panel(ctx, mid, b, right, depth + 1);
}

}  // namespace

double integrate_finite(const Fn& f, double a, double b, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("integrate_finite: tol must be > 0");
    if (a == b) return 0.0;
    const QuadratureRule& rule = gauss_legendre(16);
    // Panel tolerance is stricter than the requested total so that panel
    // errors can accumulate without breaching it.
    AdaptiveCtx ctx{f, rule, 0.1 * tol, 28};
    return adapt_panel(ctx, a, b, apply_rule(rule, f, a, b), 0);
}

double integrate_semi_infinite(const Fn& f, double tol, double initial) {
    if (!(tol > 0.0))
        throw std::domain_error("integrate_semi_infinite: tol must be > 0");
    double upper = (initial > 0.0) ? initial : 16.0;
    double total = integrate_finite(f, 0.0, upper, tol);
    int calm = 0;
    while (upper < 1e9) {
        const double tail = integrate_finite(f, upper, 2.0 * upper, tol);
        total += tail;
        upper *= 2.0;
        if (std::abs(tail) <= 0.25 * tol * (1.0 + std::abs(total))) {
            if (++calm >= 2) return total;
        } else {
            calm = 0;
        }
    }
    throw std::runtime_error("integrate_semi_infinite: tail does not settle");
}

double find_root_bracketed(const Fn& f, double lo, double hi, double tol) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw std::domain_error("find_root_bracketed: endpoints do not bracket");

    // Brent's method, following the classic zeroin structure.
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q),
                                   std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    throw std::runtime_error("find_root_bracketed: iteration cap hit");
}

ShootingResult solve_radial_ode(int l, double Z, double E, double r_c,
                                int grid_size) {
    if (grid_size < 100)
        throw std::domain_error("solve_radial_ode: grid too small");
    if (!(r_c > 0.0)) throw std::domain_error("solve_radial_ode: r_c must be > 0");

    const int n = grid_size;
    const double h = r_c / n;
    const double h2_12 = h * h / 12.0;

    ShootingResult out;
    out.grid_values.assign(n + 1, 0.0);
    std::vector<double>& u = out.grid_values;

    // k(r) = 2E + 2Z/r - l(l+1)/r^2, so u'' = -k u. At r = 0 the product
    // k u vanishes for the regular solution, so that term is dropped.
    auto k_at = [&](int i) {
        const double r = i * h;
        return 2.0 * E + 2.0 * Z / r - l * (l + 1.0) / (r * r);
    };

    u[0] = 0.0;
    // Regular series start: u ~ r^{l+1} (1 - Z r/(l+1)).
    u[1] = std::pow(h, l + 1) * (1.0 - Z * h / (l + 1.0));
    if (u[1] == 0.0) u[1] = 1e-200;

    double peak = std::abs(u[1]);
    int nodes = 0;
    double t_prev = 0.0;                       // (1 + h^2 k/12) u at i-1
    double t_cur = (1.0 + h2_12 * k_at(1)) * u[1];
    double k_cur = k_at(1);
    for (int i = 1; i < n; ++i) {
        const double k_next = k_at(i + 1);
        const double t_next = 2.0 * u[i] * (1.0 - 5.0 * h2_12 * k_cur) - t_prev;
        const double u_next = t_next / (1.0 + h2_12 * k_next);
        u[i + 1] = u_next;
        if (u[i] != 0.0 && u_next != 0.0 && (u_next > 0.0) != (u[i] > 0.0) &&
            i + 1 <= n - 1)
            ++nodes;
        peak = std::max(peak, std::abs(u_next));
        t_prev = t_cur;
        t_cur = t_next;
        k_cur = k_next;
        if (peak > 1e250) {
            // Renormalize the whole history; the equation is linear.
            for (int j = 0; j <= i + 1; ++j) u[j] *= 1e-250;
            t_prev *= 1e-250;
            t_cur *= 1e-250;
            peak *= 1e-250;
        }
    }
    out.node_count = nodes;
    out.boundary_value = u[n] / peak;
    return out;
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y,
                         double slope_left, double slope_right)
    : x_(std::move(x)), y_(std::move(y)) {
    const size_t n = x_.size();
    if (n < 3 || y_.size() != n)
        throw std::domain_error("CubicSpline: need >= 3 matching knots");
    y2_.assign(n, 0.0);
    std::vector<double> tmp(n, 0.0);
    // Clamped tridiagonal sweep (Numerical Recipes spline with specified
    // first derivatives at both ends).
    y2_[0] = -0.5;
    tmp[0] = 3.0 / (x_[1] - x_[0]) *
             ((y_[1] - y_[0]) / (x_[1] - x_[0]) - slope_left);
    for (size_t i = 1; i + 1 < n; ++i) {
        const double sig = (x_[i] - x_[i - 1]) / (x_[i + 1] - x_[i - 1]);
        const double p = sig * y2_[i - 1] + 2.0;
        y2_[i] = (sig - 1.0) / p;
        const double dd = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]) -
                          (y_[i] - y_[i - 1]) / (x_[i] - x_[i - 1]);
        tmp[i] = (6.0 * dd / (x_[i + 1] - x_[i - 1]) - sig * tmp[i - 1]) / p;
    }
    const double qn = 0.5;
    const double un = 3.0 / (x_[n - 1] - x_[n - 2]) *
                      (slope_right -
                       (y_[n - 1] - y_[n - 2]) / (x_[n - 1] - x_[n - 2]));
    y2_[n - 1] = (un - qn * tmp[n - 2]) / (qn * y2_[n - 2] + 1.0);
    for (size_t i = n - 1; i-- > 0;) y2_[i] = y2_[i] * y2_[i + 1] + tmp[i];
}

double CubicSpline::operator()(double x) const {
    const size_t n = x_.size();
    size_t hi = std::upper_bound(x_.begin(), x_.end(), x) - x_.begin();
    hi = std::clamp<size_t>(hi, 1, n - 1);
    const size_t lo = hi - 1;
    const double w = x_[hi] - x_[lo];
    const double a = (x_[hi] - x) / w;
    const double b = (x - x_[lo]) / w;
    return a * y_[lo] + b * y_[hi] +
           ((a * a * a - a) * y2_[lo] + (b * b * b - b) * y2_[hi]) * w * w / 6.0;
}

double CubicSpline::derivative(double x) const {
    const size_t n = x_.size();
    size_t hi = std::upper_bound(x_.begin(), x_.end(), x) - x_.begin();
    hi = std::clamp<size_t>(hi, 1, n - 1);
    const size_t lo = hi - 1;
    const double w = x_[hi] - x_[lo];
    const double a = (x_[hi] - x) / w;
    const double b = (x - x_[lo]) / w;
    return (y_[hi] - y_[lo]) / w +
           ((3.0 * b * b - 1.0) * y2_[hi] - (3.0 * a * a - 1.0) * y2_[lo]) * w /
               6.0;
}

}  // namespace hatom::numerics
