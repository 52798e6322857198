#include "hatom/measures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hatom/numerics.hpp"
#include "hatom/specfun.hpp"

namespace hatom::measures {

using numerics::Fn;

namespace {

constexpr double kPi = std::numbers::pi;

// Interior zeros of P_l^m on (-1, 1) by sign-change scanning and bisection.
std::vector<double> legendre_zeros(int l, int m) {
    std::vector<double> zeros;
    const int samples = 64 * (l + 1);
    auto f = [&](double x) { return specfun::assoc_legendre(l, m, x); };
    double x_prev = -1.0 + 1e-12;
    double f_prev = f(x_prev);
    for (int i = 1; i <= samples; ++i) {
        const double x = -1.0 + 2.0 * i / samples - (i == samples ? 1e-12 : 0.0);
        const double fx = f(x);
        if (f_prev == 0.0) zeros.push_back(x_prev);
        else if (f_prev * fx < 0.0) {
            double a = x_prev, b = x;
            for (int it = 0; it < 80; ++it) {
                const double c = 0.5 * (a + b);
                if (f(a) * f(c) <= 0.0) b = c; else a = c;
            }
            zeros.push_back(0.5 * (a + b));
        }
        x_prev = x;
        f_prev = fx;
    }
    return zeros;
}

double angular_integral(int l, int m, const Fn& g, bool polynomial) {
    // integral over the sphere of g(chi-argument) with chi phi-independent:
    // 2 pi * integral_{-1}^{1} g(x) dx in x = cos theta.
    if (polynomial) {
        static const numerics::QuadratureRule& rule =
            numerics::gauss_legendre(200);
        return 2.0 * kPi * numerics::apply_rule(rule, g, -1.0, 1.0);
    }
    std::vector<double> cuts = legendre_zeros(l, std::abs(m));
    cuts.insert(cuts.begin(), -1.0);
    cuts.push_back(1.0);
    double acc = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        acc += numerics::integrate_finite(g, cuts[i], cuts[i + 1], 1e-12);
    return 2.0 * kPi * acc;
}

double chi_norm(int l, int m) {
    const int ma = std::abs(m);
    return (2.0 * l + 1.0) / (4.0 * kPi) *
           std::exp(specfun::log_gamma(l - ma + 1.0) -
                    specfun::log_gamma(l + ma + 1.0));
}

// Shannon integrand tail completion for momentum densities of confined
// states. Past the sampled grid the density follows the two-component model
//   Pi(p) = c sin^2(p rc - l pi/2) / p^6 + s / p^(2l+8);
// its Shannon contribution decays like ln(p)/p^4 and converges quickly
// under cutoff doubling of the closed-form integrand.
double shannon_tail(const RadialAmplitude& a) {
    const double P0 = a.tail_from;
    auto model = [&](double p) {
        if (p <= P0) return 0.0;
        const double s = std::sin(p * a.tail_rc - 0.5 * a.tail_l * kPi);
        const double rho = a.tail_c * s * s / std::pow(p, 6) +
                           a.tail_smooth / std::pow(p, 2.0 * a.tail_l + 8.0);
        return rho > 0.0 ? -rho * std::log(rho) * p * p : 0.0;
    };
    return numerics::integrate_semi_infinite(model, 1e-10, 2.0 * P0);
}

double shannon_radial(const RadialAmplitude& a, double tol) {
    auto f = [&](double x) {
        const double v = a.value(x);
        const double rho = v * v;
        return rho > 0.0 ? -rho * std::log(rho) * x * x : 0.0;
    };
    if (a.has_tail())
        return numerics::integrate_finite(f, 0.0, a.tail_from, tol) +
               shannon_tail(a);
    if (a.semi_infinite)
        return numerics::integrate_semi_infinite(f, tol, a.domain_end);
    return numerics::integrate_finite(f, 0.0, a.domain_end, tol);
}

// Analytic tail of the entropic moment of order lambda for the momentum
// density model beyond the sampled grid. The oscillatory part uses the
// period average of sin^(2 lambda), Gamma(lambda + 1/2) / (sqrt(pi)
// Gamma(lambda + 1)); the smooth part is a plain power integral. Orders at
// or below 1/2 make the kink contribution divergent.
double entropic_tail(const RadialAmplitude& a, double lambda) {
    double tail = 0.0;
    const double P0 = a.tail_from;
    if (a.tail_c > 0.0) {
        if (lambda <= 0.5)
            throw std::domain_error(
                "entropic_moment_radial: order <= 1/2 diverges on a "
                "hard-wall momentum density (kink tail ~ p^-6)");
        const double avg = std::exp(specfun::log_gamma(lambda + 0.5) -
                                    specfun::log_gamma(lambda + 1.0)) /
                           std::sqrt(kPi);
        tail += avg * std::pow(a.tail_c, lambda) *
                std::pow(P0, 3.0 - 6.0 * lambda) / (6.0 * lambda - 3.0);
    }
    if (a.tail_smooth > 0.0) {
        const double e = lambda * (2.0 * a.tail_l + 8.0) - 3.0;
        if (e <= 0.0)
            throw std::domain_error(
                "entropic_moment_radial: order too small, the moment "
                "diverges on the smooth momentum tail");
        tail += std::pow(a.tail_smooth, lambda) * std::pow(P0, -e) / e;
    }
    return tail;
}

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

}  // namespace

void EntropicParams::validate() const {
    if (!(alpha > 0.0) || !(beta > 0.0) || alpha == 1.0 || beta == 1.0)
        throw std::domain_error(
            "EntropicParams: orders must be positive and differ from 1");
    if (conjugate && std::abs(1.0 / alpha + 1.0 / beta - 2.0) >= 1e-12)
        throw std::domain_error(
            "EntropicParams: conjugate flag set but 1/alpha + 1/beta != 2");
}

double entropic_moment_radial(const RadialAmplitude& density, double lambda,
                              double tol) {
    if (!(lambda > 0.0))
        throw std::domain_error("entropic_moment_radial: lambda must be > 0");
    if (!(tol > 0.0))
        throw std::domain_error("entropic_moment_radial: tol must be > 0");
    auto f = [&](double x) {
        const double v = density.value(x);
        const double rho = v * v;
        return rho > 0.0 ? std::pow(rho, lambda) * x * x : 0.0;
    };
    if (density.has_tail())
        return numerics::integrate_finite(f, 0.0, density.tail_from, tol) +
               entropic_tail(density, lambda);
    if (density.semi_infinite)
        return numerics::integrate_semi_infinite(f, tol, density.domain_end);
    return numerics::integrate_finite(f, 0.0, density.domain_end, tol);
}

double entropic_moment_angular(int l, int m, double lambda) {
    if (!(lambda > 0.0))
        throw std::domain_error("entropic_moment_angular: lambda must be > 0");
    if (l < 0 || std::abs(m) > l)
        throw std::domain_error("entropic_moment_angular: need |m| <= l");
    const double N = chi_norm(l, m);
    const int ma = std::abs(m);
    auto g = [&](double x) {
        const double P = specfun::assoc_legendre(l, ma, x);
        const double chi = N * P * P;
        return chi > 0.0 ? std::pow(chi, lambda) : 0.0;
    };
    return angular_integral(l, m, g, near_integer(lambda));
}

double shannon_angular(int l, int m) {
    const double N = chi_norm(l, m);
    const int ma = std::abs(m);
    auto g = [&](double x) {
        const double P = specfun::assoc_legendre(l, ma, x);
        const double chi = N * P * P;
        return chi > 0.0 ? -chi * std::log(chi) : 0.0;
    };
    return angular_integral(l, m, g, false);
}

ShannonRecord shannon(const RadialAmplitude& rho_r, const RadialAmplitude& rho_p,
                      int l, int m, double tol) {
    ShannonRecord rec;
    rec.S_r = shannon_radial(rho_r, tol);
    rec.S_p = shannon_radial(rho_p, tol);
    rec.S_ang = shannon_angular(l, m);
    rec.S_rho = rec.S_r + rec.S_ang;
    rec.S_pi = rec.S_p + rec.S_ang;
    rec.S_total = rec.S_rho + rec.S_pi;
    rec.bound = 3.0 * (1.0 + std::log(kPi));
    rec.bound_ok = rec.S_total >= rec.bound - 1e-9 * std::abs(rec.bound);
    return rec;
}

double renyi_bound(double alpha, double beta) {
    auto half_term = [](double lam) {
        // ln(lambda)/(1 - lambda), continued by its limit -1 at lambda = 1.
        if (std::abs(lam - 1.0) < 1e-9) return -1.0 - 0.5 * (lam - 1.0);
        return std::log(lam) / (1.0 - lam);
    };
    return 3.0 * (-0.5 * (half_term(alpha) + half_term(beta)) + std::log(kPi));
}

RenyiRecord renyi(const RadialAmplitude& rho_r, const RadialAmplitude& rho_p,
                  int l, int m, const EntropicParams& params, double tol) {
    params.validate();
    const double a = params.alpha, b = params.beta;
    RenyiRecord rec;
    const double w_r = entropic_moment_radial(rho_r, a, tol);
    const double w_p = entropic_moment_radial(rho_p, b, tol);
    const double w_ang_a = entropic_moment_angular(l, m, a);
    const double w_ang_b = entropic_moment_angular(l, m, b);
    rec.R_r = std::log(w_r) / (1.0 - a);
    rec.R_p = std::log(w_p) / (1.0 - b);
    rec.R_ang_alpha = std::log(w_ang_a) / (1.0 - a);
    rec.R_ang_beta = std::log(w_ang_b) / (1.0 - b);
    rec.R_rho = rec.R_r + rec.R_ang_alpha;
    rec.R_pi = rec.R_p + rec.R_ang_beta;
    rec.R_total = rec.R_rho + rec.R_pi;
    if (params.conjugate) {
        rec.bound = renyi_bound(a, b);
        rec.bound_ok = rec.R_total >= rec.bound - 1e-9 * std::abs(rec.bound);
    }
    return rec;
}

TsallisRecord tsallis(const RadialAmplitude& rho_r, const RadialAmplitude& rho_p,
                      int l, int m, const EntropicParams& params, double tol) {
    params.validate();
    const double a = params.alpha, b = params.beta;
    TsallisRecord rec;
    const double w_r = entropic_moment_radial(rho_r, a, tol);
    const double w_p = entropic_moment_radial(rho_p, b, tol);
    const double w_ang_a = entropic_moment_angular(l, m, a);
    const double w_ang_b = entropic_moment_angular(l, m, b);
    rec.T_r = (1.0 - w_r) / (a - 1.0);
    rec.T_p = (1.0 - w_p) / (b - 1.0);
    rec.T_rho = (1.0 - w_r * w_ang_a) / (a - 1.0);
    rec.T_pi = (1.0 - w_p * w_ang_b) / (b - 1.0);
    rec.T_total = rec.T_rho * rec.T_pi;
    return rec;
}

OnicescuRecord onicescu(const RadialAmplitude& rho_r,
                        const RadialAmplitude& rho_p, int l, int m,
                        double tol) {
    OnicescuRecord rec;
    rec.E_r = entropic_moment_radial(rho_r, 2.0, tol);
    rec.E_p = entropic_moment_radial(rho_p, 2.0, tol);
    rec.E_ang = entropic_moment_angular(l, m, 2.0);
    rec.E_rho = rec.E_r * rec.E_ang;
    rec.E_pi = rec.E_p * rec.E_ang;
    rec.E_total = rec.E_rho * rec.E_pi;
    return rec;
}

FisherRecord fisher(const ExpectationSet& expect, int l, int m) {
    const int ma = std::abs(m);
    if (ma != 0 && expect.pm2_diverged)
        throw std::domain_error("fisher: <p^-2> unavailable for m != 0");
    FisherRecord rec;
    rec.I_rho = 4.0 * expect.p2_avg - 2.0 * (2.0 * l + 1.0) * ma * expect.rm2_avg;
    rec.I_pi = 4.0 * expect.r2_avg - 2.0 * (2.0 * l + 1.0) * ma * expect.pm2_avg;
    rec.I_total = rec.I_rho * rec.I_pi;
    const double rp = expect.r2_avg * expect.p2_avg;
    rec.lower = 81.0 / rp;
    rec.upper = 16.0 * rp;
    // m = 0 saturates the upper bound exactly; allow rounding slack.
    rec.bound_ok = rec.I_total >= rec.lower * (1.0 - 1e-9) &&
                   rec.I_total <= rec.upper * (1.0 + 1e-9);
    return rec;
}

}  // namespace hatom::measures
