#include "hatom/circular.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hatom/numerics.hpp"
#include "hatom/specfun.hpp"

namespace hatom::circular {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286;

using specfun::log_gamma;

void check(const CircularState& s) {
    if (s.n < 1 || !(s.Z > 0.0))
        throw std::domain_error("circular state: need n >= 1, Z > 0");
}

// ln omega_r^lambda for the node-less density rho_r ~ r^{2l} e^{-2Zr/n}.
double log_moment_r(int n, double Z, double lambda) {
    const int l = n - 1;
    return (3.0 * lambda - 3.0) * std::log(2.0 * Z / n) +
           log_gamma(2.0 * l * lambda + 3.0) -
           (2.0 * l * lambda + 3.0) * std::log(lambda) -
           lambda * log_gamma(2.0 * l + 3.0);
}

// ln omega_p^lambda for the node-less momentum density
// rho_p ~ q^{2l}/(1+q^2)^{2l+4}, q = n p / Z.
double log_moment_p(int n, double Z, double lambda) {
    const int l = n - 1;
    const double a = l + 1.5;   // (2l+3)/2
    const double b = l + 2.5;   // (2l+5)/2
    return (3.0 * lambda - 3.0) * std::log(static_cast<double>(n) / Z) +
           (lambda - 1.0) * std::log(2.0) +
           lambda * (log_gamma(2.0 * l + 4.0) - log_gamma(a) - log_gamma(b)) +
           log_gamma(0.5 * (2.0 * l * lambda + 3.0)) +
           log_gamma(0.5 * ((2.0 * l + 8.0) * lambda - 3.0)) -
           log_gamma((2.0 * l + 4.0) * lambda);
}

double log_moment(const CircularState& s, double lambda, Space space) {
    check(s);
    if (!(lambda > 0.0))
        throw std::domain_error("circ_moments: lambda must be > 0");
    if (space == Space::momentum && (2.0 * s.l() + 8.0) * lambda <= 3.0)
        throw std::domain_error(
            "circ_moments: momentum moment diverges for this order");
    return space == Space::position ? log_moment_r(s.n, s.Z, lambda)
                                    : log_moment_p(s.n, s.Z, lambda);
}

}  // namespace

double circ_moments(const CircularState& state, double lambda, Space space) {
    return std::exp(log_moment(state, lambda, space));
}

RenyiPair circ_renyi(const CircularState& state, double alpha, double beta) {
    if (alpha == 1.0 || beta == 1.0)
        throw std::domain_error("circ_renyi: orders must differ from 1");
    RenyiPair out;
    out.R_r = log_moment(state, alpha, Space::position) / (1.0 - alpha);
    out.R_p = log_moment(state, beta, Space::momentum) / (1.0 - beta);
    out.R_sum = out.R_r + out.R_p;
    return out;
}

TsallisPair circ_tsallis(const CircularState& state, double alpha, double beta) {
    if (alpha == 1.0 || beta == 1.0)
        throw std::domain_error("circ_tsallis: orders must differ from 1");
    TsallisPair out;
    out.T_r = (1.0 - circ_moments(state, alpha, Space::position)) / (alpha - 1.0);
    out.T_p = (1.0 - circ_moments(state, beta, Space::momentum)) / (beta - 1.0);
    return out;
}

ShannonPair circ_shannon(const CircularState& state) {
    check(state);
    const int n = state.n, l = n - 1;
    const double Z = state.Z;
    ShannonPair out;

    // Position side: the harmonic number enters through the logarithmic
    // moment of the gamma density; summed directly for exactness.
    double harmonic = 0.0;
    for (int k = 1; k <= 2 * l + 2; ++k) harmonic += 1.0 / k;
    out.S_r = 3.0 * std::log(n / (2.0 * Z)) + (2.0 * l + 3.0) +
              log_gamma(2.0 * l + 3.0) - 2.0 * l * (harmonic - kEulerGamma);

    // Momentum side: digamma combination of the beta-type density.
    const double a = l + 1.5, b = l + 2.5;
    out.S_p = std::log(Z * Z * Z) + log_gamma(a) + log_gamma(b) -
              std::log(2.0 * n * n * n) - log_gamma(2.0 * l + 4.0) -
              l * specfun::digamma(a) - (l + 4.0) * specfun::digamma(b) +
              (2.0 * l + 4.0) * specfun::digamma(2.0 * l + 4.0);
    return out;
}

double circ_shannon_p_alt(const CircularState& state) {
    check(state);
    const int n = state.n, l = n - 1;
    const double Z = state.Z;
    const double a = l + 1.5, b = l + 2.5;

    const double term1 = std::log(Z * Z * Z) + log_gamma(a) + log_gamma(b) -
                         std::log(2.0 * n * n * n) - log_gamma(2.0 * l + 4.0);
    const double term2 =
        std::sqrt(kPi) * l *
        std::exp(log_gamma(2.0 * l + 3.0) - (2.0 * l + 2.0) * std::log(2.0) -
                 log_gamma(l + 2.0) - log_gamma(b));
    const double coeff =
        (4.0 * l + 8.0) *
        std::exp(log_gamma(2.0 * l + 4.0) - log_gamma(a) - log_gamma(b));
    auto integrand = [l](double p) {
        const double d = 1.0 + p * p;
        return std::pow(p, 2 * l + 2) / std::pow(d, 2 * l + 4) * std::log(d);
    };
    const double I_p = numerics::integrate_semi_infinite(integrand, 1e-12);
    return term1 + term2 + coeff * I_p;
}

OnicescuPair circ_onicescu(const CircularState& state) {
    OnicescuPair out;
    out.E_r = circ_moments(state, 2.0, Space::position);
    out.E_p = circ_moments(state, 2.0, Space::momentum);
    return out;
}

FisherPair fha_fisher(const QuantumState& state) {
    if (state.n < 1 || state.l < 0 || state.l >= state.n ||
        std::abs(state.m) > state.l || !(state.Z > 0.0))
        throw std::domain_error("fha_fisher: invalid state");
    const double n = state.n, l = state.l, ma = std::abs(state.m);
    const double Z = state.Z;
    FisherPair out;
    out.I_rho = (4.0 * Z * Z / (n * n)) * (1.0 - ma / n);
    out.I_pi = (2.0 * n * n / (Z * Z)) *
               (5.0 * n * n + 1.0 - 3.0 * l * (l + 1.0) -
                ma * (8.0 * n - 6.0 * l - 3.0));
    return out;
}

}  // namespace hatom::circular
