#pragma once

#include "hatom/hydrogenic.hpp"

// Information-entropic measures of one-particle densities split into radial
// and angular factors. Angular moments integrate over the full sphere, and
// subshell quantities compose as S_rho = S_r + S_ang (logarithmic measures)
// or E_rho = E_r * E_ang (moment products).

namespace hatom::measures {

using hydrogenic::ExpectationSet;
using hydrogenic::RadialAmplitude;

struct EntropicParams {
    double alpha = 3.0 / 5.0;
    double beta = 3.0;
    bool conjugate = true;  // asserts 1/alpha + 1/beta = 2

    void validate() const;
};

struct ShannonRecord {
    double S_r = 0, S_p = 0, S_ang = 0;
    double S_rho = 0, S_pi = 0, S_total = 0;
    double bound = 0;       // 3 (1 + ln pi)
    bool bound_ok = false;  // S_total >= bound
};

struct RenyiRecord {
    double R_r = 0, R_p = 0;
    double R_ang_alpha = 0, R_ang_beta = 0;
    double R_rho = 0, R_pi = 0, R_total = 0;
    double bound = 0;       // conjugate-order lower bound on R_total
    bool bound_ok = false;
};

struct TsallisRecord {
    double T_r = 0, T_p = 0;  // radial-only entries
    double T_rho = 0, T_pi = 0, T_total = 0;
};

struct OnicescuRecord {
    double E_r = 0, E_p = 0, E_ang = 0;
    double E_rho = 0, E_pi = 0, E_total = 0;
};

struct FisherRecord {
    double I_rho = 0, I_pi = 0, I_total = 0;
    double lower = 0, upper = 0;  // 81/(<r2><p2>) and 16 <r2><p2>
    bool bound_ok = false;
};

struct MeasureReport {
    ShannonRecord shannon;
    RenyiRecord renyi;
    TsallisRecord tsallis;
    OnicescuRecord onicescu;
    FisherRecord fisher;
    ExpectationSet expect;
};

// omega^lambda = integral rho(x)^lambda x^2 dx with rho the squared
// amplitude; the integrand at rho = 0 is 0. Densities carrying the
// hard-wall momentum tail close the grid integral with the analytic tail
// model; orders <= 1/2 make that tail divergent and throw
// std::domain_error (the production conjugate pairing never puts such
// orders on the momentum side). tol is the adaptive quadrature tolerance
// for this and the record builders below.
double entropic_moment_radial(const RadialAmplitude& density, double lambda,
                              double tol = 1.0e-11);

// omega^lambda over the full sphere for chi = |Y_lm|^2: exact single
// Gauss-Legendre rule in cos(theta) for integer lambda, zero-split adaptive
// panels otherwise (the integrand has |x - x0|^(2 lambda) cusps at the
// Legendre zeros).
double entropic_moment_angular(int l, int m, double lambda);

// Angular Shannon entropy -integral chi ln chi dOmega.
double shannon_angular(int l, int m);

ShannonRecord shannon(const RadialAmplitude& rho_r, const RadialAmplitude& rho_p,
                      int l, int m, double tol = 1.0e-11);
RenyiRecord renyi(const RadialAmplitude& rho_r, const RadialAmplitude& rho_p,
                  int l, int m, const EntropicParams& params,
                  double tol = 1.0e-11);
TsallisRecord tsallis(const RadialAmplitude& rho_r, const RadialAmplitude& rho_p,
                      int l, int m, const EntropicParams& params,
                      double tol = 1.0e-11);
OnicescuRecord onicescu(const RadialAmplitude& rho_r,
                        const RadialAmplitude& rho_p, int l, int m,
                        double tol = 1.0e-11);
FisherRecord fisher(const ExpectationSet& expect, int l, int m);

// Conjugate-order lower bound on the total Renyi entropy; depends only on
// (alpha, beta). Equals 3 (1 + ln pi) in the limit alpha, beta -> 1.
double renyi_bound(double alpha, double beta);

}  // namespace hatom::measures
