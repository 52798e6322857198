#pragma once

#include "hatom/hydrogenic.hpp"

// Closed-form measures for node-less ("circular", l = n-1) free-atom states,
// plus the closed-form free-atom Fisher information for arbitrary (n, l, m).
// These are gamma-function expressions evaluated in log space so the n = 10
// family stays inside double range.

namespace hatom::circular {

using hydrogenic::QuantumState;

struct CircularState {
    int n = 1;
    double Z = 1.0;
    int l() const { return n - 1; }
};

enum class Space { position, momentum };

struct RenyiPair {
    double R_r = 0, R_p = 0, R_sum = 0;
};
struct TsallisPair {
    double T_r = 0, T_p = 0;
};
struct ShannonPair {
    double S_r = 0, S_p = 0;
};
struct OnicescuPair {
    double E_r = 0, E_p = 0;
};
struct FisherPair {
    double I_rho = 0, I_pi = 0;
};

// Radial entropic moment omega^lambda of the circular state in the chosen
// space.
double circ_moments(const CircularState& state, double lambda, Space space);

RenyiPair circ_renyi(const CircularState& state, double alpha, double beta);
TsallisPair circ_tsallis(const CircularState& state, double alpha, double beta);
ShannonPair circ_shannon(const CircularState& state);

// Alternate route to S_p: the direct -rho ln rho integral reduced to a
// one-dimensional integral over the momentum profile, evaluated by
// quadrature. Agrees with circ_shannon().S_p to high accuracy.
double circ_shannon_p_alt(const CircularState& state);

OnicescuPair circ_onicescu(const CircularState& state);

// Closed-form free-atom Fisher information for any (n, l, m):
//   I_rho = (4 Z^2 / n^2)(1 - |m|/n),
//   I_pi  = (2 n^2 / Z^2)[5 n^2 + 1 - 3 l (l+1) - |m|(8 n - 6 l - 3)].
FisherPair fha_fisher(const QuantumState& state);

}  // namespace hatom::circular
