#!/usr/bin/env python3
"""Regenerates the frozen reference values used by the C++ test suite.

Everything here is computed from first principles with mpmath (30 significant
digits), independently of the C++ code: closed forms for node-less hydrogenic
states, brute-force quadrature for everything else, and the confined-atom
eigenproblem solved through the Kummer function rather than an ODE grid.

Usage:  python3 tools/refvalues.py > tools/refvalues.json
Runtime is a few minutes; the JSON output is committed so the tests do not
depend on Python at build time.
"""

import json
import sys

from mpmath import mp, mpf, mpc, pi, sqrt, exp, log, gamma, loggamma, digamma
import mpmath

mp.dps = 30

ALPHA = mpf(3) / 5
BETA = mpf(3)
EULER = mp.euler


def nstr(x, digits=17):
    return mp.nstr(mp.mpf(x), digits, strip_zeros=False)


# ---------------------------------------------------------------------------
# angular factors for m = 0 states
# ---------------------------------------------------------------------------

def legendre_zeros(l):
    """Zeros of P_l in (-1, 1), refined to working precision."""
    if l == 0:
        return []
    import numpy as np
    seeds = np.polynomial.legendre.Legendre.basis(l).roots()
    return [mp.findroot(lambda x: mp.legendre(l, x), mpf(float(s))) for s in seeds]


def angular_moment(l, lam):
    """omega^lam over the full sphere for the |Y_l0|^2 density."""
    c = (2 * l + 1) / (4 * pi)
    zs = legendre_zeros(l)
    pts = [mpf(-1)] + sorted(zs) + [mpf(1)]
    f = lambda x: abs(mp.legendre(l, x)) ** (2 * lam)
    integral = mp.quad(f, pts)
    return 2 * pi * c ** lam * integral


def angular_shannon(l):
    c = (2 * l + 1) / (4 * pi)
    zs = legendre_zeros(l)
    pts = [mpf(-1)] + sorted(zs) + [mpf(1)]

    def f(x):
        P2 = mp.legendre(l, x) ** 2
        if P2 == 0:
            return mpf(0)
        return P2 * log(P2)

    integral = mp.quad(f, pts)
    # S = -int chi ln chi dOmega with chi = c P^2
    return -log(c) - c * 2 * pi * integral


def angular_block():
    out = []
    for l in range(10):
        wA = angular_moment(l, ALPHA)
        wB = angular_moment(l, BETA)
        w2 = angular_moment(l, mpf(2))
        out.append({
            "l": l,
            "S": nstr(angular_shannon(l)),
            "R_alpha": nstr(log(wA) / (1 - ALPHA)),
            "R_beta": nstr(log(wB) / (1 - BETA)),
            "T_alpha": nstr((1 - wA) / (ALPHA - 1)),
            "T_beta": nstr((1 - wB) / (BETA - 1)),
            "E": nstr(w2),
            "omega_alpha": nstr(wA),
            "omega_beta": nstr(wB),
        })
    return out


# ---------------------------------------------------------------------------
# node-less (circular) free-atom closed forms
# ---------------------------------------------------------------------------

def circ_omega_r(n, l, Z, lam):
    return (2 * Z / mpf(n)) ** (3 * lam - 3) * gamma(2 * l * lam + 3) / \
        (lam ** (2 * l * lam + 3) * gamma(2 * l + 3) ** lam)


def circ_omega_p(n, l, Z, lam):
    K = gamma(2 * l + 4) / (gamma(l + mpf(3) / 2) * gamma(l + mpf(5) / 2))
    return (mpf(n) / Z) ** (3 * lam - 3) * 2 ** (lam - 1) * K ** lam * \
        gamma((2 * l * lam + 3) / 2) * gamma(((2 * l + 8) * lam - 3) / 2) / \
        gamma((2 * l + 4) * lam)


def circ_S_r(n, l, Z):
    H = mp.fsum(mpf(1) / k for k in range(1, 2 * l + 3))
    return 3 * log(mpf(n) / (2 * Z)) + (2 * l + 3) + loggamma(2 * l + 3) - \
        2 * l * (H - EULER)


def circ_S_p(n, l, Z):
    t = log(Z ** 3 * gamma(l + mpf(3) / 2) * gamma(l + mpf(5) / 2) /
            (2 * mpf(n) ** 3 * gamma(2 * l + 4)))
    return t - l * digamma(l + mpf(3) / 2) - (l + 4) * digamma(l + mpf(5) / 2) \
        + (2 * l + 4) * digamma(2 * l + 4)


def ip_integral(l):
    f = lambda p: p ** (2 * l + 2) * (1 + p * p) ** (-(2 * l + 4)) * log(1 + p * p)
    return mp.quad(f, [0, 1, mp.inf])


def circ_S_p_alt(n, l, Z):
    t = log(Z ** 3 * gamma(l + mpf(3) / 2) * gamma(l + mpf(5) / 2) /
            (2 * mpf(n) ** 3 * gamma(2 * l + 4)))
    mid = sqrt(pi) * l * gamma(2 * l + 3) / \
        (2 ** (2 * l + 2) * gamma(l + 2) * gamma(l + mpf(5) / 2))
    coef = (4 * l + 8) * gamma(2 * l + 4) / \
        (gamma(l + mpf(5) / 2) * gamma(l + mpf(3) / 2))
    return t + mid + coef * ip_integral(l)


def circular_block():
    labels = ["1s", "2p", "3d", "4f", "5g", "6h", "7i", "8k", "9l", "10m", "11n"]
    out = []
    for n in range(1, 12):
        l = n - 1
        Z = mpf(1)
        wrA = circ_omega_r(n, l, Z, ALPHA)
        wpB = circ_omega_p(n, l, Z, BETA)
        sp = circ_S_p(n, l, Z)
        spa = circ_S_p_alt(n, l, Z)
        out.append({
            "state": labels[n - 1], "n": n, "l": l,
            "R_r": nstr(log(wrA) / (1 - ALPHA)),
            "R_p": nstr(log(wpB) / (1 - BETA)),
            "T_r": nstr((1 - wrA) / (ALPHA - 1)),
            "T_p": nstr((1 - wpB) / (BETA - 1)),
            "S_r": nstr(circ_S_r(n, l, Z)),
            "S_p": nstr(sp),
            "S_p_alt": nstr(spa),
            "S_p_route_diff": nstr(abs(sp - spa), 3),
            "E_r": nstr(circ_omega_r(n, l, Z, mpf(2))),
            "E_p": nstr(circ_omega_p(n, l, Z, mpf(2))),
            "omega_r_alpha": nstr(wrA),
            "omega_p_beta": nstr(wpB),
        })
    return out


# ---------------------------------------------------------------------------
# free-atom radial amplitudes (any state) and brute-force measures
# ---------------------------------------------------------------------------

def fha_R(n, l, Z):
    norm = 2 * Z ** mpf(1.5) / n ** 2 * sqrt(mp.factorial(n - l - 1) /
                                             mp.factorial(n + l))

    def R(r):
        x = 2 * Z * r / n
        return norm * x ** l * exp(-x / 2) * mp.laguerre(n - l - 1, 2 * l + 1, x)

    return R


def fha_P(n, l, Z):
    k = n - l - 1
    norm = n ** 2 * sqrt(2 / pi * mp.factorial(k) / mp.factorial(n + l)) * \
        2 ** (2 * l + 2) * mp.factorial(l) / Z ** mpf(1.5)

    def P(p):
        q = n * p / Z
        t = (q * q - 1) / (q * q + 1)
        return norm * q ** l / (q * q + 1) ** (l + 2) * mp.gegenbauer(k, l + 1, t)

    return P


def scan_zeros(f, lo, hi, samples=1500):
    zs = []
    prev_x = lo
    prev_v = f(lo)
    for i in range(1, samples + 1):
        x = lo + (hi - lo) * mpf(i) / samples
        v = f(x)
        if v == 0:
            zs.append(x)
        elif mp.sign(v) != mp.sign(prev_v) and prev_v != 0:
            zs.append(mp.findroot(f, (prev_x, x), solver="bisect"))
        prev_x, prev_v = x, v
    return zs


def radial_measures(amp, pts, lam_a, lam_b):
    """pts is the full ordered breakpoint list including both endpoints."""
    rho = lambda r: amp(r) ** 2

    def momq(lam):
        return mp.quad(lambda r: rho(r) ** lam * r * r, pts)

    def shannon():
        def f(r):
            d = rho(r)
            if d <= 0:
                return mpf(0)
            return d * log(d) * r * r
        return -mp.quad(f, pts)

    norm = momq(mpf(1))
    wa, wb, w2 = momq(lam_a), momq(lam_b), momq(mpf(2))
    return {
        "norm": norm, "S": shannon(),
        "R_a": log(wa) / (1 - lam_a), "R_b": log(wb) / (1 - lam_b),
        "T_a": (1 - wa) / (lam_a - 1), "T_b": (1 - wb) / (lam_b - 1),
        "E": w2,
    }


def breakpoints(zeros, upper):
    """Zero splits plus geometric padding so tanh-sinh sees no huge span."""
    pts = [mpf(0)] + sorted(z for z in zeros if 0 < z < upper)
    x = max(pts[-1] * 2, mpf(5))
    while x < upper:
        pts.append(x)
        x *= 4
    pts.append(upper)
    return pts


def fha_noncircular_block():
    states = [(2, 0), (3, 0), (3, 1), (4, 0), (4, 1), (4, 2)] + \
        [(10, l) for l in range(10)]
    out = []
    for n, l in states:
        Z = mpf(1)
        R = fha_R(n, l, Z)
        r_up = mpf(n) * 90 / (2 * Z) + 10
        r_zeros = scan_zeros(R, mpf("1e-9"), r_up * mpf("0.6"))
        mr = radial_measures(R, breakpoints(r_zeros, r_up), ALPHA, BETA)

        P = fha_P(n, l, Z)
        p_up = mpf(10) ** (mpf(30) / (2 * l + 5)) + 10
        p_zeros = scan_zeros(P, mpf("1e-9"), mpf(4))
        mp_ = radial_measures(P, breakpoints(p_zeros, p_up), ALPHA, BETA)

        out.append({
            "state": f"{n}{'spdfghiklm'[l]}",
            "n": n, "l": l,
            "r_norm_defect": nstr(mr["norm"] - 1, 3),
            "p_norm_defect": nstr(mp_["norm"] - 1, 3),
            "S_r": nstr(mr["S"]), "S_p": nstr(mp_["S"]),
            "R_r": nstr(mr["R_a"]), "R_p": nstr(mp_["R_b"]),
            "T_r": nstr(mr["T_a"]), "T_p": nstr(mp_["T_b"]),
            "E_r": nstr(mr["E"]), "E_p": nstr(mp_["E"]),
        })
    return out


# ---------------------------------------------------------------------------
# confined atom through the Kummer function (no ODE grid anywhere)
# ---------------------------------------------------------------------------

def cha_wave_factory(l, Z, E):
    """Radial factor u(r)/r^{l+1}; real for either sign of E."""
    if E < 0:
        q = sqrt(-2 * E)
        a = l + 1 - Z / q
        return lambda r: exp(-q * r) * mp.hyp1f1(a, 2 * l + 2, 2 * q * r)
    kap = sqrt(2 * E)
    a = mpc(l + 1, Z / kap)

    def F(r):
        w = exp(mpc(0, -kap * r)) * mp.hyp1f1(a, 2 * l + 2, mpc(0, 2 * kap * r))
        return w.real

    return F


def cha_energy_ref(k, l, Z, rc):
    """k-th level (k = 1 is lowest) for angular momentum l, radius rc."""
    xk = mp.besseljzero(l + mpf(1) / 2, k + 2)
    e_hi = xk * xk / (2 * rc * rc) + 2 * Z / rc + 5
    e_lo = -Z * Z / (2 * (l + 1) ** 2) - 1
    f = lambda E: cha_wave_factory(l, Z, E)(rc)
    zs = scan_zeros(f, e_lo, e_hi, samples=400)
    assert len(zs) >= k, f"found {len(zs)} levels, wanted {k}"
    return zs[k - 1]


def cha_block():
    cases = [("1s", 1, 0, mpf("0.1")), ("1s", 1, 0, mpf(1)), ("1s", 1, 0, mpf(5)),
             ("2s", 2, 0, mpf(1)), ("2s", 2, 0, mpf(5)), ("2s", 2, 0, mpf(30)),
             ("2p", 2, 1, mpf(1)), ("3d", 3, 2, mpf(1))]
    out = []
    for label, n, l, rc in cases:
        Z = mpf(1)
        k = n - l
        E = cha_energy_ref(k, l, Z, rc)
        F = cha_wave_factory(l, Z, E)
        u = lambda r: r ** (l + 1) * F(r)
        nodes = scan_zeros(u, rc * mpf("1e-6"), rc * (1 - mpf("1e-9")), samples=800)
        pts = [mpf(0)] + nodes + [rc]
        nrm2 = mp.quad(lambda r: u(r) ** 2, pts)
        amp = lambda r: u(r) / (r * sqrt(nrm2))
        mr = radial_measures(amp, pts, ALPHA, BETA)
        inv_r = mp.quad(lambda r: u(r) ** 2 / r, pts) / nrm2
        r2 = mp.quad(lambda r: u(r) ** 2 * r * r, pts) / nrm2
        p2 = 2 * E + 2 * Z * inv_r
        wA_ang = angular_moment(l, ALPHA)
        w2_ang = angular_moment(l, mpf(2))
        w_r_alpha = exp((1 - ALPHA) * mr["R_a"])
        out.append({
            "state": label, "rc": nstr(rc, 6), "n": n, "l": l,
            "energy": nstr(E),
            "S_rho": nstr(mr["S"] + angular_shannon(l)),
            "R_rho": nstr(mr["R_a"] + log(wA_ang) / (1 - ALPHA)),
            "T_rho": nstr((1 - w_r_alpha * wA_ang) / (ALPHA - 1)),
            "E_rho": nstr(mr["E"] * w2_ang),
            "I_rho": nstr(4 * p2),
            "I_pi": nstr(4 * r2),
            "r2": nstr(r2),
            "inv_r": nstr(inv_r),
        })
    return out


def cha_momentum_spot():
    """One slow full-pipeline momentum check: 1s at rc = 1."""
    Z = mpf(1)
    l = 0
    rc = mpf(1)
    E = cha_energy_ref(1, 0, Z, rc)
    F = cha_wave_factory(0, Z, E)
    u = lambda r: r * F(r)
    nrm2 = mp.quad(lambda r: u(r) ** 2, [0, rc])
    un_slow = lambda r: u(r) / sqrt(nrm2)

    mp.dps = 20
    cheb = mp.chebyfit(un_slow, [0, rc], 44)
    un = lambda r: mp.polyval(cheb, r)

    def psi_p(p):
        if p == 0:
            return sqrt(2 / pi) * mp.quad(lambda r: un(r) * r, [0, rc])
        return sqrt(2 / pi) / p * mp.quad(lambda r: un(r) * mp.sin(p * r),
                                          [0, rc / 2, rc])

    # du/dr at the wall for the kink tail (one-sided stencil, u(rc) = 0)
    h = mpf("1e-6")
    up_rc = (3 * un(rc) - 4 * un(rc - h) + un(rc - 2 * h)) / (2 * h)
    C = 2 / pi * up_rc ** 2

    P = mpf(60)
    pieces = [mpf(0), mpf(2)] + [mpf(2) + mpf(2) * i for i in range(1, 30)]

    def igrand(p):
        d = psi_p(p) ** 2
        if d <= 0:
            return mpf(0)
        return -d * log(d) * p * p

    S_p_main = mp.quad(igrand, pieces)
    # tail: Pi ~ C sin^2(p rc)/p^6; -ln Pi ~ 6 ln p - ln C - ln sin^2
    def tail_igrand(p):
        s2 = mp.sin(p * rc) ** 2
        if s2 == 0:
            return mpf(0)
        d = C * s2 / p ** 6
        return -d * log(d) * p * p

    S_p_tail = mp.quad(tail_igrand, [P, P * 4, P * 20, mp.inf])
    mp.dps = 30
    return {
        "rc": "1.0", "state": "1s",
        "S_pi": nstr(S_p_main + S_p_tail + angular_shannon(0), 9),
        "u_prime_rc": nstr(up_rc, 9),
    }


# ---------------------------------------------------------------------------
# misc constants
# ---------------------------------------------------------------------------

def constants_block():
    rb = 3 * (-(log(ALPHA) / (1 - ALPHA) + log(BETA) / (1 - BETA)) / 2 + log(pi))
    return {
        "shannon_bound": nstr(3 * (1 + log(pi))),
        "renyi_bound_a06_b3": nstr(rb),
        "ip_l": {str(l): nstr(ip_integral(l)) for l in range(11)},
    }


def jl_series_block():
    import sympy
    x = sympy.symbols("x")
    out = {}
    for l in range(10):
        expr = sympy.expand(sympy.expand_trig(sympy.simplify(
            sympy.expand_func(sympy.jn(l, x)))))
        poly_sin = sympy.Poly(sympy.collect(expr, sympy.sin(x), evaluate=False)
                              .get(sympy.sin(x), 0), 1 / x)
        poly_cos = sympy.Poly(sympy.collect(expr, sympy.cos(x), evaluate=False)
                              .get(sympy.cos(x), 0), 1 / x)
        out[str(l)] = {
            "sin": {str(k + 1): str(c) for k, c in
                    enumerate(reversed(poly_sin.all_coeffs()))},
            "cos": {str(k + 1): str(c) for k, c in
                    enumerate(reversed(poly_cos.all_coeffs()))},
        }
    return out


def main():
    doc = {
        "_generated_by": "tools/refvalues.py (mpmath, 30 digits)",
        "alpha": nstr(ALPHA),
        "beta": nstr(BETA),
        "constants": constants_block(),
        "angular": angular_block(),
        "circular": circular_block(),
        "fha_noncircular": fha_noncircular_block(),
        "cha_position_side": cha_block(),
        "cha_momentum_spot": cha_momentum_spot(),
        "jl_series": jl_series_block(),
    }
    json.dump(doc, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
