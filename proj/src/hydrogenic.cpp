#include "hatom/hydrogenic.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hatom/specfun.hpp"

namespace hatom::hydrogenic {

using numerics::CubicSpline;
using numerics::Fn;

namespace {

constexpr double kPi = std::numbers::pi;

void check_state(const QuantumState& s) {
    if (s.n < 1 || s.l < 0 || s.l >= s.n || std::abs(s.m) > s.l || !(s.Z > 0.0))
        throw std::domain_error("invalid quantum state (n,l,m,Z)");
}

double factorial_ratio_log(int a, int b) {
    // log(a!/b!)
    return specfun::log_gamma(a + 1.0) - specfun::log_gamma(b + 1.0);
}

// Composite Gauss-Legendre transform kernel: sqrt(2/pi) times the spherical
// Bessel transform of psi over [0, r_end]. Panels resolve both the j_l(p r)
// oscillation and the radial oscillations of the amplitude itself (at most
// node_count + 1 half waves inside the box).
double bessel_transform(const Fn& psi, double r_end, int l, int node_count,
                        double p) {
    static const numerics::QuadratureRule& rule8 = numerics::gauss_legendre(8);
    const double osc_cap = kPi / (2.0 * std::max(p, 1.0));
    const double node_cap = r_end / (2.0 * (node_count + 1.0));
    const double panel = std::min({r_end, osc_cap, node_cap});
    const int n_panels = std::max(1, static_cast<int>(std::ceil(r_end / panel)));
    const double h = r_end / n_panels;
    double acc = 0.0;
    for (int i = 0; i < n_panels; ++i) {
        const double a = i * h;
        const double mid = a + 0.5 * h;
        double s = 0.0;
        for (int q = 0; q < 8; ++q) {
            const double r = mid + 0.5 * h * rule8.nodes[q];
            s += rule8.weights[q] * psi(r) *
                 specfun::spherical_bessel_j(l, p * r) * r * r;
        }
        acc += s * 0.5 * h;
    }
    return std::sqrt(2.0 / kPi) * acc;
}

// Shared state of a momentum amplitude built by radial_to_momentum. Kept in
// a shared_ptr so the std::function copies stay cheap and immutable. Beyond
// p_max the squared amplitude follows the two-component asymptote
//   psi(p)^2 ~ model_kink * sin^2(p r_c - l pi/2) / p^6
//              + model_smooth / p^(2 l + 8),
// the wall-kink oscillation plus the smooth short-range contribution. This
// is numerically indistinguishable from the direct transform out there and
// vastly cheaper than re-integrating it.
struct MomentumTable {
    CubicSpline spline;         // on [0, p_max]
    double p_max = 0.0;
    double model_kink = 0.0;    // 0 when the kink is negligible
    double model_smooth = 0.0;  // 0 when the smooth tail is negligible
    double r_end = 0.0;
    int l = 0;
};

// ---------------------------------------------------------------------------
// Confined-level solver internals.
//
// Locating: Sturm-sequence bisection on the Dirichlet finite-difference
// matrix of -u'' + (l(l+1)/r^2 - 2Z/r) u = 2E u. The negative-pivot count of
// the shifted LDL^T factorization equals the number of eigenvalues below the
// shift, so the k-th level is bracketed without integrating anything and
// without the exponential blow-up that defeats boundary shooting for bound
// levels in wide boxes.
//
// Refining: outward and inward Numerov sweeps in extended precision, each
// started from a local series expansion (Frobenius at the origin, wall
// series at r_c) and met at an interior matching index. The normalized
// Wronskian of the two branches vanishes exactly at an eigenvalue and its
// root is clean to ~1e-12 relative: neither branch is integrated through a
// region where the unwanted growing solution dominates, and the extended
// precision keeps the accumulated recurrence rounding (which scales like
// eps * N^2 and is NOT removed by grid refinement) below 1e-15.
// ---------------------------------------------------------------------------

// Number of finite-difference eigenvalues strictly below lambda.
int fd_negative_count(const std::vector<double>& diag, double off_sq,
                      double lambda) {
    int count = 0;
    double d = 1.0;
    bool first = true;
    for (double a : diag) {
        d = first ? a - lambda : a - lambda - off_sq / d;
        first = false;
        if (d == 0.0) d = -1e-300;
        if (d < 0.0) ++count;
    }
    return count;
}

// k-th (0-based) energy of the finite-difference problem, ~1e-5 accurate:
// plenty to bracket the matching refinement below.
double fd_level_estimate(int l, double Z, double r_c, int k, int mesh) {
    const double h = r_c / mesh;
    std::vector<double> diag(mesh - 1);
    for (int i = 1; i < mesh; ++i) {
        const double r = i * h;
        diag[i - 1] = 2.0 / (h * h) + l * (l + 1.0) / (r * r) - 2.0 * Z / r;
    }
    const auto [dmin, dmax] = std::minmax_element(diag.begin(), diag.end());
    double lo = *dmin - 2.0 / (h * h) - 1.0;  // Gershgorin bounds
    double hi = *dmax + 2.0 / (h * h) + 1.0;
    const double off_sq = 1.0 / (h * h * h * h);
    for (int iter = 0; iter < 220; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        if (fd_negative_count(diag, off_sq, mid) >= k + 1)
            hi = mid;
        else
            lo = mid;
    }
    const double lambda = 0.5 * (lo + hi);
    return 0.5 * lambda;  // matrix eigenvalue is 2E
}

struct SweepResult {
    std::vector<double> u_out;  // valid on [0, im + 2]
    std::vector<double> u_in;   // valid on [im - 2, N]
    double mismatch = 0.0;      // normalized branch Wronskian at im
    double window_out = 0.0;    // max |u_out| over the matching stencil
    double window_in = 0.0;
    double max_out = 0.0;       // max |u_out| over the whole branch
    double max_in = 0.0;
};

SweepResult two_sided_numerov(int l, double Z, double E, double r_c, int N,
                              int im) {
    using LD = long double;
    const LD h = static_cast<LD>(r_c) / N;
    const LD h2_12 = h * h / 12.0L;
    const LD El = E, Zl = Z, rc = r_c;
    const LD ll1 = static_cast<LD>(l) * (l + 1);

    std::vector<LD> kv(static_cast<size_t>(N) + 1, 0.0L);
    for (int i = 1; i <= N; ++i) {
        const LD inv = 1.0L / (i * h);
        kv[i] = 2.0L * El + inv * (2.0L * Zl - ll1 * inv);
    }

    // Frobenius series u = sum_k a_k r^(l+1+k) about the origin; starting
    // the recurrence two steps in from the series kills the O(h^2) startup
    // truncation of the naive u_1 = h^(l+1) seed.
    LD a[7];
    a[0] = 1.0L;
    for (int k = 1; k <= 6; ++k) {
        const LD p1 = a[k - 1];
        const LD p2 = k >= 2 ? a[k - 2] : 0.0L;
        a[k] = (-2.0L * Zl * p1 - 2.0L * El * p2) / (k * (2.0L * l + k + 1));
    }
    auto origin_series = [&](LD r) {
        LD s = a[6];
        for (int k = 5; k >= 0; --k) s = s * r + a[k];
        LD lead = 1.0L;
        for (int k = 0; k <= l; ++k) lead *= r;
        return s * lead;
    };
    // Wall series u(r_c - s) = s + b3 s^3 + b4 s^4 + b5 s^5 (the Dirichlet
    // condition forces the quadratic term to vanish).
    const LD k0 = kv[N];
    const LD k0p = -2.0L * Zl / (rc * rc) + 2.0L * ll1 / (rc * rc * rc);
    const LD k0pp =
        4.0L * Zl / (rc * rc * rc) - 6.0L * ll1 / (rc * rc * rc * rc);
    const LD b3 = -k0 / 6.0L;
    const LD b4 = k0p / 12.0L;
    const LD b5 = (k0 * k0 / 6.0L - k0pp / 2.0L) / 20.0L;
    auto wall_series = [&](LD s) {
        return s * (1.0L + s * s * (b3 + s * (b4 + s * b5)));
    };

    // Rescaling keeps every stored value castable to double; one rescale
    // multiplies the whole computed history, so in-branch ratios survive.
    constexpr LD kHuge = 1e260L;
    constexpr LD kShrink = 1e-260L;

    std::vector<LD> uo(static_cast<size_t>(im) + 3, 0.0L);
    uo[1] = origin_series(h);
    uo[2] = origin_series(2.0L * h);
    if (uo[2] == 0.0L) uo[2] = 1e-4000L;  // underflowed lead: reseed growth
    LD tp = (1.0L + h2_12 * kv[1]) * uo[1];
    LD tc = (1.0L + h2_12 * kv[2]) * uo[2];
    for (int i = 2; i <= im + 1; ++i) {
        const LD tn = 2.0L * uo[i] * (1.0L - 5.0L * h2_12 * kv[i]) - tp;
        uo[i + 1] = tn / (1.0L + h2_12 * kv[i + 1]);
        tp = tc;
        tc = tn;
        if (std::fabs(uo[i + 1]) > kHuge) {
            for (int j = 0; j <= i + 1; ++j) uo[j] *= kShrink;
            tp *= kShrink;
            tc *= kShrink;
        }
    }

    std::vector<LD> ui(static_cast<size_t>(N) + 1, 0.0L);
    ui[N - 1] = wall_series(h);
    ui[N - 2] = wall_series(2.0L * h);
    tp = (1.0L + h2_12 * kv[N - 1]) * ui[N - 1];
    tc = (1.0L + h2_12 * kv[N - 2]) * ui[N - 2];
    for (int i = N - 2; i >= im - 1; --i) {
        const LD tn = 2.0L * ui[i] * (1.0L - 5.0L * h2_12 * kv[i]) - tp;
        ui[i - 1] = tn / (1.0L + h2_12 * kv[i - 1]);
        tp = tc;
        tc = tn;
        if (std::fabs(ui[i - 1]) > kHuge) {
            for (int j = i - 1; j <= N; ++j) ui[j] *= kShrink;
            tp *= kShrink;
            tc *= kShrink;
        }
    }

    SweepResult out;
    LD so = 0.0L, si = 0.0L, mo = 0.0L, mi = 0.0L;
    for (int i = 1; i <= im + 2; ++i) mo = std::max(mo, std::fabs(uo[i]));
    for (int i = im - 2; i <= N; ++i) mi = std::max(mi, std::fabs(ui[i]));
    for (int i = im - 2; i <= im + 2; ++i) {
        so = std::max(so, std::fabs(uo[i]));
        si = std::max(si, std::fabs(ui[i]));
    }
    if (so == 0.0L) so = 1.0L;
    if (si == 0.0L) si = 1.0L;
    const LD dpo = (uo[im - 2] - 8.0L * uo[im - 1] + 8.0L * uo[im + 1] -
                    uo[im + 2]) /
                   (12.0L * h);
    const LD dpi = (ui[im - 2] - 8.0L * ui[im - 1] + 8.0L * ui[im + 1] -
                    ui[im + 2]) /
                   (12.0L * h);
    out.mismatch = static_cast<double>((dpo / so) * (ui[im] / si) -
                                       (dpi / si) * (uo[im] / so));
    out.window_out = static_cast<double>(so);
    out.window_in = static_cast<double>(si);
    out.max_out = static_cast<double>(mo);
    out.max_in = static_cast<double>(mi);
    out.u_out.assign(uo.begin(), uo.end());
    out.u_in.assign(ui.begin(), ui.end());
    return out;
}

// Matching index: just outside the classical turning point for bound levels
// (both sweeps stay on their stable side there), mid-box otherwise, nudged
// until the stencil window carries a healthy fraction of both branches so
// that neither sits on a node.
int choose_matching_index(int l, double Z, double E, double r_c, int N) {
    int im0;
    if (E < 0.0) {
        const double disc = std::max(0.0, Z * Z + 2.0 * E * l * (l + 1.0));
        const double r_turn = (Z + std::sqrt(disc)) / (-2.0 * E);
        im0 = static_cast<int>(std::lround(1.2 * r_turn / r_c * N));
    } else {
        im0 = N / 2;
    }
    const int lo = std::max(8, N / 200);
    const int hi = (9 * N) / 10;
    const int step = std::max(1, N / 16);
    const int offsets[] = {0, step, -step, 2 * step, -2 * step, 3 * step};
    for (int off : offsets) {
        const int im = std::clamp(im0 + off, lo, hi);
        const SweepResult probe = two_sided_numerov(l, Z, E, r_c, N, im);
        if (probe.window_out > 1e-3 * probe.max_out &&
            probe.window_in > 1e-3 * probe.max_in)
            return im;
    }
    throw std::runtime_error("cha_energy: matching window degenerate");
}

}  // namespace

double fha_energy(const QuantumState& state) {
    check_state(state);
    return -state.Z * state.Z / (2.0 * state.n * state.n);
}

RadialAmplitude fha_radial_r(const QuantumState& state) {
    check_state(state);
    const int n = state.n, l = state.l;
    const double Z = state.Z;
    const int k = n - l - 1;
    // norm^2 = (2Z/n)^3 (n-l-1)! / (2n (n+l)!)
    const double log_norm = 0.5 * (3.0 * std::log(2.0 * Z / n) +
                                   factorial_ratio_log(k, n + l) -
                                   std::log(2.0 * n));
    const double norm = std::exp(log_norm);
    RadialAmplitude amp;
    amp.value = [n, l, Z, k, norm](double r) {
        const double x = 2.0 * Z * r / n;
        return norm * std::pow(x, l) * std::exp(-0.5 * x) *
               specfun::assoc_laguerre(k, 2.0 * l + 1.0, x);
    };
    amp.domain_end = (n / (2.0 * Z)) * (4.0 * n + 140.0);
    amp.semi_infinite = true;
    amp.node_count = k;
    return amp;
}

RadialAmplitude fha_radial_p(const QuantumState& state) {
    check_state(state);
    const int n = state.n, l = state.l;
    const double Z = state.Z;
    const int k = n - l - 1;
    const double log_norm = 2.0 * std::log(static_cast<double>(n)) +
                            0.5 * (std::log(2.0 / kPi) +
                                   factorial_ratio_log(k, n + l)) +
                            (2.0 * l + 2.0) * std::log(2.0) +
                            specfun::log_gamma(l + 1.0) - 1.5 * std::log(Z);
    const double norm = std::exp(log_norm);
    RadialAmplitude amp;
    amp.value = [n, l, Z, k, norm](double p) {
        const double q = n * p / Z;
        const double d = q * q + 1.0;
        const double t = (q * q - 1.0) / d;
        return norm * std::pow(q, l) / std::pow(d, l + 2) *
               specfun::gegenbauer(k, l + 1.0, t);
    };
    amp.domain_end = 40.0 * Z / n + 20.0;
    amp.semi_infinite = true;
    amp.node_count = k;
    return amp;
}

ConfinedLevel cha_energy(int n, int l, double Z, double r_c) {
    if (n < l + 1 || l < 0 || !(r_c > 0.0) || !(Z >= 0.0))
        throw std::domain_error("cha_energy: need n >= l+1, r_c > 0, Z >= 0");
    const int want_nodes = n - l - 1;  // interior nodes of the target level

    // Bracket through the finite-difference spectrum, then polish on the
    // two-sided matching functional; see the solver notes above.
    const int mesh = 6000;
    const double e_fd = fd_level_estimate(l, Z, r_c, want_nodes, mesh);
    const double e_up = fd_level_estimate(l, Z, r_c, want_nodes + 1, mesh);
    double gap = e_up - e_fd;
    if (want_nodes > 0) {
        const double e_dn = fd_level_estimate(l, Z, r_c, want_nodes - 1, mesh);
        gap = std::min(gap, e_fd - e_dn);
    }
    const double scale = std::max(1.0, std::abs(e_fd));
    const double w_cap = 0.45 * gap;  // never bracket past a neighbor level

    auto refine = [&](int N) {
        const int im = choose_matching_index(l, Z, e_fd, r_c, N);
        auto g = [&](double E) {
            return two_sided_numerov(l, Z, E, r_c, N, im).mismatch;
        };
        double w = std::min(0.5 * w_cap, std::max(1e-5 * scale, 1e-8));
        double glo = g(e_fd - w);
        double ghi = g(e_fd + w);
        while (glo * ghi > 0.0) {
            w *= 3.0;
            if (w > w_cap)
                throw std::runtime_error(
                    "cha_energy: bracketing failure near E = " +
                    std::to_string(e_fd));
            glo = g(e_fd - w);
            ghi = g(e_fd + w);
        }
        return numerics::find_root_bracketed(g, e_fd - w, e_fd + w,
                                             1e-14 * scale);
    };

    // Two independent grids: agreement certifies that the result is not a
    // grid artifact. No extrapolation; each root is already noise-limited
    // far below the check threshold.
    const double e1 = refine(12000);
    const double e2 = refine(18000);
    if (std::abs(e2 - e1) > 1e-8 * scale)
        throw std::runtime_error("cha_energy: grid refinement drift " +
                                 std::to_string(e2 - e1));
    const double energy = e2;

    // Independent verification through the confluent hypergeometric wall
    // condition, valid for bound levels.
    if (energy < -1e-12) {
        const double kappa = std::sqrt(-2.0 * energy);
        const double cond = specfun::kummer_m(l + 1.0 - Z / kappa,
                                              2.0 * l + 2.0,
                                              2.0 * kappa * r_c);
        // The condition vanishes at the eigenvalue; compare against its
        // energy derivative scale estimated by a small offset.
        const double kap2 = std::sqrt(-2.0 * (energy - 1e-6 * scale));
        const double cond2 = specfun::kummer_m(l + 1.0 - Z / kap2,
                                               2.0 * l + 2.0,
                                               2.0 * kap2 * r_c);
        const double slope = std::abs(cond2 - cond) / (1e-6 * scale);
        if (slope > 0.0 && std::abs(cond) / slope > 1e-7 * scale)
            throw std::runtime_error(
                "cha_energy: Numerov level fails the Kummer wall condition");
    }

    ConfinedLevel level;
    level.n = n;
    level.l = l;
    level.Z = Z;
    level.r_c = r_c;
    level.energy = energy;
    level.node_count = want_nodes;
    return level;
}

RadialAmplitude cha_radial_r(const ConfinedLevel& level, int grid_size) {
    if (level.r_c <= 0.0)
        throw std::domain_error("cha_radial_r: level not initialized");
    if (grid_size < 1000) grid_size = 40000;
    if (grid_size % 2) ++grid_size;  // composite Simpson wants even count

    const int N = grid_size;
    const double h = level.r_c / N;

    // Compose the eigenfunction from the two stable Numerov branches glued
    // at the matching index: the outward branch alone would be swamped by
    // the growing exponential in the forbidden region of a wide box.
    const int im = choose_matching_index(level.l, level.Z, level.energy,
                                         level.r_c, N);
    const SweepResult sw = two_sided_numerov(level.l, level.Z, level.energy,
                                             level.r_c, N, im);
    int j_glue = im;
    for (int j = im - 2; j <= im + 2; ++j)
        if (std::abs(sw.u_in[j]) > std::abs(sw.u_in[j_glue])) j_glue = j;
    const double glue = sw.u_out[j_glue] / sw.u_in[j_glue];
    std::vector<double> u(N + 1);
    for (int i = 0; i <= im; ++i) u[i] = sw.u_out[i];
    for (int i = im + 1; i <= N; ++i) u[i] = sw.u_in[i] * glue;

    // Normalize integral u^2 dr = 1 by composite Simpson on the uniform grid.
    double norm2 = u[0] * u[0] + u[N] * u[N];
    for (int i = 1; i < N; ++i) norm2 += (i % 2 ? 4.0 : 2.0) * u[i] * u[i];
    norm2 *= h / 3.0;
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : u) v *= inv;

    std::vector<double> x(N + 1), psi(N + 1);
    for (int i = 1; i <= N; ++i) {
        x[i] = i * h;
        psi[i] = u[i] / x[i];
    }
    x[0] = 0.0;
    // psi(0) = u'(0) for l = 0 (series limit), else 0.
    if (level.l == 0)
        psi[0] = (-25.0 * u[0] + 48.0 * u[1] - 36.0 * u[2] + 16.0 * u[3] -
                  3.0 * u[4]) / (12.0 * h);
    else
        psi[0] = 0.0;

    auto end_slope = [&](int i0, int dir) {
        // 4-point one-sided first derivative of psi.
        return dir *
               (-11.0 * psi[i0] + 18.0 * psi[i0 + 2 * dir] -
                9.0 * psi[i0 + 4 * dir] + 2.0 * psi[i0 + 6 * dir]) /
               (6.0 * 2.0 * h);
    };
    const double slope_l = end_slope(0, +1);
    const double slope_r = end_slope(N, -1);

    auto spline = std::make_shared<CubicSpline>(std::move(x), std::move(psi),
                                                slope_l, slope_r);
    const double r_c = level.r_c;
    RadialAmplitude amp;
    amp.value = [spline, r_c](double r) {
        if (r < 0.0 || r > r_c) return 0.0;
        return (*spline)(r);
    };
    amp.domain_end = r_c;
    amp.semi_infinite = false;
    amp.node_count = level.node_count;
    return amp;
}

RadialAmplitude radial_to_momentum(const RadialAmplitude& amp, int l,
                                   int p_grid_size, double p_max_scale) {
    if (!amp.value) throw std::domain_error("radial_to_momentum: empty amplitude");
    if (!(p_max_scale > 0.0))
        throw std::domain_error("radial_to_momentum: p_max_scale must be positive");
    const double r_end = amp.domain_end;
    const bool confined = !amp.semi_infinite;
    const int base = (p_grid_size > 0) ? p_grid_size : 3000;

    const double p_max = p_max_scale * std::max(30.0, 130.0 / r_end);

    // Wall-kink amplitude: u'(r_c) with u = r psi, so u'(r_c) = r_c psi'(r_c)
    // since psi vanishes at the wall. Estimated by a one-sided stencil.
    double tail_c = 0.0;
    if (confined) {
        const double h = r_end * 1e-6;
        const double psi_p = (3.0 * amp.value(r_end) - 4.0 * amp.value(r_end - h) +
                              amp.value(r_end - 2.0 * h)) / (2.0 * h);
        const double up = r_end * psi_p;
        tail_c = (2.0 / kPi) * up * up;
        if (tail_c < 1e-20) tail_c = 0.0;
    }

    // Hybrid grid: a logarithmic head resolving p -> 0, then a linear body
    // whose spacing also resolves the sin(p r_c) wall oscillation. When the
    // kink is significant the grid continues past p_max at the oscillation
    // cap: the analytic tail model ignores the oscillatory cross terms
    // between the kink and smooth amplitude components, which decay like
    // 1/P^3, so pushing the model start outward buys the missing accuracy
    // at a modest cost.
    const int n_log = 300;
    const double p_head = p_max * 1e-5;
    const double p_knee = p_max / 20.0;
    const double cap = kPi / (12.0 * r_end);
    int n_lin = base - n_log;
    if (tail_c > 0.0)
        n_lin = std::max(n_lin,
                         static_cast<int>(std::ceil((p_max - p_knee) / cap)));
    double p_end = p_max;
    int n_ext = 0;
    if (tail_c > 1e-8) {
        p_end = 2.5 * p_max;
        n_ext = static_cast<int>(std::ceil((p_end - p_max) / cap));
    }
    std::vector<double> grid;
    grid.reserve(n_log + n_lin + n_ext + 2);
    const double log_ratio = std::log(p_knee / p_head) / (n_log - 1);
    for (int i = 0; i < n_log; ++i)
        grid.push_back(p_head * std::exp(i * log_ratio));
    for (int i = 1; i <= n_lin; ++i)
        grid.push_back(p_knee + (p_max - p_knee) * i / n_lin);
    for (int i = 1; i <= n_ext; ++i)
        grid.push_back(p_max + (p_end - p_max) * i / n_ext);

    const Fn& psi_r = amp.value;
    const int nodes = amp.node_count;
    std::vector<double> knots, vals;
    knots.reserve(grid.size() + 1);
    vals.reserve(grid.size() + 1);
    knots.push_back(0.0);
    vals.push_back(l == 0 ? bessel_transform(psi_r, r_end, 0, nodes, 0.0)
                          : 0.0);
    for (double p : grid) {
        knots.push_back(p);
        vals.push_back(bessel_transform(psi_r, r_end, l, nodes, p));
    }

    const size_t M = knots.size();
    const double slope_l = (l == 1) ? vals[1] / knots[1] : 0.0;
    const double slope_r = (-11.0 * vals[M - 1] + 18.0 * vals[M - 2] -
                            9.0 * vals[M - 3] + 2.0 * vals[M - 4]) /
                           (6.0 * (knots[M - 1] - knots[M - 2])) * (-1.0);

    // Smooth tail coefficient: fit
    //   psi^2 ~ a sin^2(p r_c - l pi/2) / p^6 + b / p^(2l+8)
    // by least squares over the last whole wall periods of the direct
    // samples. The smooth p^-(2l+8) component comes from the short-range
    // behavior at the origin and dominates the tail of weakly confined
    // states, where the wall kink is exponentially small.
    double tail_smooth = 0.0;
    if (confined) {
        const double period = kPi / r_end;
        const int K = std::max(3, static_cast<int>(0.15 * p_end / period));
        const double w0 = p_end - K * period;
        long double s11 = 0.0L, s12 = 0.0L, s22 = 0.0L;
        long double r1 = 0.0L, r2 = 0.0L;
        for (size_t i = 0; i < M; ++i) {
            const double p = knots[i];
            if (p < w0) continue;
            const double st = std::sin(p * r_end - 0.5 * l * kPi);
            const long double x1 = st * st * std::pow(p, 2.0 * l + 2.0);
            const long double d = static_cast<long double>(vals[i]) * vals[i] *
                                  std::pow(p, 2.0 * l + 8.0);
            s11 += x1 * x1;
            s12 += x1;
            s22 += 1.0L;
            r1 += x1 * d;
            r2 += d;
        }
        const long double det = s11 * s22 - s12 * s12;
        if (det > 0.0L && s22 >= 8.0L) {
            const long double b = (s11 * r2 - s12 * r1) / det;
            if (b > 0.0L) tail_smooth = static_cast<double>(b);
        }
    }

    auto table = std::make_shared<MomentumTable>();
    table->spline = CubicSpline(knots, vals, slope_l, slope_r);
    table->p_max = p_end;
    table->r_end = r_end;
    table->l = l;

    // Parseval check before renormalization: spline body plus model tails.
    auto density = [&](double p) {
        const double v = table->spline(p);
        return v * v * p * p;
    };
    double norm = numerics::integrate_finite(density, 0.0, p_end, 1e-11);
    if (tail_c > 0.0)
        norm += detail::kink_tail_moment(tail_c, r_end, l, p_end, 2);
    if (tail_smooth > 0.0)
        norm += detail::smooth_tail_moment(tail_smooth, l, p_end, 2);
    const double defect = std::abs(norm - 1.0);
    if (defect > 0.1)
        throw std::runtime_error(
            "radial_to_momentum: norm defect " + std::to_string(defect) +
            " exceeds 10%, momentum grid inadequate");

    const double scale = 1.0 / std::sqrt(norm);
    {
        // Rebuild the spline with rescaled ordinates.
        for (double& v : vals) v *= scale;
        table->spline = CubicSpline(std::move(knots), std::move(vals),
                                    slope_l * scale, slope_r * scale);
    }
    table->model_kink = tail_c / norm;
    table->model_smooth = tail_smooth / norm;

    RadialAmplitude out;
    out.value = [table](double p) {
        if (p < 0.0) return 0.0;
        if (p <= table->p_max) return table->spline(p);
        if (table->model_kink == 0.0 && table->model_smooth == 0.0) return 0.0;
        const double s = std::sin(p * table->r_end - 0.5 * table->l * kPi);
        const double d =
            table->model_kink * s * s / std::pow(p, 6.0) +
            table->model_smooth / std::pow(p, 2.0 * table->l + 8.0);
        return std::sqrt(d);
    };
    out.domain_end = p_end;
    // The density continues beyond the grid whenever a tail model is present.
    out.semi_infinite = tail_c > 0.0 || tail_smooth > 0.0;
    out.node_count = nodes;
    out.norm_defect = defect;
    if (tail_c > 0.0 || tail_smooth > 0.0) {
        out.tail_c = tail_c / norm;
        out.tail_smooth = tail_smooth / norm;
        out.tail_rc = r_end;
        out.tail_l = l;
        out.tail_from = p_end;
    }
    return out;
}

std::function<double(double)> angular_density(int l, int m) {
    if (l < 0 || std::abs(m) > l)
        throw std::domain_error("angular_density: need |m| <= l");
    const int ma = std::abs(m);
    const double log_norm = std::log((2.0 * l + 1.0) / (4.0 * kPi)) +
                            factorial_ratio_log(l - ma, l + ma);
    const double norm = std::exp(log_norm);
    return [l, ma, norm](double theta) {
        const double P = specfun::assoc_legendre(l, ma, std::cos(theta));
        return norm * P * P;
    };
}

namespace detail {

double kink_tail_moment(double c, double rc, int l, double P, int k) {
    // integral_P^inf c sin^2(p rc - l pi/2) p^(k-6) dp with
    // sin^2 = (1 - cos(2 p rc - l pi))/2; the oscillatory part is
    // integrated by parts twice.
    const int e = 6 - k;  // decay exponent of the density moment integrand
    const double theta = 2.0 * P * rc - l * kPi;
    double tail = c / (2.0 * (e - 1) * std::pow(P, e - 1));
    tail += c * std::sin(theta) / (4.0 * rc * std::pow(P, e));
    tail -= c * e * std::cos(theta) / (8.0 * rc * rc * std::pow(P, e + 1));
    return tail;
}

double smooth_tail_moment(double c, int l, double P, int k) {
    // integral_P^inf c p^(k - 2l - 8) dp; for the supported moments the
    // integrand decays at least as p^-5, so this always converges.
    const int e = 2 * l + 7 - k;
    return c / (e * std::pow(P, e));
}

}  // namespace detail

namespace {

double moment_position(const RadialAmplitude& a, int k) {
    auto f = [&](double r) {
        const double v = a.value(r);
        return v * v * std::pow(r, k + 2);
    };
    if (a.semi_infinite)
        return numerics::integrate_semi_infinite(f, 1e-11, a.domain_end);
    return numerics::integrate_finite(f, 0.0, a.domain_end, 1e-11);
}

double moment_momentum(const RadialAmplitude& a, int k) {
    auto f = [&](double p) {
        const double v = a.value(p);
        return v * v * std::pow(p, k + 2);
    };
    if (!a.has_tail()) {
        if (a.semi_infinite)
            return numerics::integrate_semi_infinite(f, 1e-11, a.domain_end);
        return numerics::integrate_finite(f, 0.0, a.domain_end, 1e-11);
    }
    // Sampled body plus the closed-form model tails; the tail helpers' k is
    // the full power of p in the radial-density integrand, i.e. moment
    // order plus the p^2 measure.
    const double P0 = a.tail_from;
    const double main = numerics::integrate_finite(f, 0.0, P0, 1e-11);
    return main +
           detail::kink_tail_moment(a.tail_c, a.tail_rc, a.tail_l, P0, k + 2) +
           detail::smooth_tail_moment(a.tail_smooth, a.tail_l, P0, k + 2);
}

}  // namespace

ExpectationSet expectation_values(const RadialAmplitude& rho_r,
                                  const RadialAmplitude& rho_p) {
    ExpectationSet out;
    out.r_avg = moment_position(rho_r, 1);
    out.r2_avg = moment_position(rho_r, 2);
    out.rm2_avg = moment_position(rho_r, -2);
    out.p_avg = moment_momentum(rho_p, 1);
    out.p2_avg = moment_momentum(rho_p, 2);
    try {
        out.pm2_avg = moment_momentum(rho_p, -2);
    } catch (const std::runtime_error&) {
        out.pm2_avg = std::nan("");
        out.pm2_diverged = true;
    }
    out.delta_r = std::sqrt(std::max(0.0, out.r2_avg - out.r_avg * out.r_avg));
    out.delta_p = std::sqrt(std::max(0.0, out.p2_avg - out.p_avg * out.p_avg));
    return out;
}

}  // namespace hatom::hydrogenic
