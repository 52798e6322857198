#include "hatom/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hatom::specfun {

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive, got " +
                                std::to_string(x));
    return std::lgamma(x);
}

double digamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("digamma: argument must be positive, got " +
                                std::to_string(x));
    // Shift into the asymptotic region, then use the Bernoulli series
    // (A&S 6.3.18). At x >= 10 the series below is accurate to ~1e-17.
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = std::log(x) - 0.5 * inv;
    // Coefficients -B_2n/(2n): 1/12, -1/120, 1/252, -1/240, 1/132, -691/32760.
    series -= inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
              inv2 * (1.0 / 252.0 -
              inv2 * (1.0 / 240.0 -
              inv2 * (1.0 / 132.0 -
              inv2 * (691.0 / 32760.0))))));
    return acc + series;
}

double assoc_laguerre(int k, double a, double x) {
    if (k < 0) throw std::domain_error("assoc_laguerre: negative degree");
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + a - x;
    for (int i = 1; i < k; ++i) {
        const double next =
            ((2.0 * i + 1.0 + a - x) * cur - (i + a) * prev) / (i + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double gegenbauer(int k, double eta, double t) {
    if (k < 0) throw std::domain_error("gegenbauer: negative degree");
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * eta * t;
    for (int i = 2; i <= k; ++i) {
        const double next =
            (2.0 * t * (i + eta - 1.0) * cur - (i + 2.0 * eta - 2.0) * prev) / i;
        prev = cur;
        cur = next;
    }
    return cur;
}

double assoc_legendre(int l, int m, double x) {
    if (m < 0 || m > l)
        throw std::domain_error("assoc_legendre: need 0 <= m <= l");
    if (std::abs(x) > 1.0)
        throw std::domain_error("assoc_legendre: |x| must be <= 1");
    // Seed P_m^m, then raise the degree (A&S 8.5.3).
    double pmm = 1.0;
    if (m > 0) {
        const double s = std::sqrt((1.0 - x) * (1.0 + x));
        double fact = 1.0;
        for (int i = 0; i < m; ++i) {
            pmm *= fact * s;
            fact += 2.0;
        }
    }
    if (l == m) return pmm;
    double pm1 = pmm;
    double cur = x * (2.0 * m + 1.0) * pmm;
    for (int ll = m + 2; ll <= l; ++ll) {
        const double next =
            (x * (2.0 * ll - 1.0) * cur - (ll + m - 1.0) * pm1) / (ll - m);
        pm1 = cur;
        cur = next;
    }
    return cur;
}

double kummer_m(double a, double b, double z) {
    if (b <= 0.0 && b == std::floor(b))
        throw std::domain_error("kummer_m: b must not be a non-positive integer");
    if (z < 0.0) return std::exp(z) * kummer_m(b - a, b, -z);

    // Plain Taylor series with compensated summation. Terms are positive
    // once i > -a, so there is no catastrophic cancellation for z >= 0.
    double sum = 1.0;
    double comp = 0.0;
    double term = 1.0;
    int calm = 0;
    for (int i = 0; i < 10000; ++i) {
        term *= (a + i) * z / ((b + i) * (i + 1.0));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            if (++calm >= 30) return sum;
        } else {
            calm = 0;
        }
    }
    throw std::runtime_error("kummer_m: series did not converge");
}

namespace {

double sph_bessel_series(int l, double x) {
    // j_l(x) = x^l / (2l+1)!! * (1 - t/(1!(2l+3)) + t^2/(2!(2l+3)(2l+5)) - ...)
    // with t = x^2/2 (A&S 10.1.2). Used only for small x.
    double dfact = 1.0;
    for (int i = 1; i <= l; ++i) dfact *= 2.0 * i + 1.0;
    const double t = 0.5 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int i = 1; i <= 12; ++i) {
        term *= -t / (i * (2.0 * (l + i) + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    double xl = 1.0;
    for (int i = 0; i < l; ++i) xl *= x;
    return xl / dfact * sum;
}

}  // namespace

double spherical_bessel_j(int l, double x) {
    if (l < 0) throw std::domain_error("spherical_bessel_j: negative order");
    if (x < 0.0) throw std::domain_error("spherical_bessel_j: negative argument");
    if (x == 0.0) return l == 0 ? 1.0 : 0.0;
    if (x < 0.5) return sph_bessel_series(l, x);

    const double j0 = std::sin(x) / x;
    if (l == 0) return j0;
    const double j1 = j0 / x - std::cos(x) / x;
    if (l == 1) return j1;

    if (x >= l) {
        // Upward recurrence j_{n+1} = (2n+1)/x j_n - j_{n-1} is stable here.
        double jm = j0, jc = j1;
        for (int n = 1; n < l; ++n) {
            const double jn = (2.0 * n + 1.0) / x * jc - jm;
            jm = jc;
            jc = jn;
        }
        return jc;
    }

    // Miller's downward recurrence, normalized against j_0.
    const int start = l + 24 + static_cast<int>(x);
    double jp = 0.0, jc = 1e-30;
    double target = 0.0;
    for (int n = start; n >= 1; --n) {
        const double jm = (2.0 * n + 1.0) / x * jc - jp;
        jp = jc;
        jc = jm;  // jc now holds j_{n-1}
        if (n - 1 == l) target = jc;
        // Rescale to dodge overflow on long descents.
        if (std::abs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            target *= 1e-250;
        }
    }
    return target * (j0 / jc);
}

}  // namespace hatom::specfun
