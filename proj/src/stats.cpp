#include "lossindex/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lossindex::stats {

// ---- moments ---------------------------------------------------------------

double mean(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v;
    return x.empty() ? 0.0 : s / static_cast<double>(x.size());
}

double variance(std::span<const double> x) {
    if (x.size() < 2) return 0.0;
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s / static_cast<double>(x.size() - 1);
}

double std_dev(std::span<const double> x) { return std::sqrt(variance(x)); }

double skewness(std::span<const double> x) {
    const double m = mean(x);
    double s2 = 0.0, s3 = 0.0;
    for (double v : x) {
        const double d = v - m;
        s2 += d * d;
        s3 += d * d * d;
    }
    const double n = static_cast<double>(x.size());
    const double sd = std::sqrt(s2 / n);
    if (sd == 0.0) return 0.0;
    return (s3 / n) / (sd * sd * sd);
}

double excess_kurtosis(std::span<const double> x) {
    const double m = mean(x);
    double s2 = 0.0, s4 = 0.0;
    for (double v : x) {
        const double d = v - m;
        s2 += d * d;
        s4 += d * d * d * d;
    }
    const double n = static_cast<double>(x.size());
    const double v2 = s2 / n;
    if (v2 == 0.0) return 0.0;
    return (s4 / n) / (v2 * v2) - 3.0;
}

double correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("correlation: need two equally sized series");
    const double mx = mean(x), my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::invalid_argument("correlation: zero-variance series");
    return sxy / std::sqrt(sxx * syy);
}

double empirical_quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
    if (p <= 0.0) return sorted.front();
    if (p >= 1.0) return sorted.back();
    const double np = p * static_cast<double>(sorted.size());
    std::size_t k = static_cast<std::size_t>(std::ceil(np));
    if (k < 1) k = 1;
    if (k > sorted.size()) k = sorted.size();
    return sorted[k - 1];
}

double empirical_quantile(std::vector<double> sample, double p) {
    std::sort(sample.begin(), sample.end());
    return empirical_quantile_sorted(sample, p);
}

double lower_tail_mean_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("tail mean of empty sample");
    const double np = p * static_cast<double>(sorted.size());
    if (np <= 0.0) return sorted.front();
    const std::size_t whole = std::min(static_cast<std::size_t>(np), sorted.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < whole; ++i) acc += sorted[i];
    const double frac = np - static_cast<double>(whole);
    if (frac > 0.0 && whole < sorted.size()) acc += frac * sorted[whole];
    return acc / np;
}

// ---- normal ----------------------------------------------------------------

double norm_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double norm_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("norm_quantile: p must lie in (0,1)");
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (norm_cdf(mid) < p)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-14) break;
    }
    return 0.5 * (lo + hi);
}

// ---- gamma / beta ----------------------------------------------------------

namespace {

// series expansion of P(a,x), valid for x < a + 1
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// continued fraction for Q(a,x) (modified Lentz), valid for x >= a + 1
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

// continued fraction for the incomplete beta (modified Lentz)
double beta_cf(double a, double b, double x) {
    const double tiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m < 500; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h;
}

}  // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double inc_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("inc_beta: bad shape");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                  a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double chi2_cdf(double x, double dof) {
    if (x <= 0.0) return 0.0;
    return gamma_p(0.5 * dof, 0.5 * x);
}

double chi2_quantile(double p, double dof) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("chi2_quantile: p must lie in (0,1)");
    double lo = 0.0, hi = dof + 200.0;
    while (chi2_cdf(hi, dof) < p) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (chi2_cdf(mid, dof) < p)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-12 * (1.0 + hi)) break;
    }
    return 0.5 * (lo + hi);
}

double binomial_log_pmf(std::size_t k, std::size_t n, double p) {
    if (k > n) return -std::numeric_limits<double>::infinity();
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    double lp = std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
    if (k > 0) lp += kd * std::log(p);
    if (k < n) lp += (nd - kd) * std::log1p(-p);
    return lp;
}

double binomial_cdf(std::size_t k, std::size_t n, double p) {
    if (p <= 0.0) return 1.0;
    if (p >= 1.0) return k >= n ? 1.0 : 0.0;
    if (k >= n) return 1.0;
    // sum the smaller tail for accuracy
    if (static_cast<double>(k) <= p * static_cast<double>(n)) {
        double acc = 0.0;
        for (std::size_t i = 0; i <= k; ++i) acc += std::exp(binomial_log_pmf(i, n, p));
        return std::min(acc, 1.0);
    }
    double upper = 0.0;
    for (std::size_t i = k + 1; i <= n; ++i) upper += std::exp(binomial_log_pmf(i, n, p));
    return std::max(0.0, 1.0 - upper);
}

// ---- Student's t -----------------------------------------------------------

double student_t_pdf(double x, double nu) {
    const double a = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu);
    const double b = -0.5 * (std::log(nu) + std::log(kPi));
    const double c = -0.5 * (nu + 1.0) * std::log1p(x * x / nu);
    return std::exp(a + b + c);
}

double student_t_cdf(double x, double nu) {
    if (x == 0.0) return 0.5;
    const double z = nu / (nu + x * x);
    const double tail = 0.5 * inc_beta(0.5 * nu, 0.5, z);
    return x > 0.0 ? 1.0 - tail : tail;
}

double student_t_quantile(double p, double nu) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("student_t_quantile: p must lie in (0,1)");
    double hi = 1.0;
    while (student_t_cdf(hi, nu) < p) hi *= 2.0;
    double lo = -1.0;
    while (student_t_cdf(lo, nu) > p) lo *= 2.0;
    for (int i = 0; i < 300; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (student_t_cdf(mid, nu) < p)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-13 * (1.0 + std::fabs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

// ---- Bessel K --------------------------------------------------------------

namespace {

constexpr double kEulerGamma = 0.5772156649015328606065120900824024;

// I0, I1 by power series (rapidly convergent for |x| <= 2)
double bessel_i0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

double bessel_i1_series(double x) {
    const double q = 0.25 * x * x;
    double term = 0.5 * x, sum = term;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1.0));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

// trapezoidal evaluation of K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt;
// geometric convergence in the step size for this integrand
double bessel_k_integral(double x, int nu) {
    const double h = 0.1;
    double sum = 0.5 * std::exp(-x);  // t = 0 term, cosh(0) = 1
    for (int i = 1;; ++i) {
        const double t = h * i;
        const double ch = std::cosh(t);
        const double w = std::exp(-x * ch) * (nu == 0 ? 1.0 : ch);
        sum += w;
        if (x * ch > 745.0 || (w < sum * 1e-18 && i > 8)) break;
    }
    return sum * h;
}

}  // namespace

double bessel_k0(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("bessel_k0: x must be positive");
    if (x > 2.0) return bessel_k_integral(x, 0);
    // K0 = -(log(x/2) + gamma) I0 + sum_{k>=1} H_k (x^2/4)^k / (k!)^2
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 0.0, harmonic = 0.0;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        sum += term * harmonic;
        if (term * harmonic < std::fabs(sum) * 1e-18) break;
    }
    return -(std::log(0.5 * x) + kEulerGamma) * bessel_i0_series(x) + sum;
}

double bessel_k1(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("bessel_k1: x must be positive");
    if (x > 2.0) return bessel_k_integral(x, 1);
    // K1 = 1/x + log(x/2) I1 - (x/4) sum_k [psi(k+1)+psi(k+2)] (x^2/4)^k / (k!(k+1)!)
    const double q = 0.25 * x * x;
    double term = 1.0;  // (x^2/4)^k / (k! (k+1)!) at k = 0
    double psi_sum = -2.0 * kEulerGamma + 1.0;  // psi(1) + psi(2)
    double sum = term * psi_sum;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1.0));
        psi_sum += 1.0 / k + 1.0 / (k + 1.0);
        sum += term * psi_sum;
        if (term * psi_sum < std::fabs(sum) * 1e-18) break;
    }
    return 1.0 / x + std::log(0.5 * x) * bessel_i1_series(x) - 0.25 * x * sum;
}

// ---- diagnostics -----------------------------------------------------------

LjungBox ljung_box(std::span<const double> x, std::size_t lags) {
    const std::size_t n = x.size();
    if (n <= lags + 1) throw std::invalid_argument("ljung_box: series too short");
    const double m = mean(x);
    double denom = 0.0;
    for (double v : x) denom += (v - m) * (v - m);
    double q = 0.0;
    for (std::size_t k = 1; k <= lags; ++k) {
        double num = 0.0;
        for (std::size_t t = k; t < n; ++t) num += (x[t] - m) * (x[t - k] - m);
        const double rho = num / denom;
        q += rho * rho / static_cast<double>(n - k);
    }
    q *= static_cast<double>(n) * (static_cast<double>(n) + 2.0);
    return {q, 1.0 - chi2_cdf(q, static_cast<double>(lags)), lags};
}

}  // namespace lossindex::stats
