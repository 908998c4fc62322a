#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lossindex::stats {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// ---- moments -------------------------------------------------------------

double mean(std::span<const double> x);
double variance(std::span<const double> x);  // denominator n-1
double std_dev(std::span<const double> x);
double skewness(std::span<const double> x);
double excess_kurtosis(std::span<const double> x);
double correlation(std::span<const double> x, std::span<const double> y);

// Left-continuous inverse of the empirical CDF: inf{v : F(v) >= p},
// i.e. the ceil(p*n)-th smallest value, ties broken toward the lower value.
double empirical_quantile(std::vector<double> sample, double p);
double empirical_quantile_sorted(std::span<const double> sorted, double p);

// Mean of the p-tail (lowest outcomes) with fractional weight on the
// boundary order statistic: (sum of floor(pn) smallest + frac * next) / (pn).
double lower_tail_mean_sorted(std::span<const double> sorted, double p);

// ---- normal --------------------------------------------------------------

double norm_pdf(double x);
double norm_cdf(double x);
double norm_quantile(double p);  // bisection on norm_cdf, |err| < 1e-12

// ---- gamma / beta family -------------------------------------------------

// regularized lower incomplete gamma P(a, x)
double gamma_p(double a, double x);
// regularized incomplete beta I_x(a, b)
double inc_beta(double a, double b, double x);

double chi2_cdf(double x, double dof);
double chi2_quantile(double p, double dof);

// log C(n,k) + k log p + (n-k) log(1-p), stable for large n
double binomial_log_pmf(std::size_t k, std::size_t n, double p);
double binomial_cdf(std::size_t k, std::size_t n, double p);

// ---- Student's t (location 0, scale 1) ------------------------------------

double student_t_pdf(double x, double nu);
double student_t_cdf(double x, double nu);
double student_t_quantile(double p, double nu);

// ---- modified Bessel functions of the second kind -------------------------

// Series below 2.0, trapezoidal evaluation of the integral representation
// above; relative accuracy better than 1e-12 over (0, 700].
double bessel_k0(double x);
double bessel_k1(double x);

// ---- diagnostics -----------------------------------------------------------

struct LjungBox {
    double statistic;
    double p_value;
    std::size_t lags;
};

LjungBox ljung_box(std::span<const double> x, std::size_t lags);

}  // namespace lossindex::stats
