#include "cba/special_math.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cba::math {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxIter = 20000;

void require_finite_positive(double x, const char* what)
{
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error(std::string(what) + " requires a positive finite argument");
}

// Chebyshev-free evaluation of Temme's auxiliary functions
//   gam1 = [1/Gamma(1-mu) - 1/Gamma(1+mu)] / (2 mu)
//   gam2 = [1/Gamma(1-mu) + 1/Gamma(1+mu)] / 2
// for |mu| <= 1/2. Written through lgamma of arguments near 1, where the
// subtraction in gam1 adds magnitudes instead of cancelling.
void temme_gammas(double mu, double& gam1, double& gam2, double& one_over_gamma_1_plus_mu,
                  double& one_over_gamma_1_minus_mu)
{
    const double lg_plus = std::lgamma(1.0 + mu);
    const double lg_minus = std::lgamma(1.0 - mu);
    one_over_gamma_1_plus_mu = std::exp(-lg_plus);
    one_over_gamma_1_minus_mu = std::exp(-lg_minus);
    gam2 = 0.5 * (one_over_gamma_1_minus_mu + one_over_gamma_1_plus_mu);

    const double h = 0.5 * (lg_plus - lg_minus);
    const double scale = std::exp(-0.5 * (lg_plus + lg_minus));
    double sinh_ratio; // sinh(h)/mu
    if (mu == 0.0) {
        // digamma(1) = -EulerGamma
        sinh_ratio = -0.57721566490153286061;
    } else {
        sinh_ratio = std::sinh(h) / mu;
    }
    gam1 = scale * sinh_ratio;
}

// Temme's series for K_mu(x) and K_{mu+1}(x), |mu| <= 1/2, 0 < x <= 2.
void bessel_k_temme(double mu, double x, double& k_mu, double& k_mu1)
{
    const double eps = std::numeric_limits<double>::epsilon();
    const double half_x = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = (std::fabs(pimu) < 1e-12) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(half_x);
    double e = mu * d;
    const double fact2 = (std::fabs(e) < 1e-12) ? 1.0 : std::sinh(e) / e;

    double gam1, gam2, inv_gam_plus, inv_gam_minus;
    temme_gammas(mu, gam1, gam2, inv_gam_plus, inv_gam_minus);

    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e); // (x/2)^(-mu)
    double p = 0.5 * e / inv_gam_plus;
    double q = 0.5 / (e * inv_gam_minus);
    double c = 1.0;
    d = half_x * half_x;
    double sum1 = p;
    const double mu2 = mu * mu;
    for (int i = 1; i <= kMaxIter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu2);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        sum1 += c * (p - i * ff);
        if (std::fabs(del) < std::fabs(sum) * eps) {
            k_mu = sum;
            k_mu1 = sum1 * (2.0 / x);
            return;
        }
    }
    throw std::runtime_error("log_bessel_k: Temme series failed to converge");
}

// Steed/Thompson-Barnett continued fraction CF2 for x > 2, |mu| <= 1/2.
// Produces log K_mu(x) and log K_{mu+1}(x) directly.
void bessel_k_cf2(double mu, double x, double& log_k_mu, double& log_k_mu1)
{
    const double eps = std::numeric_limits<double>::epsilon();
    const double mu2 = mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= kMaxIter; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < eps) {
            h = a1 * h;
            log_k_mu = 0.5 * std::log(kPi / (2.0 * x)) - x - std::log(s);
            log_k_mu1 = log_k_mu + std::log((mu + x + 0.5 - h) / x);
            return;
        }
    }
    throw std::runtime_error("log_bessel_k: continued fraction failed to converge");
}

} // namespace

double log_add_exp(double a, double b)
{
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

double log_gamma(double x)
{
    require_finite_positive(x, "log_gamma");
    return std::lgamma(x);
}

double log_bessel_k(double order, double x)
{
    require_finite_positive(x, "log_bessel_k");
    if (!std::isfinite(order)) throw std::domain_error("log_bessel_k: order must be finite");

    // K_{-v} == K_v, applied up front so the symmetry is bit exact.
    const double nu = std::fabs(order);
    const int n = static_cast<int>(nu + 0.5);
    const double mu = nu - n; // in [-1/2, 1/2]

    double lk0, lk1;
    if (x <= 2.0) {
        double k_mu, k_mu1;
        bessel_k_temme(mu, x, k_mu, k_mu1);
        lk0 = std::log(k_mu);
        lk1 = std::log(k_mu1);
    } else {
        bessel_k_cf2(mu, x, lk0, lk1);
    }
    if (n == 0) return lk0;

    // Upward recurrence K_{v+1} = (2v/x) K_v + K_{v-1} in the log domain;
    // every term is positive, so the forward direction is stable for K.
    for (int k = 1; k < n; ++k) {
        const double lk2 = log_add_exp(lk0, std::log(2.0 * (mu + k) / x) + lk1);
        lk0 = lk1;
        lk1 = lk2;
    }
    return lk1;
}

LogScaledValue bessel_k_scaled(double order, double x)
{
    return LogScaledValue::from_log(log_bessel_k(order, x));
}

double bessel_k_ratio(double order_num, double order_den, double x)
{
    return (bessel_k_scaled(order_num, x) / bessel_k_scaled(order_den, x)).value();
}

namespace {

// Acklam's rational approximation to the standard normal quantile,
// |relative error| < 1.2e-9 over (0,1); used only as the Newton seed.
double norm_quantile_seed(double p)
{
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Lower-half quantile (p <= 0.5), Newton-refined against erfc so the tail
// keeps full precision down to p = 1e-12 and beyond.
double norm_quantile_lower(double p)
{
    double z = norm_quantile_seed(p);
    for (int step = 0; step < 3; ++step) {
        const double cdf = 0.5 * std::erfc(-z / std::sqrt(2.0));
        const double pdf = std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi);
        z -= (cdf - p) / pdf;
    }
    return z;
}

} // namespace

double gaussian_quantile(double p)
{
    if (!std::isfinite(p) || p <= 0.0 || p >= 1.0)
        throw std::domain_error("gaussian_quantile requires p in (0, 1)");
    if (p == 0.5) return 0.0;
    // Odd by construction: the upper half mirrors the lower half, and 1-p is
    // exact for p >= 1/2.
    return p < 0.5 ? norm_quantile_lower(p) : -norm_quantile_lower(1.0 - p);
}

} // namespace cba::math
