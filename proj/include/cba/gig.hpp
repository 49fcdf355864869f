#pragma once

namespace cba {

// Generalized inverse Gaussian GIG(p, a, b) in the parametrization with
// density proportional to x^(p-1) exp(-(a x + b / x) / 2) on x > 0.
struct GigParams {
    double p = 0.0; // order, unrestricted
    double a = 1.0; // linear-rate, > 0
    double b = 1.0; // inverse-rate, > 0
};

// Exponential-family coordinates (p - 1, -a/2, b/2).
struct GigNatural {
    double eta1 = 0.0;
    double eta2 = -0.5; // < 0
    double eta3 = 0.5;  // > 0
};

GigNatural gig_to_natural(const GigParams& params);
GigParams natural_to_gig(const GigNatural& nat);

// <x> and <1/x>, Bessel-K ratios evaluated through the log domain with the
// Bessel argument v = sqrt(a b).
double gig_mean(const GigParams& params);
double gig_inv_mean(const GigParams& params);

// ln f(x); throws std::domain_error for x <= 0.
double gig_log_density(const GigParams& params, double x);

namespace detail {
// Inverse-rate floor applied before moment evaluation, so a coefficient
// shrunk to numerical zero yields finite moments instead of NaN.
constexpr double kGigMinB = 1e-300;
}

} // namespace cba
