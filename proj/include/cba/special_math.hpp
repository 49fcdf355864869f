#pragma once

#include <cmath>

namespace cba::math {

// A positive quantity carried as its natural log, so that ratios and
// products of astronomically small Bessel values never leave the
// representable range.
struct LogScaledValue {
    double log_magnitude = 0.0;

    static LogScaledValue from_log(double lg) { return LogScaledValue{lg}; }
    double log() const { return log_magnitude; }
    double value() const { return std::exp(log_magnitude); }
};

inline LogScaledValue operator*(LogScaledValue lhs, LogScaledValue rhs)
{
    return LogScaledValue{lhs.log_magnitude + rhs.log_magnitude};
}

inline LogScaledValue operator/(LogScaledValue lhs, LogScaledValue rhs)
{
    return LogScaledValue{lhs.log_magnitude - rhs.log_magnitude};
}

// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

// ln K_order(x), the modified Bessel function of the second kind in the
// log domain. Valid for any real order and x > 0; the computation never
// forms K itself, so it does not underflow for large x or overflow for
// tiny x / large order.
double log_bessel_k(double order, double x);

LogScaledValue bessel_k_scaled(double order, double x);

// K_{order_num}(x) / K_{order_den}(x), evaluated through the log domain.
double bessel_k_ratio(double order_num, double order_den, double x);

// Standard normal quantile, sqrt(2) * erfinv(2p - 1) for p in (0, 1).
double gaussian_quantile(double p);

// log(exp(a) + exp(b)) without overflow.
double log_add_exp(double a, double b);

} // namespace cba::math
