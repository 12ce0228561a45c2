#include "irsdec/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace irsdec {

namespace {

double clamp01(double x) {
    if (x < 0) return 0;
    if (x > 1) return 1;
    return x;
}

}  // namespace

double log_binomial(double n, double k) {
    // For integral arguments the multiplicative form loses only a few ulps,
    // far better than the cancellation in the lgamma difference.
    if (n == std::floor(n) && k == std::floor(k) && k >= 0 && k <= n) {
        double kk = k < n - k ? k : n - k;
        double r = 1.0;
        for (int i = 0; i < static_cast<int>(kk); ++i) r *= (n - i) / (i + 1);
        if (std::isfinite(r)) return std::log(r);
    }
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

double p_dependent_bound(int f, int l, double q) {
    if (f < 2) throw std::invalid_argument("dependence bound defined for f >= 2");
    double lead = std::pow(q, -(l + 1.0 - f));
    return clamp01(lead * (1.0 - std::pow(q, -static_cast<double>(f))) / (1.0 - 1.0 / q));
}

double p_failure_bound(int f, int l, double q, int f_max) {
    if (f < 2) return 0.0;
    if (f > f_max) return 1.0;
    return clamp01(std::pow(q, -(l + 1.0 - f)));
}

double p_valid_fraction(int t, double q) {
    if (t < 0 || t > q) throw std::invalid_argument("t out of [0, q]");
    if (t == 0) return 1.0;
    return clamp01(std::exp(log_binomial(q, t) - t * std::log(q)));
}

namespace {

double error_bound_sum(int f, int l, double q, int f_max, bool factorial_relaxation) {
    if (f < 3) return 0.0;
    int t_hi = f - 1 < f_max ? f - 1 : f_max;
    double sum = 0.0;
    double logq = std::log(q);
    for (int t = 2; t <= t_hi; ++t) {
        double log_pv = factorial_relaxation ? -std::lgamma(t + 1.0)
                                             : log_binomial(q, t) - t * logq;
        double term = std::exp(log_pv - static_cast<double>(l - t) * (f - t) * logq);
        sum += term;
    }
    return clamp01(sum);
}

}  // namespace

double p_error_bound(int f, int l, double q, int f_max) {
    return error_bound_sum(f, l, q, f_max, false);
}

double p_error_bound_factorial(int f, int l, double q, int f_max) {
    return error_bound_sum(f, l, q, f_max, true);
}

double p_error_bound_approx(int f, int l, double q) {
    if (f < 3) return 0.0;
    return clamp01(std::exp(-std::lgamma(static_cast<double>(f)) -
                            (l + 1.0 - f) * std::log(q)));
}

namespace {

double fer_sum(const BoundsInput& in, bool error_bound) {
    const int n = in.n_rows;
    if (n < 1) throw std::invalid_argument("N must be >= 1");
    if (in.p_i < 0 || in.p_i > 1) throw std::invalid_argument("p_i out of [0, 1]");
    if (in.p_i == 0.0) return 0.0;
    double log_p = std::log(in.p_i);
    double log_1mp = in.p_i == 1.0 ? 0.0 : std::log1p(-in.p_i);
    double sum = 0.0;
    for (int t = 2; t <= n; ++t) {
        double pb = error_bound ? p_error_bound(t, in.l, in.q, in.f_max)
                                : p_failure_bound(t, in.l, in.q, in.f_max);
        if (pb == 0.0) continue;
        if (in.p_i == 1.0 && t < n) continue;  // p^t (1-p)^{n-t} vanishes
        double log_term = log_binomial(n, t) + t * log_p + (n - t) * log_1mp;
        sum += pb * std::exp(log_term);
    }
    return clamp01(sum);
}

}  // namespace

double fer_bound(const BoundsInput& in) { return fer_sum(in, false); }

double fer_error_bound(const BoundsInput& in) { return fer_sum(in, true); }

}  // namespace irsdec
