#pragma once

// All bounds are evaluated in double precision with log-domain binomial
// terms and clamped to [0, 1]; quantities below about 1e-300 underflow to
// an exact 0.

namespace irsdec {

/// Inputs of the frame-error-rate formulas for an interleaved code whose
/// rows are carried by N inner frames, each corrupted independently with
/// probability p_i.
struct BoundsInput {
    double q = 256;   // field size
    int l = 16;       // interleaving depth
    int f_max = 15;   // min(l, n - k - 1)
    int n_rows = 204; // transmitted rows per word (inner frames), N
    double p_i = 0.0; // inner frame error rate
};

/// Upper bound on the probability that f >= 2 uniform nonzero rows of width
/// l over GF(q) are linearly dependent:
/// q^{-(l+1-f)} (1 - q^{-f}) / (1 - q^{-1}). Throws on f < 2.
double p_dependent_bound(int f, int l, double q);

/// Failure-probability bound for f corrupted rows: 0 for f < 2,
/// q^{-(l+1-f)} for 2 <= f <= f_max, 1 otherwise.
double p_failure_bound(int f, int l, double q, int f_max);

/// Fraction of monic degree-t polynomials over GF(q) with exactly t distinct
/// roots: C(q, t) q^{-t} (which is <= 1/t!).
double p_valid_fraction(int t, double q);

/// Miscorrection bound: sum over the locator degree t of
/// P_v(t) q^{-(l-t)(f-t)}. The summation runs to min(f-1, f_max) since an
/// emitted locator degree never exceeds min(l, m-1); within f <= f_max this
/// is the plain sum to f-1. Zero for f < 3.
double p_error_bound(int f, int l, double q, int f_max);

/// Same sum with the 1/t! relaxation of P_v(t).
double p_error_bound_factorial(int f, int l, double q, int f_max);

/// Last-summand approximation 1/(f-1)! * q^{-(l+1-f)}.
double p_error_bound_approx(int f, int l, double q);

/// Frame error rate: sum_{t=2}^{N} C(N,t) P_f(t,l) p_i^t (1-p_i)^{N-t},
/// evaluated with log-domain binomials. Clamped to [0, 1].
double fer_bound(const BoundsInput& in);

/// Same sum with the miscorrection bound P_e in place of P_f.
double fer_error_bound(const BoundsInput& in);

/// log of the binomial coefficient C(n, k) via lgamma.
double log_binomial(double n, double k);

}  // namespace irsdec
