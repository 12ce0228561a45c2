#pragma once

#include <vector>

#include "irsdec/matrix.hpp"
#include "irsdec/rng.hpp"
#include "irsdec/rs.hpp"

namespace irsdec {

/// Row-sparse error description: `support` lists the affected row indices
/// (sorted, 0-based over the transmitted rows) and `rows` holds one nonzero
/// length-l error row per support entry.
struct ErrorPattern {
    std::vector<int> support;
    Matrix rows;
};

/// How error patterns are drawn.
struct ErrorModel {
    enum class Kind { FixedCount, BernoulliRows, DependentRows };
    Kind kind = Kind::FixedCount;
    int f = 0;         // row count for FixedCount / DependentRows
    double p = 0.0;    // per-row corruption probability for BernoulliRows
    // FixedCount only: redraw row values until they are linearly independent
    // (requires f <= l).
    bool force_independent = false;

    static ErrorModel fixed(int f, bool independent = false) {
        return {Kind::FixedCount, f, 0.0, independent};
    }
    static ErrorModel bernoulli(double p) { return {Kind::BernoulliRows, 0, p, false}; }
    static ErrorModel dependent(int f) { return {Kind::DependentRows, f, 0.0, false}; }
};

/// Column-wise encoding of a k x l information matrix into an n x l word.
Matrix encode_irs(const RsSpec& spec, const Matrix& info);

/// Y = word + errors (characteristic-2 addition on the support rows).
Matrix apply_errors(const Matrix& word, const ErrorPattern& pattern);

/// Draws an error pattern of width l over n rows. Row values are uniform on
/// the q^l - 1 nonzero vectors (all-zero draws rejected). FixedCount picks a
/// uniform f-subset of rows; BernoulliRows includes each row independently;
/// DependentRows draws f - 1 rows and duplicates the first, forcing a linear
/// dependence.
ErrorPattern sample_error_pattern(const Field& gf, int n, int l, const ErrorModel& model,
                                  Rng& rng);

/// Uniformly random k x l information matrix.
Matrix random_info(const Field& gf, int k, int l, Rng& rng);

}  // namespace irsdec
