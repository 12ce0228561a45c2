#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "irsdec/irs.hpp"
#include "irsdec/rng.hpp"
#include "irsdec/rs.hpp"

namespace irsdec {

enum class DecoderKind { Collaborative, Incremental, IndependentColumns };

struct SimConfig {
    RsSpec spec;
    int l = 16;
    ErrorModel model;
    uint64_t trials = 1;
    uint64_t master_seed = 0;
    DecoderKind decoder = DecoderKind::Collaborative;
    int check_cols = 2;  // Incremental only
    int workers = 1;
};

/// Aggregated trial outcomes. Every trial is classified as exactly one of
/// success, detected failure (by reason) or miscorrection, judged against
/// the transmitted ground truth.
struct SimStats {
    uint64_t trials = 0;
    uint64_t successes = 0;
    std::array<uint64_t, 4> detected_failures{};  // indexed by FailReason
    uint64_t miscorrections = 0;
    double wall_time_sec = 0.0;

    uint64_t detected_total() const {
        uint64_t s = 0;
        for (auto x : detected_failures) s += x;
        return s;
    }
    double failure_rate() const {
        return trials ? static_cast<double>(detected_total() + miscorrections) / trials : 0.0;
    }
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Wilson score interval for k successes out of n at z standard normal units.
Interval wilson_interval(double k, double n, double z);

/// Runs config.trials independent trials: draw information, encode, draw an
/// error pattern, decode with the configured decoder and tally the outcome.
/// Trial t uses the generator seeded with derive_trial_seed(master_seed, t),
/// so results are bitwise independent of the worker count.
SimStats run(const SimConfig& config);

struct SweepRow {
    double p_i;
    double fer_sim;
    double ci_lo;
    double ci_hi;
    double fer_bound;
    double fer_error_bound;
    uint64_t trials;
};

/// One run() per grid point in BernoulliRows mode, with the analytical
/// bounds evaluated alongside. The per-point master seed is derived from
/// config.master_seed and the point index.
std::vector<SweepRow> sweep(const SimConfig& config, const std::vector<double>& p_grid);

/// CSV rendering of sweep rows: %.6e columns
/// p_i,fer_sim,fer_ci_lo,fer_ci_hi,fer_bound,fer_err_bound,trials
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace irsdec
