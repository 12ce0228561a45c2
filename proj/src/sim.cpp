#include "irsdec/sim.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "irsdec/bounds.hpp"
#include "irsdec/decoder.hpp"
#include "irsdec/pgz.hpp"

namespace irsdec {

Interval wilson_interval(double k, double n, double z) {
    if (n <= 0) return {0.0, 0.0};
    double p = k / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = p + z2 / (2.0 * n);
    double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    double lo = (center - half) / denom;
    double hi = (center + half) / denom;
    // Rounding must not push the point estimate outside its own interval.
    if (lo > p) lo = p;
    if (hi < p) hi = p;
    return {lo < 0 ? 0 : lo, hi > 1 ? 1 : hi};
}

namespace {

struct Tally {
    uint64_t successes = 0;
    std::array<uint64_t, 4> detected{};
    uint64_t miscorrections = 0;

    void merge(const Tally& o) {
        successes += o.successes;
        miscorrections += o.miscorrections;
        for (size_t i = 0; i < detected.size(); ++i) detected[i] += o.detected[i];
    }
};

void run_trial(const SimConfig& cfg, uint64_t trial, Tally& tally) {
    Rng rng(derive_trial_seed(cfg.master_seed, trial));
    const RsSpec& spec = cfg.spec;
    Matrix info = random_info(spec.gf, spec.k, cfg.l, rng);
    Matrix word = encode_irs(spec, info);
    ErrorPattern pattern = sample_error_pattern(spec.gf, spec.n, cfg.l, cfg.model, rng);
    Matrix received = apply_errors(word, pattern);

    DecodeResult res;
    switch (cfg.decoder) {
        case DecoderKind::Collaborative: res = decode(spec, received); break;
        case DecoderKind::Incremental:
            res = decode_incremental(spec, received, cfg.check_cols);
            break;
        case DecoderKind::IndependentColumns: res = decode_independent(spec, received); break;
    }

    if (!res.ok) {
        ++tally.detected[static_cast<size_t>(res.reason)];
        return;
    }
    if (res.codeword == word) {
        if (res.support != pattern.support)
            throw std::logic_error("decoder matched the word through a different support");
        ++tally.successes;
    } else {
        ++tally.miscorrections;
    }
}

}  // namespace

SimStats run(const SimConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    auto t0 = std::chrono::steady_clock::now();

    int workers = cfg.workers > 1 ? cfg.workers : 1;
    std::vector<Tally> tallies(workers);
    if (workers == 1) {
        for (uint64_t t = 0; t < cfg.trials; ++t) run_trial(cfg, t, tallies[0]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (uint64_t t = w; t < cfg.trials; t += workers)
                        run_trial(cfg, t, tallies[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    Tally total;
    for (const auto& t : tallies) total.merge(t);

    SimStats stats;
    stats.trials = cfg.trials;
    stats.successes = total.successes;
    stats.detected_failures = total.detected;
    stats.miscorrections = total.miscorrections;
    stats.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return stats;
}

std::vector<SweepRow> sweep(const SimConfig& config, const std::vector<double>& p_grid) {
    if (config.model.kind != ErrorModel::Kind::BernoulliRows)
        throw std::invalid_argument("sweep requires the BernoulliRows model");
    BoundsInput bi;
    bi.q = static_cast<double>(config.spec.gf.size());
    bi.l = config.l;
    bi.f_max = config.spec.f_max(config.l);
    bi.n_rows = config.spec.n;

    std::vector<SweepRow> rows;
    rows.reserve(p_grid.size());
    for (size_t i = 0; i < p_grid.size(); ++i) {
        SimConfig point = config;
        point.model = ErrorModel::bernoulli(p_grid[i]);
        point.master_seed = derive_trial_seed(config.master_seed, i);
        SimStats st = run(point);
        bi.p_i = p_grid[i];
        Interval ci = wilson_interval(
            static_cast<double>(st.detected_total() + st.miscorrections),
            static_cast<double>(st.trials), 1.96);
        rows.push_back({p_grid[i], st.failure_rate(), ci.lo, ci.hi, fer_bound(bi),
                        fer_error_bound(bi), st.trials});
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "p_i,fer_sim,fer_ci_lo,fer_ci_hi,fer_bound,fer_err_bound,trials\n";
    char buf[192];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.6e,%.6e,%.6e,%.6e,%.6e,%.6e,%llu\n", r.p_i,
                      r.fer_sim, r.ci_lo, r.ci_hi, r.fer_bound, r.fer_error_bound,
                      static_cast<unsigned long long>(r.trials));
        out += buf;
    }
    return out;
}

}  // namespace irsdec
