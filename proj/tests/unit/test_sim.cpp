#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "irsdec/bounds.hpp"
#include "irsdec/rng.hpp"
#include "irsdec/sim.hpp"

using namespace irsdec;

TEST_CASE("trial seeds are deterministic and collision free") {
    CHECK(derive_trial_seed(42, 7) == derive_trial_seed(42, 7));
    CHECK(derive_trial_seed(42, 7) != derive_trial_seed(42, 8));
    CHECK(derive_trial_seed(42, 7) != derive_trial_seed(43, 7));
    std::unordered_set<uint64_t> seen;
    seen.reserve(1000000);
    for (uint64_t i = 0; i < 1000000; ++i) {
        auto s = derive_trial_seed(123456789, i);
        CHECK(seen.insert(s).second);
    }
}

TEST_CASE("wilson interval basics") {
    Interval iv = wilson_interval(50, 100, 1.96);
    CHECK(iv.lo > 0.40);
    CHECK(iv.hi < 0.60);
    CHECK(iv.lo < 0.5);
    CHECK(iv.hi > 0.5);
    Interval zero = wilson_interval(0, 100, 1.96);
    CHECK(zero.lo == 0.0);
    CHECK(zero.hi < 0.05);
}

namespace {

SimConfig small_config() {
    SimConfig cfg;
    cfg.spec = make_spec(Field(3, 0xB), 3, Variant::Extended);
    cfg.l = 4;
    cfg.trials = 2000;
    cfg.master_seed = 7;
    return cfg;
}

}  // namespace

TEST_CASE("error-free channels always succeed") {
    SimConfig cfg = small_config();
    cfg.model = ErrorModel::fixed(0);
    SimStats st = run(cfg);
    CHECK(st.successes == st.trials);
    CHECK(st.miscorrections == 0);
    CHECK(st.detected_total() == 0);
}

TEST_CASE("independent rows within budget never fail") {
    SimConfig cfg = small_config();
    for (int f = 1; f <= 4; ++f) {
        cfg.model = ErrorModel::fixed(f, true);
        cfg.trials = 2500;
        SimStats st = run(cfg);
        CHECK(st.successes == st.trials);
    }
}

TEST_CASE("worker count does not change the tallies") {
    SimConfig cfg = small_config();
    cfg.model = ErrorModel::bernoulli(0.25);
    cfg.trials = 3000;
    SimStats serial = run(cfg);
    cfg.workers = 8;
    SimStats parallel = run(cfg);
    CHECK(serial.successes == parallel.successes);
    CHECK(serial.detected_failures == parallel.detected_failures);
    CHECK(serial.miscorrections == parallel.miscorrections);
}

TEST_CASE("unconstrained uniform rows respect the failure bound with slack") {
    SimConfig cfg;
    cfg.spec = make_spec(Field(4, 0x13), 9, Variant::Extended);  // m = 7
    cfg.master_seed = 11;
    cfg.workers = 4;
    cfg.trials = 100000;
    for (auto [f, l] : {std::pair{2, 3}, {3, 5}}) {
        cfg.l = l;
        cfg.model = ErrorModel::fixed(f);
        SimStats st = run(cfg);
        double bound = p_failure_bound(f, l, 16.0, cfg.spec.f_max(l));
        double sigma = std::sqrt(bound * (1 - bound) / cfg.trials);
        CHECK(st.failure_rate() <= bound + 3 * sigma);
    }
}

TEST_CASE("planted dependent rows are mostly detected, rarely miscorrected") {
    SimConfig cfg;
    cfg.spec = make_spec(Field(4, 0x13), 9, Variant::Extended);
    cfg.l = 4;
    cfg.model = ErrorModel::dependent(3);
    cfg.trials = 60000;
    cfg.master_seed = 13;
    cfg.workers = 4;
    SimStats st = run(cfg);
    CHECK(st.successes == 0);  // a rank-deficient pattern can never be recovered
    CHECK(st.detected_total() > st.miscorrections);
    double bound = p_error_bound_factorial(3, cfg.l, 16.0, cfg.spec.f_max(cfg.l));
    double sigma = std::sqrt(bound * (1 - bound) / cfg.trials) + 1e-9;
    CHECK(st.miscorrections / static_cast<double>(cfg.trials) <= bound + 3 * sigma);
}

TEST_CASE("sweep emits one CSV row per grid point with analytic columns") {
    SimConfig cfg = small_config();
    cfg.model = ErrorModel::bernoulli(0.0);
    cfg.trials = 500;
    std::vector<double> grid{0.0, 0.3, 1.0};
    auto rows = sweep(cfg, grid);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].fer_sim == 0.0);
    CHECK(rows[0].fer_bound == 0.0);
    CHECK(rows[2].fer_sim == 1.0);  // every row corrupted, far beyond budget
    CHECK(rows[2].fer_bound == 1.0);
    for (const auto& r : rows) {
        CHECK(r.ci_lo <= r.fer_sim);
        CHECK(r.fer_sim <= r.ci_hi);
        CHECK(r.fer_error_bound <= r.fer_bound);
    }

    std::string csv = sweep_csv(rows);
    CHECK(csv.rfind("p_i,fer_sim,fer_ci_lo,fer_ci_hi,fer_bound,fer_err_bound,trials\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

    // Byte-identical on a rerun.
    CHECK(sweep_csv(sweep(cfg, grid)) == csv);
}

TEST_CASE("dependent sampling requires the model invariants") {
    SimConfig cfg = small_config();
    cfg.trials = 0;
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}
