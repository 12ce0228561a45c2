#include "irsdec/selftest.hpp"

#include <cmath>
#include <sstream>

#include "irsdec/bounds.hpp"
#include "irsdec/decoder.hpp"
#include "irsdec/irs.hpp"
#include "irsdec/linalg.hpp"
#include "irsdec/pgz.hpp"
#include "irsdec/rng.hpp"
#include "irsdec/rs.hpp"
#include "irsdec/sim.hpp"

namespace irsdec {

namespace {

struct Checker {
    std::vector<SelftestResult> results;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        results.push_back({name, ok, detail});
    }
};

void field_axioms(Checker& c) {
    Field gf(8, 0x11D);
    Rng rng(1);
    bool ok = true;
    for (int i = 0; i < 20000 && ok; ++i) {
        uint16_t a = static_cast<uint16_t>(rng.below(256));
        uint16_t b = static_cast<uint16_t>(rng.below(256));
        uint16_t d = static_cast<uint16_t>(rng.below(256));
        ok = gf.mul(a, gf.mul(b, d)) == gf.mul(gf.mul(a, b), d) &&
             gf.mul(a, b) == gf.mul(b, a) &&
             gf.mul(a, gf.add(b, d)) == gf.add(gf.mul(a, b), gf.mul(a, d)) &&
             gf.add(a, a) == 0 && (a == 0 || gf.mul(a, gf.inv(a)) == 1);
    }
    c.check("field axioms GF(256)", ok);
}

void duality(Checker& c) {
    Field gf(3, 0xB);
    bool ok = true;
    for (int k = 1; k < 8 && ok; ++k) {
        RsSpec spec = make_spec(gf, k, Variant::Extended);
        Matrix g = generator_matrix(spec);
        Matrix h = parity_check_matrix(spec);
        Matrix ht(h.cols, h.rows);
        for (int r = 0; r < h.rows; ++r)
            for (int col = 0; col < h.cols; ++col) ht.at(col, r) = h.at(r, col);
        ok = gf_matmul(gf, g, ht).is_zero();
    }
    c.check("generator/parity duality GF(8)", ok);
}

void exact_recovery(Checker& c) {
    Field gf(3, 0xB);
    RsSpec spec = make_spec(gf, 3, Variant::Extended);
    const int l = 4;
    Rng rng(7);
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int f = 1 + static_cast<int>(rng.below(4));
        Matrix info = random_info(gf, spec.k, l, rng);
        Matrix word = encode_irs(spec, info);
        ErrorPattern pat = sample_error_pattern(gf, spec.n, l, ErrorModel::fixed(f, true), rng);
        DecodeResult res = decode(spec, apply_errors(word, pat));
        ok = res.ok && res.codeword == word && res.support == pat.support;
    }
    c.check("exact recovery of f <= n-k-1 independent row errors", ok);
}

void beyond_half_distance(Checker& c) {
    Field gf(3, 0xB);
    RsSpec spec = make_spec(gf, 3, Variant::Extended);
    Rng rng(11);
    Matrix info = random_info(gf, spec.k, 4, rng);
    Matrix word = encode_irs(spec, info);
    ErrorPattern pat = sample_error_pattern(gf, spec.n, 4, ErrorModel::fixed(4, true), rng);
    Matrix received = apply_errors(word, pat);
    DecodeResult collab = decode(spec, received);
    DecodeResult indep = decode_independent(spec, received);
    c.check("joint decoding corrects beyond the per-column budget",
            collab.ok && collab.codeword == word && !(indep.ok && indep.codeword == word));
}

void column_decoder(Checker& c) {
    Field gf(3, 0xB);
    RsSpec spec = make_spec(gf, 3, Variant::Extended);
    Rng rng(13);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        Matrix info = random_info(gf, spec.k, 1, rng);
        Matrix word = encode_irs(spec, info);
        ErrorPattern pat =
            sample_error_pattern(gf, spec.n, 1, ErrorModel::fixed(static_cast<int>(rng.below(3)), false), rng);
        Matrix received = apply_errors(word, pat);
        std::vector<uint16_t> col(spec.n);
        for (int i = 0; i < spec.n; ++i) col[i] = received.at(i, 0);
        ColumnOutcome out = pgz_decode_column(spec, col);
        ok = out.corrected;
        for (int i = 0; i < spec.n && ok; ++i) ok = out.column[i] == word.at(i, 0);
    }
    c.check("per-column bounded-distance decoding up to floor(m/2)", ok);
}

void bound_values(Checker& c) {
    double dep = p_dependent_bound(2, 3, 8);
    double pf = p_failure_bound(15, 16, 256, 15);
    double pv = p_valid_fraction(2, 8);
    bool ok = std::abs(dep - 9.0 / 512.0) < 1e-15 &&
              std::abs(pf - std::pow(256.0, -2.0)) < 1e-18 && std::abs(pv - 0.4375) < 1e-15;
    BoundsInput bi;
    bi.p_i = 0.06;
    ok = ok && fer_error_bound(bi) <= fer_bound(bi);
    c.check("analytical bound spot values", ok);
}

void determinism(Checker& c) {
    Field gf(3, 0xB);
    SimConfig cfg;
    cfg.spec = make_spec(gf, 3, Variant::Extended);
    cfg.l = 4;
    cfg.model = ErrorModel::bernoulli(0.2);
    cfg.trials = 400;
    cfg.master_seed = 99;
    cfg.workers = 1;
    SimStats a = run(cfg);
    cfg.workers = 4;
    SimStats b = run(cfg);
    c.check("simulation is worker-count independent",
            a.successes == b.successes && a.detected_failures == b.detected_failures &&
                a.miscorrections == b.miscorrections);
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
    Checker c;
    field_axioms(c);
    duality(c);
    exact_recovery(c);
    beyond_half_distance(c);
    column_decoder(c);
    bound_values(c);
    determinism(c);
    return c.results;
}

}  // namespace irsdec
