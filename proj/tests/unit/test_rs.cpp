#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "irsdec/linalg.hpp"
#include "irsdec/rng.hpp"
#include "irsdec/rs.hpp"
#include "test_support.hpp"

using namespace irsdec;

namespace {

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

}  // namespace

TEST_CASE("spec layout for the three variants") {
    Field gf8(3, 0xB);

    RsSpec ext = make_spec(gf8, 3, Variant::Extended);
    CHECK(ext.n == 8);
    CHECK(ext.m == 5);
    CHECK(ext.m_lift == 5);
    CHECK(ext.t_half == 2);
    CHECK(ext.v == std::vector<uint16_t>{0, 1, 2, 4, 3, 6, 7, 5});

    RsSpec cyc = make_spec(gf8, 3, Variant::Cyclic);
    CHECK(cyc.n == 7);
    CHECK(cyc.m == 4);
    CHECK(cyc.m_lift == 5);
    CHECK(cyc.v == std::vector<uint16_t>{1, 2, 4, 3, 6, 7, 5});

    Field gf256(8, 0x11D);
    RsSpec sh = make_spec(gf256, 188, Variant::Shortened, 51);
    CHECK(sh.n == 204);
    CHECK(sh.m == 16);
    CHECK(sh.m_lift == 17);
    CHECK(sh.t_half == 8);
    CHECK(sh.f_max(16) == 15);
}

TEST_CASE("invalid spec parameters are rejected") {
    Field gf(3, 0xB);
    CHECK_THROWS_AS(make_spec(gf, 0, Variant::Extended), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(gf, 8, Variant::Extended), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(gf, 7, Variant::Cyclic), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(gf, 3, Variant::Shortened, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(gf, 3, Variant::Extended, 1), std::invalid_argument);
}

TEST_CASE("generator matrix rows") {
    Field gf(3, 0xB);
    RsSpec spec = make_spec(gf, 2, Variant::Extended);
    Matrix g = generator_matrix(spec);
    auto row_vec = [&](int r) {
        return std::vector<uint16_t>(g.row(r).begin(), g.row(r).end());
    };
    CHECK(row_vec(0) == std::vector<uint16_t>{1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(row_vec(1) == std::vector<uint16_t>{0, 1, 2, 4, 3, 6, 7, 5});

    RsSpec k1 = make_spec(gf, 1, Variant::Extended);
    Matrix g1 = generator_matrix(k1);
    for (int i = 0; i < 8; ++i) CHECK(g1.at(0, i) == 1);
}

TEST_CASE("generator matrices have full rank for every variant") {
    Field gf(4, 0x13);
    for (auto [variant, s] : {std::pair{Variant::Extended, 0}, {Variant::Cyclic, 0},
                              {Variant::Shortened, 4}}) {
        for (int k = 1; k < 8; ++k) {
            RsSpec spec = make_spec(gf, k, variant, s);
            CHECK(gf_rank(gf, generator_matrix(spec)) == k);
        }
    }
}

TEST_CASE("duality: G H^T vanishes for all extended dimensions") {
    for (int bits : {3, 4}) {
        Field gf(bits, default_primitive_poly(bits));
        for (int k = 1; k < static_cast<int>(gf.size()); ++k) {
            RsSpec spec = make_spec(gf, k, Variant::Extended);
            Matrix prod = gf_matmul(gf, generator_matrix(spec),
                                    transpose(parity_check_matrix(spec)));
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("parity check matrix of the extended GF(8) code") {
    Field gf(3, 0xB);
    RsSpec spec = make_spec(gf, 3, Variant::Extended);
    Matrix h = parity_check_matrix(spec);
    CHECK(h.rows == 5);
    CHECK(h.cols == 8);
    for (int i = 0; i < 8; ++i) CHECK(h.at(0, i) == 1);

    RsSpec parity = make_spec(gf, 7, Variant::Extended);  // m = 1
    Matrix h1 = parity_check_matrix(parity);
    CHECK(h1.rows == 1);
    for (int i = 0; i < 8; ++i) CHECK(h1.at(0, i) == 1);
}

TEST_CASE("encoding special polynomials") {
    Field gf(3, 0xB);
    RsSpec spec = make_spec(gf, 3, Variant::Extended);

    std::vector<uint16_t> constant{5, 0, 0};
    auto c = encode_column(spec, constant);
    for (auto x : c) CHECK(x == 5);

    std::vector<uint16_t> identity{0, 1, 0};
    CHECK(encode_column(spec, identity) == spec.v);

    std::vector<uint16_t> wrong(2, 0);
    CHECK_THROWS_AS(encode_column(spec, wrong), std::invalid_argument);
}

TEST_CASE("encoded columns have zero syndromes in every variant") {
    Field gf(4, 0x13);
    Rng rng(21);
    for (auto [variant, s] : {std::pair{Variant::Extended, 0}, {Variant::Cyclic, 0},
                              {Variant::Shortened, 5}}) {
        RsSpec spec = make_spec(gf, 4, variant, s);
        for (int trial = 0; trial < 50; ++trial) {
            Matrix info = random_info(gf, spec.k, 1, rng);
            Matrix word = encode_irs(spec, info);
            Matrix lifted = testsup::lift_exact(spec, word, info);
            std::vector<uint16_t> col(spec.q());
            for (int i = 0; i < spec.q(); ++i) col[i] = lifted.at(i, 0);
            for (uint16_t s_j : syndromes_column(spec, col)) CHECK(s_j == 0);
        }
    }
}

TEST_CASE("syndromes match the parity-check product") {
    Field gf(3, 0xB);
    RsSpec spec = make_spec(gf, 3, Variant::Extended);
    Matrix h = parity_check_matrix(spec);
    Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix y(8, 1);
        for (auto& x : y.data) x = static_cast<uint16_t>(rng.below(8));
        auto syn = syndromes_column(spec, std::span<const uint16_t>(y.data));
        Matrix prod = gf_matmul(gf, h, y);
        for (int j = 0; j < spec.m_lift; ++j) CHECK(syn[j] == prod.at(j, 0));
    }
}

TEST_CASE("single-symbol error syndromes are powers of the position") {
    Field gf(3, 0xB);
    RsSpec spec = make_spec(gf, 3, Variant::Extended);
    for (int p = 0; p < 8; ++p) {
        std::vector<uint16_t> y(8, 0);
        y[p] = 3;
        auto syn = syndromes_column(spec, y);
        for (int j = 0; j < spec.m_lift; ++j)
            CHECK(syn[j] == gf.mul(3, gf.pow(spec.v[p], static_cast<uint64_t>(j))));
    }
}

TEST_CASE("minimum weight of extended GF(8) codes is n - k + 1") {
    Field gf(3, 0xB);
    for (int k = 1; k <= 3; ++k) {
        RsSpec spec = make_spec(gf, k, Variant::Extended);
        int min_weight = 99;
        std::vector<uint16_t> info(k, 0);
        int total = 1;
        for (int i = 0; i < k; ++i) total *= 8;
        for (int code = 1; code < total; ++code) {
            int rem = code;
            for (int i = 0; i < k; ++i) {
                info[i] = static_cast<uint16_t>(rem % 8);
                rem /= 8;
            }
            auto cw = encode_column(spec, info);
            int w = 0;
            for (auto x : cw) w += x != 0;
            min_weight = std::min(min_weight, w);
        }
        CHECK(min_weight == spec.n - k + 1);
    }
}

TEST_CASE("cyclic codewords stay codewords under rotation") {
    Field gf(3, 0xB);
    RsSpec spec = make_spec(gf, 3, Variant::Cyclic);
    Matrix g = generator_matrix(spec);
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix info = random_info(gf, spec.k, 1, rng);
        Matrix word = encode_irs(spec, info);
        Matrix stacked(spec.k + 1, spec.n);
        for (int r = 0; r < spec.k; ++r)
            for (int c = 0; c < spec.n; ++c) stacked.at(r, c) = g.at(r, c);
        for (int c = 0; c < spec.n; ++c)
            stacked.at(spec.k, c) = word.at((c + spec.n - 1) % spec.n, 0);
        CHECK(gf_rank(gf, stacked) == spec.k);
    }
}

TEST_CASE("shortened positions evaluate to zero") {
    Field gf(4, 0x13);
    RsSpec spec = make_spec(gf, 5, Variant::Shortened, 6);
    CHECK(spec.n == 15 - 6);
    Rng rng(8);
    Matrix info = random_info(gf, spec.k, 3, rng);
    Matrix word = encode_irs(spec, info);
    // Verified implicitly: the exact lift inserts zeros at the shortened
    // positions, so zero syndromes prove those evaluations are zero.
    Matrix lifted = testsup::lift_exact(spec, word, info);
    std::vector<uint16_t> col(spec.q());
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < spec.q(); ++i) col[i] = lifted.at(i, j);
        for (uint16_t s_j : syndromes_column(spec, col)) CHECK(s_j == 0);
    }
}

TEST_CASE("large-field round trip in GF(2^11)") {
    Field gf(11, 0x805);
    RsSpec spec = make_spec(gf, 2040, Variant::Extended);  // m = 8
    CHECK(spec.n == 2048);
    CHECK(spec.m_lift == 8);
    Rng rng(61);
    const int l = 4;
    Matrix info = random_info(gf, spec.k, l, rng);
    Matrix word = encode_irs(spec, info);
    for (int j = 0; j < l; ++j) {
        std::vector<uint16_t> y(spec.n);
        for (int i = 0; i < spec.n; ++i) y[i] = word.at(i, j);
        for (uint16_t s_j : syndromes_column(spec, y)) CHECK(s_j == 0);
    }
}
