#include <doctest.h>

#include "irsdec/linalg.hpp"
#include "irsdec/rng.hpp"
#include "oracles.hpp"

using namespace irsdec;

namespace {

Matrix random_matrix(const Field& gf, int r, int c, Rng& rng) {
    Matrix m(r, c);
    for (auto& x : m.data) x = static_cast<uint16_t>(rng.below(gf.size()));
    return m;
}

}  // namespace

TEST_CASE("rank agrees with the oracle on random matrices") {
    Field gf(4, 0x13);
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        int r = 1 + static_cast<int>(rng.below(6));
        int c = 1 + static_cast<int>(rng.below(6));
        Matrix m = random_matrix(gf, r, c, rng);
        CHECK(gf_rank(gf, m) == oracle::rank(gf, m));
    }
}

TEST_CASE("solve recovers planted solutions") {
    Field gf(8, 0x11D);
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng.below(8));
        Matrix a = random_matrix(gf, n, n, rng);
        if (gf_rank(gf, a) < n) continue;
        Matrix x = random_matrix(gf, n, 3, rng);
        Matrix b = gf_matmul(gf, a, x);
        REQUIRE(gf_solve(gf, a, b));
        CHECK(b == x);
    }
}

TEST_CASE("singular systems are reported") {
    Field gf(3, 0xB);
    Matrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 3;
    a.at(1, 0) = 2;
    a.at(1, 1) = 6;  // row 2 = 2 * row 1
    Matrix b(2, 1);
    b.at(0, 0) = 1;
    CHECK(!gf_solve(gf, a, b));
}

TEST_CASE("inverse times original is the identity") {
    Field gf(8, 0x11D);
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        int n = 1 + static_cast<int>(rng.below(10));
        Matrix a = random_matrix(gf, n, n, rng);
        Matrix inv;
        if (!gf_invert(gf, a, inv)) continue;
        Matrix prod = gf_matmul(gf, a, inv);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) CHECK(prod.at(r, c) == (r == c ? 1 : 0));
    }
}
