#pragma once

// Test-only reference implementations, kept independent of the library's
// table-based arithmetic and elimination kernels.

#include <cstdint>
#include <vector>

#include "irsdec/gf.hpp"
#include "irsdec/matrix.hpp"

namespace oracle {

/// Schoolbook carry-less multiply followed by polynomial reduction.
inline uint32_t clmul_reduce(uint32_t a, uint32_t b, uint32_t poly, int w) {
    uint64_t acc = 0;
    for (int i = 0; i < w; ++i)
        if (b & (1u << i)) acc ^= static_cast<uint64_t>(a) << i;
    for (int d = 2 * w - 2; d >= w; --d)
        if (acc & (1ull << d)) acc ^= static_cast<uint64_t>(poly) << (d - w);
    return static_cast<uint32_t>(acc);
}

/// Row rank by plain forward elimination, written without the library's
/// pivoting/kernel code.
inline int rank(const irsdec::Field& gf, irsdec::Matrix a) {
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int p = -1;
        for (int i = r; i < a.rows; ++i)
            if (a.at(i, c)) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j < a.cols; ++j) std::swap(a.at(p, j), a.at(r, j));
        for (int i = r + 1; i < a.rows; ++i) {
            if (!a.at(i, c)) continue;
            uint16_t f = gf.div(a.at(i, c), a.at(r, c));
            for (int j = c; j < a.cols; ++j)
                a.at(i, j) ^= gf.mul(f, a.at(r, j));
        }
        ++r;
    }
    return r;
}

/// Expands prod_{x in roots} (X - x) over GF(2^w), lowest coefficient first.
inline std::vector<uint16_t> poly_from_roots(const irsdec::Field& gf,
                                             const std::vector<uint16_t>& roots) {
    std::vector<uint16_t> p{1};
    for (uint16_t r : roots) {
        std::vector<uint16_t> next(p.size() + 1, 0);
        for (size_t i = 0; i < p.size(); ++i) {
            next[i + 1] ^= p[i];
            next[i] ^= gf.mul(p[i], r);
        }
        p = std::move(next);
    }
    return p;
}

}  // namespace oracle
