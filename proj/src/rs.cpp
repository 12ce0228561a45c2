#include "irsdec/rs.hpp"

#include <stdexcept>

namespace irsdec {

RsSpec make_spec(const Field& gf, int k, Variant variant, int s) {
    const int q = static_cast<int>(gf.size());
    if (variant != Variant::Shortened && s != 0)
        throw std::invalid_argument("shortening requires the Shortened variant");
    if (variant == Variant::Shortened && s < 1)
        throw std::invalid_argument("Shortened variant requires s >= 1");

    int n;
    switch (variant) {
        case Variant::Extended: n = q; break;
        case Variant::Cyclic: n = q - 1; break;
        case Variant::Shortened: n = q - 1 - s; break;
        default: throw std::invalid_argument("bad variant");
    }
    if (k < 1 || k >= n)
        throw std::invalid_argument("dimension k out of range for code length");

    RsSpec spec{gf, variant, k, s, n, n - k, (n - k) / 2,
                k + s, q - (k + s), {}, {}, {}};

    spec.v_lift.resize(q);
    spec.v_lift[0] = 0;
    for (int j = 0; j < q - 1; ++j) spec.v_lift[1 + j] = gf.exp(j);

    spec.v.resize(n);
    for (int i = 0; i < n; ++i) spec.v[i] = spec.v_lift[spec.lifted_of(i)];

    if (variant == Variant::Shortened) {
        // Constraint system for the s top coefficients: the polynomial must
        // vanish at the s shortened points b_t = a^{q-1-s+t}.
        Matrix con(s, s);
        for (int t = 0; t < s; ++t) {
            uint16_t b = gf.exp(q - 1 - s + t);
            uint16_t p = gf.pow(b, static_cast<uint64_t>(k));
            for (int u = 0; u < s; ++u) {
                con.at(t, u) = p;
                p = gf.mul(p, b);
            }
        }
        if (!gf_invert(gf, con, spec.precode_inv))
            throw std::invalid_argument("degenerate shortening constraints");
    }
    return spec;
}

Matrix generator_matrix(const RsSpec& spec) {
    Matrix g(spec.k, spec.n);
    if (spec.variant == Variant::Shortened) {
        std::vector<uint16_t> info(spec.k, 0);
        for (int r = 0; r < spec.k; ++r) {
            info[r] = 1;
            auto row = encode_column(spec, info);
            for (int i = 0; i < spec.n; ++i) g.at(r, i) = row[i];
            info[r] = 0;
        }
        return g;
    }
    for (int r = 0; r < spec.k; ++r)
        for (int i = 0; i < spec.n; ++i)
            g.at(r, i) = spec.gf.pow(spec.v[i], static_cast<uint64_t>(r));
    return g;
}

Matrix parity_check_matrix(const RsSpec& spec) {
    const int q = spec.q();
    Matrix h(spec.m_lift, q);
    for (int r = 0; r < spec.m_lift; ++r)
        for (int i = 0; i < q; ++i)
            h.at(r, i) = spec.gf.pow(spec.v_lift[i], static_cast<uint64_t>(r));
    return h;
}

std::vector<uint16_t> encode_column(const RsSpec& spec, std::span<const uint16_t> info) {
    if (static_cast<int>(info.size()) != spec.k)
        throw std::invalid_argument("info length must equal k");
    const Field& gf = spec.gf;

    // Full coefficient vector of the evaluation polynomial, degree < k_lift.
    std::vector<uint16_t> coeffs(info.begin(), info.end());
    if (spec.variant == Variant::Shortened) {
        const int s = spec.s;
        Matrix rhs(s, 1);
        for (int t = 0; t < s; ++t) {
            uint16_t b = gf.exp(spec.q() - 1 - s + t);
            uint16_t acc = 0;
            for (int d = spec.k - 1; d >= 0; --d)
                acc = static_cast<uint16_t>(gf.mul(acc, b) ^ info[d]);
            rhs.at(t, 0) = acc;
        }
        Matrix top = gf_matmul(gf, spec.precode_inv, rhs);
        coeffs.resize(spec.k_lift);
        for (int u = 0; u < s; ++u) coeffs[spec.k + u] = top.at(u, 0);
    }

    std::vector<uint16_t> out(spec.n);
    for (int i = 0; i < spec.n; ++i) {
        uint16_t x = spec.v[i];
        uint16_t acc = 0;
        for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d)
            acc = static_cast<uint16_t>(gf.mul(acc, x) ^ coeffs[d]);
        out[i] = acc;
    }
    return out;
}

std::vector<uint16_t> syndromes_column(const RsSpec& spec, std::span<const uint16_t> y_lifted) {
    if (static_cast<int>(y_lifted.size()) != spec.q())
        throw std::invalid_argument("syndromes expect a lifted column of length q");
    const Field& gf = spec.gf;
    std::vector<uint16_t> syn(spec.m_lift, 0);
    for (int i = 0; i < spec.q(); ++i) {
        uint16_t w = y_lifted[i];
        if (!w) continue;
        uint16_t x = spec.v_lift[i];
        for (int j = 0; j < spec.m_lift; ++j) {
            syn[j] ^= w;
            w = gf.mul(w, x);
        }
    }
    return syn;
}

}  // namespace irsdec
