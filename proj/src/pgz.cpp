#include "irsdec/pgz.hpp"

#include <algorithm>

#include "irsdec/linalg.hpp"

namespace irsdec {

ColumnOutcome pgz_decode_column(const RsSpec& spec, std::span<const uint16_t> y_lifted) {
    const Field& gf = spec.gf;
    ColumnOutcome out;
    std::vector<uint16_t> syn = syndromes_column(spec, y_lifted);
    if (std::all_of(syn.begin(), syn.end(), [](uint16_t x) { return x == 0; })) {
        out.corrected = true;
        out.column.assign(y_lifted.begin(), y_lifted.end());
        return out;
    }

    const int t = spec.m_lift / 2;
    for (int nu = t; nu >= 1; --nu) {
        // s_{j+nu} = sum_u lambda_u s_{j+u-1}, 0-based: A[r][c] = s[r+c].
        Matrix a(nu, nu);
        Matrix b(nu, 1);
        for (int r = 0; r < nu; ++r) {
            for (int c = 0; c < nu; ++c) a.at(r, c) = syn[r + c];
            b.at(r, 0) = syn[r + nu];
        }
        if (!gf_solve(gf, std::move(a), b)) continue;

        std::vector<uint16_t> locator(nu + 1, 0);
        for (int u = 0; u < nu; ++u) locator[u] = b.at(u, 0);
        locator[nu] = 1;
        std::vector<int> roots = chien_roots(spec, locator);
        if (static_cast<int>(roots.size()) != nu) continue;

        Matrix k(nu, nu);
        Matrix rhs(nu, 1);
        for (int r = 0; r < nu; ++r) {
            for (int j = 0; j < nu; ++j)
                k.at(r, j) = gf.pow(spec.v_lift[roots[j]], static_cast<uint64_t>(r));
            rhs.at(r, 0) = syn[r];
        }
        if (!gf_solve(gf, std::move(k), rhs)) continue;

        std::vector<uint16_t> corrected(y_lifted.begin(), y_lifted.end());
        for (int j = 0; j < nu; ++j) corrected[roots[j]] ^= rhs.at(j, 0);
        std::vector<uint16_t> check = syndromes_column(spec, corrected);
        if (!std::all_of(check.begin(), check.end(), [](uint16_t x) { return x == 0; }))
            continue;

        out.corrected = true;
        out.column = std::move(corrected);
        out.positions = std::move(roots);
        out.values.resize(nu);
        for (int j = 0; j < nu; ++j) out.values[j] = rhs.at(j, 0);
        return out;
    }
    return out;
}

DecodeResult decode_independent(const RsSpec& spec, const Matrix& received) {
    Matrix lifted = lift_received(spec, received);
    const int l = received.cols;
    std::vector<uint16_t> col(spec.q());
    Matrix corrected_lifted(spec.q(), l);
    for (int j = 0; j < l; ++j) {
        for (int i = 0; i < spec.q(); ++i) col[i] = lifted.at(i, j);
        ColumnOutcome co = pgz_decode_column(spec, col);
        if (!co.corrected) return DecodeResult::failure(FailReason::TooManyErrors);
        for (int pos : co.positions)
            if (spec.is_shortened_pos(pos))
                return DecodeResult::failure(FailReason::Inconsistent);
        for (int i = 0; i < spec.q(); ++i) corrected_lifted.at(i, j) = co.column[i];
    }

    DecodeResult out;
    out.ok = true;
    out.codeword = Matrix(spec.n, l);
    for (int i = 0; i < spec.n; ++i) {
        int li = spec.lifted_of(i);
        bool differs = false;
        for (int j = 0; j < l; ++j) {
            out.codeword.at(i, j) = corrected_lifted.at(li, j);
            differs |= corrected_lifted.at(li, j) != received.at(i, j);
        }
        if (differs) out.support.push_back(i);
    }
    out.f_hat = static_cast<int>(out.support.size());
    out.error_rows = Matrix(out.f_hat, l);
    for (int idx = 0; idx < out.f_hat; ++idx) {
        int i = out.support[idx];
        for (int j = 0; j < l; ++j)
            out.error_rows.at(idx, j) =
                static_cast<uint16_t>(out.codeword.at(i, j) ^ received.at(i, j));
    }
    return out;
}

}  // namespace irsdec
