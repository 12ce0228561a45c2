#include "irsdec/decoder.hpp"

#include <cassert>
#include <stdexcept>

#include "irsdec/linalg.hpp"

namespace irsdec {

const char* fail_reason_name(FailReason r) {
    switch (r) {
        case FailReason::TooManyErrors: return "TooManyErrors";
        case FailReason::RankMismatch: return "RankMismatch";
        case FailReason::NotTValid: return "NotTValid";
        case FailReason::Inconsistent: return "Inconsistent";
    }
    return "?";
}

Matrix lift_received(const RsSpec& spec, const Matrix& raw) {
    if (raw.rows != spec.n)
        throw std::invalid_argument("received word must have n transmitted rows");
    if (spec.variant == Variant::Extended) return raw;
    Matrix lifted(spec.q(), raw.cols);
    for (int i = 0; i < spec.n; ++i) {
        int li = spec.lifted_of(i);
        for (int j = 0; j < raw.cols; ++j) lifted.at(li, j) = raw.at(i, j);
    }
    return lifted;
}

Matrix syndrome_matrix(const RsSpec& spec, const Matrix& y_lifted) {
    if (y_lifted.rows != spec.q())
        throw std::invalid_argument("syndrome_matrix expects a lifted q x l word");
    const Field& gf = spec.gf;
    const int l = y_lifted.cols;
    Matrix s(spec.m_lift, l);
    std::vector<uint16_t> w(l);
    for (int i = 0; i < spec.q(); ++i) {
        bool any = false;
        for (int j = 0; j < l; ++j) {
            w[j] = y_lifted.at(i, j);
            any |= w[j] != 0;
        }
        if (!any) continue;
        uint16_t x = spec.v_lift[i];
        for (int r = 0; r < spec.m_lift; ++r) {
            for (int j = 0; j < l; ++j) {
                s.at(r, j) ^= w[j];
                w[j] = gf.mul(w[j], x);
            }
        }
    }
    return s;
}

namespace {

std::vector<uint16_t> locator_from_lambda(const std::vector<uint16_t>& lambda) {
    // x^f - sum_j lambda_j x^{j-1}; subtraction is addition in char 2.
    std::vector<uint16_t> loc(lambda.size() + 1, 0);
    for (size_t j = 0; j < lambda.size(); ++j) loc[j] = lambda[j];
    loc[lambda.size()] = 1;
    return loc;
}

// Column-operation Gauss-Jordan restricted to the leading `rows` x `cols`
// block of S, stopping at the first dependent row. Maintains the invariant
// that each accepted row j is the unit row on its pivot column, so a later
// row is dependent exactly when its non-pivot entries vanish and its pivot
// entries are the dependency coefficients. Returns the dependent row index
// (0-based) in `dep_row` or -1 if all rows are independent; `work` is left
// in reduced form with `pivots` holding the pivot column of each rank step.
struct EliminationState {
    Matrix work;
    std::vector<int> pivots;
    int dep_row = -1;
    std::vector<uint16_t> lambda;
};

EliminationState eliminate_until_dependent(const Field& gf, const Matrix& s, int rows,
                                           int cols) {
    EliminationState st;
    st.work = s;
    std::vector<char> is_pivot(cols, 0);
    for (int r = 0; r < rows; ++r) {
        int pivot_col = -1;
        for (int c = 0; c < cols; ++c) {
            if (!is_pivot[c] && st.work.at(r, c)) {
                pivot_col = c;
                break;
            }
        }
        if (pivot_col < 0) {
            // Row r lies in the span of the rows above it; read the
            // coefficients off the pivot columns.
            st.dep_row = r;
            st.lambda.resize(st.pivots.size());
            for (size_t j = 0; j < st.pivots.size(); ++j)
                st.lambda[j] = st.work.at(r, st.pivots[j]);
            return st;
        }
        // Normalize the pivot column so this row reads 1 there. Rows above
        // are zero in non-pivot columns, so they are unaffected.
        uint16_t scale = gf.inv(st.work.at(r, pivot_col));
        if (scale != 1)
            for (int rr = r; rr < st.work.rows; ++rr)
                st.work.at(rr, pivot_col) = gf.mul(st.work.at(rr, pivot_col), scale);
        // Clear the rest of row r with column operations.
        for (int c = 0; c < cols; ++c) {
            if (c == pivot_col) continue;
            uint16_t f = st.work.at(r, c);
            if (!f) continue;
            for (int rr = r; rr < st.work.rows; ++rr)
                st.work.at(rr, c) ^= gf.mul(f, st.work.at(rr, pivot_col));
        }
        is_pivot[pivot_col] = 1;
        st.pivots.push_back(pivot_col);
    }
    return st;
}

}  // namespace

LocatorOutcome find_locator(const Field& gf, const Matrix& s) {
    LocatorOutcome out;
    EliminationState st = eliminate_until_dependent(gf, s, s.rows, s.cols);
    if (st.dep_row < 0) {
        out.reason = FailReason::TooManyErrors;
        return out;
    }
    const int f_hat = st.dep_row;
    // Rows below the dependent one must also lie in the span of the first
    // f_hat rows, i.e. vanish outside the pivot columns after reduction.
    std::vector<char> is_pivot(s.cols, 0);
    for (int c : st.pivots) is_pivot[c] = 1;
    for (int r = f_hat + 1; r < s.rows; ++r) {
        for (int c = 0; c < s.cols; ++c) {
            if (!is_pivot[c] && st.work.at(r, c)) {
                out.reason = FailReason::RankMismatch;
                return out;
            }
        }
    }
    assert(f_hat > 0 || s.is_zero());
    out.ok = true;
    out.loc.f_hat = f_hat;
    out.loc.lambda = std::move(st.lambda);
    out.loc.locator = locator_from_lambda(out.loc.lambda);
    return out;
}

std::vector<int> chien_roots(const RsSpec& spec, const std::vector<uint16_t>& locator) {
    const Field& gf = spec.gf;
    std::vector<int> roots;
    for (int i = 0; i < spec.q(); ++i) {
        uint16_t x = spec.v_lift[i];
        uint16_t acc = 0;
        for (int d = static_cast<int>(locator.size()) - 1; d >= 0; --d)
            acc = static_cast<uint16_t>(gf.mul(acc, x) ^ locator[d]);
        if (acc == 0) roots.push_back(i);
    }
    return roots;
}

ReconstructResult reconstruct_errors(const RsSpec& spec, const std::vector<int>& support,
                                     const Matrix& s) {
    const Field& gf = spec.gf;
    const int f = static_cast<int>(support.size());
    if (f >= spec.m_lift)
        throw std::invalid_argument("reconstruction requires f <= m - 1");
    ReconstructResult res;
    res.error_rows = Matrix(f, s.cols);
    if (f == 0) {
        res.ok = s.is_zero();
        return res;
    }

    // K holds the first f powers of the support's evaluation points.
    Matrix k(f, f);
    std::vector<uint16_t> pw(f);
    for (int j = 0; j < f; ++j) pw[j] = 1;
    for (int r = 0; r < f; ++r) {
        for (int j = 0; j < f; ++j) {
            k.at(r, j) = pw[j];
            pw[j] = gf.mul(pw[j], spec.v_lift[support[j]]);
        }
    }
    Matrix rhs(f, s.cols);
    for (int r = 0; r < f; ++r)
        for (int c = 0; c < s.cols; ++c) rhs.at(r, c) = s.at(r, c);
    bool solved = gf_solve(gf, k, rhs);
    assert(solved);  // Vandermonde in distinct points
    (void)solved;

    // Verify the remaining syndrome rows against the recovered error rows;
    // pw currently holds v^f for each support point.
    for (int r = f; r < spec.m_lift; ++r) {
        for (int c = 0; c < s.cols; ++c) {
            uint16_t acc = 0;
            for (int j = 0; j < f; ++j) acc ^= gf.mul(pw[j], rhs.at(j, c));
            if (acc != s.at(r, c)) return res;
        }
        for (int j = 0; j < f; ++j) pw[j] = gf.mul(pw[j], spec.v_lift[support[j]]);
    }
    res.error_rows = std::move(rhs);
    res.ok = true;
    return res;
}

namespace {

DecodeResult finish_decode(const RsSpec& spec, const Matrix& received,
                           const std::vector<int>& lifted_support, const Matrix& s,
                           int f_hat) {
    // Untransmitted rows cannot carry channel errors; a shortened position in
    // the support contradicts the encoding constraints.
    for (int pos : lifted_support)
        if (spec.is_shortened_pos(pos))
            return DecodeResult::failure(FailReason::Inconsistent);

    ReconstructResult rec = reconstruct_errors(spec, lifted_support, s);
    if (!rec.ok) return DecodeResult::failure(FailReason::Inconsistent);

    DecodeResult out;
    out.ok = true;
    out.f_hat = f_hat;
    out.codeword = received;
    for (size_t idx = 0; idx < lifted_support.size(); ++idx) {
        int t = spec.transmitted_of(lifted_support[idx]);
        if (t < 0) continue;  // repaired dummy row, discarded
        out.support.push_back(t);
    }
    out.error_rows = Matrix(static_cast<int>(out.support.size()), received.cols);
    int keep = 0;
    for (size_t idx = 0; idx < lifted_support.size(); ++idx) {
        int t = spec.transmitted_of(lifted_support[idx]);
        if (t < 0) continue;
        for (int j = 0; j < received.cols; ++j) {
            uint16_t e = rec.error_rows.at(static_cast<int>(idx), j);
            out.error_rows.at(keep, j) = e;
            out.codeword.at(t, j) ^= e;
        }
        ++keep;
    }
    return out;
}

DecodeResult decode_with_locator(const RsSpec& spec, const Matrix& received, const Matrix& s,
                                 const LocatorResult& loc) {
    std::vector<int> roots = chien_roots(spec, loc.locator);
    if (static_cast<int>(roots.size()) != loc.f_hat)
        return DecodeResult::failure(FailReason::NotTValid);
    return finish_decode(spec, received, roots, s, loc.f_hat);
}

}  // namespace

DecodeResult decode(const RsSpec& spec, const Matrix& received) {
    Matrix lifted = lift_received(spec, received);
    Matrix s = syndrome_matrix(spec, lifted);
    if (s.is_zero()) {
        DecodeResult out;
        out.ok = true;
        out.codeword = received;
        return out;
    }
    LocatorOutcome lo = find_locator(spec.gf, s);
    if (!lo.ok) return DecodeResult::failure(lo.reason);
    return decode_with_locator(spec, received, s, lo.loc);
}

DecodeResult decode_incremental(const RsSpec& spec, const Matrix& received, int check_cols,
                                IncrementalStats* stats) {
    if (check_cols < 0)
        throw std::invalid_argument("check_cols must be nonnegative");
    Matrix lifted = lift_received(spec, received);
    Matrix s = syndrome_matrix(spec, lifted);
    if (stats) *stats = IncrementalStats{};
    if (s.is_zero()) {
        DecodeResult out;
        out.ok = true;
        out.codeword = received;
        return out;
    }

    const Field& gf = spec.gf;
    const int max_stage = s.rows > s.cols ? s.rows : s.cols;
    for (int stage = 1; stage <= max_stage; ++stage) {
        int rows = stage < s.rows ? stage : s.rows;
        int cols = stage < s.cols ? stage : s.cols;
        if (stats) stats->final_stage = stage;
        if (rows == s.rows && cols == s.cols) {
            // Full matrix: identical to the one-shot decoder, including the
            // rank verification of the rows below the dependency.
            LocatorOutcome lo = find_locator(gf, s);
            if (!lo.ok) return DecodeResult::failure(lo.reason);
            return decode_with_locator(spec, received, s, lo.loc);
        }
        EliminationState st = eliminate_until_dependent(gf, s, rows, cols);
        if (st.dep_row < 0) continue;

        // Candidate dependency over the first `cols` columns; test it on the
        // next check_cols columns of the original matrix.
        bool confirmed = true;
        int test_end = cols + check_cols < s.cols ? cols + check_cols : s.cols;
        for (int c = cols; c < test_end && confirmed; ++c) {
            uint16_t acc = 0;
            for (size_t j = 0; j < st.lambda.size(); ++j)
                acc ^= gf.mul(st.lambda[j], s.at(static_cast<int>(j), c));
            confirmed = acc == s.at(st.dep_row, c);
        }
        if (!confirmed) {
            if (stats) ++stats->rejected_candidates;
            continue;
        }
        LocatorResult loc;
        loc.f_hat = st.dep_row;
        loc.lambda = std::move(st.lambda);
        loc.locator = locator_from_lambda(loc.lambda);
        return decode_with_locator(spec, received, s, loc);
    }
    return DecodeResult::failure(FailReason::TooManyErrors);
}

}  // namespace irsdec
