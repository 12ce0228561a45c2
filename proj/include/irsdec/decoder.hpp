#pragma once

#include <vector>

#include "irsdec/matrix.hpp"
#include "irsdec/rs.hpp"

namespace irsdec {

enum class FailReason { TooManyErrors, RankMismatch, NotTValid, Inconsistent };

const char* fail_reason_name(FailReason r);

/// Outcome of decoding one received word. On success `codeword` holds the
/// corrected n x l word, `support` the corrected transmitted rows and
/// `error_rows` the corresponding error values. `f_hat` is the degree of the
/// error locator in the lifted domain (it counts a repaired dummy row, so it
/// can exceed support.size() by one for cyclic/shortened codes).
struct DecodeResult {
    bool ok = false;
    Matrix codeword;
    std::vector<int> support;
    Matrix error_rows;
    int f_hat = 0;
    FailReason reason = FailReason::TooManyErrors;

    static DecodeResult failure(FailReason r) {
        DecodeResult d;
        d.ok = false;
        d.reason = r;
        return d;
    }
};

/// Locator extraction result: lambda holds the dependency coefficients of
/// the (f_hat+1)-th syndrome row on the rows above it, and `locator` the
/// monic polynomial x^f_hat - sum_j lambda_j x^{j-1}, lowest coefficient
/// first.
struct LocatorResult {
    int f_hat = 0;
    std::vector<uint16_t> lambda;
    std::vector<uint16_t> locator;
};

struct LocatorOutcome {
    bool ok = false;
    LocatorResult loc;
    FailReason reason = FailReason::TooManyErrors;
};

/// Re-inserts the untransmitted rows: identity for Extended; for Cyclic an
/// all-zero dummy row at the evaluation at 0; for Shortened additionally
/// zero rows at the shortened positions. Output is q x l.
Matrix lift_received(const RsSpec& spec, const Matrix& raw);

/// S = H * Y_lifted, the m_lift x l syndrome matrix.
Matrix syndrome_matrix(const RsSpec& spec, const Matrix& y_lifted);

/// Finds the minimal index f_hat such that syndrome row f_hat+1 is a linear
/// combination of the rows above it, by Gauss-Jordan elimination with
/// elementary column operations (which preserve row dependencies). Returns
/// TooManyErrors when all rows are independent, RankMismatch when rows below
/// the dependent one leave the span of the first f_hat rows.
LocatorOutcome find_locator(const Field& gf, const Matrix& syndromes);

/// All lifted positions i with locator(v_i) = 0. `locator` is a monic
/// coefficient vector, lowest degree first.
std::vector<int> chien_roots(const RsSpec& spec, const std::vector<uint16_t>& locator);

/// Solves the f x f Vandermonde system K * E_F = S_[f] for the error rows at
/// the lifted positions `support`, then verifies the remaining m_lift - f
/// syndrome rows. `ok` is false (Inconsistent) on verification failure.
struct ReconstructResult {
    bool ok = false;
    Matrix error_rows;  // f x l
};
ReconstructResult reconstruct_errors(const RsSpec& spec, const std::vector<int>& support,
                                     const Matrix& syndromes);

/// Full decoding pipeline: lift, syndromes, locator, Chien search, t-validity
/// gate, reconstruction with full consistency verification, strip.
DecodeResult decode(const RsSpec& spec, const Matrix& received);

struct IncrementalStats {
    int final_stage = 0;
    int rejected_candidates = 0;
};

/// Submatrix-growing variant: runs the locator search on leading i x i
/// submatrices of S for i = 1, 2, ...; a candidate dependency found inside a
/// submatrix is tested on up to `check_cols` further columns of S and
/// accepted only if it holds there too. The last stage covers the full
/// matrix and behaves exactly like decode(). check_cols >= l tests every
/// remaining column, which makes the outcome identical to decode().
DecodeResult decode_incremental(const RsSpec& spec, const Matrix& received, int check_cols,
                                IncrementalStats* stats = nullptr);

}  // namespace irsdec
