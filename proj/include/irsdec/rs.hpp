#pragma once

#include <vector>

#include "irsdec/gf.hpp"
#include "irsdec/linalg.hpp"
#include "irsdec/matrix.hpp"

namespace irsdec {

enum class Variant { Extended, Cyclic, Shortened };

/// Parameters of one Reed-Solomon code built by evaluation.
///
/// Three layouts share a single decoding domain, the "lifted" extended code
/// of length q whose evaluation points are (0, a^0, a^1, ..., a^{q-2}):
///
///   Extended   n = q       transmitted rows are the lifted rows themselves
///   Cyclic     n = q-1     the evaluation at 0 is never transmitted; the
///                          receiver assumes an all-zero dummy row there and
///                          lets the decoder repair it like any other error
///   Shortened  n = q-1-s   as Cyclic, plus the s highest cyclic positions
///                          are constrained to zero by the encoder and not
///                          transmitted
///
/// All positions are 0-based. Lifted position 0 is the evaluation at 0;
/// lifted position 1+j is the evaluation at a^j.
struct RsSpec {
    Field gf;
    Variant variant = Variant::Extended;
    int k = 0;       // information symbols per column
    int s = 0;       // number of shortened positions (0 unless Shortened)
    int n = 0;       // transmitted rows per codeword
    int m = 0;       // n - k, the code redundancy
    int t_half = 0;  // floor(m/2), the per-column bounded-distance budget
    int k_lift = 0;  // polynomial degree bound in the lifted code (k + s)
    int m_lift = 0;  // syndrome rows = q - k_lift
    std::vector<uint16_t> v;       // evaluation points of transmitted rows
    std::vector<uint16_t> v_lift;  // all q lifted evaluation points
    Matrix precode_inv;            // s x s solver for the shortening constraints

    int q() const { return static_cast<int>(gf.size()); }

    /// Largest row-error count the collaborative decoder can handle at
    /// interleaving depth l: min(l, n - k - 1).
    int f_max(int l) const { return l < n - k - 1 ? l : n - k - 1; }

    bool has_dummy_row() const { return variant != Variant::Extended; }

    int lifted_of(int transmitted) const {
        return has_dummy_row() ? transmitted + 1 : transmitted;
    }
    /// Transmitted index of a lifted position, or -1 for dummy/shortened rows.
    int transmitted_of(int lifted) const {
        if (!has_dummy_row()) return lifted;
        if (lifted == 0 || lifted > n) return -1;
        return lifted - 1;
    }
    bool is_shortened_pos(int lifted) const {
        return variant == Variant::Shortened && lifted >= q() - s;
    }
};

/// Builds the spec and, for Shortened, the precoding solver. Throws on
/// dimension or shortening out of range.
RsSpec make_spec(const Field& gf, int k, Variant variant, int s = 0);

/// k x n generator matrix over the transmitted positions: row r encodes the
/// information unit vector e_r. For Extended and Cyclic this is the
/// Vandermonde matrix (v_i^r).
Matrix generator_matrix(const RsSpec& spec);

/// m_lift x q parity-check matrix of the lifted code: row r is (v_i^r) over
/// all q evaluation points, using 0^0 = 1 for the first column.
Matrix parity_check_matrix(const RsSpec& spec);

/// Evaluation encoding of one column. `info` holds the k polynomial
/// coefficients, lowest degree first; for Shortened the s top coefficients
/// are solved internally so the shortened positions evaluate to zero.
/// Returns the n transmitted symbols.
std::vector<uint16_t> encode_column(const RsSpec& spec, std::span<const uint16_t> info);

/// Syndromes of one lifted column (length q, caller supplies dummy/shortened
/// zeros): s_j = sum_i y_i v_i^{j-1} for j = 1..m_lift.
std::vector<uint16_t> syndromes_column(const RsSpec& spec, std::span<const uint16_t> y_lifted);

}  // namespace irsdec
