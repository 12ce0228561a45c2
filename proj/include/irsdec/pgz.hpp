#pragma once

#include <vector>

#include "irsdec/decoder.hpp"
#include "irsdec/matrix.hpp"
#include "irsdec/rs.hpp"

namespace irsdec {

/// Result of bounded-distance decoding of a single lifted column.
struct ColumnOutcome {
    bool corrected = false;
    std::vector<uint16_t> column;   // corrected lifted column (length q)
    std::vector<int> positions;     // lifted error positions
    std::vector<uint16_t> values;   // error values at those positions
};

/// Peterson-Gorenstein-Zierler bounded-distance decoding of one lifted
/// column, correcting up to floor(m_lift/2) errors. For nu = t..1 it solves
/// the nu x nu shifted-syndrome system s_{j+nu} = sum_u lambda_u s_{j+u-1},
/// builds the locator, requires exactly nu distinct roots among the
/// evaluation points, solves the Vandermonde value system and verifies every
/// syndrome of the corrected column. Any failed check moves on to the next
/// nu; exhaustion is a Failure.
ColumnOutcome pgz_decode_column(const RsSpec& spec, std::span<const uint16_t> y_lifted);

/// Column-by-column decoding of a whole received word; fails (TooManyErrors)
/// if any column is undecodable, Inconsistent if a correction lands on a
/// shortened position.
DecodeResult decode_independent(const RsSpec& spec, const Matrix& received);

}  // namespace irsdec
