#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "irsdec/matrix.hpp"

namespace irsdec {

/// Parse/format errors carry a one-line human-readable message naming the
/// offending line and column.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text matrix format: a header line "rows cols q" followed by `rows` lines
/// of `cols` space-separated lowercase-hex symbols, each < q.
Matrix read_matrix_text(std::istream& in, uint32_t expected_q);
void write_matrix_text(std::ostream& out, const Matrix& m, uint32_t q);

/// Raw binary format (w <= 8 fields only): row-major, one byte per symbol,
/// no header; the row count is derived from the stream size and `cols`.
Matrix read_matrix_raw(std::istream& in, int cols, uint32_t q);
void write_matrix_raw(std::ostream& out, const Matrix& m, uint32_t q);

}  // namespace irsdec
