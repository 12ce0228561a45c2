#pragma once

#include "irsdec/gf.hpp"
#include "irsdec/matrix.hpp"

namespace irsdec {

/// C = A * B over the field.
Matrix gf_matmul(const Field& gf, const Matrix& a, const Matrix& b);

/// Rank via row reduction (works on a copy).
int gf_rank(const Field& gf, Matrix a);

/// Solve A * X = B for square A with B holding any number of right-hand-side
/// columns. On success X is written into `b`. Returns false iff A is singular.
bool gf_solve(const Field& gf, Matrix a, Matrix& b);

/// Inverse of a square matrix; returns false iff singular.
bool gf_invert(const Field& gf, Matrix a, Matrix& out);

}  // namespace irsdec
