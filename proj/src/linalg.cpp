#include "irsdec/linalg.hpp"

#include <stdexcept>

namespace irsdec {

Matrix gf_matmul(const Field& gf, const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul dimension mismatch");
    Matrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            uint16_t aik = a.at(i, k);
            if (!aik) continue;
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) ^= gf.mul(aik, b.at(k, j));
        }
    }
    return c;
}

int gf_rank(const Field& gf, Matrix a) {
    int rank = 0;
    for (int col = 0; col < a.cols && rank < a.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < a.rows; ++r) {
            if (a.at(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < a.cols; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
        uint16_t s = gf.inv(a.at(rank, col));
        for (int c = col; c < a.cols; ++c) a.at(rank, c) = gf.mul(a.at(rank, c), s);
        for (int r = 0; r < a.rows; ++r) {
            if (r == rank) continue;
            uint16_t f = a.at(r, col);
            if (!f) continue;
            for (int c = col; c < a.cols; ++c)
                a.at(r, c) ^= gf.mul(f, a.at(rank, c));
        }
        ++rank;
    }
    return rank;
}

bool gf_solve(const Field& gf, Matrix a, Matrix& b) {
    if (a.rows != a.cols || a.rows != b.rows)
        throw std::invalid_argument("gf_solve expects square A and matching B");
    const int n = a.rows;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a.at(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return false;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
            for (int c = 0; c < b.cols; ++c) std::swap(b.at(pivot, c), b.at(col, c));
        }
        uint16_t s = gf.inv(a.at(col, col));
        for (int c = col; c < n; ++c) a.at(col, c) = gf.mul(a.at(col, c), s);
        for (int c = 0; c < b.cols; ++c) b.at(col, c) = gf.mul(b.at(col, c), s);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            uint16_t f = a.at(r, col);
            if (!f) continue;
            for (int c = col; c < n; ++c) a.at(r, c) ^= gf.mul(f, a.at(col, c));
            for (int c = 0; c < b.cols; ++c) b.at(r, c) ^= gf.mul(f, b.at(col, c));
        }
    }
    return true;
}

bool gf_invert(const Field& gf, Matrix a, Matrix& out) {
    Matrix id(a.rows, a.rows);
    for (int i = 0; i < a.rows; ++i) id.at(i, i) = 1;
    if (!gf_solve(gf, std::move(a), id)) return false;
    out = std::move(id);
    return true;
}

}  // namespace irsdec
