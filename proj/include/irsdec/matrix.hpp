#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace irsdec {

/// Dense row-major matrix of field symbols.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<uint16_t> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}

    uint16_t& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    uint16_t at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    std::span<uint16_t> row(int r) {
        return {data.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)};
    }
    std::span<const uint16_t> row(int r) const {
        return {data.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)};
    }

    bool is_zero() const {
        for (uint16_t x : data)
            if (x) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

}  // namespace irsdec
