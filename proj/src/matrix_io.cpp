#include "irsdec/matrix_io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace irsdec {

namespace {

[[noreturn]] void fail(int line, int column, const std::string& what) {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << what;
    throw ParseError(os.str());
}

}  // namespace

Matrix read_matrix_text(std::istream& in, uint32_t expected_q) {
    std::string header;
    if (!std::getline(in, header)) fail(1, 1, "missing header line");
    std::istringstream hs(header);
    long rows = -1, cols = -1, q = -1;
    if (!(hs >> rows >> cols >> q) || rows < 0 || cols < 1)
        fail(1, 1, "header must be 'rows cols q'");
    if (expected_q != 0 && static_cast<long>(expected_q) != q)
        fail(1, 1, "field size " + std::to_string(q) + " does not match configured q=" +
                       std::to_string(expected_q));

    Matrix m(static_cast<int>(rows), static_cast<int>(cols));
    std::string line;
    for (int r = 0; r < m.rows; ++r) {
        if (!std::getline(in, line)) fail(r + 2, 1, "unexpected end of file");
        size_t pos = 0;
        for (int c = 0; c < m.cols; ++c) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            size_t start = pos;
            long val = 0;
            bool any = false;
            while (pos < line.size() &&
                   !std::isspace(static_cast<unsigned char>(line[pos]))) {
                char ch = line[pos];
                int d;
                if (ch >= '0' && ch <= '9') d = ch - '0';
                else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
                else fail(r + 2, static_cast<int>(pos) + 1,
                          std::string("invalid hex digit '") + ch + "'");
                val = val * 16 + d;
                if (val >= q) fail(r + 2, static_cast<int>(start) + 1, "symbol >= q");
                any = true;
                ++pos;
            }
            if (!any) fail(r + 2, static_cast<int>(pos) + 1, "missing symbol");
            m.at(r, c) = static_cast<uint16_t>(val);
        }
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
        if (pos != line.size())
            fail(r + 2, static_cast<int>(pos) + 1, "trailing characters");
    }
    return m;
}

void write_matrix_text(std::ostream& out, const Matrix& m, uint32_t q) {
    out << m.rows << ' ' << m.cols << ' ' << q << '\n';
    static const char* digits = "0123456789abcdef";
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out << ' ';
            uint16_t v = m.at(r, c);
            char buf[4];
            int len = 0;
            do {
                buf[len++] = digits[v & 0xF];
                v >>= 4;
            } while (v);
            while (len) out << buf[--len];
        }
        out << '\n';
    }
}

Matrix read_matrix_raw(std::istream& in, int cols, uint32_t q) {
    if (q > 256) throw ParseError("raw format requires a field with w <= 8");
    if (cols < 1) throw ParseError("raw format needs a positive column count");
    std::string bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    if (bytes.size() % static_cast<size_t>(cols) != 0)
        throw ParseError("raw stream size is not a multiple of the column count");
    Matrix m(static_cast<int>(bytes.size() / cols), cols);
    for (size_t i = 0; i < bytes.size(); ++i) {
        uint8_t v = static_cast<uint8_t>(bytes[i]);
        if (v >= q) throw ParseError("raw symbol >= q at offset " + std::to_string(i));
        m.data[i] = v;
    }
    return m;
}

void write_matrix_raw(std::ostream& out, const Matrix& m, uint32_t q) {
    if (q > 256) throw ParseError("raw format requires a field with w <= 8");
    for (uint16_t v : m.data) out.put(static_cast<char>(v & 0xFF));
}

}  // namespace irsdec
