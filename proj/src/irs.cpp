#include "irsdec/irs.hpp"

#include <algorithm>
#include <stdexcept>

#include "irsdec/linalg.hpp"

namespace irsdec {

Matrix encode_irs(const RsSpec& spec, const Matrix& info) {
    if (info.rows != spec.k || info.cols < 1)
        throw std::invalid_argument("info must be k x l with l >= 1");
    const int l = info.cols;
    Matrix word(spec.n, l);
    std::vector<uint16_t> col(spec.k);
    for (int j = 0; j < l; ++j) {
        for (int r = 0; r < spec.k; ++r) col[r] = info.at(r, j);
        auto enc = encode_column(spec, col);
        for (int i = 0; i < spec.n; ++i) word.at(i, j) = enc[i];
    }
    return word;
}

Matrix apply_errors(const Matrix& word, const ErrorPattern& pattern) {
    if (pattern.rows.cols != 0 && pattern.rows.cols != word.cols)
        throw std::invalid_argument("error pattern width mismatch");
    Matrix y = word;
    for (size_t idx = 0; idx < pattern.support.size(); ++idx) {
        int r = pattern.support[idx];
        if (r < 0 || r >= word.rows)
            throw std::invalid_argument("error pattern row out of range");
        for (int j = 0; j < word.cols; ++j)
            y.at(r, j) ^= pattern.rows.at(static_cast<int>(idx), j);
    }
    return y;
}

namespace {

void fill_nonzero_row(const Field& gf, Matrix& rows, int r, Rng& rng) {
    const uint64_t q = gf.size();
    while (true) {
        bool any = false;
        for (int j = 0; j < rows.cols; ++j) {
            uint16_t x = static_cast<uint16_t>(rng.below(q));
            rows.at(r, j) = x;
            any |= x != 0;
        }
        if (any) return;
    }
}

std::vector<int> sample_subset(int n, int f, Rng& rng) {
    // Partial Fisher-Yates over row indices.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = 0; i < f; ++i)
        std::swap(idx[i], idx[i + static_cast<int>(rng.below(n - i))]);
    std::vector<int> out(idx.begin(), idx.begin() + f);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ErrorPattern sample_error_pattern(const Field& gf, int n, int l, const ErrorModel& model,
                                  Rng& rng) {
    ErrorPattern pat;
    switch (model.kind) {
        case ErrorModel::Kind::FixedCount: {
            if (model.f < 0 || model.f > n)
                throw std::invalid_argument("fixed error count out of range");
            if (model.force_independent && model.f > l)
                throw std::invalid_argument("cannot force independence with f > l");
            pat.support = sample_subset(n, model.f, rng);
            pat.rows = Matrix(model.f, l);
            do {
                for (int r = 0; r < model.f; ++r) fill_nonzero_row(gf, pat.rows, r, rng);
            } while (model.force_independent && gf_rank(gf, pat.rows) < model.f);
            break;
        }
        case ErrorModel::Kind::BernoulliRows: {
            if (model.p < 0.0 || model.p > 1.0)
                throw std::invalid_argument("row corruption probability out of [0,1]");
            for (int i = 0; i < n; ++i)
                if (rng.uniform() < model.p) pat.support.push_back(i);
            pat.rows = Matrix(static_cast<int>(pat.support.size()), l);
            for (int r = 0; r < pat.rows.rows; ++r) fill_nonzero_row(gf, pat.rows, r, rng);
            break;
        }
        case ErrorModel::Kind::DependentRows: {
            if (model.f < 2 || model.f > n)
                throw std::invalid_argument("dependent mode needs 2 <= f <= n");
            pat.support = sample_subset(n, model.f, rng);
            pat.rows = Matrix(model.f, l);
            for (int r = 0; r < model.f - 1; ++r) fill_nonzero_row(gf, pat.rows, r, rng);
            for (int j = 0; j < l; ++j)
                pat.rows.at(model.f - 1, j) = pat.rows.at(0, j);
            break;
        }
    }
    return pat;
}

Matrix random_info(const Field& gf, int k, int l, Rng& rng) {
    Matrix info(k, l);
    for (auto& x : info.data) x = static_cast<uint16_t>(rng.below(gf.size()));
    return info;
}

}  // namespace irsdec
