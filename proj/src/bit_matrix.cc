#include "cssdiag/bit_matrix.h"

#include <algorithm>
#include <stdexcept>

namespace cssdiag {

BitMatrix::BitMatrix(size_t num_cols, std::vector<BitVector> rows) : num_cols_(num_cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        if (r.size() != num_cols_) {
            throw std::invalid_argument("matrix row has length " + std::to_string(r.size()) + ", expected " +
                                        std::to_string(num_cols_));
        }
    }
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows, size_t num_cols) {
    BitMatrix result(num_cols);
    for (const auto &s : rows) {
        result.push_back(BitVector::from_string(s));
    }
    return result;
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix result(n);
    for (size_t i = 0; i < n; i++) {
        result.push_back(BitVector::unit(n, i));
    }
    return result;
}

void BitMatrix::push_back(BitVector row) {
    if (row.size() != num_cols_) {
        throw std::invalid_argument("matrix row has length " + std::to_string(row.size()) + ", expected " +
                                    std::to_string(num_cols_));
    }
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix result(rows_.size());
    for (size_t c = 0; c < num_cols_; c++) {
        BitVector col(rows_.size());
        for (size_t r = 0; r < rows_.size(); r++) {
            if (rows_[r].get(c)) {
                col.set(r, true);
            }
        }
        result.push_back(std::move(col));
    }
    return result;
}

BitVector BitMatrix::apply(const BitVector &v) const {
    BitVector out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        if (rows_[r].dot(v)) {
            out.set(r, true);
        }
    }
    return out;
}

BitVector BitMatrix::combine(const BitVector &coefficients) const {
    if (coefficients.size() != rows_.size()) {
        throw std::invalid_argument("coefficient vector length does not match row count");
    }
    BitVector out(num_cols_);
    for (size_t r = 0; r < rows_.size(); r++) {
        if (coefficients.get(r)) {
            out ^= rows_[r];
        }
    }
    return out;
}

BitMatrix BitMatrix::times_transpose(const BitMatrix &other) const {
    BitMatrix result(other.num_rows());
    for (const auto &r : rows_) {
        result.push_back(other.apply(r));
    }
    return result;
}

BitMatrix BitMatrix::puncture(const std::vector<size_t> &columns) const {
    std::vector<bool> drop(num_cols_, false);
    for (size_t c : columns) {
        if (c >= num_cols_) {
            throw std::out_of_range("puncture column " + std::to_string(c) + " out of range");
        }
        drop[c] = true;
    }
    std::vector<size_t> keep;
    for (size_t c = 0; c < num_cols_; c++) {
        if (!drop[c]) {
            keep.push_back(c);
        }
    }
    BitMatrix result(keep.size());
    for (const auto &r : rows_) {
        result.push_back(r.restrict_to(keep));
    }
    return result;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (const auto &r : rows_) {
        out.push_back(r.str());
    }
    return out;
}

RrefResult rref(const BitMatrix &m) {
    std::vector<BitVector> rows = m.rows();
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t col = 0; col < m.num_cols() && next < rows.size(); col++) {
        size_t pivot_row = next;
        while (pivot_row < rows.size() && !rows[pivot_row].get(col)) {
            pivot_row++;
        }
        if (pivot_row == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[pivot_row]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r].get(col)) {
                rows[r] ^= rows[next];
            }
        }
        pivots.push_back(col);
        next++;
    }
    rows.resize(next);
    size_t rk = next;
    return RrefResult{BitMatrix(m.num_cols(), std::move(rows)), rk, std::move(pivots)};
}

size_t rank(const BitMatrix &m) {
    return rref(m).rank;
}

std::optional<BitVector> solve_row_combination(const BitMatrix &a, const BitVector &b) {
    // Eliminate on rows augmented with an identity tracker.
    size_t n = a.num_rows();
    std::vector<BitVector> rows = a.rows();
    std::vector<BitVector> track;
    track.reserve(n);
    for (size_t i = 0; i < n; i++) {
        track.push_back(BitVector::unit(n, i));
    }
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t col = 0; col < a.num_cols() && next < n; col++) {
        size_t p = next;
        while (p < n && !rows[p].get(col)) {
            p++;
        }
        if (p == n) {
            continue;
        }
        std::swap(rows[next], rows[p]);
        std::swap(track[next], track[p]);
        for (size_t r = 0; r < n; r++) {
            if (r != next && rows[r].get(col)) {
                rows[r] ^= rows[next];
                track[r] ^= track[next];
            }
        }
        pivots.push_back(col);
        next++;
    }
    BitVector residual = b;
    BitVector x(n);
    for (size_t i = 0; i < pivots.size(); i++) {
        if (residual.get(pivots[i])) {
            residual ^= rows[i];
            x ^= track[i];
        }
    }
    if (!residual.is_zero()) {
        return std::nullopt;
    }
    return x;
}

BitMatrix left_kernel(const BitMatrix &a) {
    size_t n = a.num_rows();
    std::vector<BitVector> rows = a.rows();
    std::vector<BitVector> track;
    for (size_t i = 0; i < n; i++) {
        track.push_back(BitVector::unit(n, i));
    }
    size_t next = 0;
    for (size_t col = 0; col < a.num_cols() && next < n; col++) {
        size_t p = next;
        while (p < n && !rows[p].get(col)) {
            p++;
        }
        if (p == n) {
            continue;
        }
        std::swap(rows[next], rows[p]);
        std::swap(track[next], track[p]);
        for (size_t r = 0; r < n; r++) {
            if (r != next && rows[r].get(col)) {
                rows[r] ^= rows[next];
                track[r] ^= track[next];
            }
        }
        next++;
    }
    BitMatrix kernel(n);
    for (size_t r = next; r < n; r++) {
        kernel.push_back(track[r]);
    }
    return kernel;
}

}  // namespace cssdiag
