#ifndef CSSDIAG_BIT_MATRIX_H
#define CSSDIAG_BIT_MATRIX_H

#include <optional>
#include <string>
#include <vector>

#include "cssdiag/bit_vector.h"

namespace cssdiag {

/// A rectangular GF(2) matrix stored as a list of equal-length BitVector rows.
class BitMatrix {
   public:
    explicit BitMatrix(size_t num_cols = 0) : num_cols_(num_cols) {
    }
    BitMatrix(size_t num_cols, std::vector<BitVector> rows);

    static BitMatrix from_strings(const std::vector<std::string> &rows, size_t num_cols);
    static BitMatrix identity(size_t n);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }
    bool empty() const {
        return rows_.empty();
    }
    const BitVector &row(size_t i) const {
        return rows_[i];
    }
    BitVector &row(size_t i) {
        return rows_[i];
    }
    const std::vector<BitVector> &rows() const {
        return rows_;
    }
    void push_back(BitVector row);

    BitMatrix transpose() const;
    /// Returns M v^T as a vector of length num_rows().
    BitVector apply(const BitVector &v) const;
    /// Returns a M (a linear combination of rows) as a vector of length num_cols().
    BitVector combine(const BitVector &coefficients) const;
    /// Returns this * other^T.
    BitMatrix times_transpose(const BitMatrix &other) const;
    /// Deletes the listed columns.
    BitMatrix puncture(const std::vector<size_t> &columns) const;

    std::vector<std::string> to_strings() const;
    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t num_cols_;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    /// Reduced row-echelon form with zero rows removed.
    BitMatrix matrix;
    size_t rank;
    /// Pivot column of each row of matrix.
    std::vector<size_t> pivots;
};

RrefResult rref(const BitMatrix &m);
size_t rank(const BitMatrix &m);

/// Solves x A^T = b, i.e. finds a coefficient vector x with sum_i x_i A.row(i) = b.
/// Returns nullopt when b is outside the row span.
std::optional<BitVector> solve_row_combination(const BitMatrix &a, const BitVector &b);

/// Basis of the left null space {x : x A = 0}, returned as rows.
BitMatrix left_kernel(const BitMatrix &a);

}  // namespace cssdiag

#endif
