#ifndef CSSDIAG_CSS_CODE_H
#define CSSDIAG_CSS_CODE_H

#include <optional>
#include <vector>

#include "cssdiag/linear_code.h"
#include "cssdiag/sparse_state.h"

namespace cssdiag {

/// CSS(X, C2; Z, C1^perp; y) with X-signs fixed to +1.
///
/// gx holds coset representatives of C1/C2 (the X-logicals) and gz the Z-logicals in
/// C2^perp, chosen so that gx gz^T = I_k. Each gz row is the lexicographically least
/// solution of its linear system, i.e. its normal form modulo C1^perp.
class CssCode {
   public:
    /// Uses coset_basis(c2, c1) for the X-logicals.
    CssCode(LinearCode c1, LinearCode c2, BitVector y);
    /// Uses caller-chosen X-logical rows; they must lie in c1 and be independent modulo c2.
    CssCode(LinearCode c1, LinearCode c2, BitVector y, BitMatrix gx);

    size_t n() const {
        return c1_.n();
    }
    size_t k() const {
        return gx_.num_rows();
    }
    const LinearCode &c1() const {
        return c1_;
    }
    const LinearCode &c2() const {
        return c2_;
    }
    const BitVector &y() const {
        return y_;
    }
    const BitMatrix &gx() const {
        return gx_;
    }
    const BitMatrix &gz() const {
        return gz_;
    }

    /// alpha gx, the X-logical shift of logical basis state alpha.
    BitVector logical_shift(const BitVector &alpha) const;
    /// alpha gz.
    BitVector z_logical(const BitVector &alpha) const;

    /// Same code with a different character vector.
    CssCode with_y(BitVector y) const;

   private:
    void validate_and_solve();

    LinearCode c1_;
    LinearCode c2_;
    BitVector y_;
    BitMatrix gx_;
    BitMatrix gz_;
};

/// Encoded basis state |alpha-bar> = |C2|^{-1/2} sum_{x in C2} |alpha gx + x + y>.
SparseState encode_basis(const CssCode &code, const BitVector &alpha, unsigned cap = kDefaultEnumerationCap);

/// True iff puncturing the C2 generator matrix on support keeps its rank, i.e. no
/// nonzero C2 codeword lies inside the support. Coordinates are 0-based.
bool ft_local_check(const CssCode &code, const std::vector<size_t> &support);

/// All v with w_H(v) <= w_max and v in C2^perp \ C1^perp.
std::vector<BitVector> undetectable_z_errors_bounded(const CssCode &code, size_t w_max);

struct WeightBound {
    /// Exact minimum when found; otherwise the lower bound w_max + 1.
    size_t value;
    bool exact;
};

struct DistanceReport {
    /// Minimum weight over C2^perp \ C1^perp (undetectable Z-type logicals).
    WeightBound z_logical;
    /// Minimum weight over C1 \ C2 (undetectable X-type logicals).
    WeightBound x_logical;
    /// min of the two; exact when the smaller side is exact.
    WeightBound distance;
};

DistanceReport distance_bounded(const CssCode &code, size_t w_max);

}  // namespace cssdiag

#endif
