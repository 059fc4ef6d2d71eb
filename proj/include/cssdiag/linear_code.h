#ifndef CSSDIAG_LINEAR_CODE_H
#define CSSDIAG_LINEAR_CODE_H

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cssdiag/bit_matrix.h"
#include "cssdiag/errors.h"

namespace cssdiag {

/// A binary linear [n, k] code held in canonical form: the generator matrix is in
/// reduced row-echelon form, so two codes are equal exactly when their generators are.
class LinearCode {
   public:
    /// Spans the given rows; dependent or zero rows are allowed.
    explicit LinearCode(const BitMatrix &spanning_rows);
    LinearCode(size_t n, const std::vector<BitVector> &spanning_rows);

    static LinearCode zero(size_t n);
    static LinearCode full(size_t n);
    static LinearCode from_strings(size_t n, const std::vector<std::string> &rows);

    size_t n() const {
        return n_;
    }
    size_t k() const {
        return gen_.num_rows();
    }
    const BitMatrix &gen() const {
        return gen_;
    }
    /// Parity-check matrix; its rows span the dual code.
    const BitMatrix &check() const {
        return check_;
    }
    const std::vector<size_t> &pivots() const {
        return pivots_;
    }

    bool contains(const BitVector &v) const;
    /// Lexicographically least element of the coset v + C (zero at every pivot column).
    BitVector reduce(const BitVector &v) const;
    /// Codeword sum_i coefficients_i * gen.row(i).
    BitVector encode(const BitVector &coefficients) const;
    /// Codeword for an integer index whose most significant of k bits selects row 0.
    BitVector codeword(uint64_t index) const;
    /// Inverse of encode for a codeword.
    BitVector coefficients_of(const BitVector &codeword) const;

    LinearCode dual() const;
    bool is_subcode_of(const LinearCode &super) const;

    /// Visits all 2^k codewords once, in Gray-code order starting at zero.
    template <typename Fn>
    void for_each_codeword(Fn &&fn, unsigned cap = kDefaultEnumerationCap) const {
        require_enumerable(k(), cap, "codeword enumeration");
        BitVector word(n_);
        fn(static_cast<const BitVector &>(word));
        uint64_t total = uint64_t{1} << k();
        for (uint64_t i = 1; i < total; i++) {
            word ^= gen_.row(std::countr_zero(i));
            fn(static_cast<const BitVector &>(word));
        }
    }

    bool operator==(const LinearCode &other) const {
        return n_ == other.n_ && gen_ == other.gen_;
    }

   private:
    size_t n_;
    BitMatrix gen_;
    BitMatrix check_;
    std::vector<size_t> pivots_;
};

/// All codewords in Gray-code order (deterministic).
std::vector<BitVector> enumerate(const LinearCode &c, unsigned cap = kDefaultEnumerationCap);

/// Basis rows of a complement of sub inside super: super's generator rows that are
/// independent modulo sub, each taken in normal form modulo sub.
BitMatrix coset_basis(const LinearCode &sub, const LinearCode &super);

/// One representative per coset of sub in super, first representative zero.
/// Representative i is the combination of coset_basis rows selected by i (row 0 is the MSB).
std::vector<BitVector> coset_reps(const LinearCode &sub, const LinearCode &super,
                                  unsigned cap = kDefaultEnumerationCap);

/// Distribution of w_H(u ^ shift) over u in c.
std::map<size_t, uint64_t> weight_distribution(const LinearCode &c, const BitVector &shift,
                                               unsigned cap = kDefaultEnumerationCap);

/// Minimum weight of c \ exclude if it is at most w_max, found by enumerating
/// candidate vectors of increasing weight and testing membership.
std::optional<size_t> min_weight_bounded(const LinearCode &c, const LinearCode &exclude, size_t w_max);

/// Every vector of weight <= w_max in c \ exclude, sorted by (weight, lexicographic).
std::vector<BitVector> vectors_bounded(const LinearCode &c, const LinearCode &exclude, size_t w_max);

}  // namespace cssdiag

#endif
