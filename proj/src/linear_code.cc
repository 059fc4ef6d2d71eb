#include "cssdiag/linear_code.h"

#include <algorithm>
#include <stdexcept>

namespace cssdiag {

namespace {

/// Parity-check rows for an RREF generator: one row per free column f, with a 1 at f
/// and, for every pivot row i, the bit gen[i][f] at that row's pivot column.
BitMatrix check_from_rref(size_t n, const BitMatrix &gen, const std::vector<size_t> &pivots) {
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) {
        is_pivot[p] = true;
    }
    BitMatrix check(n);
    for (size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector row = BitVector::unit(n, f);
        for (size_t i = 0; i < gen.num_rows(); i++) {
            if (gen.row(i).get(f)) {
                row.set(pivots[i], true);
            }
        }
        check.push_back(std::move(row));
    }
    return check;
}

/// Depth-first enumeration of weight-w supports with incremental syndromes.
class BoundedSearch {
   public:
    BoundedSearch(const LinearCode &c, const LinearCode &exclude)
        : n_(c.n()), in_code_cols_(c.check().transpose()), excl_cols_(exclude.check().transpose()) {
        if (exclude.n() != c.n()) {
            throw std::invalid_argument("bounded search: code lengths differ");
        }
        if (!exclude.is_subcode_of(c)) {
            throw ContainmentError("bounded search: excluded code is not contained in the searched code");
        }
    }

    /// Calls fn(support) for each weight-w vector of c \ exclude; stops early if fn returns false.
    template <typename Fn>
    void run(size_t w, Fn &&fn) {
        if (w == 0 || w > n_) {
            return;
        }
        support_.assign(w, 0);
        syn_c_.assign(w + 1, BitVector(in_code_cols_.num_cols()));
        syn_e_.assign(w + 1, BitVector(excl_cols_.num_cols()));
        stop_ = false;
        recurse(0, 0, w, fn);
    }

   private:
    template <typename Fn>
    void recurse(size_t depth, size_t start, size_t w, Fn &fn) {
        for (size_t j = start; j + (w - depth) <= n_ && !stop_; j++) {
            support_[depth] = j;
            syn_c_[depth + 1] = syn_c_[depth];
            syn_c_[depth + 1] ^= in_code_cols_.row(j);
            syn_e_[depth + 1] = syn_e_[depth];
            syn_e_[depth + 1] ^= excl_cols_.row(j);
            if (depth + 1 == w) {
                if (syn_c_[w].is_zero() && !syn_e_[w].is_zero()) {
                    if (!fn(support_)) {
                        stop_ = true;
                    }
                }
            } else {
                recurse(depth + 1, j + 1, w, fn);
            }
        }
    }

    size_t n_;
    BitMatrix in_code_cols_;
    BitMatrix excl_cols_;
    std::vector<size_t> support_;
    std::vector<BitVector> syn_c_;
    std::vector<BitVector> syn_e_;
    bool stop_ = false;
};

}  // namespace

LinearCode::LinearCode(const BitMatrix &spanning_rows) : n_(spanning_rows.num_cols()), gen_(n_), check_(n_) {
    if (n_ == 0) {
        throw std::invalid_argument("linear code length must be at least 1");
    }
    RrefResult r = rref(spanning_rows);
    gen_ = std::move(r.matrix);
    pivots_ = std::move(r.pivots);
    check_ = check_from_rref(n_, gen_, pivots_);
}

LinearCode::LinearCode(size_t n, const std::vector<BitVector> &spanning_rows)
    : LinearCode(BitMatrix(n, spanning_rows)) {
}

LinearCode LinearCode::zero(size_t n) {
    return LinearCode(BitMatrix(n));
}

LinearCode LinearCode::full(size_t n) {
    return LinearCode(BitMatrix::identity(n));
}

LinearCode LinearCode::from_strings(size_t n, const std::vector<std::string> &rows) {
    return LinearCode(BitMatrix::from_strings(rows, n));
}

bool LinearCode::contains(const BitVector &v) const {
    if (v.size() != n_) {
        throw std::invalid_argument("membership test: vector length " + std::to_string(v.size()) +
                                    " does not match code length " + std::to_string(n_));
    }
    for (const auto &row : check_.rows()) {
        if (row.dot(v)) {
            return false;
        }
    }
    return true;
}

BitVector LinearCode::reduce(const BitVector &v) const {
    if (v.size() != n_) {
        throw std::invalid_argument("reduce: vector length mismatch");
    }
    BitVector out = v;
    for (size_t i = 0; i < pivots_.size(); i++) {
        if (out.get(pivots_[i])) {
            out ^= gen_.row(i);
        }
    }
    return out;
}

BitVector LinearCode::encode(const BitVector &coefficients) const {
    return gen_.combine(coefficients);
}

BitVector LinearCode::codeword(uint64_t index) const {
    return gen_.combine(BitVector::from_uint(k(), index));
}

BitVector LinearCode::coefficients_of(const BitVector &word) const {
    if (!contains(word)) {
        throw std::invalid_argument("coefficients_of: vector is not a codeword");
    }
    BitVector coeffs(k());
    for (size_t i = 0; i < pivots_.size(); i++) {
        if (word.get(pivots_[i])) {
            coeffs.set(i, true);
        }
    }
    return coeffs;
}

LinearCode LinearCode::dual() const {
    return LinearCode(check_);
}

bool LinearCode::is_subcode_of(const LinearCode &super) const {
    if (super.n() != n_) {
        return false;
    }
    for (const auto &row : gen_.rows()) {
        if (!super.contains(row)) {
            return false;
        }
    }
    return true;
}

std::vector<BitVector> enumerate(const LinearCode &c, unsigned cap) {
    std::vector<BitVector> out;
    require_enumerable(c.k(), cap, "enumerate");
    out.reserve(size_t{1} << c.k());
    c.for_each_codeword([&](const BitVector &w) { out.push_back(w); }, cap);
    return out;
}

BitMatrix coset_basis(const LinearCode &sub, const LinearCode &super) {
    if (!sub.is_subcode_of(super)) {
        throw ContainmentError("coset_basis: sub is not contained in super");
    }
    BitMatrix basis(super.n());
    std::vector<BitVector> span = sub.gen().rows();
    for (const auto &row : super.gen().rows()) {
        BitVector candidate = sub.reduce(row);
        // Independence modulo sub and the rows already chosen.
        BitMatrix trial(super.n(), span);
        trial.push_back(candidate);
        if (rank(trial) > span.size()) {
            span.push_back(candidate);
            basis.push_back(candidate);
        }
    }
    return basis;
}

std::vector<BitVector> coset_reps(const LinearCode &sub, const LinearCode &super, unsigned cap) {
    BitMatrix basis = coset_basis(sub, super);
    require_enumerable(basis.num_rows(), cap, "coset_reps");
    std::vector<BitVector> reps;
    uint64_t total = uint64_t{1} << basis.num_rows();
    reps.reserve(total);
    for (uint64_t i = 0; i < total; i++) {
        reps.push_back(basis.combine(BitVector::from_uint(basis.num_rows(), i)));
    }
    return reps;
}

std::map<size_t, uint64_t> weight_distribution(const LinearCode &c, const BitVector &shift, unsigned cap) {
    if (shift.size() != c.n()) {
        throw std::invalid_argument("weight_distribution: shift length mismatch");
    }
    std::vector<uint64_t> counts(c.n() + 1, 0);
    c.for_each_codeword([&](const BitVector &w) { counts[(w ^ shift).weight()]++; }, cap);
    std::map<size_t, uint64_t> out;
    for (size_t w = 0; w <= c.n(); w++) {
        if (counts[w]) {
            out[w] = counts[w];
        }
    }
    return out;
}

std::optional<size_t> min_weight_bounded(const LinearCode &c, const LinearCode &exclude, size_t w_max) {
    BoundedSearch search(c, exclude);
    for (size_t w = 1; w <= std::min(w_max, c.n()); w++) {
        bool found = false;
        search.run(w, [&](const std::vector<size_t> &) {
            found = true;
            return false;
        });
        if (found) {
            return w;
        }
    }
    return std::nullopt;
}

std::vector<BitVector> vectors_bounded(const LinearCode &c, const LinearCode &exclude, size_t w_max) {
    BoundedSearch search(c, exclude);
    std::vector<BitVector> out;
    for (size_t w = 1; w <= std::min(w_max, c.n()); w++) {
        std::vector<BitVector> layer;
        search.run(w, [&](const std::vector<size_t> &support) {
            BitVector v(c.n());
            for (size_t j : support) {
                v.set(j, true);
            }
            layer.push_back(std::move(v));
            return true;
        });
        std::sort(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace cssdiag
