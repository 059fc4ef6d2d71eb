#include "cssdiag/css_code.h"

#include <cmath>
#include <stdexcept>

namespace cssdiag {

CssCode::CssCode(LinearCode c1, LinearCode c2, BitVector y)
    : c1_(std::move(c1)), c2_(std::move(c2)), y_(std::move(y)), gx_(c1_.n()), gz_(c1_.n()) {
    if (!c2_.is_subcode_of(c1_)) {
        throw ContainmentError("CSS code requires C2 to be contained in C1");
    }
    gx_ = coset_basis(c2_, c1_);
    validate_and_solve();
}

CssCode::CssCode(LinearCode c1, LinearCode c2, BitVector y, BitMatrix gx)
    : c1_(std::move(c1)), c2_(std::move(c2)), y_(std::move(y)), gx_(std::move(gx)), gz_(c1_.n()) {
    if (!c2_.is_subcode_of(c1_)) {
        throw ContainmentError("CSS code requires C2 to be contained in C1");
    }
    if (gx_.num_cols() != c1_.n()) {
        throw std::invalid_argument("X-logical rows have the wrong length");
    }
    if (gx_.num_rows() != c1_.k() - c2_.k()) {
        throw std::invalid_argument("expected " + std::to_string(c1_.k() - c2_.k()) + " X-logical rows, got " +
                                    std::to_string(gx_.num_rows()));
    }
    std::vector<BitVector> span = c2_.gen().rows();
    for (const auto &row : gx_.rows()) {
        if (!c1_.contains(row)) {
            throw ContainmentError("X-logical row " + row.str() + " is not in C1");
        }
        span.push_back(row);
    }
    if (rank(BitMatrix(n(), span)) != c1_.k()) {
        throw std::invalid_argument("X-logical rows are dependent modulo C2");
    }
    validate_and_solve();
}

void CssCode::validate_and_solve() {
    if (y_.size() != n()) {
        throw std::invalid_argument("character vector y has length " + std::to_string(y_.size()) +
                                    ", expected " + std::to_string(n()));
    }
    // gamma = beta H with H spanning C2^perp; require gx gamma^T = e_j.
    LinearCode c2_dual = c2_.dual();
    LinearCode c1_dual = c1_.dual();
    const BitMatrix &h = c2_dual.gen();
    BitMatrix m = h.times_transpose(gx_);  // rows indexed by H rows, columns by gx rows
    gz_ = BitMatrix(n());
    for (size_t j = 0; j < k(); j++) {
        auto beta = solve_row_combination(m, BitVector::unit(k(), j));
        if (!beta) {
            throw std::logic_error("no Z-logical solution; CSS construction invariant violated");
        }
        gz_.push_back(c1_dual.reduce(h.combine(*beta)));
    }
    for (size_t i = 0; i < k(); i++) {
        for (size_t j = 0; j < k(); j++) {
            if (gx_.row(i).dot(gz_.row(j)) != (i == j)) {
                throw std::logic_error("gx gz^T != I");
            }
        }
    }
}

BitVector CssCode::logical_shift(const BitVector &alpha) const {
    return gx_.combine(alpha);
}

BitVector CssCode::z_logical(const BitVector &alpha) const {
    return gz_.combine(alpha);
}

CssCode CssCode::with_y(BitVector y) const {
    return CssCode(c1_, c2_, std::move(y), gx_);
}

SparseState encode_basis(const CssCode &code, const BitVector &alpha, unsigned cap) {
    if (alpha.size() != code.k()) {
        throw std::invalid_argument("encode_basis: alpha has length " + std::to_string(alpha.size()) +
                                    ", expected k = " + std::to_string(code.k()));
    }
    require_enumerable(code.c2().k(), cap, "encode_basis");
    SparseState state(code.n());
    BitVector offset = code.logical_shift(alpha) ^ code.y();
    double amp = 1.0 / std::sqrt(std::ldexp(1.0, static_cast<int>(code.c2().k())));
    code.c2().for_each_codeword([&](const BitVector &x) { state.add(x ^ offset, {amp, 0.0}); }, cap);
    return state;
}

bool ft_local_check(const CssCode &code, const std::vector<size_t> &support) {
    for (size_t c : support) {
        if (c >= code.n()) {
            throw std::out_of_range("support coordinate " + std::to_string(c) + " out of range");
        }
    }
    return rank(code.c2().gen().puncture(support)) == code.c2().k();
}

std::vector<BitVector> undetectable_z_errors_bounded(const CssCode &code, size_t w_max) {
    return vectors_bounded(code.c2().dual(), code.c1().dual(), w_max);
}

DistanceReport distance_bounded(const CssCode &code, size_t w_max) {
    auto bound = [&](std::optional<size_t> found) {
        return found ? WeightBound{*found, true} : WeightBound{w_max + 1, false};
    };
    DistanceReport r;
    r.z_logical = bound(min_weight_bounded(code.c2().dual(), code.c1().dual(), w_max));
    r.x_logical = bound(min_weight_bounded(code.c1(), code.c2(), w_max));
    const WeightBound &lo = r.z_logical.value <= r.x_logical.value ? r.z_logical : r.x_logical;
    r.distance = lo;
    return r;
}

}  // namespace cssdiag
