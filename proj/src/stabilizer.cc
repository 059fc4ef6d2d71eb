#include "cssdiag/stabilizer.h"

#include <stdexcept>

namespace cssdiag {

namespace {

BitVector concat(const BitVector &x, const BitVector &z) {
    size_t n = x.size();
    BitVector out(2 * n);
    for (size_t i = 0; i < n; i++) {
        out.set(i, x.get(i));
        out.set(n + i, z.get(i));
    }
    return out;
}

}  // namespace

bool symplectic_product(const BitVector &x1, const BitVector &z1, const BitVector &x2, const BitVector &z2) {
    return x1.dot(z2) ^ z1.dot(x2);
}

StabilizerStandardForm standard_form(const BitMatrix &x_parts, const BitMatrix &z_parts) {
    size_t n = x_parts.num_cols();
    size_t r = x_parts.num_rows();
    if (z_parts.num_cols() != n || z_parts.num_rows() != r) {
        throw std::invalid_argument("X and Z generator blocks have different shapes");
    }
    for (size_t i = 0; i < r; i++) {
        for (size_t j = i + 1; j < r; j++) {
            if (symplectic_product(x_parts.row(i), z_parts.row(i), x_parts.row(j), z_parts.row(j))) {
                throw std::invalid_argument("generators " + std::to_string(i) + " and " + std::to_string(j) +
                                            " do not commute");
            }
        }
    }
    BitMatrix full(2 * n);
    for (size_t i = 0; i < r; i++) {
        full.push_back(concat(x_parts.row(i), z_parts.row(i)));
    }
    if (rank(full) != r) {
        throw std::invalid_argument("stabilizer generators are dependent");
    }

    StabilizerStandardForm form;
    form.n = n;
    // Combinations with vanishing X part are the pure-Z subgroup, and vice versa.
    BitMatrix pure_z = rref(BitMatrix(n, [&] {
                                BitMatrix ker = left_kernel(x_parts);
                                std::vector<BitVector> rows;
                                for (const auto &beta : ker.rows()) {
                                    rows.push_back(z_parts.combine(beta));
                                }
                                return rows;
                            }()))
                           .matrix;
    BitMatrix pure_x = rref(BitMatrix(n, [&] {
                                BitMatrix ker = left_kernel(z_parts);
                                std::vector<BitVector> rows;
                                for (const auto &beta : ker.rows()) {
                                    rows.push_back(x_parts.combine(beta));
                                }
                                return rows;
                            }()))
                           .matrix;
    form.a_rows = pure_x;
    form.b_rows = pure_z;

    BitMatrix span(2 * n);
    for (const auto &a : pure_x.rows()) {
        span.push_back(concat(a, BitVector(n)));
    }
    for (const auto &b : pure_z.rows()) {
        span.push_back(concat(BitVector(n), b));
    }
    form.c_rows = BitMatrix(n);
    form.d_rows = BitMatrix(n);
    size_t current = rank(span);
    for (size_t i = 0; i < r && current < r; i++) {
        BitMatrix trial = span;
        trial.push_back(full.row(i));
        if (rank(trial) > current) {
            span = std::move(trial);
            current++;
            form.c_rows.push_back(x_parts.row(i));
            form.d_rows.push_back(z_parts.row(i));
        }
    }
    return form;
}

CodeTower tower_from_standard_form(const StabilizerStandardForm &form) {
    std::vector<BitVector> sub_rows = form.a_rows.rows();
    for (const auto &c : form.c_rows.rows()) {
        sub_rows.push_back(c);
    }
    LinearCode sub(form.n, sub_rows);
    LinearCode super = LinearCode(form.n, form.b_rows.rows()).dual();
    if (!sub.is_subcode_of(super)) {
        throw ContainmentError("standard form does not yield a code tower; generators were not symplectic");
    }
    return CodeTower{std::move(sub), std::move(super)};
}

CssCode css_from_tower(const CodeTower &tower) {
    return CssCode(tower.super, tower.sub, BitVector(tower.sub.n()));
}

}  // namespace cssdiag
