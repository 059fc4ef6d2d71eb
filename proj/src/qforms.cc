#include "cssdiag/qforms.h"

#include <bit>
#include <stdexcept>

namespace cssdiag {

namespace {

constexpr size_t kMaxQuadraticVars = 16;

void require_vars(size_t m) {
    if (m > kMaxQuadraticVars) {
        throw CapExceededError("quadratic forms over more than " + std::to_string(kMaxQuadraticVars) +
                               " variables are not enumerated");
    }
}

std::vector<bool> form_values(const QuadraticForm &q) {
    std::vector<bool> out(size_t{1} << q.m());
    for (uint64_t p = 0; p < out.size(); p++) {
        out[p] = q.evaluate(p);
    }
    return out;
}

bool parity(uint64_t x) {
    return std::popcount(x) & 1;
}

uint64_t binomial(uint64_t k, uint64_t r) {
    if (r > k) {
        return 0;
    }
    unsigned __int128 out = 1;
    for (uint64_t i = 0; i < r; i++) {
        out = out * (k - i) / (i + 1);
    }
    return static_cast<uint64_t>(out);
}

}  // namespace

QuadraticForm::QuadraticForm(size_t m) : m_(m), upper_(m) {
    if (m == 0) {
        throw std::invalid_argument("quadratic form needs at least one variable");
    }
    require_vars(m);
    for (size_t i = 0; i < m; i++) {
        upper_.push_back(BitVector(m));
    }
}

QuadraticForm QuadraticForm::from_monomials(size_t m, const std::vector<std::pair<size_t, size_t>> &monomials) {
    QuadraticForm q(m);
    for (auto [i, j] : monomials) {
        if (i == j || i >= m || j >= m) {
            throw std::invalid_argument("monomial x" + std::to_string(i) + "x" + std::to_string(j) +
                                        " is not a product of two distinct variables in range");
        }
        if (i > j) {
            std::swap(i, j);
        }
        q.upper_.row(i).flip(j);
    }
    return q;
}

QuadraticForm QuadraticForm::from_upper(const BitMatrix &upper) {
    size_t m = upper.num_cols();
    if (upper.num_rows() != m) {
        throw std::invalid_argument("quadratic form matrix must be square");
    }
    QuadraticForm q(m);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            q.upper_.row(i).set(j, upper.row(i).get(j));
        }
    }
    return q;
}

BitMatrix QuadraticForm::symplectic() const {
    BitMatrix r = upper_;
    BitMatrix t = upper_.transpose();
    for (size_t i = 0; i < m_; i++) {
        r.row(i) ^= t.row(i);
    }
    return r;
}

bool QuadraticForm::evaluate(uint64_t point) const {
    BitVector x = BitVector::from_uint(m_, point);
    bool out = false;
    for (size_t i = 0; i < m_; i++) {
        if (x.get(i)) {
            out ^= upper_.row(i).dot(x);
        }
    }
    return out;
}

QuadraticForm QuadraticForm::operator+(const QuadraticForm &other) const {
    if (other.m_ != m_) {
        throw std::invalid_argument("cannot add quadratic forms in different variable counts");
    }
    QuadraticForm out = *this;
    for (size_t i = 0; i < m_; i++) {
        out.upper_.row(i) ^= other.upper_.row(i);
    }
    return out;
}

BitVector monomial_evaluation(size_t m, const std::vector<size_t> &vars, bool punctured) {
    require_vars(m);
    for (size_t v : vars) {
        if (v >= m) {
            throw std::invalid_argument("monomial variable out of range");
        }
    }
    return evaluation_vector(
        m,
        [&](uint64_t p) {
            for (size_t v : vars) {
                if (!point_coordinate(m, p, v)) {
                    return false;
                }
            }
            return true;
        },
        punctured);
}

size_t rank_symplectic(const QuadraticForm &q) {
    size_t r = rank(q.symplectic());
    if (r % 2 != 0) {
        throw std::logic_error("symplectic matrix has odd rank");
    }
    return r;
}

std::set<uint64_t> lemma_weight_set(size_t m, size_t h) {
    if (h >= m || 2 * h > m) {
        throw std::invalid_argument("rank 2h must not exceed m");
    }
    uint64_t mid = uint64_t{1} << (m - 1);
    uint64_t delta = uint64_t{1} << (m - h - 1);
    return {mid - delta, mid, mid + delta};
}

std::map<uint64_t, uint64_t> coset_weights(const QuadraticForm &q) {
    std::vector<bool> values = form_values(q);
    size_t m = q.m();
    uint64_t total = uint64_t{1} << m;
    std::map<uint64_t, uint64_t> out;
    for (uint64_t a = 0; a < total; a++) {
        uint64_t weight = 0;
        for (uint64_t p = 0; p < total; p++) {
            weight += values[p] ^ parity(a & p);
        }
        out[weight]++;
        out[total - weight]++;  // eps = 1 complements the word
    }
    return out;
}

bool coset_weights_within_lemma(const QuadraticForm &q) {
    std::set<uint64_t> allowed = lemma_weight_set(q.m(), rank_symplectic(q) / 2);
    for (const auto &[w, count] : coset_weights(q)) {
        if (!allowed.contains(w)) {
            return false;
        }
    }
    return true;
}

CongruenceReport punctured_congruences(const QuadraticForm &q) {
    std::vector<bool> values = form_values(q);
    size_t m = q.m();
    size_t h = rank_symplectic(q) / 2;
    uint64_t modulus = uint64_t{1} << (m - h - 1);
    uint64_t total = uint64_t{1} << m;
    CongruenceReport out{modulus, true, true};
    for (uint64_t a = 0; a < total; a++) {
        uint64_t weight = 0;
        for (uint64_t p = 1; p < total; p++) {
            weight += values[p] ^ parity(a & p);
        }
        uint64_t complement = (total - 1) - weight;
        if (weight % modulus != 0) {
            out.divisible = false;
        }
        if ((complement + 1) % modulus != 0) {
            out.shifted = false;
        }
    }
    return out;
}

CharacterSums character_sums(const QuadraticForm &q, uint64_t a) {
    size_t m = q.m();
    uint64_t total = uint64_t{1} << m;
    BitMatrix r = q.symplectic();
    CharacterSums out{0, 0};
    for (uint64_t p = 0; p < total; p++) {
        int64_t sign = (q.evaluate(p) ^ parity(a & p)) ? -1 : 1;
        out.full += sign;
        if (r.apply(BitVector::from_uint(m, p)).is_zero()) {
            out.kernel += sign;
        }
    }
    return out;
}

LinearCode simplex_code(size_t m) {
    if (m < 2 || m > 16) {
        throw std::invalid_argument("simplex code requires 2 <= m <= 16");
    }
    std::vector<BitVector> rows;
    for (size_t i = 0; i < m; i++) {
        rows.push_back(monomial_evaluation(m, {i}, true));
    }
    return LinearCode((size_t{1} << m) - 1, rows);
}

std::vector<std::pair<size_t, size_t>> family_pairs(size_t m) {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 1; i + 4 <= m; i++) {
        for (size_t j = i + 1; j <= m; j++) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

size_t max_family_rank(size_t m, const std::vector<std::pair<size_t, size_t>> &pairs) {
    std::vector<QuadraticForm> monomials;
    for (auto [i, j] : pairs) {
        monomials.push_back(QuadraticForm::from_monomials(m, {{i - 1, j - 1}}));
    }
    require_enumerable(monomials.size(), kDefaultEnumerationCap, "family span enumeration");
    size_t best = 0;
    QuadraticForm current(m);
    for (uint64_t s = 1; s < (uint64_t{1} << monomials.size()); s++) {
        current = current + monomials[std::countr_zero(s)];
        best = std::max(best, rank_symplectic(current));
    }
    return best;
}

CssCode build_family(size_t m, const std::vector<std::pair<size_t, size_t>> &pairs) {
    if (m < 5 || m > 12) {
        throw std::invalid_argument("family construction requires 5 <= m <= 12, got m = " + std::to_string(m));
    }
    std::set<std::pair<size_t, size_t>> seen;
    for (auto [i, j] : pairs) {
        if (i < 1 || i + 4 > m || j <= i || j > m) {
            throw std::invalid_argument("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") outside 1 <= i <= m-4, i < j <= m");
        }
        if (!seen.emplace(i, j).second) {
            throw std::invalid_argument("pair (" + std::to_string(i) + "," + std::to_string(j) + ") repeated");
        }
    }
    size_t n = (size_t{1} << m) - 1;
    LinearCode c2 = simplex_code(m);
    BitMatrix gx(n);
    gx.push_back(BitVector::ones(n));
    for (auto [i, j] : pairs) {
        gx.push_back(monomial_evaluation(m, {i - 1, j - 1}, true) ^ BitVector::ones(n));
    }
    std::vector<BitVector> c1_rows = c2.gen().rows();
    for (const auto &row : gx.rows()) {
        c1_rows.push_back(row);
    }
    CssCode code(LinearCode(n, c1_rows), c2, BitVector(n), gx);

    if (max_family_rank(m, pairs) > 2 * (m - 4)) {
        throw std::logic_error("family span contains a quadratic form of rank above 2(m-4)");
    }
    require_enumerable(code.c1().k(), kDefaultEnumerationCap, "family congruence validation");
    for (uint64_t a = 0; a < (uint64_t{1} << code.k()); a++) {
        BitVector alpha = BitVector::from_uint(code.k(), a);
        BitVector base = code.logical_shift(alpha);
        uint64_t expected = alpha.weight() % 2 == 0 ? 0 : 7;
        c2.for_each_codeword([&](const BitVector &c) {
            if ((base ^ c).weight() % 8 != expected) {
                throw std::logic_error("family coset of " + alpha.str() + " violates the mod-8 weight congruence");
            }
        });
    }
    return code;
}

LogicalDiagonal parity_phase_table(size_t k) {
    LogicalDiagonal out = LogicalDiagonal::identity(k);
    out.level = 3;
    for (uint64_t a = 0; a < out.exponents.size(); a++) {
        out.exponents[a] = std::popcount(a) % 2;
    }
    return out;
}

Theorem3Report theorem3_check(const CssCode &code, unsigned cap) {
    DyadicDiagonalGate t_dagger = DyadicDiagonalGate::weight_rule(code.n(), 3, 7);
    Theorem3Report out{preserves(code, t_dagger, cap), std::nullopt, false};
    if (out.preserves) {
        out.logical = induced_logical(code, t_dagger, cap);
        out.matches_parity_table = *out.logical == parity_phase_table(code.k());
    }
    return out;
}

bool theorem3_verify(const CssCode &code, unsigned cap) {
    Theorem3Report report = theorem3_check(code, cap);
    return report.preserves && report.matches_parity_table;
}

uint64_t lemma3_phase(uint64_t k) {
    uint64_t c1 = binomial(k, 1) % 8;
    uint64_t c2 = binomial(k, 2) % 8;
    uint64_t c3 = binomial(k, 3) % 8;
    return (c1 + 8 * 2 - (2 * c2) % 8 + 4 * c3) % 8;
}

LogicalDecomposition logical_decomposition(size_t k, unsigned cap) {
    if (k < 1) {
        throw std::invalid_argument("logical decomposition needs k >= 1");
    }
    require_enumerable(k, cap, "logical decomposition table");
    LogicalDecomposition out{k, binomial(k, 2), binomial(k, 3), lemma3_phase(k), LogicalDiagonal::identity(k), false};
    out.table.level = 3;
    for (uint64_t a = 0; a < out.table.exponents.size(); a++) {
        BitVector alpha = BitVector::from_uint(k, a);
        uint64_t t = 0;
        for (size_t i = 0; i < k; i++) {
            if (!alpha[i]) {
                continue;
            }
            t += 1;  // T
            for (size_t j = i + 1; j < k; j++) {
                if (!alpha[j]) {
                    continue;
                }
                t += 6;  // controlled-P^dagger
                for (size_t l = j + 1; l < k; l++) {
                    if (alpha[l]) {
                        t += 4;  // CCZ
                    }
                }
            }
        }
        out.table.exponents[a] = t % 8;
    }
    out.verified = out.table == parity_phase_table(k);
    return out;
}

}  // namespace cssdiag
