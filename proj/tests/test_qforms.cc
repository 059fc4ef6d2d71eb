#include <gtest/gtest.h>

#include <random>

#include "cssdiag/qforms.h"
#include "test_support.h"

using namespace cssdiag;
using namespace testing_support;

namespace {

// Rank of the symmetric matrix R by Gaussian elimination on plain integers.
size_t brute_rank(const std::vector<uint64_t> &rows_in) {
    std::vector<uint64_t> rows = rows_in;
    size_t r = 0;
    for (int bit = 63; bit >= 0; bit--) {
        for (size_t i = r; i < rows.size(); i++) {
            if ((rows[i] >> bit) & 1) {
                std::swap(rows[i], rows[r]);
                for (size_t j = 0; j < rows.size(); j++) {
                    if (j != r && ((rows[j] >> bit) & 1)) {
                        rows[j] ^= rows[r];
                    }
                }
                r++;
                break;
            }
        }
    }
    return r;
}

QuadraticForm random_form(std::mt19937_64 &rng, size_t m) {
    std::vector<std::pair<size_t, size_t>> mons;
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            if (rng() & 1) {
                mons.push_back({i, j});
            }
        }
    }
    return QuadraticForm::from_monomials(m, mons);
}

bool q_value(size_t m, const std::vector<std::pair<size_t, size_t>> &mons, uint64_t p) {
    bool v = false;
    for (auto [i, j] : mons) {
        v ^= point_coordinate(m, p, i) && point_coordinate(m, p, j);
    }
    return v;
}

}  // namespace

TEST(quadratic_form, evaluate_matches_monomials) {
    std::vector<std::pair<size_t, size_t>> mons{{0, 1}, {1, 3}, {2, 3}};
    auto q = QuadraticForm::from_monomials(4, mons);
    for (uint64_t p = 0; p < 16; p++) {
        EXPECT_EQ(q.evaluate(p), q_value(4, mons, p));
    }
    EXPECT_THROW(QuadraticForm::from_monomials(4, {{2, 2}}), std::invalid_argument);
}

TEST(quadratic_form, symplectic_rank_even_and_matches) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 100; trial++) {
        size_t m = 2 + rng() % 7;
        auto q = random_form(rng, m);
        std::vector<uint64_t> rows(m, 0);
        for (size_t i = 0; i < m; i++) {
            for (size_t j = 0; j < m; j++) {
                // R_ij = Q(e_i + e_j) - Q(e_i) - Q(e_j)
                uint64_t ei = uint64_t{1} << (m - 1 - i);
                uint64_t ej = uint64_t{1} << (m - 1 - j);
                bool r = i != j && (q.evaluate(ei ^ ej) ^ q.evaluate(ei) ^ q.evaluate(ej));
                if (r) {
                    rows[i] |= uint64_t{1} << (m - 1 - j);
                }
            }
        }
        size_t rk = rank_symplectic(q);
        EXPECT_EQ(rk % 2, 0u);
        EXPECT_EQ(rk, brute_rank(rows));
    }
}

TEST(quadratic_form, coset_weights_three_valued) {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 60; trial++) {
        size_t m = 2 + rng() % 6;
        auto q = random_form(rng, m);
        size_t h = rank_symplectic(q) / 2;
        auto allowed = lemma_weight_set(m, h);
        // Direct enumeration of eps*1 + L_a + Q.
        std::map<uint64_t, uint64_t> expected;
        for (int eps = 0; eps < 2; eps++) {
            for (uint64_t a = 0; a < (uint64_t{1} << m); a++) {
                uint64_t w = 0;
                for (uint64_t p = 0; p < (uint64_t{1} << m); p++) {
                    w += eps ^ parity64(a & p) ^ q.evaluate(p);
                }
                expected[w]++;
                EXPECT_TRUE(allowed.count(w)) << "m=" << m << " h=" << h << " w=" << w;
            }
        }
        EXPECT_EQ(coset_weights(q), expected);
        EXPECT_TRUE(coset_weights_within_lemma(q));
    }
}

TEST(quadratic_form, punctured_congruences_hold) {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 60; trial++) {
        size_t m = 3 + rng() % 5;
        auto q = random_form(rng, m);
        auto report = punctured_congruences(q);
        size_t h = rank_symplectic(q) / 2;
        EXPECT_EQ(report.modulus, uint64_t{1} << (m - h - 1));
        EXPECT_TRUE(report.divisible);
        EXPECT_TRUE(report.shifted);
    }
}

TEST(quadratic_form, character_sums) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; trial++) {
        size_t m = 2 + rng() % 6;
        auto q = random_form(rng, m);
        uint64_t a = rng() & ((uint64_t{1} << m) - 1);
        int64_t full = 0;
        for (uint64_t p = 0; p < (uint64_t{1} << m); p++) {
            full += (q.evaluate(p) ^ parity64(a & p)) ? -1 : 1;
        }
        auto sums = character_sums(q, a);
        EXPECT_EQ(sums.full, full);
        EXPECT_EQ(sums.full * sums.full, sums.kernel << m);
        size_t h = rank_symplectic(q) / 2;
        EXPECT_TRUE(full == 0 || std::abs(full) == (int64_t{1} << (m - h)));
    }
}

TEST(simplex_code, shape_and_weights) {
    for (size_t m = 2; m <= 6; m++) {
        auto c = simplex_code(m);
        EXPECT_EQ(c.n(), (size_t{1} << m) - 1);
        EXPECT_EQ(c.k(), m);
        auto dist = weight_distribution(c, BitVector(c.n()));
        EXPECT_EQ(dist, (std::map<size_t, uint64_t>{{0, 1}, {size_t{1} << (m - 1), (uint64_t{1} << m) - 1}}));
    }
    EXPECT_THROW(simplex_code(1), std::invalid_argument);
}

TEST(family, pairs_listing) {
    EXPECT_EQ(family_pairs(5), (std::vector<std::pair<size_t, size_t>>{{1, 2}, {1, 3}, {1, 4}, {1, 5}}));
    EXPECT_EQ(family_pairs(6).size(), 9u);
}

TEST(family, m5_all_pairs) {
    CssCode code = build_family(5, family_pairs(5));
    EXPECT_EQ(code.n(), 31u);
    EXPECT_EQ(code.k(), 5u);
    auto dist = distance_bounded(code, 4);
    EXPECT_TRUE(dist.distance.exact);
    EXPECT_EQ(dist.distance.value, 3u);
    EXPECT_TRUE(theorem3_verify(code));
    EXPECT_LE(max_family_rank(5, family_pairs(5)), 2u);
}

TEST(family, m6_six_pairs) {
    auto pairs = family_pairs(6);
    pairs.resize(6);
    CssCode code = build_family(6, pairs);
    EXPECT_EQ(code.n(), 63u);
    EXPECT_EQ(code.k(), 7u);
    auto report = theorem3_check(code);
    EXPECT_TRUE(report.preserves);
    EXPECT_TRUE(report.matches_parity_table);
}

TEST(family, rejects_bad_input) {
    EXPECT_THROW(build_family(4, {}), std::invalid_argument);
    EXPECT_THROW(build_family(5, {{2, 3}}), std::invalid_argument);
    EXPECT_THROW(build_family(5, {{1, 2}, {1, 2}}), std::invalid_argument);
}

TEST(theorem3_verify, small_codes) {
    // Transversal T^dagger on [[15,1,3]] is logical T, the k = 1 parity table.
    EXPECT_TRUE(theorem3_verify(code_15_1_3()));
    EXPECT_FALSE(theorem3_verify(code_5_1_2()));
}

TEST(lemma3_phase, phase_values) {
    for (uint64_t k = 0; k <= 40; k++) {
        int64_t v = static_cast<int64_t>(k) - static_cast<int64_t>(k * (k - 1)) +
                    static_cast<int64_t>(4 * (k * (k - 1) * (k - 2) / 6));
        EXPECT_EQ(lemma3_phase(k), static_cast<uint64_t>(((v % 8) + 8) % 8));
    }
    // (-1)^{k+1} + 1 mod 8 style identity: odd k gives 1, even gives 0 after adding the residue.
    for (uint64_t k = 1; k <= 12; k++) {
        EXPECT_EQ(lemma3_phase(k), k % 2);
    }
}

TEST(lemma3_phase, decomposition_reproduces_parity_table) {
    for (size_t k = 1; k <= 10; k++) {
        auto d = logical_decomposition(k);
        EXPECT_EQ(d.t_count, k);
        EXPECT_EQ(d.cp_dagger_count, k * (k - 1) / 2);
        EXPECT_EQ(d.ccz_count, k * (k - 1) * (k - 2) / 6);
        EXPECT_TRUE(d.verified);
        EXPECT_EQ(d.table, parity_phase_table(k));
        EXPECT_EQ(d.residue, lemma3_phase(k));
    }
}
