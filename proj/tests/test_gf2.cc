#include <gtest/gtest.h>

#include <random>

#include "cssdiag/bit_matrix.h"
#include "cssdiag/linear_code.h"
#include "cssdiag/qforms.h"
#include "test_support.h"

using namespace cssdiag;
using namespace testing_support;

TEST(bit_vector, string_round_trip) {
    BitVector v = BitVector::from_string("1011001");
    EXPECT_EQ(v.size(), 7u);
    EXPECT_EQ(v.str(), "1011001");
    EXPECT_EQ(v.weight(), 4u);
    EXPECT_TRUE(v[0]);
    EXPECT_FALSE(v[1]);
    EXPECT_EQ(v.to_uint(), 0b1011001u);
    EXPECT_EQ(BitVector::from_uint(7, 0b1011001), v);
    EXPECT_THROW(BitVector::from_string("10a"), std::invalid_argument);
}

TEST(bit_vector, multi_word) {
    BitVector v(130);
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    EXPECT_EQ(v.weight(), 3u);
    EXPECT_EQ(v.first_set(), 0u);
    BitVector w = BitVector::unit(130, 129);
    EXPECT_TRUE(v.dot(w));
    EXPECT_EQ((v ^ w).weight(), 2u);
    EXPECT_EQ(BitVector::from_string(v.str()), v);
}

TEST(bit_vector, ordering_is_lexicographic) {
    EXPECT_LT(BitVector::from_string("0111"), BitVector::from_string("1000"));
    EXPECT_LT(BitVector::from_string("0000"), BitVector::from_string("0001"));
}

TEST(bit_vector, length_mismatch_throws) {
    BitVector a(3);
    BitVector b(4);
    EXPECT_THROW(a ^= b, std::invalid_argument);
    EXPECT_THROW((void)a.dot(b), std::invalid_argument);
}

TEST(rref, dependent_rows) {
    BitMatrix m = BitMatrix::from_strings({"110", "011", "101"}, 3);
    EXPECT_EQ(rank(m), 2u);
}

TEST(rref, identity_and_zero) {
    auto r = rref(BitMatrix::identity(3));
    EXPECT_EQ(r.rank, 3u);
    EXPECT_EQ(r.matrix, BitMatrix::identity(3));
    EXPECT_EQ(rank(BitMatrix::from_strings({"0000", "0000"}, 4)), 0u);
}

TEST(rref, idempotent_and_row_equivalent) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng() % 14;
        size_t rows = rng() % 10;
        std::vector<uint64_t> raw;
        BitMatrix m(n);
        for (size_t i = 0; i < rows; i++) {
            uint64_t v = rng() & ((uint64_t{1} << n) - 1);
            raw.push_back(v);
            m.push_back(BitVector::from_uint(n, v));
        }
        auto r = rref(m);
        EXPECT_EQ(rref(r.matrix).matrix, r.matrix);
        std::vector<uint64_t> reduced;
        for (const auto &row : r.matrix.rows()) {
            reduced.push_back(row.to_uint());
        }
        EXPECT_EQ(brute_span(raw), brute_span(reduced));
        EXPECT_EQ(brute_span(raw).size(), uint64_t{1} << r.rank);
    }
}

TEST(linear_code, simplex_dual_is_hamming) {
    LinearCode hamming = simplex_code(3).dual();
    EXPECT_EQ(hamming.n(), 7u);
    EXPECT_EQ(hamming.k(), 4u);
    auto dist = weight_distribution(hamming, BitVector(7));
    EXPECT_EQ(dist, (std::map<size_t, uint64_t>{{0, 1}, {3, 7}, {4, 7}, {7, 1}}));
    for (size_t i = 0; i < 7; i++) {
        EXPECT_FALSE(hamming.contains(BitVector::unit(7, i)));
    }
}

TEST(linear_code, full_space_dual_is_zero) {
    EXPECT_EQ(LinearCode::full(5).dual().k(), 0u);
    EXPECT_EQ(LinearCode::zero(5).dual(), LinearCode::full(5));
}

TEST(linear_code, repetition_dual_is_even_weight) {
    LinearCode rep = code_from(6, {"111111"});
    LinearCode dual = rep.dual();
    EXPECT_EQ(dual.k(), 5u);
    std::set<uint64_t> expected;
    for (uint64_t v = 0; v < 64; v++) {
        if (__builtin_popcountll(v) % 2 == 0) {
            expected.insert(v);
        }
    }
    EXPECT_EQ(brute_span(dual), expected);
    EXPECT_EQ(brute_span(dual), brute_dual(6, brute_span(rep)));
}

TEST(linear_code, contains) {
    LinearCode c2 = code_from(5, {"11010", "01101"});
    EXPECT_TRUE(c2.contains(BitVector::from_string("10111")));
    EXPECT_TRUE(c2.contains(BitVector(5)));
    EXPECT_FALSE(c2.contains(BitVector::from_string("11100")));
    EXPECT_THROW((void)c2.contains(BitVector(4)), std::invalid_argument);
}

TEST(linear_code, coset_reps) {
    CssCode code = code_5_1_2();
    auto reps = coset_reps(code.c2(), code.c1());
    ASSERT_EQ(reps.size(), 2u);
    EXPECT_TRUE(reps[0].is_zero());
    EXPECT_TRUE(code.c2().contains(reps[1] ^ BitVector::from_string("11100")));

    auto same = coset_reps(code.c1(), code.c1());
    ASSERT_EQ(same.size(), 1u);
    EXPECT_TRUE(same[0].is_zero());

    LinearCode even = code_from(4, {"1100", "0110", "0011"});
    auto split = coset_reps(even, LinearCode::full(4));
    ASSERT_EQ(split.size(), 2u);
    EXPECT_EQ(split[1].weight() % 2, 1u);

    EXPECT_THROW(coset_reps(code.c1(), code.c2()), ContainmentError);
}

TEST(linear_code, enumerate) {
    EXPECT_EQ(enumerate(code_from(5, {"11000", "00111"})).size(), 4u);
    EXPECT_EQ(enumerate(code_15_1_3().c1()).size(), 32u);
    auto zero = enumerate(LinearCode::zero(5));
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].is_zero());
    EXPECT_THROW(enumerate(LinearCode::full(30)), CapExceededError);
    EXPECT_NO_THROW(enumerate(LinearCode::full(6), 6));
    EXPECT_THROW(enumerate(LinearCode::full(7), 6), CapExceededError);
}

TEST(linear_code, weight_distributions) {
    EXPECT_EQ(weight_distribution(code_15_1_3().c1(), BitVector(15)),
              (std::map<size_t, uint64_t>{{0, 1}, {7, 15}, {8, 15}, {15, 1}}));
    EXPECT_EQ(weight_distribution(LinearCode::zero(6), BitVector::from_string("101100")),
              (std::map<size_t, uint64_t>{{3, 1}}));
    EXPECT_EQ(weight_distribution(simplex_code(4), BitVector(15)), (std::map<size_t, uint64_t>{{0, 1}, {8, 15}}));
}

TEST(linear_code, min_weight_bounded) {
    LinearCode hamming = simplex_code(3).dual();
    EXPECT_EQ(min_weight_bounded(hamming, LinearCode::zero(7), 7), std::optional<size_t>(3));
    EXPECT_EQ(min_weight_bounded(hamming, hamming, 7), std::nullopt);
    EXPECT_EQ(min_weight_bounded(hamming, LinearCode::zero(7), 2), std::nullopt);
    EXPECT_THROW(min_weight_bounded(LinearCode::zero(7), hamming, 3), ContainmentError);
}

TEST(linear_code, min_weight_matches_enumeration) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 2 + rng() % 11;
        CssCode code = random_code(rng, n);
        std::set<uint64_t> c1 = brute_span(code.c1());
        std::set<uint64_t> c2 = brute_span(code.c2());
        std::optional<size_t> expected;
        for (uint64_t w : c1) {
            if (!c2.contains(w)) {
                size_t wt = __builtin_popcountll(w);
                if (!expected || wt < *expected) {
                    expected = wt;
                }
            }
        }
        EXPECT_EQ(min_weight_bounded(code.c1(), code.c2(), n), expected);
        auto listed = vectors_bounded(code.c1(), code.c2(), n);
        EXPECT_EQ(listed.size(), c1.size() - c2.size());
    }
}

TEST(linear_code, duality_involution) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 14;
        CssCode code = random_code(rng, n);
        const LinearCode &c = code.c1();
        EXPECT_EQ(c.dual().dual(), c);
        EXPECT_EQ(brute_span(c.dual().dual()), brute_span(c));
        if (n <= 12) {
            EXPECT_EQ(brute_span(c.dual()), brute_dual(n, brute_span(c)));
        }
    }
}

TEST(linear_code, macwilliams_identity) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 12;
        CssCode code = random_code(rng, n);
        auto a = brute_weights(n, brute_span(code.c1()));
        auto b = macwilliams(n, a);
        auto dual = weight_distribution(code.c1().dual(), BitVector(n));
        for (size_t j = 0; j <= n; j++) {
            uint64_t got = dual.contains(j) ? dual.at(j) : 0;
            EXPECT_EQ(static_cast<int64_t>(got), b[j]) << "n=" << n << " j=" << j;
        }
    }
}

TEST(linear_code, coset_partition) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 14;
        CssCode code = random_code(rng, n);
        std::set<uint64_t> sub = brute_span(code.c2());
        std::set<uint64_t> covered;
        for (const auto &rep : coset_reps(code.c2(), code.c1())) {
            for (uint64_t s : sub) {
                EXPECT_TRUE(covered.insert(s ^ rep.to_uint()).second);
            }
        }
        EXPECT_EQ(covered, brute_span(code.c1()));
    }
}

TEST(linear_code, reduce_is_least_coset_element) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 10;
        CssCode code = random_code(rng, n);
        std::set<uint64_t> c = brute_span(code.c1());
        uint64_t v = rng() & ((uint64_t{1} << n) - 1);
        uint64_t best = UINT64_MAX;
        for (uint64_t w : c) {
            best = std::min(best, v ^ w);
        }
        EXPECT_EQ(code.c1().reduce(BitVector::from_uint(n, v)).to_uint(), best);
    }
}
