#include <gtest/gtest.h>

#include <random>

#include "cssdiag/css_code.h"
#include "cssdiag/stabilizer.h"
#include "test_support.h"

using namespace cssdiag;
using namespace testing_support;

namespace {

void expect_css_invariants(const CssCode &code) {
    ASSERT_EQ(code.gx().num_rows(), code.k());
    ASSERT_EQ(code.gz().num_rows(), code.k());
    LinearCode c2_dual = code.c2().dual();
    for (size_t i = 0; i < code.k(); i++) {
        EXPECT_TRUE(code.c1().contains(code.gx().row(i)));
        EXPECT_TRUE(c2_dual.contains(code.gz().row(i)));
        for (size_t j = 0; j < code.k(); j++) {
            EXPECT_EQ(code.gx().row(i).dot(code.gz().row(j)), i == j);
        }
    }
}

}  // namespace

TEST(css_code, code_5_1_2_construction) {
    LinearCode c2 = code_from(5, {"11010", "01101"});
    LinearCode c1 = code_from(5, {"11001", "01110"}).dual();
    CssCode code(c1, c2, BitVector(5));
    EXPECT_EQ(code.n(), 5u);
    EXPECT_EQ(code.k(), 1u);
    EXPECT_TRUE(c2.contains(code.gx().row(0) ^ BitVector::from_string("11100")));
    expect_css_invariants(code);
    expect_css_invariants(code_5_1_2());
    EXPECT_EQ(code_5_1_2().gx().row(0).str(), "11100");
}

TEST(css_code, stabilizer_state) {
    LinearCode c = code_from(4, {"1100", "0011"});
    CssCode code(c, c, BitVector(4));
    EXPECT_EQ(code.k(), 0u);
    expect_css_invariants(code);
    SparseState state = encode_basis(code, BitVector(0));
    EXPECT_EQ(state.support_size(), 4u);
}

TEST(css_code, code_15_1_3_logicals) {
    CssCode code = code_15_1_3();
    EXPECT_EQ(code.k(), 1u);
    expect_css_invariants(code);
    // The Z-logical is the all-ones word up to Z-stabilizers in C1^perp.
    EXPECT_TRUE(code.c1().dual().contains(code.gz().row(0) ^ BitVector::ones(15)));
    // Chosen representative: least element of its coset modulo C1^perp.
    std::set<uint64_t> c1_dual = brute_span(code.c1().dual());
    uint64_t least = UINT64_MAX;
    for (uint64_t w : c1_dual) {
        least = std::min(least, w ^ BitVector::ones(15).to_uint());
    }
    EXPECT_EQ(code.gz().row(0).to_uint(), least);
}

TEST(css_code, rejects_bad_inputs) {
    LinearCode c1 = code_from(5, {"11000"});
    LinearCode c2 = code_from(5, {"00011"});
    EXPECT_THROW(CssCode(c1, c2, BitVector(5)), ContainmentError);
    EXPECT_THROW(CssCode(code_5_1_2().c1(), code_5_1_2().c2(), BitVector(4)), std::invalid_argument);
    EXPECT_THROW(CssCode(code_5_1_2().c1(), code_5_1_2().c2(), BitVector(5), BitMatrix::from_strings({"11010"}, 5)),
                 std::invalid_argument);
}

TEST(css_code, random_invariants) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; trial++) {
        expect_css_invariants(random_code(rng, 1 + rng() % 14));
    }
}

TEST(encode_basis, code_5_1_2_zero_state) {
    CssCode code = code_5_1_2();
    SparseState s = encode_basis(code, BitVector::from_string("0"));
    ASSERT_EQ(s.support_size(), 4u);
    for (const char *w : {"00000", "11010", "01101", "10111"}) {
        EXPECT_NEAR(s.amplitude(BitVector::from_string(w)).real(), 0.5, 1e-15);
    }
}

TEST(encode_basis, trivial_c2) {
    LinearCode c1 = code_from(3, {"110", "011"});
    CssCode code(c1, LinearCode::zero(3), BitVector::from_string("001"));
    SparseState s = encode_basis(code, BitVector::from_string("10"));
    ASSERT_EQ(s.support_size(), 1u);
    EXPECT_EQ(s.amplitudes().begin()->first, code.gx().row(0) ^ BitVector::from_string("001"));
}

TEST(encode_basis, code_15_1_3_one_state) {
    CssCode code = code_15_1_3();
    SparseState s = encode_basis(code, BitVector::from_string("1"));
    EXPECT_EQ(s.support_size(), 16u);
    for (const auto &[u, amp] : s.amplitudes()) {
        EXPECT_TRUE(code.c2().contains(u ^ BitVector::ones(15)));
        EXPECT_NEAR(std::abs(amp), 0.25, 1e-15);
    }
}

TEST(encode_basis, orthonormal) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; trial++) {
        CssCode code = random_code(rng, 1 + rng() % 10);
        if (code.k() > 4) {
            continue;
        }
        std::vector<SparseState> states;
        for (uint64_t a = 0; a < (uint64_t{1} << code.k()); a++) {
            states.push_back(encode_basis(code, BitVector::from_uint(code.k(), a)));
        }
        for (size_t i = 0; i < states.size(); i++) {
            for (size_t j = 0; j < states.size(); j++) {
                EXPECT_NEAR(std::abs(states[i].inner(states[j])), i == j ? 1.0 : 0.0, 1e-12);
            }
        }
    }
}

TEST(stabilizer, five_qubit_code) {
    BitMatrix x = BitMatrix::from_strings({"10010", "01001", "10100", "01010"}, 5);
    BitMatrix z = BitMatrix::from_strings({"01100", "00110", "00011", "10001"}, 5);
    StabilizerStandardForm form = standard_form(x, z);
    EXPECT_EQ(form.a_rows.num_rows(), 0u);
    EXPECT_EQ(form.b_rows.num_rows(), 0u);
    EXPECT_EQ(form.c_rows, x);
    EXPECT_EQ(form.d_rows, z);
    CodeTower tower = tower_from_standard_form(form);
    EXPECT_EQ(tower.super, LinearCode::full(5));
    EXPECT_EQ(tower.sub, code_from(5, {"11000", "01100", "00110", "00011"}));
    CssCode code = css_from_tower(tower);
    EXPECT_EQ(code.k(), 1u);
}

TEST(stabilizer, css_input_recovers_tower) {
    CssCode code = code_steane();
    BitMatrix x(7);
    BitMatrix z(7);
    for (const auto &r : code.c2().gen().rows()) {
        x.push_back(r);
        z.push_back(BitVector(7));
    }
    LinearCode c1_dual = code.c1().dual();
    for (const auto &r : c1_dual.gen().rows()) {
        x.push_back(BitVector(7));
        z.push_back(r);
    }
    StabilizerStandardForm form = standard_form(x, z);
    EXPECT_EQ(form.c_rows.num_rows(), 0u);
    EXPECT_EQ(form.d_rows.num_rows(), 0u);
    CodeTower tower = tower_from_standard_form(form);
    EXPECT_EQ(tower.sub, code.c2());
    EXPECT_EQ(tower.super, code.c1());
}

TEST(stabilizer, rejects_noncommuting_and_dependent) {
    EXPECT_THROW(standard_form(BitMatrix::from_strings({"10", "00"}, 2), BitMatrix::from_strings({"00", "10"}, 2)),
                 std::invalid_argument);
    EXPECT_THROW(standard_form(BitMatrix::from_strings({"11", "11"}, 2), BitMatrix::from_strings({"00", "00"}, 2)),
                 std::invalid_argument);
}

TEST(stabilizer, random_commuting_sets) {
    // Build commuting generators as CSS pieces conjugated by single-qubit phase gates
    // (X -> Y on chosen qubits), then check the recovered tower by enumeration.
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; trial++) {
        size_t n = 3 + rng() % 4;
        CssCode base = random_code(rng, n);
        uint64_t s_mask = rng() & ((uint64_t{1} << n) - 1);
        BitMatrix x(n);
        BitMatrix z(n);
        for (const auto &r : base.c2().gen().rows()) {
            x.push_back(r);
            z.push_back(r & BitVector::from_uint(n, s_mask));
        }
        LinearCode c1_dual = base.c1().dual();
        for (const auto &r : c1_dual.gen().rows()) {
            x.push_back(BitVector(n));
            z.push_back(r);
        }
        if (x.num_rows() == 0) {
            continue;
        }
        for (size_t i = 0; i < x.num_rows(); i++) {
            for (size_t j = 0; j < x.num_rows(); j++) {
                ASSERT_FALSE(symplectic_product(x.row(i), z.row(i), x.row(j), z.row(j)));
            }
        }
        StabilizerStandardForm form = standard_form(x, z);
        CodeTower tower = tower_from_standard_form(form);
        std::set<uint64_t> sub = brute_span(tower.sub);
        std::set<uint64_t> super = brute_span(tower.super);
        for (uint64_t v : sub) {
            EXPECT_TRUE(super.contains(v));
        }
        // Phase conjugation leaves the X parts unchanged, so the tower is (C2, C1).
        EXPECT_EQ(tower.sub, base.c2());
        EXPECT_EQ(tower.super, base.c1());
        checked++;
    }
    EXPECT_GT(checked, 20);
}

TEST(ft_local_check, code_5_1_2) {
    CssCode code = code_5_1_2();
    EXPECT_TRUE(ft_local_check(code, {3, 4}));
    EXPECT_TRUE(ft_local_check(code, {}));
    EXPECT_FALSE(ft_local_check(code, {0, 1, 2, 3, 4}));
    EXPECT_FALSE(ft_local_check(code, {0, 1, 3}));  // contains 11010
}

TEST(ft_local_check, monotone_under_subsets) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 2 + rng() % 9;
        CssCode code = random_code(rng, n);
        uint64_t mask = rng() & ((uint64_t{1} << n) - 1);
        auto support_of = [&](uint64_t m) {
            std::vector<size_t> s;
            for (size_t i = 0; i < n; i++) {
                if ((m >> i) & 1) {
                    s.push_back(i);
                }
            }
            return s;
        };
        // Reference: no nonzero C2 word inside the support.
        bool expected = true;
        for (uint64_t w : brute_span(code.c2())) {
            BitVector v = BitVector::from_uint(n, w);
            bool inside = w != 0;
            for (size_t i = 0; i < n; i++) {
                if (v[i] && !((mask >> i) & 1)) {
                    inside = false;
                }
            }
            if (inside) {
                expected = false;
            }
        }
        EXPECT_EQ(ft_local_check(code, support_of(mask)), expected);
        if (expected) {
            uint64_t sub = mask & rng();
            EXPECT_TRUE(ft_local_check(code, support_of(sub)));
        }
    }
}

TEST(undetectable_z_errors, code_5_1_2) {
    CssCode code = code_5_1_2();
    auto errors = undetectable_z_errors_bounded(code, 5);
    ASSERT_EQ(errors.size(), 4u);
    size_t weight_two = 0;
    for (const auto &e : errors) {
        EXPECT_TRUE(code.c1().dual().contains(e ^ errors[0]));
        EXPECT_TRUE(e.dot(code.gx().row(0)));
        weight_two += e.weight() == 2;
    }
    EXPECT_EQ(weight_two, 2u);
}

TEST(undetectable_z_errors, no_logicals_and_distance) {
    LinearCode c = code_from(4, {"1100", "0011"});
    EXPECT_TRUE(undetectable_z_errors_bounded(CssCode(c, c, BitVector(4)), 4).empty());
    EXPECT_TRUE(undetectable_z_errors_bounded(code_15_1_3(), 2).empty());
    DistanceReport d = distance_bounded(code_15_1_3(), 4);
    EXPECT_EQ(d.z_logical.value, 3u);
    EXPECT_TRUE(d.z_logical.exact);
    EXPECT_EQ(d.distance.value, 3u);
    EXPECT_TRUE(d.distance.exact);
    DistanceReport steane = distance_bounded(code_steane(), 4);
    EXPECT_EQ(steane.distance.value, 3u);
    EXPECT_EQ(steane.x_logical.value, 3u);
}
