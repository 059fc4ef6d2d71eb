#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "cssdiag/diagonal_gate.h"
#include "cssdiag/symbolic.h"
#include "test_support.h"

using namespace cssdiag;
using namespace testing_support;

namespace {

DyadicDiagonalGate random_full_gate(std::mt19937_64 &rng, size_t n) {
    CssCode trivial(LinearCode::full(n), LinearCode::zero(n), BitVector(n));
    return random_gate(rng, trivial);
}

}  // namespace

TEST(diagonal_gate, weight_rule_entry) {
    auto t = DyadicDiagonalGate::weight_rule(15, 3, 1);
    EXPECT_EQ(t.entry(BitVector::from_string("111111100000000")), 7u);
    EXPECT_EQ(t.entry(BitVector(15)), 0u);
    EXPECT_EQ(t.entry(BitVector::ones(15)), 7u);
    EXPECT_THROW((void)t.entry(BitVector(4)), std::invalid_argument);
}

TEST(diagonal_gate, phase_cz_entries) {
    auto g = phase_cz_gate();
    EXPECT_EQ(g.level(), 2u);
    EXPECT_EQ(g.entry(BitVector::from_string("11010")), 0u);
    EXPECT_EQ(g.entry(BitVector::from_string("11100")), 1u);
    EXPECT_EQ(g.entry(BitVector::from_string("00011")), 2u);
    EXPECT_EQ(g.entry(BitVector(5)), 0u);
}

TEST(diagonal_gate, empty_factor_list_is_identity) {
    auto g = DyadicDiagonalGate::from_factors(4, {});
    for (uint64_t u = 0; u < 16; u++) {
        EXPECT_EQ(g.entry(BitVector::from_uint(4, u)), 0u);
    }
    EXPECT_TRUE(same_diagonal(g, DyadicDiagonalGate::identity(4)));
}

TEST(diagonal_gate, malformed_factors) {
    EXPECT_THROW(DyadicDiagonalGate::from_factors(3, {LocalFactor{{3}, 2, {0, 1}}}), std::invalid_argument);
    EXPECT_THROW(DyadicDiagonalGate::from_factors(3, {LocalFactor{{0, 1}, 2, {0, 1}}}), std::invalid_argument);
    EXPECT_THROW(DyadicDiagonalGate::from_factors(3, {LocalFactor{{1, 1}, 2, {0, 1, 1, 0}}}), std::invalid_argument);
    EXPECT_THROW(DyadicDiagonalGate::from_factors(3, {LocalFactor{{0}, 0, {0, 1}}}), std::invalid_argument);
}

TEST(diagonal_gate, t_twice_is_p) {
    for (size_t n = 1; n <= 3; n++) {
        auto t = DyadicDiagonalGate::from_factors(n, {LocalFactor::phase(0, 3, 1)});
        auto p = DyadicDiagonalGate::from_factors(n, {LocalFactor::phase(0, 2, 1)});
        EXPECT_TRUE(same_diagonal(compose(t, t), p));
        auto tn = DyadicDiagonalGate::weight_rule(n, 3, 1);
        auto pn = DyadicDiagonalGate::weight_rule(n, 2, 1);
        EXPECT_TRUE(same_diagonal(compose(tn, tn), pn));
    }
}

TEST(diagonal_gate, compose_with_inverse) {
    auto t = DyadicDiagonalGate::weight_rule(6, 3, 1);
    auto t_dagger = DyadicDiagonalGate::weight_rule(6, 3, 7);
    EXPECT_TRUE(same_diagonal(compose(t, t_dagger), DyadicDiagonalGate::identity(6)));
    EXPECT_TRUE(same_diagonal(t.inverse(), t_dagger));
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; trial++) {
        auto g = random_full_gate(rng, 1 + rng() % 6);
        EXPECT_TRUE(same_diagonal(compose(g, g.inverse()), DyadicDiagonalGate::identity(g.n())));
    }
}

TEST(diagonal_gate, compose_associative_with_neutral_identity) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 8;
        auto a = random_full_gate(rng, n);
        auto b = random_full_gate(rng, n);
        auto c = random_full_gate(rng, n);
        EXPECT_TRUE(same_diagonal(compose(compose(a, b), c), compose(a, compose(b, c))));
        EXPECT_TRUE(same_diagonal(compose(a, DyadicDiagonalGate::identity(n)), a));
        // Pointwise check against the definition.
        auto ab = compose(a, b);
        unsigned level = ab.level();
        for (uint64_t u = 0; u < (uint64_t{1} << n); u++) {
            BitVector v = BitVector::from_uint(n, u);
            uint64_t expected = (a.entry(v) << (level - a.level())) + (b.entry(v) << (level - b.level()));
            EXPECT_EQ(ab.entry(v), expected % (uint64_t{1} << level));
        }
    }
}

TEST(diagonal_gate, representation_equivalence) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 10;
        auto g = random_full_gate(rng, n);
        std::map<BitVector, uint64_t> entries;
        for (uint64_t u = 0; u < (uint64_t{1} << n); u++) {
            entries[BitVector::from_uint(n, u)] = g.entry(BitVector::from_uint(n, u));
        }
        auto table = DyadicDiagonalGate::table(n, g.level(), entries);
        EXPECT_EQ(table.to_dense(), g.to_dense());
    }
}

TEST(diagonal_gate, coset_rule_domain) {
    LinearCode sub = code_from(3, {"111"});
    auto g = DyadicDiagonalGate::coset_rule(3, 2, sub, {{BitVector::from_string("100"), 1}}, std::nullopt);
    EXPECT_EQ(g.entry(BitVector::from_string("011")), 1u);
    EXPECT_THROW((void)g.entry(BitVector::from_string("000")), OutOfDomainError);
    EXPECT_FALSE(g.defined_everywhere());
    EXPECT_THROW(compose(g, g), std::invalid_argument);
    EXPECT_THROW(DyadicDiagonalGate::coset_rule(3, 2, sub,
                                                {{BitVector::from_string("100"), 1}, {BitVector::from_string("011"), 2}},
                                                std::nullopt),
                 std::invalid_argument);
}

TEST(pauli_coefficients, identity) {
    auto f = pauli_coefficients(DyadicDiagonalGate::identity(3));
    EXPECT_NEAR(std::abs(f[0] - 1.0), 0.0, 1e-15);
    for (size_t v = 1; v < f.size(); v++) {
        EXPECT_NEAR(std::abs(f[v]), 0.0, 1e-15);
    }
}

TEST(pauli_coefficients, single_t) {
    auto t = DyadicDiagonalGate::weight_rule(1, 3, 1);
    auto f = pauli_coefficients(t);
    auto w = std::polar(1.0, std::numbers::pi / 4);
    EXPECT_NEAR(std::abs(f[0] - (1.0 + w) / 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f[1] - (1.0 - w) / 2.0), 0.0, 1e-15);
    auto exact = pauli_coefficients_exact(t);
    EXPECT_EQ(exact[0], (Cyclotomic::integer(1) + Cyclotomic::root(3, 1)).halved(1));
    EXPECT_EQ(exact[1], (Cyclotomic::integer(1) - Cyclotomic::root(3, 1)).halved(1));
}

TEST(pauli_coefficients, controlled_z) {
    // CZ = (II + IZ + ZI - ZZ) / 2
    auto cz = DyadicDiagonalGate::from_factors(2, {LocalFactor::controlled_z(0, 1)});
    auto f = pauli_coefficients_exact(cz);
    EXPECT_EQ(f[0], Cyclotomic::integer(1).halved(1));
    EXPECT_EQ(f[1], Cyclotomic::integer(1).halved(1));
    EXPECT_EQ(f[2], Cyclotomic::integer(1).halved(1));
    EXPECT_EQ(f[3], Cyclotomic::integer(-1).halved(1));
}

TEST(pauli_coefficients, round_trip) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 1 + rng() % 8;
        auto g = random_full_gate(rng, n);
        auto d = diagonal_from_pauli(pauli_coefficients(g));
        auto exps = g.to_dense();
        auto exact = pauli_coefficients_exact(g);
        for (size_t u = 0; u < d.size(); u++) {
            EXPECT_NEAR(std::abs(d[u] - phase_value(g.level(), exps[u])), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(exact[u].to_complex() - pauli_coefficients(g)[u]), 0.0, 1e-12);
        }
    }
    EXPECT_THROW(pauli_coefficients(DyadicDiagonalGate::weight_rule(17, 3, 1)), CapExceededError);
}

TEST(linear_form, parse_and_print) {
    EXPECT_EQ(LinearForm::parse("theta1 + theta2").str(), "theta1 + theta2");
    EXPECT_EQ(LinearForm::parse("2*a - 1/2*b + a").str(), "3*a - 1/2*b");
    EXPECT_EQ(LinearForm::parse("x - x").str(), "0");
    EXPECT_EQ(LinearForm::parse("theta1'").terms().begin()->first, "theta1'");
    EXPECT_EQ(LinearForm::parse("3/4").constant_term(), Rational(3, 4));
    EXPECT_THROW(LinearForm::parse(""), std::invalid_argument);
    EXPECT_THROW(LinearForm::parse("a b"), std::invalid_argument);
    EXPECT_THROW(LinearForm::parse("1/0*a"), std::invalid_argument);
}

TEST(constraint_system, substitution) {
    ConstraintSystem s;
    s.add("theta1 + theta2 = theta");
    EXPECT_EQ(s.reduce(LinearForm::parse("theta1 + theta2 + 2*theta")), LinearForm::parse("3*theta"));
    s.add("theta1' + theta2' = theta");
    EXPECT_TRUE(s.equivalent(LinearForm::parse("theta1 + theta2"), LinearForm::parse("theta1' + theta2'")));
    EXPECT_FALSE(s.equivalent(LinearForm::parse("theta1"), LinearForm::parse("theta1'")));
    EXPECT_THROW(s.add("theta1 + theta2 = theta + 1"), std::invalid_argument);
    EXPECT_THROW(s.add("a = b = c"), std::invalid_argument);
}

TEST(symbolic_gate, dfs_entries) {
    auto g = SymbolicPhaseGate::parse({"theta1", "theta2", "theta", "theta", "theta1'", "theta2'"}, {});
    EXPECT_EQ(symbolic_entry(g, BitVector::from_string("110000")), LinearForm::parse("theta1 + theta2"));
    EXPECT_TRUE(symbolic_entry(g, BitVector(6)).is_zero());
    auto constrained = SymbolicPhaseGate::parse({"theta1", "theta2", "theta", "theta", "theta1'", "theta2'"},
                                                {"theta1 + theta2 = theta"});
    EXPECT_EQ(symbolic_entry(constrained, BitVector::from_string("111100")), LinearForm::parse("3*theta"));
}
