#ifndef CSSDIAG_GENCOEFF_H
#define CSSDIAG_GENCOEFF_H

#include <map>
#include <vector>

#include "cssdiag/css_code.h"
#include "cssdiag/cyclotomic.h"
#include "cssdiag/diagonal_gate.h"
#include "cssdiag/symbolic.h"

namespace cssdiag {

/// Logical diagonal gate sum_alpha exp(i pi t_alpha / 2^(L-1)) |alpha><alpha|.
/// exponents[a] belongs to the logical basis state BitVector::from_uint(k, a).
struct LogicalDiagonal {
    size_t k = 0;
    unsigned level = 1;
    std::vector<uint64_t> exponents;

    static LogicalDiagonal identity(size_t k);
    static LogicalDiagonal from_table(size_t k, unsigned level, const std::map<BitVector, uint64_t> &table);

    uint64_t exponent(const BitVector &alpha) const;
    /// Lowest level that still represents the same phases.
    LogicalDiagonal normalized() const;
    bool is_identity() const;
    std::map<BitVector, uint64_t> table() const;

    /// Compares phases, not representations: (L=2, t=1) equals (L=3, t=2).
    bool operator==(const LogicalDiagonal &other) const;
};

struct GeneratorCoefficientMatrix {
    /// Coset representatives of F_2^n / C2^perp (X-syndromes), zero first.
    std::vector<BitVector> mu;
    /// gamma = beta gz for beta = from_uint(k, column index).
    std::vector<BitVector> gamma;
    /// entries[row][column] = A_{mu, gamma}.
    std::vector<std::vector<Cyclotomic>> entries;
};

/// A_{mu,gamma} = |C1|^-1 sum_{u in C1} (-1)^{(mu + gamma) u^T} d_{u + y}, exact.
Cyclotomic generator_coeff(const CssCode &code, const DyadicDiagonalGate &gate, const BitVector &mu,
                           const BitVector &gamma, unsigned cap = kDefaultEnumerationCap);

/// Full matrix over (F_2^n / C2^perp) x (C2^perp / C1^perp). Needs dim C1 <= cap and
/// at most 2^cap entries.
GeneratorCoefficientMatrix gc_matrix(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap = 20);

/// A_{0, beta gz} for every beta, indexed by beta.to_uint().
std::vector<Cyclotomic> logical_pauli_expansion(const CssCode &code, const DyadicDiagonalGate &gate,
                                                unsigned cap = 20);
/// Pauli coefficients 2^-k sum_alpha (-1)^{alpha.beta} exp(i theta_alpha) of a logical table.
std::vector<Cyclotomic> logical_pauli_from_table(const LogicalDiagonal &logical);

/// Codespace preservation decided by coset constancy: d_{u+y} is constant on every coset
/// C2 + w with w in C1.
bool preserves(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap = kDefaultEnumerationCap);
/// Same decision from the exact norm sum sum_gamma |A_{0,gamma}|^2 == 1.
bool preserves_by_norm(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap = 20);
/// sum_gamma |A_{0,gamma}|^2, exact.
Cyclotomic zero_syndrome_weight(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap = 20);
/// sum over all (mu, gamma) of |A_{mu,gamma}|^2, exact.
Cyclotomic total_coefficient_weight(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap = 20);

/// t_alpha = t(alpha gx + y). Throws NotPreservedError if the gate leaves the codespace.
LogicalDiagonal induced_logical(const CssCode &code, const DyadicDiagonalGate &gate,
                                unsigned cap = kDefaultEnumerationCap);

/// True iff d_{u+y} is the same for all u in C1.
bool is_logical_identity(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap = kDefaultEnumerationCap);
/// Symbolic version: all phases on C1 + y agree modulo the gate's constraints.
bool is_logical_identity(const CssCode &code, const SymbolicPhaseGate &gate, unsigned cap = kDefaultEnumerationCap);

/// True iff every word of C1 + y has the same Hamming weight.
bool oblivious_coherent(const CssCode &code, unsigned cap = kDefaultEnumerationCap);

struct PhysicalConstraint {
    BitVector alpha;
    /// alpha gx + y; the constraint covers offset + C2.
    BitVector offset;
    uint64_t exponent;
};

/// The entries a physical gate must have to induce a given logical diagonal. Entries
/// outside C1 + y are unconstrained.
struct ConstraintSet {
    size_t n;
    unsigned level;
    LinearCode c1;
    LinearCode c2;
    BitVector y;
    std::vector<PhysicalConstraint> constraints;

    /// Offsets grouped by required exponent.
    std::map<uint64_t, std::vector<BitVector>> by_exponent() const;
    /// True iff u lies in C1 + y, the only region the constraints speak about.
    bool is_constrained(const BitVector &u) const;
};

ConstraintSet physical_constraints_for_target(const CssCode &code, const LogicalDiagonal &target);

/// Gate meeting every constraint, with exponent 0 elsewhere.
DyadicDiagonalGate gate_from_constraints(const ConstraintSet &constraints);

}  // namespace cssdiag

#endif
