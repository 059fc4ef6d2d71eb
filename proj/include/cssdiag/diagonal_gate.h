#ifndef CSSDIAG_DIAGONAL_GATE_H
#define CSSDIAG_DIAGONAL_GATE_H

#include <complex>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "cssdiag/cyclotomic.h"
#include "cssdiag/linear_code.h"

namespace cssdiag {

/// A gate acting on a few qubits: table[i] is the phase exponent (at the factor's level)
/// of the local basis state i, where support[0] is the most significant bit of i.
struct LocalFactor {
    std::vector<size_t> support;
    unsigned level = 1;
    std::vector<uint64_t> table;

    /// exp(i pi t / 2^(level-1)) on |1> of one qubit.
    static LocalFactor phase(size_t qubit, unsigned level, uint64_t exponent);
    static LocalFactor controlled_z(size_t a, size_t b);
};

/// A diagonal unitary whose entries are 2^L-th roots of unity.
///
/// Entry d_u = exp(i pi t(u) / 2^(L-1)) with t(u) in Z_{2^L}, so T is (L=3, t=1), P is
/// (L=2, t=1), Z is (L=1, t=1) and T^dagger is (L=3, t=7). The representation is never
/// expanded to 2^n entries unless asked for, so gates on 63 qubits are cheap to evaluate.
class DyadicDiagonalGate {
   public:
    /// Explicit exponents; basis states not listed have exponent 0.
    struct Table {
        std::map<BitVector, uint64_t> entries;
    };
    /// t(u) = c * w_H(u), the transversal single-qubit rotation by c.
    struct WeightRule {
        uint64_t c;
    };
    /// Product of local factors; exponents are rescaled to the common level.
    struct FactorProduct {
        std::vector<LocalFactor> factors;
    };
    /// Exponents given per coset of sub; only defined on the listed cosets unless
    /// outside supplies a value for everything else.
    struct CosetRule {
        LinearCode sub;
        std::map<BitVector, uint64_t> by_coset;  // keyed by sub.reduce(offset)
        std::optional<uint64_t> outside;
    };
    using Repr = std::variant<Table, WeightRule, FactorProduct, CosetRule>;

    static DyadicDiagonalGate identity(size_t n);
    static DyadicDiagonalGate weight_rule(size_t n, unsigned level, uint64_t c);
    static DyadicDiagonalGate from_factors(size_t n, std::vector<LocalFactor> factors);
    static DyadicDiagonalGate table(size_t n, unsigned level, std::map<BitVector, uint64_t> entries);
    static DyadicDiagonalGate coset_rule(size_t n, unsigned level, LinearCode sub,
                                         const std::vector<std::pair<BitVector, uint64_t>> &cosets,
                                         std::optional<uint64_t> outside);

    size_t n() const {
        return n_;
    }
    unsigned level() const {
        return level_;
    }
    const Repr &repr() const {
        return repr_;
    }

    /// Exact phase exponent t(u) in Z_{2^L}. Throws OutOfDomainError for a CosetRule
    /// query outside its cosets.
    uint64_t entry(const BitVector &u) const;
    /// True unless the gate is a CosetRule without an outside value.
    bool defined_everywhere() const;

    DyadicDiagonalGate inverse() const;
    /// Same gate with exponents rescaled to a higher level.
    DyadicDiagonalGate at_level(unsigned level) const;
    /// Exponent for every basis state, indexed by BitVector::to_uint order.
    std::vector<uint64_t> to_dense(unsigned qubit_cap = kDefaultTableQubitCap) const;

   private:
    DyadicDiagonalGate(size_t n, unsigned level, Repr repr);

    size_t n_;
    unsigned level_;
    Repr repr_;
};

/// Pointwise product of two diagonal gates (exponent addition at the common level).
DyadicDiagonalGate compose(const DyadicDiagonalGate &g1, const DyadicDiagonalGate &g2);

/// True iff both gates have the same entry on every basis state (requires n <= qubit_cap).
bool same_diagonal(const DyadicDiagonalGate &g1, const DyadicDiagonalGate &g2,
                   unsigned qubit_cap = kDefaultTableQubitCap);

/// Pauli-basis coefficients f(v) = 2^-n sum_u (-1)^{u.v} d_u, indexed by v.to_uint().
std::vector<std::complex<double>> pauli_coefficients(const DyadicDiagonalGate &g,
                                                     unsigned qubit_cap = kDefaultTableQubitCap);
std::vector<Cyclotomic> pauli_coefficients_exact(const DyadicDiagonalGate &g,
                                                 unsigned qubit_cap = kDefaultTableQubitCap);
/// Inverse transform: d_u = sum_v (-1)^{u.v} f(v).
std::vector<std::complex<double>> diagonal_from_pauli(std::vector<std::complex<double>> coefficients);

/// exp(i pi t / 2^(level-1)) in floating point.
std::complex<double> phase_value(unsigned level, uint64_t exponent);

}  // namespace cssdiag

#endif
