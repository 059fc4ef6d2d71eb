#include "cssdiag/gencoeff.h"

#include <bit>
#include <stdexcept>

namespace cssdiag {

namespace {

// Exponents t(a G1 + y) for every coefficient vector a of C1, row 0 of G1 as the MSB of a.
std::vector<uint64_t> c1_exponents(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap) {
    if (gate.n() != code.n()) {
        throw std::invalid_argument("gate acts on " + std::to_string(gate.n()) + " qubits, code has " +
                                    std::to_string(code.n()));
    }
    const BitMatrix &g1 = code.c1().gen();
    size_t k1 = g1.num_rows();
    require_enumerable(k1, cap, "C1 enumeration");
    std::vector<uint64_t> out(size_t{1} << k1);
    BitVector word = code.y();
    size_t a = 0;
    out[0] = gate.entry(word);
    for (uint64_t i = 1; i < out.size(); i++) {
        size_t j = std::countr_zero(i);
        word ^= g1.row(j);
        a ^= size_t{1} << (k1 - 1 - j);
        out[a] = gate.entry(word);
    }
    return out;
}

// Index b with b_j = row_j(G1) . v, so that (a G1) . v = popcount(a & b).
size_t spectrum_index(const CssCode &code, const BitVector &v) {
    const BitMatrix &g1 = code.c1().gen();
    size_t k1 = g1.num_rows();
    size_t b = 0;
    for (size_t j = 0; j < k1; j++) {
        if (g1.row(j).dot(v)) {
            b |= size_t{1} << (k1 - 1 - j);
        }
    }
    return b;
}

Cyclotomic from_exponent_counts(unsigned level, const std::vector<int64_t> &counts) {
    size_t half = size_t{1} << (level - 1);
    std::vector<int64_t> num(half, 0);
    for (size_t t = 0; t < counts.size(); t++) {
        if (t < half) {
            num[t] += counts[t];
        } else {
            num[t - half] -= counts[t];
        }
    }
    return Cyclotomic::from_coefficients(level, std::move(num), 0);
}

void require_full_rank_logical(const CssCode &code, unsigned cap) {
    require_enumerable(code.k(), cap, "logical basis enumeration");
}

}  // namespace

LogicalDiagonal LogicalDiagonal::identity(size_t k) {
    if (k > 30) {
        throw CapExceededError("logical table too large");
    }
    return LogicalDiagonal{k, 1, std::vector<uint64_t>(size_t{1} << k, 0)};
}

LogicalDiagonal LogicalDiagonal::from_table(size_t k, unsigned level, const std::map<BitVector, uint64_t> &table) {
    if (level < 1 || level > 24) {
        throw std::invalid_argument("logical level must be in [1, 24]");
    }
    LogicalDiagonal out = identity(k);
    out.level = level;
    uint64_t mask = (uint64_t{1} << level) - 1;
    for (const auto &[alpha, t] : table) {
        if (alpha.size() != k) {
            throw std::invalid_argument("logical table key " + alpha.str() + " does not have length " +
                                        std::to_string(k));
        }
        out.exponents[alpha.to_uint()] = t & mask;
    }
    return out;
}

uint64_t LogicalDiagonal::exponent(const BitVector &alpha) const {
    if (alpha.size() != k) {
        throw std::invalid_argument("logical index has the wrong length");
    }
    return exponents[alpha.to_uint()];
}

LogicalDiagonal LogicalDiagonal::normalized() const {
    LogicalDiagonal out = *this;
    uint64_t mask = (uint64_t{1} << out.level) - 1;
    for (auto &t : out.exponents) {
        t &= mask;
    }
    while (out.level > 1) {
        bool all_even = true;
        for (uint64_t t : out.exponents) {
            if (t & 1) {
                all_even = false;
                break;
            }
        }
        if (!all_even) {
            break;
        }
        for (auto &t : out.exponents) {
            t >>= 1;
        }
        out.level--;
    }
    return out;
}

bool LogicalDiagonal::is_identity() const {
    for (uint64_t t : exponents) {
        if (t & ((uint64_t{1} << level) - 1)) {
            return false;
        }
    }
    return true;
}

std::map<BitVector, uint64_t> LogicalDiagonal::table() const {
    std::map<BitVector, uint64_t> out;
    for (size_t a = 0; a < exponents.size(); a++) {
        out.emplace(BitVector::from_uint(k, a), exponents[a]);
    }
    return out;
}

bool LogicalDiagonal::operator==(const LogicalDiagonal &other) const {
    if (k != other.k) {
        return false;
    }
    LogicalDiagonal a = normalized();
    LogicalDiagonal b = other.normalized();
    return a.level == b.level && a.exponents == b.exponents;
}

Cyclotomic generator_coeff(const CssCode &code, const DyadicDiagonalGate &gate, const BitVector &mu,
                           const BitVector &gamma, unsigned cap) {
    if (mu.size() != code.n() || gamma.size() != code.n()) {
        throw std::invalid_argument("generator_coeff: mu and gamma must have length n");
    }
    if (gate.n() != code.n()) {
        throw std::invalid_argument("gate and code act on different qubit counts");
    }
    BitVector v = mu ^ gamma;
    std::vector<int64_t> counts(size_t{1} << gate.level(), 0);
    code.c1().for_each_codeword(
        [&](const BitVector &u) {
            uint64_t t = gate.entry(u ^ code.y());
            counts[t] += u.dot(v) ? -1 : 1;
        },
        cap);
    return from_exponent_counts(gate.level(), counts).halved(static_cast<unsigned>(code.c1().k()));
}

GeneratorCoefficientMatrix gc_matrix(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap) {
    size_t k2 = code.c2().k();
    if (k2 + code.k() > cap) {
        throw CapExceededError("generator coefficient matrix with 2^" + std::to_string(k2 + code.k()) +
                               " entries exceeds the cap 2^" + std::to_string(cap));
    }
    ExactSpectrum spectrum(gate.level(), c1_exponents(code, gate, cap));
    unsigned k1 = static_cast<unsigned>(code.c1().k());
    GeneratorCoefficientMatrix out;
    out.mu = coset_reps(code.c2().dual(), LinearCode::full(code.n()), cap);
    for (uint64_t beta = 0; beta < (uint64_t{1} << code.k()); beta++) {
        out.gamma.push_back(code.z_logical(BitVector::from_uint(code.k(), beta)));
    }
    for (const auto &mu : out.mu) {
        std::vector<Cyclotomic> row;
        row.reserve(out.gamma.size());
        for (const auto &gamma : out.gamma) {
            row.push_back(spectrum.at(spectrum_index(code, mu ^ gamma)).halved(k1));
        }
        out.entries.push_back(std::move(row));
    }
    return out;
}

std::vector<Cyclotomic> logical_pauli_expansion(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap) {
    require_full_rank_logical(code, cap);
    ExactSpectrum spectrum(gate.level(), c1_exponents(code, gate, cap));
    unsigned k1 = static_cast<unsigned>(code.c1().k());
    std::vector<Cyclotomic> out;
    for (uint64_t beta = 0; beta < (uint64_t{1} << code.k()); beta++) {
        BitVector gamma = code.z_logical(BitVector::from_uint(code.k(), beta));
        out.push_back(spectrum.at(spectrum_index(code, gamma)).halved(k1));
    }
    return out;
}

std::vector<Cyclotomic> logical_pauli_from_table(const LogicalDiagonal &logical) {
    ExactSpectrum spectrum(logical.level, logical.exponents);
    std::vector<Cyclotomic> out;
    for (size_t b = 0; b < spectrum.size(); b++) {
        out.push_back(spectrum.at(b).halved(static_cast<unsigned>(logical.k)));
    }
    return out;
}

Cyclotomic zero_syndrome_weight(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap) {
    Cyclotomic total;
    for (const auto &a : logical_pauli_expansion(code, gate, cap)) {
        total += a.norm_squared();
    }
    return total;
}

Cyclotomic total_coefficient_weight(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap) {
    GeneratorCoefficientMatrix m = gc_matrix(code, gate, cap);
    Cyclotomic total;
    for (const auto &row : m.entries) {
        for (const auto &a : row) {
            total += a.norm_squared();
        }
    }
    return total;
}

bool preserves(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap) {
    if (gate.n() != code.n()) {
        throw std::invalid_argument("gate and code act on different qubit counts");
    }
    require_enumerable(code.c1().k(), cap, "C1 enumeration");
    for (uint64_t a = 0; a < (uint64_t{1} << code.k()); a++) {
        BitVector base = code.logical_shift(BitVector::from_uint(code.k(), a)) ^ code.y();
        uint64_t first = gate.entry(base);
        bool constant = true;
        code.c2().for_each_codeword(
            [&](const BitVector &c) {
                if (constant && gate.entry(base ^ c) != first) {
                    constant = false;
                }
            },
            cap);
        if (!constant) {
            return false;
        }
    }
    return true;
}

bool preserves_by_norm(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap) {
    return zero_syndrome_weight(code, gate, cap) == Cyclotomic::integer(1);
}

LogicalDiagonal induced_logical(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap) {
    if (!preserves(code, gate, cap)) {
        throw NotPreservedError("gate does not preserve the codespace; no induced logical gate");
    }
    LogicalDiagonal out = LogicalDiagonal::identity(code.k());
    out.level = gate.level();
    for (uint64_t a = 0; a < out.exponents.size(); a++) {
        out.exponents[a] = gate.entry(code.logical_shift(BitVector::from_uint(code.k(), a)) ^ code.y());
    }
    return out;
}

bool is_logical_identity(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap) {
    if (gate.n() != code.n()) {
        throw std::invalid_argument("gate and code act on different qubit counts");
    }
    uint64_t first = gate.entry(code.y());
    bool constant = true;
    code.c1().for_each_codeword(
        [&](const BitVector &u) {
            if (constant && gate.entry(u ^ code.y()) != first) {
                constant = false;
            }
        },
        cap);
    return constant;
}

bool is_logical_identity(const CssCode &code, const SymbolicPhaseGate &gate, unsigned cap) {
    if (gate.n() != code.n()) {
        throw std::invalid_argument("gate and code act on different qubit counts");
    }
    LinearForm first = symbolic_entry(gate, code.y());
    bool constant = true;
    code.c1().for_each_codeword(
        [&](const BitVector &u) {
            if (constant && !(symbolic_entry(gate, u ^ code.y()) == first)) {
                constant = false;
            }
        },
        cap);
    return constant;
}

bool oblivious_coherent(const CssCode &code, unsigned cap) {
    return weight_distribution(code.c1(), code.y(), cap).size() == 1;
}

std::map<uint64_t, std::vector<BitVector>> ConstraintSet::by_exponent() const {
    std::map<uint64_t, std::vector<BitVector>> out;
    for (const auto &c : constraints) {
        out[c.exponent].push_back(c.offset);
    }
    return out;
}

bool ConstraintSet::is_constrained(const BitVector &u) const {
    return c1.contains(u ^ y);
}

ConstraintSet physical_constraints_for_target(const CssCode &code, const LogicalDiagonal &target) {
    if (target.k != code.k()) {
        throw std::invalid_argument("target acts on " + std::to_string(target.k) + " logical qubits, code encodes " +
                                    std::to_string(code.k()));
    }
    ConstraintSet out{code.n(), target.level, code.c1(), code.c2(), code.y(), {}};
    for (uint64_t a = 0; a < target.exponents.size(); a++) {
        BitVector alpha = BitVector::from_uint(code.k(), a);
        out.constraints.push_back(
            PhysicalConstraint{alpha, code.logical_shift(alpha) ^ code.y(), target.exponents[a]});
    }
    return out;
}

DyadicDiagonalGate gate_from_constraints(const ConstraintSet &constraints) {
    std::vector<std::pair<BitVector, uint64_t>> cosets;
    for (const auto &c : constraints.constraints) {
        cosets.emplace_back(c.offset, c.exponent);
    }
    return DyadicDiagonalGate::coset_rule(constraints.n, constraints.level, constraints.c2, cosets, 0);
}

}  // namespace cssdiag
