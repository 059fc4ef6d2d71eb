#include "cssdiag/oracle.h"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace cssdiag {

SparseState apply_diagonal(const DyadicDiagonalGate &gate, const SparseState &state) {
    if (state.num_qubits() != gate.n()) {
        throw std::invalid_argument("state and gate act on different qubit counts");
    }
    SparseState out = state;
    out.transform_amplitudes([&](const BitVector &u, SparseState::Amplitude amp) {
        return amp * phase_value(gate.level(), gate.entry(u));
    });
    return out;
}

OracleReport verify_logical_action(const CssCode &code, const DyadicDiagonalGate &gate,
                                   const LogicalDiagonal &claimed, unsigned logical_cap, unsigned cap) {
    if (claimed.k != code.k()) {
        throw std::invalid_argument("claimed logical acts on " + std::to_string(claimed.k) +
                                    " qubits, code encodes " + std::to_string(code.k()));
    }
    require_enumerable(code.k(), logical_cap, "logical basis enumeration");
    OracleReport report;
    for (uint64_t a = 0; a < (uint64_t{1} << code.k()); a++) {
        BitVector alpha = BitVector::from_uint(code.k(), a);
        SparseState encoded = encode_basis(code, alpha, cap);
        SparseState image = apply_diagonal(gate, encoded);
        auto phase = phase_value(claimed.level, claimed.exponents[a]);
        for (const auto &[u, amp] : encoded.amplitudes()) {
            double residual = std::abs(image.amplitude(u) - phase * amp);
            report.max_residual = std::max(report.max_residual, residual);
            report.amplitudes_checked++;
        }
        report.states_checked++;
    }
    report.passed = report.max_residual < kOracleTolerance;
    return report;
}

bool brute_force_preserves(const CssCode &code, const DyadicDiagonalGate &gate, unsigned logical_cap, unsigned cap) {
    require_enumerable(code.k(), logical_cap, "logical basis enumeration");
    for (uint64_t a = 0; a < (uint64_t{1} << code.k()); a++) {
        SparseState encoded = encode_basis(code, BitVector::from_uint(code.k(), a), cap);
        SparseState image = apply_diagonal(gate, encoded);
        // Phase picked up by each basis string; preservation means they all agree.
        std::optional<SparseState::Amplitude> common;
        for (const auto &[u, amp] : encoded.amplitudes()) {
            SparseState::Amplitude ratio = image.amplitude(u) / amp;
            if (!common) {
                common = ratio;
            } else if (std::abs(ratio - *common) > kOracleTolerance) {
                return false;
            }
        }
    }
    return true;
}

double completeness_check(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap) {
    Cyclotomic residual = total_coefficient_weight(code, gate, cap) - Cyclotomic::integer(1);
    return std::abs(residual.to_complex());
}

}  // namespace cssdiag
