#ifndef CSSDIAG_ORACLE_H
#define CSSDIAG_ORACLE_H

#include "cssdiag/css_code.h"
#include "cssdiag/diagonal_gate.h"
#include "cssdiag/gencoeff.h"
#include "cssdiag/sparse_state.h"

namespace cssdiag {

/// Per-amplitude tolerance used by the state-level checks.
inline constexpr double kOracleTolerance = 1e-10;

/// Multiplies each amplitude at u by exp(i pi t(u) / 2^(L-1)).
SparseState apply_diagonal(const DyadicDiagonalGate &gate, const SparseState &state);

struct OracleReport {
    bool passed = true;
    /// Largest per-amplitude deviation seen.
    double max_residual = 0.0;
    size_t states_checked = 0;
    size_t amplitudes_checked = 0;
};

/// Encodes every logical basis state, applies the gate and compares with exp(i theta_alpha)
/// times the encoded state.
OracleReport verify_logical_action(const CssCode &code, const DyadicDiagonalGate &gate,
                                   const LogicalDiagonal &claimed, unsigned logical_cap = 20,
                                   unsigned cap = kDefaultEnumerationCap);

/// True iff the gate maps every encoded basis state to a uniform-phase multiple of itself.
bool brute_force_preserves(const CssCode &code, const DyadicDiagonalGate &gate, unsigned logical_cap = 20,
                           unsigned cap = kDefaultEnumerationCap);

/// |sum_{mu,gamma} |A_{mu,gamma}|^2 - 1|, from the exact matrix.
double completeness_check(const CssCode &code, const DyadicDiagonalGate &gate, unsigned cap = 20);

}  // namespace cssdiag

#endif
