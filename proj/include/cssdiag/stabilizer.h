#ifndef CSSDIAG_STABILIZER_H
#define CSSDIAG_STABILIZER_H

#include "cssdiag/css_code.h"

namespace cssdiag {

/// Stabilizer generators arranged as [A 0; 0 B; C D] (rows are X-part | Z-part),
/// with A spanning every pure-X element of the group and B every pure-Z element.
struct StabilizerStandardForm {
    size_t n = 0;
    BitMatrix a_rows{0};
    BitMatrix b_rows{0};
    BitMatrix c_rows{0};
    BitMatrix d_rows{0};
};

/// Symplectic inner product of (x1|z1) and (x2|z2).
bool symplectic_product(const BitVector &x1, const BitVector &z1, const BitVector &x2, const BitVector &z2);

/// Rearranges independent, pairwise commuting generators (row i is x_parts.row(i) | z_parts.row(i))
/// into standard form. Mixed generators are kept from the input in their original order.
StabilizerStandardForm standard_form(const BitMatrix &x_parts, const BitMatrix &z_parts);

struct CodeTower {
    LinearCode sub;
    LinearCode super;
};

/// The classical tower <A, C> within B^perp that plays the role of C2 within C1 for diagonal gates.
CodeTower tower_from_standard_form(const StabilizerStandardForm &form);

/// CSS code (y = 0) over a tower, used as the diagonal-gate model of a general stabilizer code.
CssCode css_from_tower(const CodeTower &tower);

}  // namespace cssdiag

#endif
