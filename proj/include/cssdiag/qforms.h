#ifndef CSSDIAG_QFORMS_H
#define CSSDIAG_QFORMS_H

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cssdiag/css_code.h"
#include "cssdiag/gencoeff.h"

namespace cssdiag {

/// Q(x) = x U x^T over F_2^m with U strictly upper triangular.
///
/// Points x are numbered 0 .. 2^m - 1 with x_1 as the most significant bit, which fixes
/// the coordinate order of every evaluation vector built here.
class QuadraticForm {
   public:
    explicit QuadraticForm(size_t m);
    /// Sum of monomials x_i x_j; indices are 0-based and must differ.
    static QuadraticForm from_monomials(size_t m, const std::vector<std::pair<size_t, size_t>> &monomials);
    /// Reads the strictly upper part of an m x m matrix; the rest is ignored.
    static QuadraticForm from_upper(const BitMatrix &upper);

    size_t m() const {
        return m_;
    }
    const BitMatrix &upper() const {
        return upper_;
    }
    /// R = U + U^T, symmetric with zero diagonal.
    BitMatrix symplectic() const;
    bool evaluate(uint64_t point) const;
    /// Coefficient-wise sum of two forms.
    QuadraticForm operator+(const QuadraticForm &other) const;

   private:
    size_t m_;
    BitMatrix upper_;
};

/// Coordinate x_i (0-based) of point p.
inline bool point_coordinate(size_t m, uint64_t point, size_t i) {
    return (point >> (m - 1 - i)) & 1;
}

/// [f(x)] over all 2^m points, or over the 2^m - 1 nonzero points when punctured.
template <typename Fn>
BitVector evaluation_vector(size_t m, Fn &&f, bool punctured) {
    uint64_t start = punctured ? 1 : 0;
    uint64_t total = uint64_t{1} << m;
    BitVector out(static_cast<size_t>(total - start));
    for (uint64_t p = start; p < total; p++) {
        if (f(p)) {
            out.set(static_cast<size_t>(p - start), true);
        }
    }
    return out;
}

/// Evaluation vector of the monomial prod_{i in vars} x_i (0-based; empty = constant 1).
BitVector monomial_evaluation(size_t m, const std::vector<size_t> &vars, bool punctured);

/// GF(2) rank of R, always even (2h).
size_t rank_symplectic(const QuadraticForm &q);

/// The three weights {2^(m-1), 2^(m-1) +- 2^(m-h-1)} allowed for full-length words
/// eps*1 + L_a + Q when rank R = 2h.
std::set<uint64_t> lemma_weight_set(size_t m, size_t h);

/// Weight distribution of eps*1 + L_a + Q over all eps, a (full length 2^m).
std::map<uint64_t, uint64_t> coset_weights(const QuadraticForm &q);
/// True iff every weight in coset_weights(q) lies in lemma_weight_set.
bool coset_weights_within_lemma(const QuadraticForm &q);

struct CongruenceReport {
    uint64_t modulus;
    /// Every word of C(m) + [Q]_{x != 0} has weight divisible by modulus.
    bool divisible;
    /// Every word of C(m) + [1 + Q]_{x != 0} has weight = modulus - 1 mod modulus.
    bool shifted;
};

CongruenceReport punctured_congruences(const QuadraticForm &q);

struct CharacterSums {
    /// sum over F_2^m of (-1)^{Q(x) + a.x}
    int64_t full;
    /// same sum restricted to the null space of R
    int64_t kernel;
};

CharacterSums character_sums(const QuadraticForm &q, uint64_t a);

/// The [2^m - 1, m] simplex code spanned by the punctured coordinate functions.
LinearCode simplex_code(size_t m);

/// Pairs (i, j) with 1 <= i <= m - 4 and i < j <= m, in lexicographic order.
std::vector<std::pair<size_t, size_t>> family_pairs(size_t m);

/// CSS code with C2 = simplex(m) and X-logical rows [1] and [1 + x_i x_j] (punctured) for each
/// selected pair. Pairs are 1-based. Validates the mod-8 coset congruences that make transversal
/// T^dagger act logically, throwing std::logic_error if they fail.
CssCode build_family(size_t m, const std::vector<std::pair<size_t, size_t>> &pairs);

/// Largest rank of R over all forms in the span of the selected monomials (1-based pairs).
size_t max_family_rank(size_t m, const std::vector<std::pair<size_t, size_t>> &pairs);

/// The logical table t_alpha = 1 for odd w_H(alpha), 0 for even, at level 3.
LogicalDiagonal parity_phase_table(size_t k);

struct Theorem3Report {
    bool preserves;
    /// Induced table when preserved.
    std::optional<LogicalDiagonal> logical;
    bool matches_parity_table;
};

/// Applies transversal T^dagger (t(u) = -w_H(u) mod 8) and compares with parity_phase_table.
Theorem3Report theorem3_check(const CssCode &code, unsigned cap = kDefaultEnumerationCap);
bool theorem3_verify(const CssCode &code, unsigned cap = kDefaultEnumerationCap);

/// (C(k,1) - 2 C(k,2) + 4 C(k,3)) mod 8, in units of pi/4.
uint64_t lemma3_phase(uint64_t k);

struct LogicalDecomposition {
    uint64_t t_count;
    uint64_t cp_dagger_count;
    uint64_t ccz_count;
    /// Phase (units of pi/4) the decomposition puts on |1...1>.
    uint64_t residue;
    /// Phase table of the decomposition, evaluated gate by gate.
    LogicalDiagonal table;
    /// True iff table equals parity_phase_table(k).
    bool verified;
};

LogicalDecomposition logical_decomposition(size_t k, unsigned cap = 20);

}  // namespace cssdiag

#endif
