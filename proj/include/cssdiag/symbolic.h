#ifndef CSSDIAG_SYMBOLIC_H
#define CSSDIAG_SYMBOLIC_H

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "cssdiag/bit_vector.h"

namespace cssdiag {

using Rational = boost::rational<int64_t>;

/// A formal sum c_0 + sum_s c_s * s over named symbols with rational coefficients.
/// Zero coefficients are never stored, so equal forms compare equal.
class LinearForm {
   public:
    LinearForm() = default;
    static LinearForm symbol(const std::string &name, Rational coefficient = 1);
    static LinearForm constant(Rational value);
    /// Parses expressions such as "theta1 + theta2", "2*a - 1/2*b", "3/4", "-x + 1".
    /// Symbols match [A-Za-z_][A-Za-z0-9_']*.
    static LinearForm parse(std::string_view text);

    const std::map<std::string, Rational> &terms() const {
        return terms_;
    }
    Rational constant_term() const {
        return constant_;
    }
    Rational coefficient(const std::string &name) const;
    bool is_zero() const;

    LinearForm operator+(const LinearForm &other) const;
    LinearForm operator-(const LinearForm &other) const;
    LinearForm operator*(Rational scale) const;
    LinearForm &operator+=(const LinearForm &other);

    bool operator==(const LinearForm &other) const = default;
    std::string str() const;

   private:
    void add_term(const std::string &name, Rational coefficient);

    std::map<std::string, Rational> terms_;
    Rational constant_{0};
};

/// A set of linear equations between angle symbols, kept in reduced echelon form.
///
/// Each equation solves for its lexicographically greatest remaining symbol, so that
/// under theta1 + theta2 = theta the form theta1 + theta2 + 2*theta reduces to 3*theta.
class ConstraintSystem {
   public:
    /// Adds lhs = rhs. Throws std::invalid_argument if it contradicts the existing ones.
    void add(const LinearForm &lhs, const LinearForm &rhs);
    /// Parses "lhs = rhs".
    void add(std::string_view equation);

    /// Canonical representative of form modulo the constraints.
    LinearForm reduce(const LinearForm &form) const;
    bool equivalent(const LinearForm &a, const LinearForm &b) const;

    const std::map<std::string, LinearForm> &pivots() const {
        return pivots_;
    }
    size_t size() const {
        return pivots_.size();
    }

   private:
    // pivot symbol -> form equal to zero with coefficient 1 on the pivot
    std::map<std::string, LinearForm> pivots_;
};

/// Diagonal gate exp(i sum_{j in supp(u)} angle_j) with symbolic per-qubit angles.
class SymbolicPhaseGate {
   public:
    SymbolicPhaseGate(std::vector<LinearForm> angles, ConstraintSystem constraints = {});
    static SymbolicPhaseGate parse(const std::vector<std::string> &angles, const std::vector<std::string> &constraints);

    size_t n() const {
        return angles_.size();
    }
    const std::vector<LinearForm> &angles() const {
        return angles_;
    }
    const ConstraintSystem &constraints() const {
        return constraints_;
    }

   private:
    std::vector<LinearForm> angles_;
    ConstraintSystem constraints_;
};

/// Phase of basis state u as a canonical linear form (reduced by the gate's constraints).
LinearForm symbolic_entry(const SymbolicPhaseGate &g, const BitVector &u);

}  // namespace cssdiag

#endif
