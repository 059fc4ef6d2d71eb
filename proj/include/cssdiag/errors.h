#ifndef CSSDIAG_ERRORS_H
#define CSSDIAG_ERRORS_H

#include <stdexcept>
#include <string>

namespace cssdiag {

/// Raised when an exhaustive enumeration would exceed its configured size cap.
class CapExceededError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// Raised when a gate entry is queried outside the domain its representation defines.
class OutOfDomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a code tower or subcode relation that a call requires does not hold.
class ContainmentError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a logical action is requested for a gate that does not preserve the codespace.
class NotPreservedError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Default cap on the dimension of any code whose codewords are enumerated (2^24 words).
inline constexpr unsigned kDefaultEnumerationCap = 24;

/// Default cap on the qubit count for gates materialized as full 2^n tables.
inline constexpr unsigned kDefaultTableQubitCap = 16;

/// Caps shared by the enumeration-heavy operations.
struct Limits {
    unsigned max_enum_dim = kDefaultEnumerationCap;
    unsigned max_table_qubits = kDefaultTableQubitCap;
    unsigned max_logical_dim = 20;
};

inline void require_enumerable(size_t dim, unsigned cap, const char *what) {
    if (dim > cap) {
        throw CapExceededError(
            std::string(what) + ": dimension " + std::to_string(dim) + " exceeds enumeration cap " +
            std::to_string(cap));
    }
}

}  // namespace cssdiag

#endif
