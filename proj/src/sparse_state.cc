#include "cssdiag/sparse_state.h"

#include <stdexcept>

namespace cssdiag {

void SparseState::add(const BitVector &basis, Amplitude amplitude) {
    if (basis.size() != num_qubits_) {
        throw std::invalid_argument("sparse state: basis vector length mismatch");
    }
    amps_[basis] += amplitude;
}

SparseState::Amplitude SparseState::amplitude(const BitVector &basis) const {
    auto it = amps_.find(basis);
    return it == amps_.end() ? Amplitude{0.0, 0.0} : it->second;
}

double SparseState::norm_squared() const {
    double total = 0;
    for (const auto &[basis, amp] : amps_) {
        total += std::norm(amp);
    }
    return total;
}

SparseState::Amplitude SparseState::inner(const SparseState &other) const {
    Amplitude total{0.0, 0.0};
    const auto &small = amps_.size() <= other.amps_.size() ? amps_ : other.amps_;
    for (const auto &[basis, amp] : small) {
        total += std::conj(amplitude(basis)) * other.amplitude(basis);
    }
    return total;
}

}  // namespace cssdiag
