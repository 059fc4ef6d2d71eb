#ifndef CSSDIAG_SPARSE_STATE_H
#define CSSDIAG_SPARSE_STATE_H

#include <complex>
#include <map>

#include "cssdiag/bit_vector.h"

namespace cssdiag {

/// A finitely supported state: computational basis bitstrings mapped to amplitudes.
class SparseState {
   public:
    using Amplitude = std::complex<double>;

    SparseState() = default;
    explicit SparseState(size_t num_qubits) : num_qubits_(num_qubits) {
    }

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t support_size() const {
        return amps_.size();
    }
    const std::map<BitVector, Amplitude> &amplitudes() const {
        return amps_;
    }

    /// Adds to the amplitude at basis; creates the entry if absent.
    void add(const BitVector &basis, Amplitude amplitude);
    Amplitude amplitude(const BitVector &basis) const;
    double norm_squared() const;
    /// <this|other>.
    Amplitude inner(const SparseState &other) const;

    template <typename Fn>
    void transform_amplitudes(Fn &&fn) {
        for (auto &[basis, amp] : amps_) {
            amp = fn(basis, amp);
        }
    }

   private:
    size_t num_qubits_ = 0;
    std::map<BitVector, Amplitude> amps_;
};

}  // namespace cssdiag

#endif
