#ifndef CSSDIAG_BIT_VECTOR_H
#define CSSDIAG_BIT_VECTOR_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cssdiag {

/// A fixed-length vector over GF(2), packed into 64-bit words.
///
/// Coordinate 0 corresponds to the leftmost character of the textual form
/// ("10110" has bit 0 set). Bits are stored most-significant-first inside each
/// word, so comparing the word arrays lexicographically is the same as comparing
/// the textual forms lexicographically. Unused tail bits are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    /// Parses a string of '0'/'1' characters.
    static BitVector from_string(std::string_view text);
    /// Builds a vector of length num_bits (<= 64) whose coordinate 0 is the most
    /// significant of the num_bits low bits of value.
    static BitVector from_uint(size_t num_bits, uint64_t value);
    static BitVector ones(size_t num_bits);
    static BitVector unit(size_t num_bits, size_t index);

    size_t size() const {
        return num_bits_;
    }
    bool get(size_t index) const {
        return (words_[index >> 6] >> (63 - (index & 63))) & 1;
    }
    bool operator[](size_t index) const {
        return get(index);
    }
    void set(size_t index, bool value);
    void flip(size_t index) {
        words_[index >> 6] ^= uint64_t{1} << (63 - (index & 63));
    }

    size_t weight() const;
    bool is_zero() const;
    /// Index of the first set coordinate, or size() when the vector is zero.
    size_t first_set() const;
    /// Inner product over GF(2).
    bool dot(const BitVector &other) const;
    /// Inverse of from_uint; requires size() <= 64.
    uint64_t to_uint() const;
    /// Keeps only the listed coordinates, in the listed order.
    BitVector restrict_to(std::span<const size_t> coordinates) const;
    std::string str() const;

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        a &= b;
        return a;
    }

    bool operator==(const BitVector &other) const = default;
    std::strong_ordering operator<=>(const BitVector &other) const;

    std::span<const uint64_t> words() const {
        return words_;
    }
    size_t hash() const;

   private:
    void require_same_size(const BitVector &other) const;

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

std::ostream &operator<<(std::ostream &out, const BitVector &v);

}  // namespace cssdiag

template <>
struct std::hash<cssdiag::BitVector> {
    size_t operator()(const cssdiag::BitVector &v) const {
        return v.hash();
    }
};

#endif
