#include "cssdiag/bit_vector.h"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace cssdiag {

namespace {

size_t word_count(size_t num_bits) {
    return (num_bits + 63) / 64;
}

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_(word_count(num_bits), 0) {
}

BitVector BitVector::from_string(std::string_view text) {
    BitVector result(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] == '1') {
            result.set(i, true);
        } else if (text[i] != '0') {
            throw std::invalid_argument("bit string contains a character other than '0' or '1': '" +
                                        std::string(text) + "'");
        }
    }
    return result;
}

BitVector BitVector::from_uint(size_t num_bits, uint64_t value) {
    if (num_bits > 64) {
        throw std::invalid_argument("from_uint supports at most 64 bits");
    }
    BitVector result(num_bits);
    if (num_bits > 0) {
        uint64_t mask = num_bits == 64 ? ~uint64_t{0} : ((uint64_t{1} << num_bits) - 1);
        result.words_[0] = (value & mask) << (64 - num_bits);
    }
    return result;
}

BitVector BitVector::ones(size_t num_bits) {
    BitVector result(num_bits);
    for (size_t i = 0; i < num_bits; i++) {
        result.set(i, true);
    }
    return result;
}

BitVector BitVector::unit(size_t num_bits, size_t index) {
    BitVector result(num_bits);
    result.set(index, true);
    return result;
}

void BitVector::set(size_t index, bool value) {
    uint64_t mask = uint64_t{1} << (63 - (index & 63));
    if (value) {
        words_[index >> 6] |= mask;
    } else {
        words_[index >> 6] &= ~mask;
    }
}

size_t BitVector::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

size_t BitVector::first_set() const {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return k * 64 + std::countl_zero(words_[k]);
        }
    }
    return num_bits_;
}

bool BitVector::dot(const BitVector &other) const {
    require_same_size(other);
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

uint64_t BitVector::to_uint() const {
    if (num_bits_ > 64) {
        throw std::invalid_argument("to_uint supports at most 64 bits");
    }
    if (num_bits_ == 0) {
        return 0;
    }
    return words_[0] >> (64 - num_bits_);
}

BitVector BitVector::restrict_to(std::span<const size_t> coordinates) const {
    BitVector result(coordinates.size());
    for (size_t i = 0; i < coordinates.size(); i++) {
        if (coordinates[i] >= num_bits_) {
            throw std::out_of_range("coordinate " + std::to_string(coordinates[i]) + " out of range");
        }
        if (get(coordinates[i])) {
            result.set(i, true);
        }
    }
    return result;
}

std::string BitVector::str() const {
    std::string out(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

std::strong_ordering BitVector::operator<=>(const BitVector &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ <=> other.num_bits_;
    }
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k] != other.words_[k]) {
            return words_[k] <=> other.words_[k];
        }
    }
    return std::strong_ordering::equal;
}

size_t BitVector::hash() const {
    // FNV-1a over the packed words.
    uint64_t h = 1469598103934665603ull ^ num_bits_;
    for (uint64_t w : words_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
}

void BitVector::require_same_size(const BitVector &other) const {
    if (num_bits_ != other.num_bits_) {
        throw std::invalid_argument("bit vector length mismatch: " + std::to_string(num_bits_) + " vs " +
                                    std::to_string(other.num_bits_));
    }
}

std::ostream &operator<<(std::ostream &out, const BitVector &v) {
    return out << v.str();
}

}  // namespace cssdiag
