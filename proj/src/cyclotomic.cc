#include "cssdiag/cyclotomic.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cssdiag {

namespace {

constexpr unsigned kMaxLevel = 24;

int64_t checked_add(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("cyclotomic coefficient overflow");
    }
    return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("cyclotomic coefficient overflow");
    }
    return out;
}

int64_t checked_shift(int64_t a, unsigned k) {
    if (k >= 62) {
        if (a == 0) {
            return 0;
        }
        throw std::overflow_error("cyclotomic coefficient overflow");
    }
    return checked_mul(a, int64_t{1} << k);
}

void require_level(unsigned level) {
    if (level < 1 || level > kMaxLevel) {
        throw std::invalid_argument("cyclotomic level must be in [1, " + std::to_string(kMaxLevel) + "]");
    }
}

size_t basis_size(unsigned level) {
    return size_t{1} << (level - 1);
}

}  // namespace

Cyclotomic::Cyclotomic() : level_(1), num_{0}, log2_den_(0) {
}

Cyclotomic::Cyclotomic(unsigned level, std::vector<int64_t> num, unsigned log2_den)
    : level_(level), num_(std::move(num)), log2_den_(log2_den) {
    normalize();
}

Cyclotomic Cyclotomic::integer(int64_t value) {
    return Cyclotomic(1, {value}, 0);
}

Cyclotomic Cyclotomic::root(unsigned level, uint64_t exponent) {
    require_level(level);
    size_t half = basis_size(level);
    uint64_t t = exponent & ((uint64_t{1} << level) - 1);
    std::vector<int64_t> num(half, 0);
    if (t < half) {
        num[t] = 1;
    } else {
        num[t - half] = -1;
    }
    return Cyclotomic(level, std::move(num), 0);
}

Cyclotomic Cyclotomic::from_coefficients(unsigned level, std::vector<int64_t> numerators, unsigned log2_den) {
    require_level(level);
    if (numerators.size() != basis_size(level)) {
        throw std::invalid_argument("cyclotomic numerator vector must have 2^(L-1) entries");
    }
    return Cyclotomic(level, std::move(numerators), log2_den);
}

void Cyclotomic::normalize() {
    if (std::all_of(num_.begin(), num_.end(), [](int64_t v) { return v == 0; })) {
        level_ = 1;
        num_.assign(1, 0);
        log2_den_ = 0;
        return;
    }
    while (log2_den_ > 0 && std::all_of(num_.begin(), num_.end(), [](int64_t v) { return v % 2 == 0; })) {
        for (auto &v : num_) {
            v /= 2;
        }
        log2_den_--;
    }
    while (level_ > 1) {
        bool odd_free = true;
        for (size_t j = 1; j < num_.size(); j += 2) {
            if (num_[j] != 0) {
                odd_free = false;
                break;
            }
        }
        if (!odd_free) {
            break;
        }
        std::vector<int64_t> lowered(num_.size() / 2);
        for (size_t j = 0; j < lowered.size(); j++) {
            lowered[j] = num_[2 * j];
        }
        num_ = std::move(lowered);
        level_--;
    }
}

bool Cyclotomic::is_zero() const {
    return num_.size() == 1 && num_[0] == 0;
}

std::vector<int64_t> Cyclotomic::numerators_at(unsigned level) const {
    if (level < level_) {
        throw std::invalid_argument("cannot express a cyclotomic number at a lower level");
    }
    require_level(level);
    std::vector<int64_t> out(basis_size(level), 0);
    size_t stride = size_t{1} << (level - level_);
    for (size_t j = 0; j < num_.size(); j++) {
        out[j * stride] = num_[j];
    }
    return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic &other) const {
    unsigned level = std::max(level_, other.level_);
    unsigned den = std::max(log2_den_, other.log2_den_);
    std::vector<int64_t> a = numerators_at(level);
    std::vector<int64_t> b = other.numerators_at(level);
    for (size_t j = 0; j < a.size(); j++) {
        a[j] = checked_add(checked_shift(a[j], den - log2_den_), checked_shift(b[j], den - other.log2_den_));
    }
    return Cyclotomic(level, std::move(a), den);
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<int64_t> a = num_;
    for (auto &v : a) {
        v = checked_mul(v, -1);
    }
    return Cyclotomic(level_, std::move(a), log2_den_);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic &other) const {
    return *this + (-other);
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &other) {
    *this = *this + other;
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic &other) const {
    unsigned level = std::max(level_, other.level_);
    std::vector<int64_t> a = numerators_at(level);
    std::vector<int64_t> b = other.numerators_at(level);
    size_t half = a.size();
    std::vector<int64_t> c(half, 0);
    for (size_t i = 0; i < half; i++) {
        if (a[i] == 0) {
            continue;
        }
        for (size_t j = 0; j < half; j++) {
            if (b[j] == 0) {
                continue;
            }
            int64_t term = checked_mul(a[i], b[j]);
            size_t idx = i + j;
            if (idx >= half) {
                c[idx - half] = checked_add(c[idx - half], -term);
            } else {
                c[idx] = checked_add(c[idx], term);
            }
        }
    }
    return Cyclotomic(level, std::move(c), log2_den_ + other.log2_den_);
}

Cyclotomic Cyclotomic::halved(unsigned k) const {
    return Cyclotomic(level_, num_, log2_den_ + k);
}

Cyclotomic Cyclotomic::conj() const {
    size_t half = num_.size();
    std::vector<int64_t> c(half, 0);
    c[0] = num_[0];
    // zeta^-j = -zeta^(half - j) for 0 < j < half.
    for (size_t j = 1; j < half; j++) {
        c[half - j] = checked_mul(num_[j], -1);
    }
    return Cyclotomic(level_, std::move(c), log2_den_);
}

Cyclotomic Cyclotomic::norm_squared() const {
    return *this * conj();
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> total{0.0, 0.0};
    double half = static_cast<double>(num_.size());
    for (size_t j = 0; j < num_.size(); j++) {
        if (num_[j] != 0) {
            total += static_cast<double>(num_[j]) * std::polar(1.0, std::numbers::pi * static_cast<double>(j) / half);
        }
    }
    return total / std::ldexp(1.0, static_cast<int>(log2_den_));
}

std::string Cyclotomic::str() const {
    std::ostringstream out;
    bool first = true;
    out << "(";
    for (size_t j = 0; j < num_.size(); j++) {
        int64_t v = num_[j];
        if (v == 0) {
            continue;
        }
        if (!first) {
            out << (v < 0 ? " - " : " + ");
        } else if (v < 0) {
            out << "-";
        }
        int64_t mag = v < 0 ? -v : v;
        if (j == 0) {
            out << mag;
        } else {
            if (mag != 1) {
                out << mag << "*";
            }
            out << "z" << (size_t{1} << level_) << "^" << j;
        }
        first = false;
    }
    if (first) {
        out << "0";
    }
    out << ")";
    if (log2_den_ > 0) {
        out << "/2^" << log2_den_;
    }
    return out.str();
}

bool Cyclotomic::operator==(const Cyclotomic &other) const {
    return level_ == other.level_ && log2_den_ == other.log2_den_ && num_ == other.num_;
}

ExactSpectrum::ExactSpectrum(unsigned level, const std::vector<uint64_t> &exponents)
    : level_(level), size_(exponents.size()) {
    require_level(level);
    if (size_ == 0 || (size_ & (size_ - 1)) != 0) {
        throw std::invalid_argument("spectrum input length must be a power of two");
    }
    size_t half = basis_size(level);
    uint64_t mask = (uint64_t{1} << level) - 1;
    planes_.assign(half, std::vector<int64_t>(size_, 0));
    for (size_t a = 0; a < size_; a++) {
        uint64_t t = exponents[a] & mask;
        if (t < half) {
            planes_[t][a] = 1;
        } else {
            planes_[t - half][a] = -1;
        }
    }
    for (auto &plane : planes_) {
        walsh_hadamard_inplace(plane);
    }
}

Cyclotomic ExactSpectrum::at(size_t index) const {
    std::vector<int64_t> num(planes_.size());
    for (size_t j = 0; j < planes_.size(); j++) {
        num[j] = planes_[j][index];
    }
    return Cyclotomic::from_coefficients(level_, std::move(num), 0);
}

void walsh_hadamard_inplace(std::vector<int64_t> &data) {
    for (size_t h = 1; h < data.size(); h <<= 1) {
        for (size_t i = 0; i < data.size(); i += h << 1) {
            for (size_t j = i; j < i + h; j++) {
                int64_t x = data[j];
                int64_t y = data[j + h];
                data[j] = x + y;
                data[j + h] = x - y;
            }
        }
    }
}

void walsh_hadamard_inplace(std::vector<std::complex<double>> &data) {
    for (size_t h = 1; h < data.size(); h <<= 1) {
        for (size_t i = 0; i < data.size(); i += h << 1) {
            for (size_t j = i; j < i + h; j++) {
                auto x = data[j];
                auto y = data[j + h];
                data[j] = x + y;
                data[j + h] = x - y;
            }
        }
    }
}

}  // namespace cssdiag
