#ifndef CSSDIAG_CYCLOTOMIC_H
#define CSSDIAG_CYCLOTOMIC_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace cssdiag {

/// An exact element of Z[zeta][1/2] with zeta = exp(i pi / 2^(L-1)), a primitive 2^L-th root of unity.
///
/// Stored as (sum_j num[j] zeta^j) / 2^log2_den over the basis zeta^0 .. zeta^(2^(L-1) - 1),
/// which is a Z-basis because zeta^(2^(L-1)) = -1. The form is canonical: the denominator is
/// as small as possible and L is lowered while only even powers appear, so equal values have
/// equal representations. Level 1 holds the dyadic rationals.
class Cyclotomic {
   public:
    /// Zero.
    Cyclotomic();

    static Cyclotomic integer(int64_t value);
    /// zeta_{2^level}^exponent (exponent taken mod 2^level).
    static Cyclotomic root(unsigned level, uint64_t exponent);
    static Cyclotomic from_coefficients(unsigned level, std::vector<int64_t> numerators, unsigned log2_den);

    unsigned level() const {
        return level_;
    }
    const std::vector<int64_t> &numerators() const {
        return num_;
    }
    unsigned log2_denominator() const {
        return log2_den_;
    }
    bool is_zero() const;

    Cyclotomic operator+(const Cyclotomic &other) const;
    Cyclotomic operator-(const Cyclotomic &other) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic &other) const;
    Cyclotomic &operator+=(const Cyclotomic &other);
    /// Divides by 2^k.
    Cyclotomic halved(unsigned k) const;
    /// Complex conjugate (zeta^j -> zeta^-j).
    Cyclotomic conj() const;
    /// |z|^2 = z * conj(z), exact.
    Cyclotomic norm_squared() const;

    std::complex<double> to_complex() const;
    std::string str() const;

    bool operator==(const Cyclotomic &other) const;

    /// Coefficient vector of this value written at a level >= level().
    std::vector<int64_t> numerators_at(unsigned level) const;

   private:
    Cyclotomic(unsigned level, std::vector<int64_t> num, unsigned log2_den);
    void normalize();

    unsigned level_;
    std::vector<int64_t> num_;
    unsigned log2_den_;
};

/// Exact Walsh-Hadamard transform of a vector of roots of unity.
///
/// Input: exponents[a] in Z_{2^level} for a in [0, 2^k). Output index b holds
/// sum_a (-1)^{popcount(a & b)} zeta^{exponents[a]} (no normalization).
/// Each basis coefficient is transformed separately as an integer array.
class ExactSpectrum {
   public:
    ExactSpectrum(unsigned level, const std::vector<uint64_t> &exponents);

    size_t size() const {
        return size_;
    }
    unsigned level() const {
        return level_;
    }
    Cyclotomic at(size_t index) const;

   private:
    unsigned level_;
    size_t size_;
    std::vector<std::vector<int64_t>> planes_;
};

/// In-place integer fast Walsh-Hadamard transform; data.size() must be a power of two.
void walsh_hadamard_inplace(std::vector<int64_t> &data);
void walsh_hadamard_inplace(std::vector<std::complex<double>> &data);

}  // namespace cssdiag

#endif
