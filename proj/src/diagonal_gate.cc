#include "cssdiag/diagonal_gate.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cssdiag/errors.h"

namespace cssdiag {

namespace {

constexpr unsigned kMaxGateLevel = 24;

uint64_t level_mask(unsigned level) {
    return (uint64_t{1} << level) - 1;
}

void require_gate_level(unsigned level) {
    if (level < 1 || level > kMaxGateLevel) {
        throw std::invalid_argument("gate level must be in [1, " + std::to_string(kMaxGateLevel) + "]");
    }
}

void validate_factor(size_t n, const LocalFactor &f) {
    require_gate_level(f.level);
    if (f.support.empty()) {
        throw std::invalid_argument("local factor has an empty support");
    }
    if (f.support.size() > 20) {
        throw std::invalid_argument("local factor support is too large");
    }
    std::vector<size_t> sorted = f.support;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("local factor support repeats a qubit");
    }
    for (size_t q : f.support) {
        if (q >= n) {
            throw std::invalid_argument("local factor support qubit " + std::to_string(q) + " out of range");
        }
    }
    if (f.table.size() != (size_t{1} << f.support.size())) {
        throw std::invalid_argument("local factor table must have 2^|support| entries");
    }
}

std::vector<LocalFactor> weight_rule_as_factors(size_t n, unsigned level, uint64_t c) {
    std::vector<LocalFactor> out;
    for (size_t q = 0; q < n; q++) {
        out.push_back(LocalFactor::phase(q, level, c));
    }
    return out;
}

}  // namespace

LocalFactor LocalFactor::phase(size_t qubit, unsigned level, uint64_t exponent) {
    return LocalFactor{{qubit}, level, {0, exponent & level_mask(level)}};
}

LocalFactor LocalFactor::controlled_z(size_t a, size_t b) {
    return LocalFactor{{a, b}, 1, {0, 0, 0, 1}};
}

DyadicDiagonalGate::DyadicDiagonalGate(size_t n, unsigned level, Repr repr)
    : n_(n), level_(level), repr_(std::move(repr)) {
    if (n == 0) {
        throw std::invalid_argument("gate must act on at least one qubit");
    }
    require_gate_level(level);
}

DyadicDiagonalGate DyadicDiagonalGate::identity(size_t n) {
    return DyadicDiagonalGate(n, 1, FactorProduct{});
}

DyadicDiagonalGate DyadicDiagonalGate::weight_rule(size_t n, unsigned level, uint64_t c) {
    require_gate_level(level);
    return DyadicDiagonalGate(n, level, WeightRule{c & level_mask(level)});
}

DyadicDiagonalGate DyadicDiagonalGate::from_factors(size_t n, std::vector<LocalFactor> factors) {
    unsigned level = 1;
    for (auto &f : factors) {
        validate_factor(n, f);
        for (auto &t : f.table) {
            t &= level_mask(f.level);
        }
        level = std::max(level, f.level);
    }
    return DyadicDiagonalGate(n, level, FactorProduct{std::move(factors)});
}

DyadicDiagonalGate DyadicDiagonalGate::table(size_t n, unsigned level, std::map<BitVector, uint64_t> entries) {
    require_gate_level(level);
    std::map<BitVector, uint64_t> cleaned;
    for (auto &[u, t] : entries) {
        if (u.size() != n) {
            throw std::invalid_argument("table entry " + u.str() + " has the wrong length");
        }
        if (t & level_mask(level)) {
            cleaned.emplace(u, t & level_mask(level));
        }
    }
    return DyadicDiagonalGate(n, level, Table{std::move(cleaned)});
}

DyadicDiagonalGate DyadicDiagonalGate::coset_rule(size_t n, unsigned level, LinearCode sub,
                                                  const std::vector<std::pair<BitVector, uint64_t>> &cosets,
                                                  std::optional<uint64_t> outside) {
    require_gate_level(level);
    if (sub.n() != n) {
        throw std::invalid_argument("coset rule subcode has the wrong length");
    }
    std::map<BitVector, uint64_t> by_coset;
    for (const auto &[offset, t] : cosets) {
        BitVector key = sub.reduce(offset);
        uint64_t value = t & level_mask(level);
        auto [it, inserted] = by_coset.emplace(key, value);
        if (!inserted && it->second != value) {
            throw std::invalid_argument("coset rule assigns two exponents to the coset of " + offset.str());
        }
    }
    if (outside) {
        *outside &= level_mask(level);
    }
    return DyadicDiagonalGate(n, level, CosetRule{std::move(sub), std::move(by_coset), outside});
}

uint64_t DyadicDiagonalGate::entry(const BitVector &u) const {
    if (u.size() != n_) {
        throw std::invalid_argument("gate entry: basis vector has length " + std::to_string(u.size()) +
                                    ", gate acts on " + std::to_string(n_) + " qubits");
    }
    uint64_t mask = level_mask(level_);
    return std::visit(
        [&](const auto &r) -> uint64_t {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Table>) {
                auto it = r.entries.find(u);
                return it == r.entries.end() ? 0 : it->second;
            } else if constexpr (std::is_same_v<T, WeightRule>) {
                return (r.c * static_cast<uint64_t>(u.weight())) & mask;
            } else if constexpr (std::is_same_v<T, FactorProduct>) {
                uint64_t total = 0;
                for (const auto &f : r.factors) {
                    size_t local = 0;
                    for (size_t q : f.support) {
                        local = (local << 1) | (u.get(q) ? 1 : 0);
                    }
                    total += f.table[local] << (level_ - f.level);
                }
                return total & mask;
            } else {
                auto it = r.by_coset.find(r.sub.reduce(u));
                if (it != r.by_coset.end()) {
                    return it->second;
                }
                if (r.outside) {
                    return *r.outside;
                }
                throw OutOfDomainError("gate entry requested outside the coset rule's domain: " + u.str());
            }
        },
        repr_);
}

bool DyadicDiagonalGate::defined_everywhere() const {
    if (const auto *r = std::get_if<CosetRule>(&repr_)) {
        return r->outside.has_value();
    }
    return true;
}

DyadicDiagonalGate DyadicDiagonalGate::inverse() const {
    uint64_t mask = level_mask(level_);
    auto neg = [&](uint64_t t, unsigned level) { return (level_mask(level) + 1 - t) & level_mask(level); };
    return std::visit(
        [&](const auto &r) -> DyadicDiagonalGate {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Table>) {
                Table out;
                for (const auto &[u, t] : r.entries) {
                    out.entries.emplace(u, neg(t, level_));
                }
                return DyadicDiagonalGate(n_, level_, std::move(out));
            } else if constexpr (std::is_same_v<T, WeightRule>) {
                return DyadicDiagonalGate(n_, level_, WeightRule{neg(r.c, level_) & mask});
            } else if constexpr (std::is_same_v<T, FactorProduct>) {
                FactorProduct out = r;
                for (auto &f : out.factors) {
                    for (auto &t : f.table) {
                        t = neg(t, f.level);
                    }
                }
                return DyadicDiagonalGate(n_, level_, std::move(out));
            } else {
                CosetRule out = r;
                for (auto &[key, t] : out.by_coset) {
                    t = neg(t, level_);
                }
                if (out.outside) {
                    *out.outside = neg(*out.outside, level_);
                }
                return DyadicDiagonalGate(n_, level_, std::move(out));
            }
        },
        repr_);
}

DyadicDiagonalGate DyadicDiagonalGate::at_level(unsigned level) const {
    if (level < level_) {
        throw std::invalid_argument("cannot lower a gate's level");
    }
    require_gate_level(level);
    unsigned shift = level - level_;
    return std::visit(
        [&](const auto &r) -> DyadicDiagonalGate {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Table>) {
                Table out;
                for (const auto &[u, t] : r.entries) {
                    out.entries.emplace(u, t << shift);
                }
                return DyadicDiagonalGate(n_, level, std::move(out));
            } else if constexpr (std::is_same_v<T, WeightRule>) {
                return DyadicDiagonalGate(n_, level, WeightRule{r.c << shift});
            } else if constexpr (std::is_same_v<T, FactorProduct>) {
                // Factors keep their own levels; only the common level moves.
                return DyadicDiagonalGate(n_, level, r);
            } else {
                CosetRule out = r;
                for (auto &[key, t] : out.by_coset) {
                    t <<= shift;
                }
                if (out.outside) {
                    *out.outside <<= shift;
                }
                return DyadicDiagonalGate(n_, level, std::move(out));
            }
        },
        repr_);
}

std::vector<uint64_t> DyadicDiagonalGate::to_dense(unsigned qubit_cap) const {
    if (n_ > qubit_cap || n_ > 30) {
        throw CapExceededError("dense gate table for " + std::to_string(n_) + " qubits exceeds the qubit cap " +
                               std::to_string(qubit_cap));
    }
    std::vector<uint64_t> out(size_t{1} << n_);
    for (uint64_t a = 0; a < out.size(); a++) {
        out[a] = entry(BitVector::from_uint(n_, a));
    }
    return out;
}

DyadicDiagonalGate compose(const DyadicDiagonalGate &g1, const DyadicDiagonalGate &g2) {
    using G = DyadicDiagonalGate;
    if (g1.n() != g2.n()) {
        throw std::invalid_argument("compose: gates act on different qubit counts");
    }
    size_t n = g1.n();
    unsigned level = std::max(g1.level(), g2.level());
    const auto *w1 = std::get_if<G::WeightRule>(&g1.repr());
    const auto *w2 = std::get_if<G::WeightRule>(&g2.repr());
    if (w1 && w2) {
        uint64_t c = (w1->c << (level - g1.level())) + (w2->c << (level - g2.level()));
        return G::weight_rule(n, level, c);
    }
    bool coset1 = std::holds_alternative<G::CosetRule>(g1.repr());
    bool coset2 = std::holds_alternative<G::CosetRule>(g2.repr());
    if (coset1 || coset2) {
        throw std::invalid_argument("compose: coset-rule gates only define part of the diagonal and cannot be composed");
    }
    bool table1 = std::holds_alternative<G::Table>(g1.repr());
    bool table2 = std::holds_alternative<G::Table>(g2.repr());
    if (table1 || table2) {
        std::vector<uint64_t> d1 = g1.at_level(level).to_dense();
        std::vector<uint64_t> d2 = g2.at_level(level).to_dense();
        std::map<BitVector, uint64_t> entries;
        for (uint64_t a = 0; a < d1.size(); a++) {
            entries.emplace(BitVector::from_uint(n, a), d1[a] + d2[a]);
        }
        return G::table(n, level, std::move(entries));
    }
    auto factors_of = [&](const G &g) {
        if (const auto *w = std::get_if<G::WeightRule>(&g.repr())) {
            return weight_rule_as_factors(n, g.level(), w->c);
        }
        return std::get<G::FactorProduct>(g.repr()).factors;
    };
    std::vector<LocalFactor> all = factors_of(g1);
    for (auto &f : factors_of(g2)) {
        all.push_back(std::move(f));
    }
    return G::from_factors(n, std::move(all)).at_level(std::max(level, std::max(g1.level(), g2.level())));
}

bool same_diagonal(const DyadicDiagonalGate &g1, const DyadicDiagonalGate &g2, unsigned qubit_cap) {
    if (g1.n() != g2.n()) {
        return false;
    }
    unsigned level = std::max(g1.level(), g2.level());
    return g1.at_level(level).to_dense(qubit_cap) == g2.at_level(level).to_dense(qubit_cap);
}

std::complex<double> phase_value(unsigned level, uint64_t exponent) {
    uint64_t t = exponent & level_mask(level);
    return std::polar(1.0, std::numbers::pi * static_cast<double>(t) / std::ldexp(1.0, static_cast<int>(level) - 1));
}

std::vector<std::complex<double>> pauli_coefficients(const DyadicDiagonalGate &g, unsigned qubit_cap) {
    std::vector<uint64_t> exps = g.to_dense(qubit_cap);
    std::vector<std::complex<double>> data(exps.size());
    for (size_t a = 0; a < exps.size(); a++) {
        data[a] = phase_value(g.level(), exps[a]);
    }
    walsh_hadamard_inplace(data);
    double scale = 1.0 / static_cast<double>(data.size());
    for (auto &v : data) {
        v *= scale;
    }
    return data;
}

std::vector<Cyclotomic> pauli_coefficients_exact(const DyadicDiagonalGate &g, unsigned qubit_cap) {
    ExactSpectrum spectrum(g.level(), g.to_dense(qubit_cap));
    std::vector<Cyclotomic> out;
    out.reserve(spectrum.size());
    for (size_t v = 0; v < spectrum.size(); v++) {
        out.push_back(spectrum.at(v).halved(static_cast<unsigned>(g.n())));
    }
    return out;
}

std::vector<std::complex<double>> diagonal_from_pauli(std::vector<std::complex<double>> coefficients) {
    if (coefficients.empty() || (coefficients.size() & (coefficients.size() - 1)) != 0) {
        throw std::invalid_argument("coefficient vector length must be a power of two");
    }
    walsh_hadamard_inplace(coefficients);
    return coefficients;
}

}  // namespace cssdiag
