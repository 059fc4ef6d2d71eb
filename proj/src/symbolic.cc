#include "cssdiag/symbolic.h"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cssdiag {

namespace {

// Comparisons between boost::rational and a plain integer do not terminate under C++20's
// rewritten operator rules (Boost 1.74), so zero tests go through numerator().

class FormParser {
   public:
    explicit FormParser(std::string_view text) : text_(text) {
    }

    LinearForm parse() {
        LinearForm out;
        skip_space();
        if (pos_ == text_.size()) {
            fail("empty expression");
        }
        bool first = true;
        while (pos_ < text_.size()) {
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                pos_++;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            out += term() * sign;
            first = false;
            skip_space();
        }
        return out;
    }

   private:
    LinearForm term() {
        Rational coefficient = 1;
        bool has_number = false;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coefficient = number();
            has_number = true;
            skip_space();
            if (peek() == '/') {
                pos_++;
                skip_space();
                Rational den = number();
                if (den.numerator() == 0) {
                    fail("division by zero");
                }
                coefficient /= den;
                skip_space();
            }
            if (peek() == '*') {
                pos_++;
                skip_space();
            } else if (!is_symbol_start(peek())) {
                return LinearForm::constant(coefficient);
            }
        }
        if (!is_symbol_start(peek())) {
            fail(has_number ? "expected a symbol after '*'" : "expected a number or symbol");
        }
        size_t start = pos_;
        while (pos_ < text_.size() && is_symbol_char(text_[pos_])) {
            pos_++;
        }
        return LinearForm::symbol(std::string(text_.substr(start, pos_ - start)), coefficient);
    }

    Rational number() {
        int64_t value = 0;
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (value > (INT64_MAX - 9) / 10) {
                fail("number too large");
            }
            value = value * 10 + (text_[pos_] - '0');
            pos_++;
        }
        if (pos_ == start) {
            fail("expected a number");
        }
        return Rational(value);
    }

    static bool is_symbol_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_symbol_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }
    char peek() const {
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }
    [[noreturn]] void fail(const std::string &what) const {
        throw std::invalid_argument("cannot parse linear form '" + std::string(text_) + "' at offset " +
                                    std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    size_t pos_ = 0;
};

std::string rational_str(Rational r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

LinearForm LinearForm::symbol(const std::string &name, Rational coefficient) {
    LinearForm out;
    out.add_term(name, coefficient);
    return out;
}

LinearForm LinearForm::constant(Rational value) {
    LinearForm out;
    out.constant_ = value;
    return out;
}

LinearForm LinearForm::parse(std::string_view text) {
    return FormParser(text).parse();
}

Rational LinearForm::coefficient(const std::string &name) const {
    auto it = terms_.find(name);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool LinearForm::is_zero() const {
    return terms_.empty() && constant_.numerator() == 0;
}

void LinearForm::add_term(const std::string &name, Rational coefficient) {
    if (coefficient.numerator() == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(name, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.numerator() == 0) {
            terms_.erase(it);
        }
    }
}

LinearForm &LinearForm::operator+=(const LinearForm &other) {
    for (const auto &[name, c] : other.terms_) {
        add_term(name, c);
    }
    constant_ += other.constant_;
    return *this;
}

LinearForm LinearForm::operator+(const LinearForm &other) const {
    LinearForm out = *this;
    out += other;
    return out;
}

LinearForm LinearForm::operator-(const LinearForm &other) const {
    return *this + other * Rational(-1);
}

LinearForm LinearForm::operator*(Rational scale) const {
    LinearForm out;
    if (scale.numerator() == 0) {
        return out;
    }
    for (const auto &[name, c] : terms_) {
        out.terms_.emplace(name, c * scale);
    }
    out.constant_ = constant_ * scale;
    return out;
}

std::string LinearForm::str() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    auto emit = [&](Rational c, const std::string &name) {
        Rational mag = c < 0 ? -c : c;
        if (first) {
            out << (c < 0 ? "-" : "");
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (name.empty()) {
            out << rational_str(mag);
        } else {
            if (mag != Rational(1)) {
                out << rational_str(mag) << "*";
            }
            out << name;
        }
        first = false;
    };
    for (const auto &[name, c] : terms_) {
        emit(c, name);
    }
    if (constant_.numerator() != 0) {
        emit(constant_, "");
    }
    return out.str();
}

LinearForm ConstraintSystem::reduce(const LinearForm &form) const {
    LinearForm out = form;
    for (const auto &[pivot, row] : pivots_) {
        Rational c = out.coefficient(pivot);
        if (c.numerator() != 0) {
            out = out - row * c;
        }
    }
    return out;
}

bool ConstraintSystem::equivalent(const LinearForm &a, const LinearForm &b) const {
    return reduce(a - b).is_zero();
}

void ConstraintSystem::add(const LinearForm &lhs, const LinearForm &rhs) {
    LinearForm row = reduce(lhs - rhs);
    if (row.terms().empty()) {
        if (row.constant_term().numerator() != 0) {
            throw std::invalid_argument("constraint " + lhs.str() + " = " + rhs.str() + " is inconsistent");
        }
        return;
    }
    auto last = std::prev(row.terms().end());
    std::string pivot = last->first;
    row = row * (Rational(1) / last->second);
    for (auto &[name, existing] : pivots_) {
        Rational c = existing.coefficient(pivot);
        if (c.numerator() != 0) {
            existing = existing - row * c;
        }
    }
    pivots_.emplace(pivot, std::move(row));
}

void ConstraintSystem::add(std::string_view equation) {
    size_t eq = equation.find('=');
    if (eq == std::string_view::npos || equation.find('=', eq + 1) != std::string_view::npos) {
        throw std::invalid_argument("constraint '" + std::string(equation) + "' must contain exactly one '='");
    }
    add(LinearForm::parse(equation.substr(0, eq)), LinearForm::parse(equation.substr(eq + 1)));
}

SymbolicPhaseGate::SymbolicPhaseGate(std::vector<LinearForm> angles, ConstraintSystem constraints)
    : angles_(std::move(angles)), constraints_(std::move(constraints)) {
    if (angles_.empty()) {
        throw std::invalid_argument("symbolic gate must act on at least one qubit");
    }
}

SymbolicPhaseGate SymbolicPhaseGate::parse(const std::vector<std::string> &angles,
                                           const std::vector<std::string> &constraints) {
    std::vector<LinearForm> forms;
    for (const auto &a : angles) {
        forms.push_back(LinearForm::parse(a));
    }
    ConstraintSystem system;
    for (const auto &c : constraints) {
        system.add(c);
    }
    return SymbolicPhaseGate(std::move(forms), std::move(system));
}

LinearForm symbolic_entry(const SymbolicPhaseGate &g, const BitVector &u) {
    if (u.size() != g.n()) {
        throw std::invalid_argument("symbolic entry: basis vector has length " + std::to_string(u.size()) +
                                    ", gate acts on " + std::to_string(g.n()) + " qubits");
    }
    LinearForm total;
    for (size_t j = 0; j < u.size(); j++) {
        if (u.get(j)) {
            total += g.angles()[j];
        }
    }
    return g.constraints().reduce(total);
}

}  // namespace cssdiag
