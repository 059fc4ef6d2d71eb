#include "cssdiag/json_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cssdiag/stabilizer.h"

namespace cssdiag {

namespace {

const Json &field(const Json &doc, const char *key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw InputError(std::string("missing field \"") + key + "\"");
    }
    return doc.at(key);
}

uint64_t unsigned_field(const Json &doc, const char *key) {
    const Json &v = field(doc, key);
    if (!v.is_number_integer() || v.get<int64_t>() < 0) {
        throw InputError(std::string("field \"") + key + "\" must be a non-negative integer");
    }
    return v.get<uint64_t>();
}

BitVector bits(const Json &v, size_t n, const std::string &what) {
    if (!v.is_string()) {
        throw InputError(what + " must be a bitstring");
    }
    const std::string &s = v.get_ref<const std::string &>();
    if (s.size() != n) {
        throw InputError(what + " has length " + std::to_string(s.size()) + ", expected " + std::to_string(n));
    }
    try {
        return BitVector::from_string(s);
    } catch (const std::invalid_argument &e) {
        throw InputError(what + ": " + e.what());
    }
}

std::vector<BitVector> bit_rows(const Json &doc, const char *key, size_t n) {
    const Json &v = field(doc, key);
    if (!v.is_array()) {
        throw InputError(std::string("field \"") + key + "\" must be an array of bitstrings");
    }
    std::vector<BitVector> rows;
    for (size_t i = 0; i < v.size(); i++) {
        rows.push_back(bits(v[i], n, std::string(key) + "[" + std::to_string(i) + "]"));
    }
    return rows;
}

Json row_strings(const BitMatrix &m) {
    Json out = Json::array();
    for (const auto &r : m.rows()) {
        out.push_back(r.str());
    }
    return out;
}

unsigned level_field(const Json &doc) {
    uint64_t level = unsigned_field(doc, "L");
    if (level < 1 || level > 24) {
        throw InputError("level L must be in [1, 24]");
    }
    return static_cast<unsigned>(level);
}

std::map<BitVector, uint64_t> exponent_table(const Json &v, size_t width, const std::string &what) {
    if (!v.is_object()) {
        throw InputError(what + " must be an object {bitstring: exponent}");
    }
    std::map<BitVector, uint64_t> out;
    for (const auto &[key, value] : v.items()) {
        if (!value.is_number_integer()) {
            throw InputError(what + " entry " + key + " must be an integer");
        }
        int64_t e = value.get<int64_t>();
        // Negative exponents are read mod 2^L by the callers.
        out[bits(Json(key), width, what + " key")] = static_cast<uint64_t>(e);
    }
    return out;
}

std::vector<std::string> string_list(const Json &doc, const char *key, bool required) {
    if (!doc.contains(key)) {
        if (required) {
            throw InputError(std::string("missing field \"") + key + "\"");
        }
        return {};
    }
    const Json &v = doc.at(key);
    if (!v.is_array()) {
        throw InputError(std::string("field \"") + key + "\" must be an array of strings");
    }
    std::vector<std::string> out;
    for (const auto &s : v) {
        if (!s.is_string()) {
            throw InputError(std::string("field \"") + key + "\" must be an array of strings");
        }
        out.push_back(s.get<std::string>());
    }
    return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path &path, const Json &doc) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write " + path.string());
    }
    out << doc.dump(2) << "\n";
}

CssCode code_from_json(const Json &doc) {
    size_t n = unsigned_field(doc, "n");
    if (n == 0) {
        throw InputError("n must be positive");
    }
    auto c1_rows = bit_rows(doc, "c1_rows", n);
    auto c2_rows = bit_rows(doc, "c2_rows", n);
    BitVector y = doc.contains("y") ? bits(doc.at("y"), n, "y") : BitVector(n);
    try {
        LinearCode c1(n, c1_rows);
        LinearCode c2 = c2_rows.empty() ? LinearCode::zero(n) : LinearCode(n, c2_rows);
        if (doc.contains("gx_rows")) {
            return CssCode(c1, c2, y, BitMatrix(n, bit_rows(doc, "gx_rows", n)));
        }
        return CssCode(c1, c2, y);
    } catch (const InputError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string("invalid code: ") + e.what());
    }
}

Json code_to_json(const CssCode &code) {
    return Json{{"n", code.n()},
                {"k", code.k()},
                {"c1_rows", row_strings(code.c1().gen())},
                {"c2_rows", row_strings(code.c2().gen())},
                {"y", code.y().str()},
                {"gx_rows", row_strings(code.gx())},
                {"gz_rows", row_strings(code.gz())}};
}

CssCode code_from_stabilizer_json(const Json &doc) {
    size_t n = unsigned_field(doc, "n");
    if (n == 0) {
        throw InputError("n must be positive");
    }
    auto x = bit_rows(doc, "x_rows", n);
    auto z = bit_rows(doc, "z_rows", n);
    if (x.size() != z.size()) {
        throw InputError("x_rows and z_rows must have the same length");
    }
    try {
        return css_from_tower(tower_from_standard_form(standard_form(BitMatrix(n, x), BitMatrix(n, z))));
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string("invalid stabilizer: ") + e.what());
    }
}

AnyGate gate_from_json(const Json &doc, size_t n) {
    const Json &kind = field(doc, "kind");
    if (kind == "symbolic") {
        auto angles = string_list(doc, "angles", true);
        if (angles.size() != n) {
            throw InputError("symbolic gate has " + std::to_string(angles.size()) + " angles for " +
                             std::to_string(n) + " qubits");
        }
        try {
            return SymbolicPhaseGate::parse(angles, string_list(doc, "constraints", false));
        } catch (const std::invalid_argument &e) {
            throw InputError(std::string("invalid symbolic gate: ") + e.what());
        }
    }
    return dyadic_gate_from_json(doc, n);
}

DyadicDiagonalGate dyadic_gate_from_json(const Json &doc, size_t n) {
    const Json &kind_value = field(doc, "kind");
    if (!kind_value.is_string()) {
        throw InputError("gate kind must be a string");
    }
    std::string kind = kind_value.get<std::string>();
    try {
        if (kind == "weight_rule") {
            unsigned level = level_field(doc);
            const Json &c = field(doc, "c");
            if (!c.is_number_integer()) {
                throw InputError("weight_rule c must be an integer");
            }
            return DyadicDiagonalGate::weight_rule(n, level, static_cast<uint64_t>(c.get<int64_t>()));
        }
        if (kind == "factors") {
            const Json &list = field(doc, "factors");
            if (!list.is_array()) {
                throw InputError("factors must be an array");
            }
            std::vector<LocalFactor> factors;
            for (const auto &f : list) {
                LocalFactor lf;
                lf.level = level_field(f);
                const Json &support = field(f, "support");
                if (!support.is_array() || support.empty()) {
                    throw InputError("factor support must be a non-empty array");
                }
                for (const auto &q : support) {
                    if (!q.is_number_integer() || q.get<int64_t>() < 1 || q.get<uint64_t>() > n) {
                        throw InputError("factor support entries must lie in 1.." + std::to_string(n));
                    }
                    lf.support.push_back(q.get<size_t>() - 1);
                }
                if (lf.support.size() > 20) {
                    throw InputError("factor support too large");
                }
                lf.table.assign(size_t{1} << lf.support.size(), 0);
                uint64_t mask = (uint64_t{1} << lf.level) - 1;
                for (const auto &[local, e] : exponent_table(field(f, "table"), lf.support.size(), "factor table")) {
                    lf.table[local.to_uint()] = e & mask;
                }
                factors.push_back(std::move(lf));
            }
            return DyadicDiagonalGate::from_factors(n, std::move(factors));
        }
        if (kind == "table") {
            unsigned level = level_field(doc);
            uint64_t mask = (uint64_t{1} << level) - 1;
            auto entries = exponent_table(field(doc, "entries"), n, "table entries");
            for (auto &[u, e] : entries) {
                e &= mask;
            }
            return DyadicDiagonalGate::table(n, level, std::move(entries));
        }
    } catch (const InputError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string("invalid gate: ") + e.what());
    }
    if (kind == "symbolic") {
        throw InputError("a symbolic gate is not allowed here");
    }
    throw InputError("unknown gate kind \"" + kind + "\"");
}

LogicalDiagonal logical_from_json(const Json &doc) {
    size_t k = unsigned_field(doc, "k");
    if (k > 20) {
        throw InputError("logical dimension above 20 is not supported");
    }
    unsigned level = level_field(doc);
    std::map<BitVector, uint64_t> table;
    if (doc.contains("table")) {
        uint64_t mask = (uint64_t{1} << level) - 1;
        for (auto [alpha, e] : exponent_table(doc.at("table"), k, "logical table")) {
            table[alpha] = e & mask;
        }
    }
    return LogicalDiagonal::from_table(k, level, table);
}

Json logical_to_json(const LogicalDiagonal &logical) {
    Json table = Json::object();
    for (const auto &[alpha, e] : logical.table()) {
        table[alpha.str()] = e;
    }
    return Json{{"k", logical.k}, {"L", logical.level}, {"table", table}};
}

Json cyclotomic_to_json(const Cyclotomic &value) {
    return Json{{"num", value.numerators()}, {"log2den", value.log2_denominator()}, {"L", value.level()}};
}

Json gc_matrix_to_json(const GeneratorCoefficientMatrix &matrix) {
    Json mu = Json::array();
    for (const auto &m : matrix.mu) {
        mu.push_back(m.str());
    }
    Json gamma = Json::array();
    for (const auto &g : matrix.gamma) {
        gamma.push_back(g.str());
    }
    Json rows = Json::array();
    for (const auto &r : matrix.entries) {
        Json row = Json::array();
        for (const auto &a : r) {
            row.push_back(cyclotomic_to_json(a));
        }
        rows.push_back(row);
    }
    return Json{{"mu", mu}, {"gamma", gamma}, {"entries", rows}};
}

Json constraints_to_json(const ConstraintSet &set) {
    Json list = Json::array();
    for (const auto &c : set.constraints) {
        list.push_back(Json{{"alpha", c.alpha.str()}, {"offset", c.offset.str()}, {"exponent", c.exponent}});
    }
    Json grouped = Json::array();
    for (const auto &[e, offsets] : set.by_exponent()) {
        Json offs = Json::array();
        for (const auto &o : offsets) {
            offs.push_back(o.str());
        }
        grouped.push_back(Json{{"exponent", e}, {"offsets", offs}});
    }
    return Json{{"L", set.level},
                {"subcode_rows", row_strings(set.c2.gen())},
                {"constraints", list},
                {"by_exponent", grouped},
                {"unconstrained", "entries outside C1 + y"}};
}

std::pair<size_t, std::vector<std::pair<size_t, size_t>>> family_from_json(const Json &doc) {
    size_t m = unsigned_field(doc, "m");
    std::vector<std::pair<size_t, size_t>> pairs;
    if (doc.contains("pairs")) {
        const Json &list = doc.at("pairs");
        if (!list.is_array()) {
            throw InputError("pairs must be an array of [i, j]");
        }
        for (const auto &p : list) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned()) {
                throw InputError("pairs must be an array of [i, j]");
            }
            pairs.emplace_back(p[0].get<size_t>(), p[1].get<size_t>());
        }
    }
    return {m, pairs};
}

std::string fnv1a_hex(const std::string &bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace cssdiag
