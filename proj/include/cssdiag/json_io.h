#ifndef CSSDIAG_JSON_IO_H
#define CSSDIAG_JSON_IO_H

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cssdiag/css_code.h"
#include "cssdiag/diagonal_gate.h"
#include "cssdiag/gencoeff.h"
#include "cssdiag/symbolic.h"

namespace cssdiag {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input document.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

Json read_json_file(const std::filesystem::path &path);
void write_json_file(const std::filesystem::path &path, const Json &doc);

/// {"n", "c1_rows", "c2_rows", "y"} with optional "gx_rows"; other keys are ignored.
CssCode code_from_json(const Json &doc);
/// Adds k, gx_rows and gz_rows to the input fields.
Json code_to_json(const CssCode &code);

/// {"n", "x_rows", "z_rows"}: generators as X-part and Z-part bitstrings. The code is the
/// tower from the standard form, with y = 0.
CssCode code_from_stabilizer_json(const Json &doc);

using AnyGate = std::variant<DyadicDiagonalGate, SymbolicPhaseGate>;

/// Gate documents keyed by "kind": weight_rule, factors (1-based supports), table, symbolic.
AnyGate gate_from_json(const Json &doc, size_t n);
DyadicDiagonalGate dyadic_gate_from_json(const Json &doc, size_t n);

/// {"k", "L", "table": {bitstring: exponent}}; missing entries are 0.
LogicalDiagonal logical_from_json(const Json &doc);
Json logical_to_json(const LogicalDiagonal &logical);

/// {"num": [ints], "log2den": int, "L": int}.
Json cyclotomic_to_json(const Cyclotomic &value);
Json gc_matrix_to_json(const GeneratorCoefficientMatrix &matrix);
Json constraints_to_json(const ConstraintSet &set);

/// {"m", "pairs": [[i, j], ...]} with 1-based indices.
std::pair<size_t, std::vector<std::pair<size_t, size_t>>> family_from_json(const Json &doc);

/// 64-bit FNV-1a of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string &bytes);

}  // namespace cssdiag

#endif
