#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cssdiag/cli.h"
#include "cssdiag/json_io.h"
#include "cssdiag/oracle.h"
#include "cssdiag/qforms.h"

namespace py = pybind11;
using namespace cssdiag;

namespace {

// Documents cross the boundary as JSON text; the Python wrapper converts to and from dicts.

CssCode code_of(const std::string &doc) {
    Json j = Json::parse(doc);
    if (j.contains("x_rows")) {
        return code_from_stabilizer_json(j);
    }
    return code_from_json(j);
}

std::string check(const std::string &code_doc, const std::string &gate_doc) {
    CssCode code = code_of(code_doc);
    AnyGate any = gate_from_json(Json::parse(gate_doc), code.n());
    if (const auto *sym = std::get_if<SymbolicPhaseGate>(&any)) {
        return Json{{"logical_identity", is_logical_identity(code, *sym)}}.dump();
    }
    const auto &gate = std::get<DyadicDiagonalGate>(any);
    bool ok = preserves(code, gate);
    Json out{{"preserves", ok}, {"logical", nullptr}};
    if (ok) {
        out["logical"] = logical_to_json(induced_logical(code, gate).normalized());
    }
    return out.dump();
}

std::string verify(const std::string &code_doc, const std::string &gate_doc, const std::string &claimed_doc) {
    CssCode code = code_of(code_doc);
    DyadicDiagonalGate gate = dyadic_gate_from_json(Json::parse(gate_doc), code.n());
    LogicalDiagonal claimed = claimed_doc.empty() ? induced_logical(code, gate)
                                                  : logical_from_json(Json::parse(claimed_doc));
    OracleReport r = verify_logical_action(code, gate, claimed);
    return Json{{"passed", r.passed},
                {"max_residual", r.max_residual},
                {"states_checked", r.states_checked},
                {"amplitudes_checked", r.amplitudes_checked},
                {"brute_force_preserves", brute_force_preserves(code, gate)}}
        .dump();
}

std::string target(const std::string &code_doc, const std::string &target_doc) {
    CssCode code = code_of(code_doc);
    return constraints_to_json(physical_constraints_for_target(code, logical_from_json(Json::parse(target_doc))))
        .dump();
}

std::string weights(const std::string &code_doc, const std::string &of, const std::string &shift) {
    CssCode code = code_of(code_doc);
    const LinearCode &c = of == "c2" ? code.c2() : code.c1();
    BitVector s = shift.empty() ? BitVector(code.n()) : BitVector::from_string(shift);
    Json out = Json::object();
    for (auto [w, count] : weight_distribution(c, s)) {
        out[std::to_string(w)] = count;
    }
    return out.dump();
}

std::string generator_coefficient(const std::string &code_doc, const std::string &gate_doc, const std::string &mu,
                                  const std::string &gamma) {
    CssCode code = code_of(code_doc);
    DyadicDiagonalGate gate = dyadic_gate_from_json(Json::parse(gate_doc), code.n());
    Cyclotomic a = generator_coeff(code, gate, BitVector::from_string(mu), BitVector::from_string(gamma));
    Json out = cyclotomic_to_json(a);
    out["str"] = a.str();
    out["real"] = a.to_complex().real();
    out["imag"] = a.to_complex().imag();
    return out.dump();
}

std::string family(size_t m, const std::vector<std::pair<size_t, size_t>> &pairs) {
    return code_to_json(build_family(m, pairs)).dump();
}

py::tuple cli(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Diagonal gates on CSS codes (compiled core)";
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    m.def("check", &check, py::arg("code"), py::arg("gate"));
    m.def("verify", &verify, py::arg("code"), py::arg("gate"), py::arg("claimed") = "");
    m.def("target", &target, py::arg("code"), py::arg("target"));
    m.def("weights", &weights, py::arg("code"), py::arg("of") = "c1", py::arg("shift") = "");
    m.def("generator_coefficient", &generator_coefficient, py::arg("code"), py::arg("gate"), py::arg("mu"),
          py::arg("gamma"));
    m.def("build_family", &family, py::arg("m"), py::arg("pairs"));
    m.def("family_pairs", &family_pairs, py::arg("m"));
    m.def("lemma3_phase", &lemma3_phase, py::arg("k"));
    m.def("run_cli", &cli, py::arg("args"));
}
