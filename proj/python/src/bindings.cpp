#include "spinorqc/braid.hpp"
#include "spinorqc/checks.hpp"
#include "spinorqc/exprs.hpp"
#include "spinorqc/format.hpp"
#include "spinorqc/json_state.hpp"
#include "spinorqc/spinor.hpp"

#include <pybind11/pybind11.h>

#include <stdexcept>
#include <string>

namespace py = pybind11;

namespace {

using namespace spinorqc;

std::string eval_expression(const std::string& text, const std::string& mode) {
    const ExprPtr e = parse_expression(text);
    if (mode == "float") return value_text(eval_float(e));
    if (mode == "exact") return value_text(eval_exact(e));
    throw std::invalid_argument("mode must be 'exact' or 'float'");
}

Scalar scalar_of(const std::string& text) {
    const Value v = eval_exact(parse_expression(text));
    if (const auto* s = std::get_if<Scalar>(&v.v)) return *s;
    if (const auto* m = std::get_if<Multivector<Scalar>>(&v.v))
        if (*m == grade_project(*m, 0)) return m->scalar_part();
    throw std::invalid_argument("'" + text + "' is not a scalar");
}

std::string check(const std::string& suite, int samples, std::uint64_t seed,
                  const std::string& a, const std::string& b, const std::string& c, int theta) {
    SuiteOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.a = scalar_of(a);
    opt.b = scalar_of(b);
    opt.c = scalar_of(c);
    opt.theta_quarter_pi = theta;
    if (suite == "all") return run_all_suites(opt).dump(2);
    SuiteResult r;
    if (suite == "braid")
        r = run_braid_suite();
    else if (suite == "teleport")
        r = run_teleport_suite(opt.samples, opt.seed);
    else if (suite == "majorana")
        r = run_majorana_suite(opt.a, opt.b, opt.c, opt.theta_quarter_pi);
    else if (suite == "susy")
        r = run_susy_suite(opt.a, opt.b, opt.c);
    else if (suite == "cstar")
        r = run_cstar_suite(opt.samples, opt.seed);
    else if (suite == "delta")
        r = run_delta_suite();
    else
        throw std::invalid_argument("unknown suite '" + suite + "'");
    return r.report.dump(2);
}

std::string encode(const std::string& state_text) {
    const MultiQubitAmplitudes s = read_state_json(state_text);
    if (s.n == 1)
        return to_string(encode_qubit(
            QubitAmplitudes{s.amps[0].re, s.amps[0].im, s.amps[1].re, s.amps[1].im}));
    return to_string(encode_state(s));
}

std::string decode(const std::string& expr_text) {
    const Value v = eval_exact(parse_expression(expr_text));
    if (const auto* m = std::get_if<Multivector<Scalar>>(&v.v))
        return qubit_json(decode_qubit(*m));
    if (const auto* t = std::get_if<TensorMultivector<Scalar>>(&v.v))
        return state_json(decode_state(*t));
    throw std::invalid_argument("a bare coefficient is not a state");
}

std::string bell(const std::string& name) {
    for (Bell b : {Bell::phi_plus, Bell::phi_minus, Bell::psi_plus, Bell::psi_minus})
        if (name == bell_name(b)) return to_string(bell_state(b));
    throw std::invalid_argument("bell state must be one of Phi+, Phi-, Psi+, Psi-");
}

int braid_group_order() { return static_cast<int>(braid_group_closure().size()); }

bool teleport_exact(const std::string& a, const std::string& b) {
    return teleport_decompose(scalar_of(a), scalar_of(b)).exact;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Cl(1,3) spinor calculator";
    m.attr("__version__") = "0.1.0";
    m.def("eval_expression", &eval_expression, py::arg("text"), py::arg("mode") = "exact",
          "Evaluate an expression and return its canonical text.");
    m.def("check", &check, py::arg("suite") = "all", py::arg("samples") = 100,
          py::arg("seed") = 0, py::arg("a") = "1", py::arg("b") = "0", py::arg("c") = "0",
          py::arg("theta") = 1, "Run a verification suite and return its JSON report.");
    m.def("encode", &encode, py::arg("state_json"),
          "State JSON to canonical element text.");
    m.def("decode", &decode, py::arg("expression"),
          "Element expression to state JSON.");
    m.def("bell", &bell, py::arg("name"), "Canonical text of a Bell state.");
    m.def("braid_group_order", &braid_group_order,
          "Order of the group generated by the two braid gates.");
    m.def("teleport_exact", &teleport_exact, py::arg("a"), py::arg("b"),
          "Whether the teleportation decomposition is exact for the given input.");
}
