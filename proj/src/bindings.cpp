#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apsum/analysis.hpp"
#include "apsum/bernoulli.hpp"
#include "apsum/power_sum.hpp"
#include "apsum/special_numbers.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// apsum::Int <-> python int, exchanged through base-10 strings.
template <>
struct type_caster<apsum::Int> {
    PYBIND11_TYPE_CASTER(apsum::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        const std::string text = py::str(src);
        return value.set_str(text, 10) == 0;
    }

    static handle cast(const apsum::Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str(10).c_str(), nullptr, 10);
    }
};

// apsum::Rat <-> fractions.Fraction (python ints are accepted on input).
template <>
struct type_caster<apsum::Rat> {
    PYBIND11_TYPE_CASTER(apsum::Rat, const_name("Fraction"));

    bool load(handle src, bool) {
        std::string text;
        if (PyLong_Check(src.ptr())) {
            text = py::str(src);
        } else if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
            text = std::string(py::str(src.attr("numerator"))) + "/" +
                   std::string(py::str(src.attr("denominator")));
        } else {
            return false;
        }
        if (value.set_str(text, 10) != 0 || value.get_den() == 0) return false;
        value.canonicalize();
        return true;
    }

    static handle cast(const apsum::Rat& v, return_value_policy, handle) {
        static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
        return fraction_type(v.get_str(10)).release().ptr();
    }
};

}  // namespace pybind11::detail

namespace {

using namespace apsum;

CoeffMethod method_from_string(const std::string& name) {
    if (name == "simple") return CoeffMethod::Simple;
    if (name == "whitney") return CoeffMethod::Whitney;
    if (name == "griffiths") return CoeffMethod::Griffiths;
    if (name == "bazso") return CoeffMethod::Bazso;
    if (name == "ramirez") return CoeffMethod::Ramirez;
    if (name == "bernoulli") return CoeffMethod::Bernoulli;
    throw std::invalid_argument("unknown method '" + name + "'");
}

BinomialForm form_from_string(const std::string& name) {
    if (name == "griffiths") return BinomialForm::Griffiths;
    if (name == "bazso") return BinomialForm::Bazso;
    if (name == "ramirez") return BinomialForm::Ramirez;
    throw std::invalid_argument("unknown binomial form '" + name + "'");
}

FormulaId formula_from_string(const std::string& name) {
    for (FormulaId id : {FormulaId::Simple6, FormulaId::Whitney7, FormulaId::Griffiths1,
                         FormulaId::Bazso2, FormulaId::Ramirez3, FormulaId::Bernoulli4})
        if (name == formula_name(id)) return id;
    throw std::invalid_argument("unknown formula id '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact power sums over arithmetic progressions";

    // exact_core
    mod.def("factorial", &apsum::factorial, py::arg("n"));
    mod.def("binomial", static_cast<Int (*)(const Int&, long)>(&apsum::binomial), py::arg("x"),
            py::arg("j"), "Falling-factorial binomial coefficient.");
    mod.def("binomial", static_cast<Rat (*)(const Rat&, long)>(&apsum::binomial), py::arg("x"),
            py::arg("j"), "Falling-factorial binomial coefficient of a rational x.");
    mod.def("pow_exact", static_cast<Rat (*)(const Rat&, long)>(&apsum::pow), py::arg("base"),
            py::arg("e"), "base**e with 0**0 == 1.");
    mod.def("rational_from_string", &apsum::rational_from_string, py::arg("text"));

    // special_numbers
    mod.def("stirling1", &apsum::stirling1, py::arg("k"), py::arg("j"),
            "Signed Stirling number of the first kind.");
    mod.def("stirling1_explicit", &apsum::stirling1_explicit, py::arg("k"), py::arg("j"));
    mod.def("stirling2", &apsum::stirling2, py::arg("k"), py::arg("j"),
            "Stirling number of the second kind.");
    mod.def("r_stirling2", &apsum::r_stirling2, py::arg("k"), py::arg("j"), py::arg("r"));
    mod.def("r_whitney", &apsum::r_whitney, py::arg("k"), py::arg("j"), py::arg("m"), py::arg("r"));
    mod.def("a_number", &apsum::a_number, py::arg("k"), py::arg("j"), py::arg("m"), py::arg("r"));

    // bernoulli
    mod.def("bernoulli_number", &apsum::bernoulli_number, py::arg("k"));
    mod.def("bernoulli_number_recurrence", &apsum::bernoulli_number_recurrence, py::arg("k"));
    mod.def("bernoulli_poly_eval", &apsum::bernoulli_poly_eval, py::arg("k"), py::arg("x"));
    mod.def("bernoulli_poly_coeffs_stirling", &apsum::bernoulli_poly_coeffs_stirling, py::arg("k"));
    mod.def("bernoulli_poly_coeffs_binomial", &apsum::bernoulli_poly_coeffs_binomial, py::arg("k"));

    // power_sum
    mod.def(
        "direct_sum",
        [](long k, long m, long r, long n) { return direct_sum(PowerSumSpec(k, m, r), n); },
        py::arg("k"), py::arg("m"), py::arg("r"), py::arg("n"),
        "Literal sum r^k + (m+r)^k + ... + ((n-1)m+r)^k.");
    mod.def(
        "coefficients",
        [](long k, long m, long r, const std::string& method) {
            return coefficients(PowerSumSpec(k, m, r), method_from_string(method)).coeffs();
        },
        py::arg("k"), py::arg("m"), py::arg("r"), py::arg("method") = "simple",
        "Coefficients c_1..c_{k+1} of the power-sum polynomial, ascending.");
    mod.def(
        "eval_power_sum",
        [](long k, long m, long r, long n, const std::string& method) {
            return coefficients(PowerSumSpec(k, m, r), method_from_string(method)).eval(Rat(n));
        },
        py::arg("k"), py::arg("m"), py::arg("r"), py::arg("n"), py::arg("method") = "simple");
    mod.def(
        "eval_binomial_form",
        [](long k, long m, long r, long n, const std::string& form) {
            return eval_binomial_form(PowerSumSpec(k, m, r), n, form_from_string(form));
        },
        py::arg("k"), py::arg("m"), py::arg("r"), py::arg("n"), py::arg("form") = "bazso");
    mod.def(
        "top_coefficient",
        [](long k, long m, long r, int depth) {
            return top_coefficient(PowerSumSpec(k, m, r), depth);
        },
        py::arg("k"), py::arg("m"), py::arg("r"), py::arg("depth"),
        "Closed form for c_{k+1-depth}, depth in 0..4.");

    // analysis
    py::class_<IdentityFailure>(mod, "IdentityFailure")
        .def_readonly("params", &IdentityFailure::params)
        .def_readonly("lhs", &IdentityFailure::lhs)
        .def_readonly("rhs", &IdentityFailure::rhs)
        .def("__repr__", [](const IdentityFailure& f) {
            return "IdentityFailure(" + f.params + ": " + f.lhs + " != " + f.rhs + ")";
        });
    py::class_<IdentityReport>(mod, "IdentityReport")
        .def_readonly("identity_id", &IdentityReport::identity_id)
        .def_readonly("parameter_grid", &IdentityReport::parameter_grid)
        .def_readonly("checked", &IdentityReport::checked)
        .def_readonly("failures", &IdentityReport::failures)
        .def("passed", &IdentityReport::passed)
        .def("__repr__", [](const IdentityReport& r) {
            return "IdentityReport(" + r.identity_id + ", checked=" + std::to_string(r.checked) +
                   ", failures=" + std::to_string(r.failures.size()) + ")";
        });
    py::class_<CostReport>(mod, "CostReport")
        .def_property_readonly("formula_id",
                               [](const CostReport& r) { return formula_name(r.formula_id); })
        .def_readonly("k", &CostReport::k)
        .def_readonly("t", &CostReport::t)
        .def_readonly("power_evals", &CostReport::power_evals)
        .def_readonly("total_terms", &CostReport::total_terms)
        .def("__repr__", [](const CostReport& r) {
            return std::string("CostReport(") + formula_name(r.formula_id) +
                   ", k=" + std::to_string(r.k) + ", t=" + std::to_string(r.t) +
                   ", power_evals=" + std::to_string(r.power_evals) +
                   ", total_terms=" + std::to_string(r.total_terms) + ")";
        });

    mod.def("identity_suite", &apsum::identity_suite, py::arg("max_k"), py::arg("m_set"),
            py::arg("r_set"), "Run every cross-check; failures are data on the reports.");
    mod.def(
        "cost_profile",
        [](const std::string& formula, long k, long t) {
            return cost_profile(formula_from_string(formula), k, t);
        },
        py::arg("formula"), py::arg("k"), py::arg("t"));
    mod.def("compare_costs", &apsum::compare_costs, py::arg("k"), py::arg("t"),
            "All six formulas profiled, cheapest first.");
}
