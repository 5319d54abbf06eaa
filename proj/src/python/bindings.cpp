#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dhn/characters.hpp"
#include "dhn/lagrange.hpp"
#include "dhn/pic_symbol.hpp"
#include "dhn/polynomiality.hpp"
#include "dhn/series.hpp"
#include "dhn/verify.hpp"

namespace py = pybind11;
using namespace dhn;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::module_::import("builtins").attr("int")(r.num().get_str());
    py::object den = py::module_::import("builtins").attr("int")(r.den().get_str());
    return Fraction(num, den);
}

py::object to_int(const Integer& n) {
    return py::module_::import("builtins").attr("int")(n.get_str());
}

Partition as_partition(const std::vector<int>& parts) { return Partition(parts); }

HurwitzEngine& engine() {
    static HurwitzEngine instance;
    return instance;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact double Hurwitz numbers: partitions, characters, four computation "
              "routes, the bracket symbol, and verification suites";

    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<inconsistency_error>(m, "InconsistencyError", PyExc_RuntimeError);

    // combinatorics
    m.def("partitions_of", [](int d) {
        std::vector<std::vector<int>> out;
        for (const auto& p : partitions_of(d)) out.push_back(p.parts());
        return out;
    }, py::arg("d"), "All partitions of d in reverse-lexicographic order");
    m.def("aut_order",
          [](const std::vector<int>& p) { return to_int(aut_order(as_partition(p))); });
    m.def("conjugacy_class_size", [](const std::vector<int>& p) {
        return to_int(conjugacy_class_size(as_partition(p)));
    });
    m.def("conjugate",
          [](const std::vector<int>& p) { return as_partition(p).conjugate().parts(); });
    m.def("shifted_power_sum", [](const std::vector<int>& beta, int two_j) {
        return to_int(shifted_power_sum(as_partition(beta), two_j));
    });

    // characters
    m.def("character", [](const std::vector<int>& lam, const std::vector<int>& mu) {
        return to_int(engine().characters().character(as_partition(lam), as_partition(mu)));
    }, py::arg("lam"), py::arg("mu"), "Irreducible S_d character chi^lam_mu");
    m.def("eta", [](const std::vector<int>& lam) { return to_int(eta(as_partition(lam))); });

    // special series
    m.def("bernoulli", [](int two_j) { return to_fraction(bernoulli(two_j)); });
    m.def("xi_coeff", [](int two_j) { return to_fraction(xi_coeff(two_j)); });
    m.def("v_coeff", [](int two_j) { return to_fraction(v_coeff(two_j)); });
    m.def("f_coeff", [](int two_j) { return to_fraction(f_coeff(two_j)); });

    // Hurwitz numbers
    m.def("hurwitz", [](int g, const std::vector<int>& alpha, const std::vector<int>& beta,
                        const std::string& method) {
        Partition a = as_partition(alpha), b = as_partition(beta);
        HurwitzEngine& e = engine();
        if (method == "brute") return to_fraction(e.brute_force(g, a, b, true));
        if (method == "character" || method == "auto")
            return to_fraction(e.connected_single(g, a, b));
        throw precondition_error("method must be auto, brute or character");
    }, py::arg("g"), py::arg("alpha"), py::arg("beta"), py::arg("method") = "auto",
       "Connected double Hurwitz number H^g_{alpha,beta}");
    m.def("hurwitz_disconnected", [](const std::vector<int>& alpha,
                                     const std::vector<int>& beta, int r) {
        return to_fraction(engine().disconnected_character(as_partition(alpha),
                                                           as_partition(beta), r));
    });
    m.def("one_part", [](int g, const std::vector<int>& beta) {
        return to_fraction(engine().one_part(g, as_partition(beta)));
    });
    m.def("one_part_closed", [](int g, const std::vector<int>& beta) {
        return to_fraction(engine().one_part_closed(g, as_partition(beta)));
    });
    m.def("diagonal", [](int g, int d) { return to_fraction(engine().diagonal(g, d)); });
    m.def("two_two", [](int g, const std::vector<int>& alpha, const std::vector<int>& beta) {
        return to_fraction(engine().two_two(g, as_partition(alpha), as_partition(beta)));
    });
    m.def("genus0_mparts", [](const std::vector<int>& alpha, const std::vector<int>& beta) {
        return to_fraction(engine().genus0_mparts(as_partition(alpha), as_partition(beta)));
    });

    // the bracket symbol
    m.def("symbol_def", [](int g, int k, const std::vector<int>& b) {
        return to_fraction(symbol_def(PicIndex(g, k, b)));
    }, py::arg("g"), py::arg("k"), py::arg("b"));
    m.def("symbol_wittcor", [](int g, int k, const std::vector<int>& b) {
        return to_fraction(symbol_wittcor_or_zero(g, k, b));
    }, py::arg("g"), py::arg("k"), py::arg("b"));
    m.def("closed_form_symbol", [](const std::string& family, int g, int k,
                                   const std::vector<int>& b) {
        return to_fraction(closed_form_symbol(symbol_family_from_string(family), g, k, b));
    }, py::arg("family"), py::arg("g"), py::arg("k"), py::arg("b") = std::vector<int>{});

    // polynomiality
    m.def("ray_fit", [](int g, const std::vector<int>& alpha, const std::vector<int>& beta,
                        int t_max, const std::string& method) {
        DegreeBoundsReport rep = check_degree_bounds(
            engine(), g, as_partition(alpha), as_partition(beta), t_max,
            method_from_string(method));
        py::dict out;
        out["degree"] = rep.fit.degree;
        out["leading"] = to_fraction(rep.fit.leading);
        py::list coeffs;
        for (const auto& c : rep.fit.monomial_coefficients) coeffs.append(to_fraction(c));
        out["coefficients"] = coeffs;
        out["window"] = py::make_tuple(rep.window_lo, rep.window_hi);
        out["ok"] = rep.ok;
        return out;
    }, py::arg("g"), py::arg("alpha"), py::arg("beta"), py::arg("t_max"),
       py::arg("method") = "character");

    // verification
    m.def("verify_suite", [](const std::string& name) {
        HurwitzEngine& e = engine();
        std::vector<SuiteReport> reports;
        if (name == "all") {
            reports = verify_all(e);
        } else if (name == "cross-methods") {
            reports.push_back(verify_cross_methods(e));
        } else if (name == "one-part") {
            reports.push_back(verify_one_part_suite(e));
        } else if (name == "symbols") {
            reports.push_back(verify_symbols());
        } else if (name == "string-dilaton") {
            reports.push_back(verify_string_dilaton());
        } else if (name == "join-cut") {
            reports.push_back(verify_join_cut_criterion(e));
        } else if (name == "ansatz") {
            reports.push_back(verify_ansatz_criterion(e));
        } else if (name == "polynomiality") {
            reports.push_back(verify_polynomiality(e));
        } else {
            throw precondition_error("unknown suite '" + name + "'");
        }
        py::list out;
        for (const auto& rep : reports)
            for (const auto& check : rep.checks) {
                py::dict line;
                line["suite"] = rep.suite;
                line["name"] = check.name;
                line["pass"] = check.pass;
                line["detail"] = check.detail;
                out.append(line);
            }
        return out;
    }, py::arg("name"), "Run a verification suite; returns one dict per check");
}
