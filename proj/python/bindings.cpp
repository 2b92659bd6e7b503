#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fthresh/cli.hpp"
#include "fthresh/errors.hpp"
#include "fthresh/gallery.hpp"
#include "fthresh/io.hpp"

namespace py = pybind11;
using namespace fthresh;

namespace {

Monomial to_monomial(const std::vector<long>& e) {
    std::vector<BigInt> b(e.begin(), e.end());
    return Monomial(b);
}

std::vector<std::vector<long>> exponents(const MonomialIdeal& I) {
    std::vector<std::vector<long>> out;
    for (const auto& g : I.generators()) {
        std::vector<long> e;
        for (const auto& x : g.exponents()) e.push_back(x.get_si());
        out.push_back(e);
    }
    return out;
}

MonomialIdeal target_of(const Filtration& F, const std::string& target) { return parse_ideal(target, F.ambient()); }

}  // namespace

PYBIND11_MODULE(_fthresh, m) {
    m.doc() = "Frobenius thresholds of monomial filtrations";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<MonomialIdeal>(m, "Ideal")
        .def(py::init([](const std::string& text, std::size_t n) { return parse_ideal(text, n); }), py::arg("text"),
             py::arg("n") = 0)
        .def_property_readonly("ambient", &MonomialIdeal::ambient)
        .def_property_readonly("generators", &exponents)
        .def("contains", [](const MonomialIdeal& I, const std::vector<long>& e) { return I.contains(to_monomial(e)); })
        .def("power", &MonomialIdeal::power)
        .def("intersect", &MonomialIdeal::intersect)
        .def("__add__", &MonomialIdeal::operator+)
        .def("__mul__", &MonomialIdeal::operator*)
        .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
        .def("__str__", [](const MonomialIdeal& I) { return to_string(I); })
        .def("__repr__", [](const MonomialIdeal& I) { return "Ideal('" + to_string(I) + "')"; });

    py::class_<Filtration>(m, "Filtration")
        .def_static("ordinary", &Filtration::ordinary)
        .def_static("symbolic", &Filtration::symbolic)
        .def_static("integral_closure", &Filtration::integral_closure)
        .def_static("ceiling", [](const MonomialIdeal& I, const std::string& beta) {
            return Filtration::ceiling(I, parse_rational(beta));
        })
        .def_static("from_json", [](const std::string& s) { return filtration_from_json(json::parse(s)); })
        .def("to_json", [](const Filtration& F) { return filtration_to_json(F).dump(); })
        .def_property_readonly("ambient", &Filtration::ambient)
        .def_property_readonly("rule", [](const Filtration& F) { return rule_name(F.kind()); })
        .def("member", [](const Filtration& F, long r, const std::vector<long>& e) {
            return F.member(BigInt(r), to_monomial(e));
        })
        .def("generators", &Filtration::generators)
        .def("__repr__", &Filtration::describe);

    m.def(
        "_nu",
        [](const Filtration& F, const std::string& target, unsigned long p, unsigned e) {
            return nu_record_to_json(nu(F, target_of(F, target), p, e)).dump();
        },
        py::arg("filtration"), py::arg("target") = "m", py::arg("p") = 2, py::arg("e") = 1);
    m.def(
        "_nu_sequence",
        [](const Filtration& F, const std::string& target, unsigned long p, unsigned e_max, unsigned threads) {
            NuOptions o;
            o.threads = threads;
            py::gil_scoped_release release;
            auto seq = nu_sequence(F, target_of(F, target), p, e_max, o);
            json recs = json::array();
            for (const auto& r : seq.records) recs.push_back(nu_record_to_json(r));
            return json{{"records", recs}, {"doubling_ok", seq.doubling_ok}}.dump();
        },
        py::arg("filtration"), py::arg("target") = "m", py::arg("p") = 2, py::arg("e_max") = 4, py::arg("threads") = 1);
    m.def("_fthreshold_ordinary", [](const MonomialIdeal& I) { return threshold_to_json(fthreshold_ordinary(I)).dump(); });
    m.def("_fthreshold_symbolic",
          [](const MonomialIdeal& I) { return threshold_to_json(fthreshold_symbolic_squarefree(I)).dump(); });
    m.def("_fthreshold_bracket", [](const Filtration& F, unsigned long p, unsigned e_max) {
        return threshold_to_json(fthreshold_bracket(F, MonomialIdeal::maximal(F.ambient()), p, e_max)).dump();
    });
    m.def("_rees_valuations", [](const MonomialIdeal& I) {
        json a = json::array();
        for (const auto& rv : rees_valuations(I)) {
            auto j = valuation_to_json(rv.v);
            j["value"] = rv.value.get_str();
            a.push_back(j);
        }
        return a.dump();
    });
    m.def("_hypergraph_bounds", [](std::size_t n, const std::vector<VarSet>& edges) {
        return bounds_to_json(threshold_bounds_report(Hypergraph(n, edges))).dump();
    });
    m.def("verify_examples", [](const std::string& filter) {
        GalleryOptions o;
        o.filter = filter;
        std::vector<std::tuple<std::string, std::string, std::string, bool>> out;
        for (const auto& r : verify_examples(o)) out.emplace_back(r.name, r.expected, r.computed, r.pass);
        return out;
    }, py::arg("filter") = "");
    m.def("run_cli", [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = run_cli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), py::arg("stdin") = "");
}
