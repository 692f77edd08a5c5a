#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scrolldiv/cohomology.hpp"
#include "scrolldiv/divisors.hpp"
#include "scrolldiv/errors.hpp"
#include "scrolldiv/intersect.hpp"
#include "scrolldiv/oracle.hpp"
#include "scrolldiv/transform.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<scrolldiv::Int> {
    PYBIND11_TYPE_CASTER(scrolldiv::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = scrolldiv::Int(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const scrolldiv::Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<scrolldiv::Rat> {
    PYBIND11_TYPE_CASTER(scrolldiv::Rat, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyLong_Check(src.ptr())) {
            value = scrolldiv::Rat(scrolldiv::Int(py::str(src).cast<std::string>()));
            return true;
        }
        if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
        scrolldiv::Int num(py::str(src.attr("numerator")).cast<std::string>());
        scrolldiv::Int den(py::str(src.attr("denominator")).cast<std::string>());
        value = scrolldiv::Rat(num, den);
        return true;
    }

    static handle cast(const scrolldiv::Rat& v, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        py::object num = py::reinterpret_steal<py::object>(
            PyLong_FromString(numerator(v).str().c_str(), nullptr, 10));
        py::object den = py::reinterpret_steal<py::object>(
            PyLong_FromString(denominator(v).str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

using namespace scrolldiv;

py::tuple to_tuple(const PicClass& c) { return py::make_tuple(c.a, c.b); }

py::tuple to_tuple(const SheafForm& s) { return py::make_tuple(s.a, s.b); }

PicClass pic_from(const std::pair<Int, Int>& p) { return {p.first, p.second}; }

SheafForm form_from(const Scroll& s, const std::pair<Int, Int>& p) {
    return {p.first, p.second, s.regime};
}

}  // namespace

PYBIND11_MODULE(scrolldiv, m) {
    m.doc() = "exact divisor calculus on rational normal scrolls";

    py::register_exception<DomainError>(m, "DomainError");

    py::enum_<Regime>(m, "Regime")
        .value("Smooth", Regime::Smooth)
        .value("HigherCodim", Regime::HigherCodim)
        .value("Cone", Regime::Cone);

    py::class_<Scroll>(m, "Scroll")
        .def_readonly("degrees", &Scroll::degrees)
        .def_readonly("f", &Scroll::f)
        .def_readonly("r", &Scroll::r)
        .def_readonly("n", &Scroll::n)
        .def_readonly("regime", &Scroll::regime)
        .def_readonly("vertex_dim", &Scroll::vertex_dim)
        .def("__repr__", [](const Scroll& s) {
            std::string out = "Scroll(";
            for (size_t i = 0; i < s.degrees.size(); ++i) {
                if (i) out += ",";
                out += s.degrees[i].str();
            }
            return out + ")";
        });

    m.def("classify", &classify, py::arg("degrees"));
    m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
    m.def("canonical_class",
          [](const Scroll& s) { return to_tuple(canonical_class(s)); });
    m.def("exceptional_class",
          [](const Scroll& s) { return to_tuple(exceptional_class(s)); });
    m.def("pic_intersect", [](const Scroll& s, const std::vector<std::pair<Int, Int>>& classes) {
        std::vector<PicClass> pics;
        for (const auto& p : classes) pics.push_back(pic_from(p));
        return pic_intersect(s, pics);
    });
    m.def("strict_image", [](const Scroll& s, const Int& a, const Int& b) -> py::object {
        WeilClass w = strict_image(s, {a, b});
        if (w.regime == Regime::Cone) return py::cast(w.d());
        return py::make_tuple(w.a, w.b);
    });

    m.def("integral_total_transform", [](const Scroll& s, const Int& d) {
        return to_tuple(integral_total_transform(s, d));
    });
    m.def("rational_total_transform", [](const Scroll& s, const Int& d) {
        auto [a, b] = rational_total_transform(s, d);
        return py::make_tuple(a, b);
    });
    m.def("epsilon", &epsilon);
    m.def("sum_defect", &sum_defect);
    m.def("pushforward_latitude", &pushforward_latitude);

    m.def("cohomology_tilde", &cohomology_tilde);
    m.def("cohomology_x", &cohomology_x);
    m.def("h0_closed", &h0_closed);
    m.def("chi_tilde", &chi_tilde);

    m.def("is_reflexive", &is_reflexive);
    m.def("sheaf_of_divisor", [](const Scroll& s, const Int& d) {
        return to_tuple(sheaf_of_divisor(s, WeilClass::ruling(d)));
    });
    m.def("normalize_sheaf", [](const Scroll& s, const Int& a, const Int& b) {
        return to_tuple(normalize_sheaf(s, a, b));
    });
    m.def("div_group_op",
          [](const Scroll& s, const std::pair<Int, Int>& s1, const std::pair<Int, Int>& s2) {
              return to_tuple(div_group_op(s, form_from(s, s1), form_from(s, s2)));
          });
    m.def("div_dual", [](const Scroll& s, const std::pair<Int, Int>& form) {
        return to_tuple(div_dual(s, form_from(s, form)));
    });
    m.def("is_cartier", [](const Scroll& s, const Int& d) -> py::object {
        std::optional<bool> v = is_cartier(s, WeilClass::ruling(d));
        return v ? py::cast(*v) : py::none();
    });
    m.def("is_cartier", [](const Scroll& s, const Int& a, const Int& b) -> py::object {
        std::optional<bool> v = is_cartier(s, WeilClass::pair(a, b));
        return v ? py::cast(*v) : py::none();
    });
    m.def("dim_linear_system", &dim_linear_system);
    m.def("dim_linear_system_closed", &dim_linear_system_closed);

    m.def("cone_ci_degree", &cone_ci_degree);
    m.def("vertex_multiplicity",
          [](const Scroll& s, const Int& d1, const Int& b1, const Int& d2, const Int& b2) {
              return vertex_multiplicity(s, {d1, b1}, {d2, b2});
          });
    m.def("mumford_intersection", &mumford_intersection);
    m.def("mumford_vertex_multiplicity", &mumford_vertex_multiplicity);
    m.def("genus_divisor", &genus_divisor);
    m.def("castelnuovo_genus_bound", &castelnuovo_genus_bound);
    m.def("intersection_resolution", [](const Scroll& s, const Int& d1, const Int& d2) {
        ResolutionTriple t = intersection_resolution(s, d1, d2);
        return py::make_tuple(to_tuple(t.left), to_tuple(t.mid1), to_tuple(t.mid2));
    });
    m.def("cone_ci_invariants", [](const Scroll& s, const Int& d1, const Int& d2) {
        ConeCiInvariants inv = cone_ci_invariants(s, d1, d2);
        py::dict out;
        out["degree"] = inv.degree;
        out["genus"] = inv.genus ? py::cast(*inv.genus) : py::none();
        out["chi0"] = inv.chi0;
        return out;
    });
    m.def("intersection_genus", &intersection_genus);
    m.def("ci_closed_form", [](const Scroll& s, const Int& d1, const Int& d2) {
        CiClosedForm c = ci_closed_form(s, d1, d2);
        return py::make_tuple(c.degree, c.genus);
    });
    m.def("is_acm_cone",
          [](const Scroll& s, const Int& d) { return is_acm_cone(s, d); });
    m.def("is_acm_cone", [](const Scroll& s, const Int& d1, const Int& d2) {
        return is_acm_cone(s, d1, d2);
    });
    m.def("acm_koszul", &acm_koszul);
    m.def("ci_degree_high_codim",
          [](const Scroll& s, const std::vector<std::pair<Int, Int>>& classes) {
              std::vector<WeilClass> weil;
              for (const auto& [a, b] : classes) weil.push_back(WeilClass::pair(a, b));
              return ci_degree_high_codim(s, weil);
          });

    m.def("naive_cohomology", &oracle::naive_cohomology);
    m.def("hilbert_samples", [](const Scroll& s, const Int& d1, const Int& d2) {
        py::list out;
        for (const auto& sample : oracle::hilbert_samples(s, d1, d2))
            out.append(py::make_tuple(sample.k, sample.chi));
        return out;
    });
    m.def("hilbert_degree_genus", [](const Scroll& s, const Int& d1, const Int& d2) {
        oracle::HilbertFit fit = oracle::hilbert_degree_genus(s, d1, d2);
        return py::make_tuple(fit.degree, fit.chi0);
    });
}
