#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubicgit/errors.hpp"
#include "cubicgit/fiber.hpp"
#include "cubicgit/jacobian.hpp"
#include "cubicgit/selftest.hpp"
#include "cubicgit/stability.hpp"
#include "cubicgit/walls.hpp"

namespace py = pybind11;
using namespace cubicgit;

namespace pybind11::detail {

// mpq_class <-> fractions.Fraction (exact; floats are rejected)
template <>
struct type_caster<mpq_class> {
    PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

    bool load(handle src, bool) {
        if (py::isinstance<py::float_>(src)) return false;
        try {
            value = parse_rational(py::str(src).cast<std::string>());
            return true;
        } catch (...) {
            return false;
        }
    }

    static handle cast(const mpq_class& src, return_value_policy, handle) {
        auto fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(rational_str(src)).release();
    }
};

}  // namespace pybind11::detail

namespace {

FieldTag tag_of(std::uint32_t mod_p) {
    return mod_p ? FieldTag::Fp(mod_p) : FieldTag::Q();
}

py::dict verdict_dict(const StabilityVerdict& v) {
    py::dict d;
    d["status"] = status_name(v.status);
    if (v.status == TorusStatus::unstable) {
        d["destabilizer"] = v.destabilizer->weights;
    } else {
        d["hull_coefficients"] = v.hull_coefficients;
        d["points"] = v.points;
        d["target"] = v.target;
    }
    return d;
}

py::dict point_dict(const WeightedPoint& p) {
    py::dict d;
    d["c1"] = p.c1;
    d["c2"] = p.c2;
    d["c3"] = p.c3;
    d["torsion_ambiguous"] = p.torsion_ambiguous();
    return d;
}

}  // namespace

PYBIND11_MODULE(cubicgit, m) {
    m.doc() = "exact GIT stability, Jacobian rings and the weighted moduli fiber "
              "of (cubic, hyperplane) pairs";

    py::register_exception<Error>(m, "CubicgitError", PyExc_ValueError);

    py::class_<Polynomial>(m, "Polynomial")
        .def_property_readonly("n_vars", &Polynomial::n_vars)
        .def_property_readonly("degree", &Polynomial::degree)
        .def_property_readonly("term_count", &Polynomial::term_count)
        .def("is_zero", &Polynomial::is_zero)
        .def("derivative", &Polynomial::derivative, py::arg("var"))
        .def("reduce_mod_p", &Polynomial::reduce_mod_p, py::arg("p"))
        .def("__add__", &Polynomial::operator+)
        .def("__sub__", static_cast<Polynomial (Polynomial::*)(const Polynomial&) const>(
                            &Polynomial::operator-))
        .def("__neg__",
             static_cast<Polynomial (Polynomial::*)() const>(&Polynomial::operator-))
        .def("__mul__", &Polynomial::operator*)
        .def("__eq__", &Polynomial::operator==)
        .def("__str__", &Polynomial::str)
        .def("__repr__", [](const Polynomial& f) { return "Polynomial(" + f.str() + ")"; });

    m.def("parse_poly",
          [](const std::string& text, std::size_t n_vars, std::uint32_t mod) {
              return parse_poly(text, n_vars, tag_of(mod));
          },
          py::arg("text"), py::arg("n_vars") = 7, py::arg("mod") = 0);

    m.def("monomial_count",
          [](std::size_t n_vars, unsigned degree) {
              return monomial_basis(n_vars, degree).size();
          },
          py::arg("n_vars"), py::arg("degree"));

    m.def("mu",
          [](const Polynomial& f, const std::vector<long>& w) {
              return mu(f, OnePS::of(w));
          },
          py::arg("f"), py::arg("weights"));

    m.def("mu_pair",
          [](const Polynomial& y, const Polynomial& h, const Rational& t,
             const std::vector<long>& w) {
              return mu_pair(PairConfig(y, h, t), OnePS::of(w));
          },
          py::arg("Y"), py::arg("H"), py::arg("t"), py::arg("weights"));

    m.def("torus_stability",
          [](const Polynomial& y, const Polynomial& h, const Rational& t) {
              PairConfig pair(y, h, t);
              StabilityVerdict v = is_torus_semistable(pair);
              py::dict d = verdict_dict(v);
              d["verified"] = v.verify(pair);
              return d;
          },
          py::arg("Y"), py::arg("H"), py::arg("t"));

    m.def("limit_pair",
          [](const Polynomial& y, const Polynomial& h, const std::vector<long>& w) {
              PairConfig lim = limit_pair(PairConfig(y, h, Rational(0)), OnePS::of(w));
              return py::make_tuple(lim.Y, lim.H);
          },
          py::arg("Y"), py::arg("H"), py::arg("weights"));

    m.def("wall_scan",
          [](const Polynomial& y, const Polynomial& h, const Rational& lo,
             const Rational& hi, long box_bound) {
              WallScanOptions opts;
              opts.box_bound = box_bound;
              py::list out;
              for (const WallCrossing& w : wall_scan(y, h, lo, hi, opts)) {
                  py::dict d;
                  d["t"] = w.t;
                  d["left"] = status_name(w.left);
                  d["at"] = status_name(w.at);
                  d["right"] = status_name(w.right);
                  out.append(d);
              }
              return out;
          },
          py::arg("Y"), py::arg("H"), py::arg("lo"), py::arg("hi"),
          py::arg("box_bound") = 12);

    m.def("graded_dim", &graded_dim, py::arg("f"), py::arg("k"));

    m.def("is_smooth",
          [](const Polynomial& f) {
              SmoothnessResult s = is_smooth(f);
              py::dict d;
              d["smooth"] = s.smooth;
              d["witness_p"] = s.witness_p ? py::cast(*s.witness_p) : py::none();
              d["exact"] = s.exact;
              return d;
          },
          py::arg("f"));

    m.def("hodge_primitive", &hodge_primitive, py::arg("f"), py::arg("p"));
    m.def("intermediate_jacobian_dim", &intermediate_jacobian_dim, py::arg("f"));
    m.def("gorenstein_pairing_rank", &gorenstein_pairing_rank, py::arg("f"), py::arg("a"));

    m.def("classify_point",
          [](const Polynomial& f, const std::vector<Rational>& pt) {
              SingularityClass c = classify_point(f, pt);
              py::dict d;
              d["kind"] = c.name();
              d["hessian_rank"] =
                  (c.kind == PointClass::node || c.kind == PointClass::degenerate)
                      ? py::cast(c.hessian_rank)
                      : py::none();
              return d;
          },
          py::arg("f"), py::arg("point"));

    py::class_<ContainmentFamily>(m, "ContainmentFamily")
        .def(py::init<Polynomial>(), py::arg("f3"))
        .def_property_readonly("f3", &ContainmentFamily::f3)
        .def_property_readonly("w2_dimension",
                               [](const ContainmentFamily& f) { return f.w2_basis().size(); })
        .def("w2_monomials", [](const ContainmentFamily& f) {
            std::vector<std::string> out;
            for (const Monomial& m : f.w2_monomials())
                out.push_back(Polynomial::single(7, m, Scalar::rational(1)).str());
            return out;
        });

    m.def("normal_form",
          [](const ContainmentFamily& family, const Polynomial& y) {
              return point_dict(normal_form(family, y));
          },
          py::arg("family"), py::arg("Y"));

    m.def("group_act",
          [](const std::vector<Rational>& a, const Rational& t, const Polynomial& y) {
              return group_act(GroupElement{a, t}, y);
          },
          py::arg("a"), py::arg("t"), py::arg("Y"));

    m.def("fiber_equal",
          [](const ContainmentFamily& family, const Polynomial& y, const Polynomial& z) {
              return weighted_equal(normal_form(family, y), normal_form(family, z));
          },
          py::arg("family"), py::arg("Y"), py::arg("Z"));

    m.def("selftest",
          [](std::uint64_t seed) {
              py::list out;
              for (const auto& r : selftest::run_all({seed})) {
                  py::dict d;
                  d["id"] = r.id;
                  d["name"] = r.name;
                  d["pass"] = r.pass;
                  d["ms"] = r.ms;
                  d["detail"] = r.detail;
                  out.append(d);
              }
              return out;
          },
          py::arg("seed") = 20240101);
}
