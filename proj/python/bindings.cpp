#include "dtq/cli.hpp"
#include "dtq/hall_engine.hpp"
#include "dtq/invariants.hpp"
#include "dtq/oracle.hpp"
#include "dtq/spec_io.hpp"
#include "dtq/wall_crossing.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace dtq;

namespace {

py::object fraction(const Rational& r)
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py::str(r.get_str()));
}

Rational rational(const py::handle& obj)
{
    if (py::isinstance<py::float_>(obj)) {
        throw py::type_error("floats are not accepted; pass an int, a Fraction or a \"p/q\" string");
    }
    return parse_rational(py::str(obj).cast<std::string>());
}

std::vector<Rational> rationals(const py::iterable& xs)
{
    std::vector<Rational> out;
    for (const auto& x : xs) {
        out.push_back(rational(x));
    }
    return out;
}

DimVector dimvec(const std::vector<int>& d) { return DimVector(d); }

py::tuple py_dimvec(const DimVector& d)
{
    py::tuple t(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        t[i] = d[i];
    }
    return t;
}

py::dict py_table(const std::map<DimVector, Rational>& values)
{
    py::dict out;
    for (const auto& [d, v] : values) {
        out[py_dimvec(d)] = fraction(v);
    }
    return out;
}

std::map<DimVector, Rational> table_values(const py::dict& table)
{
    std::map<DimVector, Rational> out;
    for (const auto& [k, v] : table) {
        out[DimVector(k.cast<std::vector<int>>())] = rational(v);
    }
    return out;
}

DTTable dt_table(const py::dict& table)
{
    DTTable t;
    t.values = table_values(table);
    return t;
}

PairMethod pair_method(const std::string& name)
{
    if (name == "auto") {
        return PairMethod::automatic;
    }
    if (name == "composition") {
        return PairMethod::composition;
    }
    if (name == "exponential") {
        return PairMethod::exponential;
    }
    throw py::value_error("method must be 'auto', 'composition' or 'exponential'");
}

py::dict py_demo(const DemoReport& r)
{
    py::list rows;
    for (const auto& row : r.rows) {
        py::dict d;
        d["class"] = py_dimvec(row.cls);
        d["quantity"] = row.quantity;
        d["expected"] = fraction(row.expected);
        d["computed"] = fraction(row.computed);
        d["pass"] = row.pass;
        rows.append(d);
    }
    py::dict out;
    out["name"] = r.name;
    out["rows"] = rows;
    out["notes"] = r.notes;
    out["pass"] = r.pass;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact Donaldson-Thomas invariants of quivers from finite-field Hall algebra counts";

    auto base = py::register_exception<Error>(m, "DtqError", PyExc_RuntimeError);
    py::register_exception<MissingEntry>(m, "MissingEntry", base.ptr());
    py::register_exception<SizeCapExceeded>(m, "SizeCapExceeded", base.ptr());
    py::register_exception<VertexMismatch>(m, "VertexMismatch", base.ptr());
    py::register_exception<PotentialUnsupported>(m, "PotentialUnsupported", base.ptr());
    py::register_exception<DegenerateIdentity>(m, "DegenerateIdentity", base.ptr());
    py::register_exception<SpecParseError>(m, "SpecParseError", base.ptr());
    py::register_exception<PoleOrderError>(m, "PoleOrderError", base.ptr());

    py::class_<Quiver>(m, "Quiver")
        .def(py::init([](std::vector<std::string> vertices,
                         const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
                 return Quiver::from_names(std::move(vertices), arrows);
             }),
             py::arg("vertices"), py::arg("arrows"))
        .def_static("point", &Quiver::point)
        .def_static("a2", &Quiver::a2)
        .def_static("kronecker", &Quiver::kronecker)
        .def_static("one_loop", &Quiver::one_loop)
        .def_static("conifold", &Quiver::conifold)
        .def_property_readonly("vertices", &Quiver::vertices)
        .def_property_readonly("arrows",
                               [](const Quiver& q) {
                                   std::vector<std::tuple<std::string, std::string, std::string>> out;
                                   for (const auto& a : q.arrows()) {
                                       out.emplace_back(q.vertices()[a.tail], q.vertices()[a.head], a.label);
                                   }
                                   return out;
                               })
        .def("euler_form",
             [](const Quiver& q, const std::vector<int>& d, const std::vector<int>& e) {
                 return euler_form_nonsym(q, dimvec(d), dimvec(e));
             })
        .def("euler_form_antisym", [](const Quiver& q, const std::vector<int>& d, const std::vector<int>& e) {
            return euler_form_antisym(q, dimvec(d), dimvec(e));
        });

    py::class_<Stability>(m, "Stability")
        .def(py::init([](const py::iterable& c, const py::object& r) {
                 auto cs = rationals(c);
                 if (r.is_none()) {
                     return Stability(cs, std::vector<Rational>(cs.size(), Rational(1)));
                 }
                 return Stability(std::move(cs), rationals(r));
             }),
             py::arg("c"), py::arg("r") = py::none())
        .def_static("trivial", &Stability::trivial)
        .def_property_readonly("c", [](const Stability& s) {
            py::list out;
            for (const auto& x : s.c()) {
                out.append(fraction(x));
            }
            return out;
        })
        .def_property_readonly("r", [](const Stability& s) {
            py::list out;
            for (const auto& x : s.r()) {
                out.append(fraction(x));
            }
            return out;
        })
        .def("slope", [](const Stability& s, const std::vector<int>& d) { return fraction(s.slope(dimvec(d))); });

    py::class_<QuiverSpec>(m, "QuiverSpec")
        .def_readonly("quiver", &QuiverSpec::quiver)
        .def_property_readonly("has_potential", [](const QuiverSpec& s) { return !s.potential.is_zero(); })
        .def_property_readonly("stability_names",
                               [](const QuiverSpec& s) {
                                   std::vector<std::string> names;
                                   for (const auto& [name, st] : s.stabilities) {
                                       names.push_back(name);
                                   }
                                   return names;
                               })
        .def("stability", &QuiverSpec::stability)
        .def("dumps", [](const QuiverSpec& s) { return dump_quiver_spec(s); });

    m.def("load_quiver", &load_quiver_spec, py::arg("path"));
    m.def("parse_quiver", [](const std::string& text) { return parse_quiver_spec(text); }, py::arg("text"));

    m.def(
        "is_generic",
        [](const Quiver& q, const Stability& s, const std::vector<int>& box) {
            return is_generic(q, s, dimvec(box)).generic;
        },
        py::arg("quiver"), py::arg("stability"), py::arg("box"));
    m.def(
        "semistable_count_at",
        [](const Quiver& q, const Stability& s, const std::vector<int>& d, const py::object& qv) {
            return fraction(eval_at_q(hn_semistable_count(q, s, dimvec(d)), rational(qv)));
        },
        py::arg("quiver"), py::arg("stability"), py::arg("d"), py::arg("q"));
    m.def(
        "epsilon_hat",
        [](const Quiver& q, const Stability& s, const std::vector<int>& d) {
            return epsilon_hat(q, s, dimvec(d)).to_string();
        },
        py::arg("quiver"), py::arg("stability"), py::arg("d"));
    m.def(
        "dtbar",
        [](const Quiver& q, const Stability& s, const std::vector<int>& d) {
            return fraction(dtbar(q, s, dimvec(d)));
        },
        py::arg("quiver"), py::arg("stability"), py::arg("d"));
    m.def(
        "dtbar_table",
        [](const Quiver& q, const Stability& s, const std::vector<int>& box) {
            return py_table(dtbar_table(q, s, dimvec(box)).values);
        },
        py::arg("quiver"), py::arg("stability"), py::arg("box"));
    m.def(
        "bps_from_dtbar", [](const py::dict& t) { return py_table(bps_from_dtbar(dt_table(t)).values); },
        py::arg("table"));
    m.def(
        "dtbar_from_bps",
        [](const py::dict& t) {
            BPSTable b;
            b.values = table_values(t);
            return py_table(dtbar_from_bps(b).values);
        },
        py::arg("table"));
    m.def(
        "transform_table",
        [](const Quiver& q, const py::dict& t, const Stability& tau, const Stability& tautilde,
           const std::vector<int>& box) {
            return py_table(transform_table(q, dt_table(t), tau, tautilde, dimvec(box)).values);
        },
        py::arg("quiver"), py::arg("table"), py::arg("tau"), py::arg("tautilde"), py::arg("box"));
    m.def(
        "pair_from_dtbar",
        [](const py::dict& t, const Quiver& q, const std::vector<int>& framing, const Stability& s,
           const std::vector<int>& box, const std::string& method) {
            return py_table(
                pair_from_dtbar(dt_table(t), q, Framing(dimvec(framing)), s, dimvec(box), pair_method(method)).values);
        },
        py::arg("table"), py::arg("quiver"), py::arg("framing"), py::arg("stability"), py::arg("box"),
        py::arg("method") = "auto");
    m.def(
        "dtbar_from_pair",
        [](const py::dict& t, const Quiver& q, const std::vector<int>& framing, const Stability& s,
           const std::vector<int>& box) {
            PairTable p;
            p.values = table_values(t);
            p.framing = dimvec(framing);
            const auto inv = dtbar_from_pair(p, q, Framing(dimvec(framing)), s, dimvec(box));
            py::list undetermined;
            for (const auto& d : inv.undetermined) {
                undetermined.append(py_dimvec(d));
            }
            return py::make_tuple(py_table(inv.table.values), undetermined);
        },
        py::arg("table"), py::arg("quiver"), py::arg("framing"), py::arg("stability"), py::arg("box"));

    m.def(
        "demo_grassmannian", [](long P, int max_m) { return py_demo(demo_grassmannian(P, max_m)); }, py::arg("P"),
        py::arg("max_m") = 6);
    m.def(
        "demo_hilbert_points", [](long chi, int max_d) { return py_demo(demo_hilbert_points(chi, max_d)); },
        py::arg("chi"), py::arg("max_d") = 8);
    m.def(
        "demo_conifold", [](const std::vector<int>& box) { return py_demo(demo_conifold(dimvec(box))); },
        py::arg("box") = std::vector<int>{5, 5});

    m.def(
        "stacky_count_oracle",
        [](const Quiver& q, const std::vector<int>& d, int p) { return fraction(stacky_count_oracle(q, dimvec(d), p)); },
        py::arg("quiver"), py::arg("d"), py::arg("p"));
    m.def(
        "semistable_count_oracle",
        [](const Quiver& q, const Stability& s, const std::vector<int>& d, int p) {
            return fraction(semistable_count_oracle(q, s, dimvec(d), p));
        },
        py::arg("quiver"), py::arg("stability"), py::arg("d"), py::arg("p"));
    m.def(
        "hall_twist_oracle",
        [](const Quiver& q, const std::vector<int>& d1, const std::vector<int>& d3, int p) {
            return fraction(hall_twist_oracle(q, dimvec(d1), dimvec(d3), p));
        },
        py::arg("quiver"), py::arg("d1"), py::arg("d3"), py::arg("p"));
    m.def(
        "framed_stable_count_oracle",
        [](const Quiver& q, const Stability& s, const std::vector<int>& d, const std::vector<int>& e, int p) {
            return py::int_(py::str(framed_stable_count_oracle(q, s, dimvec(d), dimvec(e), p).get_str()));
        },
        py::arg("quiver"), py::arg("stability"), py::arg("d"), py::arg("e"), py::arg("p"));
    m.def(
        "ndt_direct",
        [](const Quiver& q, const Stability& s, const std::vector<int>& d, const std::vector<int>& e) {
            return fraction(ndt_direct(q, s, dimvec(d), dimvec(e)));
        },
        py::arg("quiver"), py::arg("stability"), py::arg("d"), py::arg("e"));
    m.def(
        "gaussian_binomial",
        [](long n, long k, long q) { return py::int_(py::str(gaussian_binomial(n, k, q).get_str())); }, py::arg("n"),
        py::arg("k"), py::arg("q"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
