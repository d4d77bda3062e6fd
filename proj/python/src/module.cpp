// Python bindings. Rationals cross the boundary as fractions.Fraction;
// anything whose str() parses as "p/q" is accepted on the way in.

#include "eqbilliards/billiard.hpp"
#include "eqbilliards/cli.hpp"
#include "eqbilliards/counting.hpp"
#include "eqbilliards/orbits.hpp"
#include "eqbilliards/render.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace eqbilliards;

namespace {

py::object big_int(const BigInt& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(big_int(r.numerator()), big_int(r.denominator()));
}

Rational rational(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

py::tuple point(const RhombicPoint& p) { return py::make_tuple(fraction(p.x), fraction(p.y)); }
py::tuple vec(const RhombicVector& v) { return py::make_tuple(fraction(v.dx), fraction(v.dy)); }

py::dict angle(const ExactAngle& a) {
    py::dict d;
    d["tan_sq"] = a.is_right() ? py::object(py::none()) : fraction(a.tan_squared());
    d["degrees"] = a.degrees();
    return d;
}

py::list angles(const std::vector<ExactAngle>& as) {
    py::list out;
    for (const auto& a : as) out.append(angle(a));
    return out;
}

py::dict path_dict(const BouncePath& p) {
    py::list bounces;
    for (const auto& b : p.bounces) {
        py::dict d;
        d["point"] = point(b.point);
        d["side"] = b.side;
        d["incidence"] = angle(b.incidence);
        d["dir_after"] = vec(b.dir_after);
        bounces.append(d);
    }
    py::dict d;
    d["offset"] = fraction(p.offset);
    d["start"] = py::make_tuple(point(p.start.pos), vec(p.start.dir));
    d["bounces"] = bounces;
    d["closed"] = p.closed;
    d["first_return"] = p.first_return ? py::object(py::int_(*p.first_return)) : py::object(py::none());
    return d;
}

TriangleConfig config(const OrbitClass& c, const py::object& b) {
    return TriangleConfig(b.is_none() ? default_offset(c) : rational(b), MidpointPolicy::Allow);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Periodic billiard orbits in the equilateral triangle";

    py::register_exception<VertexHit>(m, "VertexHit", PyExc_RuntimeError);
    py::register_exception<CollinearityViolation>(m, "CollinearityViolation", PyExc_RuntimeError);
    py::register_exception<NotOnBoundary>(m, "NotOnBoundary", PyExc_ValueError);
    py::register_exception<InvalidClass>(m, "InvalidClass", PyExc_ValueError);

    py::class_<OrbitClass>(m, "OrbitClass")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("x"), py::arg("y"))
        .def_property_readonly("x", &OrbitClass::x)
        .def_property_readonly("y", &OrbitClass::y)
        .def_property_readonly("period", [](const OrbitClass& c) { return period(c); })
        .def_property_readonly("length_sq", [](const OrbitClass& c) { return fraction(length_squared(c)); })
        .def_property_readonly("length", [](const OrbitClass& c) { return length(c); })
        .def_property_readonly("primitive", [](const OrbitClass& c) { return is_primitive(c); })
        .def("iterate", [](const OrbitClass& c) {
            const auto d = iterate_decomposition(c);
            return py::make_tuple(d.d, d.base);
        })
        .def("angles", [](const OrbitClass& c) {
            const auto p = angle_profile(c);
            py::dict d;
            d["kind"] = std::string(to_string(p.kind));
            d["theta"] = angle(p.theta);
            d["distinct"] = angles(p.distinct());
            return d;
        })
        .def("singular_offsets", [](const OrbitClass& c) {
            py::list out;
            for (const auto& b : singular_offsets(c)) out.append(fraction(b));
            return out;
        })
        .def_property_readonly("default_offset", [](const OrbitClass& c) { return fraction(default_offset(c)); })
        .def(py::self == py::self)
        .def("__hash__", [](const OrbitClass& c) { return py::hash(py::make_tuple(c.x(), c.y())); })
        .def("__repr__", [](const OrbitClass& c) { return "OrbitClass" + c.str(); });

    m.def("count_classes", &count_classes, py::arg("n"));
    m.def("count_primitive", &count_primitive, py::arg("n"));
    m.def("enumerate_classes", &enumerate_classes, py::arg("n"));
    m.def("example_primitive", &example_primitive, py::arg("n"));
    m.def("table", [](std::int64_t max_n) {
        py::list out;
        for (const auto& r : table(max_n)) out.append(py::make_tuple(r.n, r.period, r.o, r.p));
        return out;
    }, py::arg("max_n") = 60);
    m.def("classify_odd_period", [](std::int64_t p) -> std::optional<std::int64_t> {
        const auto o = classify_odd_period(p);
        if (!o) return std::nullopt;
        return o->k;
    }, py::arg("p"), "k with period 6k - 3 for the Fagnano iterate, or None.");

    m.def("simulate", [](const OrbitClass& c, const py::object& b, std::optional<std::size_t> bounces) {
        const auto n = bounces.value_or(static_cast<std::size_t>(period(c)));
        return path_dict(simulate(config(c, b), class_start(c), {.max_bounces = n, .stop_on_return = false}));
    }, py::arg("orbit"), py::arg("b") = py::none(), py::arg("bounces") = py::none(),
          "Traces the class from O; one full period by default.");
    m.def("fold", [](const OrbitClass& c, const py::object& b) { return path_dict(fold_segment(config(c, b), c)); },
          py::arg("orbit"), py::arg("b") = py::none());
    m.def("fagnano", [](std::int64_t k) { return path_dict(simulate_fagnano(k)); }, py::arg("k") = 1);

    m.def("verify", [](const OrbitClass& c, const py::object& b) {
        VerifyOptions opts;
        if (!b.is_none()) opts.offset = rational(b);
        const auto r = verify_class(c, opts);
        py::list checks;
        for (const auto& ch : r.checks) checks.append(py::make_tuple(ch.name, ch.passed, ch.detail));
        py::dict d;
        d["passed"] = r.passed();
        d["offset"] = fraction(r.offset);
        d["period"] = r.expected_period;
        d["iterate_d"] = r.iterate_d;
        d["labels"] = r.labels;
        d["angles"] = angles(r.angles);
        d["checks"] = checks;
        return d;
    }, py::arg("orbit"), py::arg("b") = py::none());

    m.def("render_folded", [](const OrbitClass& c) { return render_folded(c).serialize(); }, py::arg("orbit"));
    m.def("render_unfolded", [](const OrbitClass& c) { return render_unfolded(c).serialize(); }, py::arg("orbit"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command line in process; returns (code, stdout, stderr).");
}
