#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "albert/json_io.hpp"
#include "albert/random.hpp"
#include "albert/selftest.hpp"

namespace py = pybind11;
using namespace albert;

namespace {

std::string repr_octonion(const Octonion& o) {
    std::ostringstream os;
    os << "Octonion([";
    for (int i = 0; i < 8; ++i) os << (i ? ", " : "") << o.c[i];
    os << "], " << algebra_name(o.alg) << ")";
    return os.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Octonion and Jordan-algebra arithmetic with constructive "
              "diagonalization by explicit F4 generators.";
    m.attr("__version__") = "0.1.0";

    py::register_exception<Error>(m, "AlbertError");

    py::enum_<Algebra>(m, "Algebra")
        .value("compact", Algebra::compact)
        .value("split", Algebra::split);

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<double, double, double, double>(), py::arg("w") = 0.0,
             py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("z") = 0.0)
        .def_readwrite("w", &Quaternion::w)
        .def_readwrite("x", &Quaternion::x)
        .def_readwrite("y", &Quaternion::y)
        .def_readwrite("z", &Quaternion::z)
        .def("conj", &Quaternion::conj)
        .def("norm2", &Quaternion::norm2)
        .def(py::self * py::self)
        .def(py::self + py::self)
        .def(py::self - py::self);

    py::class_<Octonion>(m, "Octonion")
        .def(py::init<const std::array<double, 8>&, Algebra>(), py::arg("coeffs"),
             py::arg("algebra") = Algebra::compact)
        .def_readwrite("coeffs", &Octonion::c)
        .def_readwrite("algebra", &Octonion::alg)
        .def_static("basis", &Octonion::basis, py::arg("i"),
                    py::arg("algebra") = Algebra::compact)
        .def_static("real", &Octonion::real, py::arg("r"),
                    py::arg("algebra") = Algebra::compact)
        .def("conj", &Octonion::conj)
        .def("re", &Octonion::re)
        .def("im", &Octonion::im)
        .def("norm2", &Octonion::norm2)
        .def("coeff_norm", &Octonion::coeff_norm)
        .def("inverse", &Octonion::inverse, py::arg("tol") = 1e-10)
        .def(py::self * py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self == py::self)
        .def("__rmul__", [](const Octonion& o, double s) { return s * o; })
        .def("__repr__", &repr_octonion);

    py::class_<JordanElement>(m, "JordanElement")
        .def(py::init<const std::array<double, 3>&, const Octonion&, const Octonion&,
                      const Octonion&>(),
             py::arg("diag"), py::arg("x1"), py::arg("x2"), py::arg("x3"))
        .def_static("zero", &JordanElement::zero, py::arg("algebra") = Algebra::compact)
        .def_static("diagonal", &JordanElement::diagonal, py::arg("diag"),
                    py::arg("algebra") = Algebra::compact)
        .def_readwrite("diag", &JordanElement::diag)
        .def_readwrite("off", &JordanElement::off)
        .def_readwrite("algebra", &JordanElement::alg)
        .def(py::self == py::self)
        .def("__repr__", [](const JordanElement& x) { return to_json(x).dump(); });

    m.def("unit_E", &unit_E, py::arg("algebra") = Algebra::compact);
    m.def("trace", &trace);
    m.def("jordan_product", &jordan_product);
    m.def("inner_product", &inner_product);
    m.def("freudenthal_cross", &freudenthal_cross);
    m.def("sigma", &sigma);
    m.def("det", &det);
    m.def("frobenius_norm", &frobenius_norm);

    py::class_<DeltaA>(m, "DeltaA")
        .def(py::init<const Octonion&, double>(), py::arg("a"), py::arg("tol") = 1e-10)
        .def_property_readonly("a", &DeltaA::a);
    py::class_<RotO3>(m, "RotO3")
        .def(py::init<const std::array<double, 9>&, double>(), py::arg("t"),
             py::arg("tol") = 1e-10)
        .def_property_readonly("t", &RotO3::t);
    py::class_<SpThree>(m, "SpThree")
        .def(py::init<const std::array<Quaternion, 9>&, double>(), py::arg("a"),
             py::arg("tol") = 1e-10)
        .def_property_readonly("a", &SpThree::a);
    py::class_<GTwoAuto>(m, "GTwoAuto")
        .def(py::init<const std::array<double, 49>&, double>(), py::arg("l"),
             py::arg("tol") = 1e-10)
        .def_property_readonly("l", &GTwoAuto::l)
        .def("map", &GTwoAuto::map);

    py::class_<Generator>(m, "Generator")
        .def(py::init<DeltaA>())
        .def(py::init<RotO3>())
        .def(py::init<SpThree>())
        .def(py::init<GTwoAuto>())
        .def_property_readonly("kind",
                               [](const Generator& g) { return generator_kind(g); })
        .def_property_readonly(
            "payload",
            [](const Generator& g) {
                return std::visit([](const auto& v) { return py::cast(v); }, g.payload());
            })
        .def(py::self == py::self)
        .def("__repr__", [](const Generator& g) {
            return std::string("Generator(") + generator_kind(g) + ")";
        });
    py::implicitly_convertible<DeltaA, Generator>();
    py::implicitly_convertible<RotO3, Generator>();
    py::implicitly_convertible<SpThree, Generator>();
    py::implicitly_convertible<GTwoAuto, Generator>();

    m.def("apply", &apply, py::arg("generator"), py::arg("x"));
    m.def("apply_sequence", &apply_sequence, py::arg("generators"), py::arg("x"));
    m.def("is_identity", &is_identity);
    m.def("g2_map_to_e1", &g2_map_to_e1, py::arg("u"), py::arg("tol") = 1e-10);

    py::class_<MembershipReport>(m, "MembershipReport")
        .def_readonly("jordan_dev", &MembershipReport::jordan_dev)
        .def_readonly("cross_dev", &MembershipReport::cross_dev)
        .def_readonly("trials", &MembershipReport::trials);
    m.def("check_f4_membership", &check_f4_membership, py::arg("generator"),
          py::arg("trials"), py::arg("seed") = 20240901);

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("zero_tol", &Tolerances::zero_tol)
        .def_readwrite("residual_tol", &Tolerances::residual_tol)
        .def_readwrite("jacobi_tol", &Tolerances::jacobi_tol)
        .def_readwrite("max_sweeps", &Tolerances::max_sweeps);

    py::class_<InvariantDrift>(m, "InvariantDrift")
        .def_readonly("trace", &InvariantDrift::trace)
        .def_readonly("inner", &InvariantDrift::inner)
        .def_readonly("sigma", &InvariantDrift::sigma)
        .def_readonly("det", &InvariantDrift::det);

    py::class_<DiagonalizationTranscript>(m, "DiagonalizationTranscript")
        .def_readonly("input", &DiagonalizationTranscript::input)
        .def_readonly("steps", &DiagonalizationTranscript::steps)
        .def_readonly("diagonal", &DiagonalizationTranscript::diagonal)
        .def_readonly("off_diag_residual", &DiagonalizationTranscript::off_diag_residual)
        .def_readonly("invariant_drift", &DiagonalizationTranscript::invariant_drift)
        .def("to_json", [](const DiagonalizationTranscript& t) { return to_json(t).dump(2); });

    m.def("diagonalize", &diagonalize, py::arg("x"), py::arg("tol") = Tolerances{});

    py::enum_<Verdict>(m, "Verdict")
        .value("obstructed", Verdict::obstructed)
        .value("inconclusive", Verdict::inconclusive);
    py::class_<ObstructionVerdict>(m, "ObstructionVerdict")
        .def_readonly("inner_square", &ObstructionVerdict::inner_square)
        .def_readonly("verdict", &ObstructionVerdict::verdict);
    m.def("counterexample_X0", &counterexample_X0);
    m.def("diagonalizability_obstruction", &diagonalizability_obstruction, py::arg("x"),
          py::arg("certificate_tol") = 1e-9);

    m.def(
        "random_jordan",
        [](std::uint64_t seed, Algebra alg) {
            RandomSource rs(seed);
            return random_jordan(rs, alg);
        },
        py::arg("seed"), py::arg("algebra") = Algebra::compact);

    m.def("jordan_to_json", [](const JordanElement& x) { return to_json(x).dump(2); });
    m.def("jordan_from_json",
          [](const std::string& s) { return jordan_from_json(nlohmann::json::parse(s)); });
    m.def("transcript_to_json",
          [](const DiagonalizationTranscript& t) { return to_json(t).dump(2); });
    m.def("transcript_from_json", [](const std::string& s) {
        return transcript_from_json(nlohmann::json::parse(s));
    });

    m.def("run_selftest", &run_selftest, py::arg("seed") = 1);
    py::class_<SuiteResult>(m, "SuiteResult")
        .def_readonly("name", &SuiteResult::name)
        .def_readonly("max_deviation", &SuiteResult::max_deviation)
        .def_readonly("bound", &SuiteResult::bound)
        .def_readonly("pass_", &SuiteResult::pass);
    py::class_<SelftestReport>(m, "SelftestReport")
        .def_readonly("suites", &SelftestReport::suites)
        .def_readonly("pass_", &SelftestReport::pass);
}
