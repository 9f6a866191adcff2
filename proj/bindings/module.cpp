#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adsig/distance.hpp"
#include "adsig/gf.hpp"
#include "adsig/spectra.hpp"

namespace py = pybind11;
using namespace adsig;

namespace {

// Arbitrary-precision bridge: Python ints of any size round-trip through
// their decimal representation.
Int int_from_py(const py::handle& obj) {
    return Int(py::str(obj).cast<std::string>(), 10);
}

py::object py_from_int(const Int& z) {
    PyObject* raw = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (!raw) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(raw);
}

Rat rat_from_py(const py::handle& obj) {
    if (py::isinstance<py::int_>(obj)) return Rat(int_from_py(obj));
    if (py::isinstance<py::str>(obj)) return rat_from_string(obj.cast<std::string>());
    // Fraction-like objects expose numerator/denominator.
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator"))
        return make_rat(int_from_py(obj.attr("numerator")), int_from_py(obj.attr("denominator")));
    throw py::type_error("expected an int, a 'p/q' string, or a Fraction");
}

IntMatrix matrix_from_py(const py::sequence& rows) {
    const std::size_t r = rows.size();
    if (r == 0) return IntMatrix();
    py::sequence first = rows[0].cast<py::sequence>();
    const std::size_t c = first.size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        py::sequence row = rows[i].cast<py::sequence>();
        if (row.size() != c) throw py::value_error("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = int_from_py(row[j]);
    }
    return m;
}

py::list matrix_to_py(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(py_from_int(m(i, j)));
        rows.append(row);
    }
    return rows;
}

py::list poly_to_py(const IntPoly& p) {
    py::list out;
    for (const auto& coeff : p.coeffs()) out.append(py_from_int(coeff));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact distance-spectrum checks for affine resolvable designs";

    py::class_<DesignParams>(m, "DesignParams")
        .def_readonly("v", &DesignParams::v)
        .def_readonly("b", &DesignParams::b)
        .def_readonly("r", &DesignParams::r)
        .def_readonly("k", &DesignParams::k)
        .def_readonly("lam", &DesignParams::lambda)
        .def_readonly("n", &DesignParams::n)
        .def_readonly("mu", &DesignParams::mu)
        .def("__eq__", [](const DesignParams& a, const DesignParams& b) { return a == b; })
        .def("__repr__", [](const DesignParams& p) {
            return "DesignParams(v=" + std::to_string(p.v) + ", b=" + std::to_string(p.b) +
                   ", r=" + std::to_string(p.r) + ", k=" + std::to_string(p.k) +
                   ", lam=" + std::to_string(p.lambda) + ", n=" + std::to_string(p.n) +
                   ", mu=" + std::to_string(p.mu) + ")";
        });

    py::class_<Signature>(m, "Signature")
        .def_readonly("n_plus", &Signature::n_plus)
        .def_readonly("n_minus", &Signature::n_minus)
        .def_readonly("n_zero", &Signature::n_zero)
        .def("as_tuple",
             [](const Signature& s) { return py::make_tuple(s.n_plus, s.n_minus, s.n_zero); })
        .def("__eq__", [](const Signature& a, const Signature& b) { return a == b; })
        .def("__repr__", [](const Signature& s) {
            return "Signature(" + std::to_string(s.n_plus) + ", " + std::to_string(s.n_minus) +
                   ", " + std::to_string(s.n_zero) + ")";
        });

    py::class_<Design>(m, "Design")
        .def_readonly("v", &Design::v)
        .def_readonly("blocks", &Design::blocks)
        .def_readonly("parallel_classes", &Design::parallel_classes);

    py::class_<HadamardMatrix>(m, "HadamardMatrix")
        .def_readonly("order", &HadamardMatrix::order)
        .def("rows", [](const HadamardMatrix& h) {
            std::vector<std::vector<int>> rows(static_cast<std::size_t>(h.order));
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < rows.size(); ++j)
                    rows[i].push_back(h.entries(i, j));
            return rows;
        });

    m.def("build_affine_geometry", &build_affine_geometry, py::arg("m"), py::arg("p"),
          py::arg("k") = 1, "points and hyperplanes of AG(m, p^k)");
    m.def("build_hadamard_sylvester", &build_hadamard_sylvester, py::arg("t"));
    m.def("build_hadamard_paley", &build_hadamard_paley, py::arg("q"));
    m.def("hadamard_to_affine_design", &hadamard_to_affine_design, py::arg("h"));
    m.def("validate_affine", &validate_affine, py::arg("design"));
    m.def("design_to_json", &design_to_json, py::arg("design"));
    m.def("design_from_json", &design_from_json, py::arg("text"));

    m.def(
        "incidence_matrix",
        [](const Design& d) { return matrix_to_py(incidence_matrix(d)); }, py::arg("design"));
    m.def(
        "distance_matrix",
        [](const Design& d, const std::string& method) {
            const IntMatrix n = incidence_matrix(d);
            if (method == "bfs") return matrix_to_py(bfs_distances(n));
            if (method == "closed_form")
                return matrix_to_py(closed_form_distance_matrix(validate_affine(d), n));
            throw py::value_error("method must be 'bfs' or 'closed_form'");
        },
        py::arg("design"), py::arg("method") = "bfs");

    m.def(
        "det_exact", [](const py::sequence& rows) { return py_from_int(det_exact(matrix_from_py(rows))); },
        py::arg("matrix"), "exact determinant of an integer matrix");
    m.def(
        "char_poly",
        [](const py::sequence& rows) { return poly_to_py(char_poly(matrix_from_py(rows))); },
        py::arg("matrix"), "characteristic polynomial coefficients, ascending degree");
    m.def(
        "inertia", [](const py::sequence& rows) { return inertia(matrix_from_py(rows)); },
        py::arg("matrix"), "exact (n_plus, n_minus, n_zero) of a symmetric integer matrix");

    m.def(
        "structured_det",
        [](long r, long mm, const py::handle& alpha, const py::handle& beta,
           const py::handle& gamma) {
            StructuredParams p{r, mm, rat_from_py(alpha), rat_from_py(beta), rat_from_py(gamma)};
            return to_string(structured_det(p));
        },
        py::arg("r"), py::arg("m"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
        "closed-form determinant of the block-structured matrix, as a 'p/q' string");

    m.def("predicted_charpoly",
          [](long long n, long long mu) { return poly_to_py(predicted_charpoly(n, mu)); },
          py::arg("n"), py::arg("mu"));
    m.def("case_signature", &case_signature, py::arg("n"), py::arg("mu"));
    m.def("signature_from_factors", &signature_from_factors, py::arg("n"), py::arg("mu"));

    m.def(
        "verify_design_json",
        [](const Design& d) { return report_to_json(verify_design(d)); }, py::arg("design"),
        "full verification report as a JSON string");
    m.def(
        "sweep_json",
        [](long long n_max, long long mu_max) {
            return sweep_to_json(sweep_signatures(n_max, mu_max), n_max, mu_max);
        },
        py::arg("n_max"), py::arg("mu_max"));

    py::register_exception<DesignError>(m, "DesignError");
}
