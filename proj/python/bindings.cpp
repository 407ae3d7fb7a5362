#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "commands.hpp"
#include "superholonomy/errors.hpp"
#include "superholonomy/graded_phase.hpp"
#include "superholonomy/json_io.hpp"
#include "superholonomy/moduli.hpp"
#include "superholonomy/osp_group.hpp"
#include "superholonomy/sectors.hpp"
#include "superholonomy/superlie.hpp"

namespace py = pybind11;
using namespace superholonomy;

namespace {

std::vector<int> monomial_indices(Monomial m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (m & (1u << i)) out.push_back(i + 1);
  return out;
}

Monomial monomial_from(const std::vector<int>& idx) {
  Monomial m = 0;
  for (int i : idx) m |= 1u << (i - 1);
  return m;
}

std::string dump(const Json& j) { return j.dump(); }

std::vector<std::vector<GrassmannElement>> rows(const GMatrix& g) {
  std::vector<std::vector<GrassmannElement>> out(g.rows());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) out[i].push_back(g(i, j));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Grassmann supermatrices, OSp(m|2n) holonomies and graded phase-space checks";

  py::register_exception<Error>(mod, "Error", PyExc_RuntimeError);
  py::register_exception<DimensionError>(mod, "DimensionError", PyExc_ValueError);
  py::register_exception<ParityError>(mod, "ParityError", PyExc_ValueError);
  py::register_exception<NotInvertibleError>(mod, "NotInvertibleError", PyExc_ArithmeticError);
  py::register_exception<SingularAhatError>(mod, "SingularAhatError", PyExc_ArithmeticError);
  py::register_exception<HypothesisError>(mod, "HypothesisError", PyExc_ValueError);

  py::enum_<Parity>(mod, "Parity").value("Even", Parity::Even).value("Odd", Parity::Odd);

  py::class_<GrassmannElement>(mod, "GrassmannElement")
      .def(py::init<int>(), py::arg("generators"))
      .def(py::init<int, double>(), py::arg("generators"), py::arg("scalar"))
      .def_static("generator", &GrassmannElement::generator, py::arg("generators"), py::arg("index"))
      .def_static(
          "monomial",
          [](int n, const std::vector<int>& idx, double c) {
            GrassmannElement out(n, 1.0);
            for (int i : idx) out = out * GrassmannElement::generator(n, i);
            return out * c;
          },
          py::arg("generators"), py::arg("indices"), py::arg("coeff") = 1.0)
      .def_property_readonly("generators", &GrassmannElement::generators)
      .def("body", &GrassmannElement::body)
      .def("soul", &GrassmannElement::soul)
      .def("coeff", [](const GrassmannElement& x, const std::vector<int>& idx) {
        return x.coeff(monomial_from(idx));
      })
      .def("terms",
           [](const GrassmannElement& x) {
             std::vector<std::pair<std::vector<int>, double>> out;
             for (const auto& [m, c] : x.terms()) out.emplace_back(monomial_indices(m), c);
             return out;
           })
      .def("is_even", &GrassmannElement::is_even)
      .def("is_odd", &GrassmannElement::is_odd)
      .def("is_zero", &GrassmannElement::is_zero)
      .def("max_abs", &GrassmannElement::max_abs)
      .def("inverse", &ga_invert)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const GrassmannElement& x) {
        std::ostringstream os;
        os << x;
        return os.str();
      });

  py::class_<SuperMatrix>(mod, "SuperMatrix")
      .def_static("identity", &SuperMatrix::identity, py::arg("m"), py::arg("n"), py::arg("generators"))
      .def_static(
          "from_body",
          [](const Eigen::MatrixXd& body, int m, int n, int N) { return SuperMatrix::from_body(body, m, n, N); },
          py::arg("body"), py::arg("m"), py::arg("n"), py::arg("generators"))
      .def_static("from_json", [](const std::string& s) { return supermatrix_from_json(Json::parse(s)); })
      .def("to_json", [](const SuperMatrix& x) { return dump(to_json(x)); })
      .def_property_readonly("m", &SuperMatrix::m)
      .def_property_readonly("n", &SuperMatrix::n)
      .def_property_readonly("generators", &SuperMatrix::generators)
      .def_property_readonly("parity", &SuperMatrix::parity)
      .def("entry", [](const SuperMatrix& x, int i, int j) { return x(i, j); })
      .def("body", &SuperMatrix::body)
      .def("coefficient", [](const SuperMatrix& x, const std::vector<int>& idx) {
        return x.entries().coefficient(monomial_from(idx));
      })
      .def("max_abs", &SuperMatrix::max_abs)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(py::self == py::self);

  mod.def("sm_mul", &sm_mul);
  mod.def("sm_inverse", &sm_inverse);
  mod.def("sm_exp", &sm_exp);
  mod.def("sm_supertrace", &sm_supertrace);
  mod.def("sm_supertranspose", &sm_supertranspose);
  mod.def("sm_commutator", &sm_commutator);

  py::class_<SuperAlgebra>(mod, "SuperAlgebra")
      .def_property_readonly("name", &SuperAlgebra::name)
      .def_property_readonly("dim", &SuperAlgebra::dim)
      .def_property_readonly("labels",
                             [](const SuperAlgebra& a) {
                               std::vector<std::string> out;
                               for (int i = 0; i < a.dim(); ++i) out.push_back(a.label(i));
                               return out;
                             })
      .def_property_readonly("parities",
                             [](const SuperAlgebra& a) {
                               std::vector<int> out;
                               for (int i = 0; i < a.dim(); ++i) out.push_back(as_int(a.parity(i)));
                               return out;
                             })
      .def("f", &SuperAlgebra::f)
      .def_property_readonly("eta", &SuperAlgebra::eta)
      .def("rep", &SuperAlgebra::rep)
      .def("with_perturbed_constant", &SuperAlgebra::with_perturbed_constant)
      .def("to_json", [](const SuperAlgebra& a) { return dump(to_json(a)); });

  mod.def("alg_build_osp12", &alg_build_osp12);
  mod.def("alg_build_osp", &alg_build_osp, py::arg("m"), py::arg("n"));
  mod.def("alg_check_jacobi", [](const SuperAlgebra& a, double tol) { return dump(to_json(alg_check_jacobi(a, tol))); },
          py::arg("alg"), py::arg("tol") = kDefaultTolerance);
  mod.def("alg_element", &alg_element);
  mod.def("alg_real_coefficients", &alg_real_coefficients);
  mod.def("alg_ff_block", &alg_ff_block);
  mod.def("osp12_sigma", [] {
    const auto s = osp12_sigma();
    return std::vector<Eigen::MatrixXd>(s.begin(), s.end());
  });
  mod.def("sigma_plus", [] { return Eigen::MatrixXd(sigma_plus()); });

  mod.def("grp_membership_residual", &grp_membership_residual);
  mod.def("grp_is_member", &grp_is_member, py::arg("M"), py::arg("tol") = kDefaultTolerance);
  mod.def("grp_xi_from_chi", [](const SuperMatrix& u) { return rows(grp_xi_from_chi(u.a(), u.A(), u.chi())); });
  mod.def("grp_xi_block", [](const SuperMatrix& u) { return rows(u.xi()); });
  mod.def(
      "sample_member",
      [](const SuperAlgebra& a, int N, std::uint64_t seed) {
        Rng rng(seed);
        return sample_member(a, N, rng);
      },
      py::arg("alg"), py::arg("generators"), py::arg("seed"));

  mod.def("mod_ahat", [](const Eigen::MatrixXd& a0, const Eigen::MatrixXd& A0) {
    const Ahat h = mod_ahat(a0, A0);
    return py::make_tuple(h.matrix, h.det, h.rank);
  });
  mod.def("mod_gauge_fix_sigma", [](const SuperMatrix& u) {
    const GaugeFixResult r = mod_gauge_fix_sigma(u);
    return py::make_tuple(r.S, r.U_fixed);
  });
  mod.def("mod_fermionic_moduli_count", &mod_fermionic_moduli_count);
  mod.def("mod_fermionic_moduli_bruteforce",
          [](const Eigen::MatrixXd& a0, const Eigen::MatrixXd& b0, const Eigen::MatrixXd& A0,
             const Eigen::MatrixXd& B0) { return mod_fermionic_moduli_bruteforce(a0, b0, A0, B0).moduli(); });
  mod.def("mod_enumerate_sectors_osp12", [](int N) { return dump(to_json(mod_enumerate_sectors_osp12(N))); },
          py::arg("generators") = 2);
  mod.def("mod_osp22_partial_report", [](int grid) { return dump(to_json(mod_osp22_partial_report(grid))); },
          py::arg("grid") = 10);

  mod.def("sp_check_closure",
          [](const SuperAlgebra& a, double tol) { return dump(to_json(sp_check_closure(a, tol), a)); },
          py::arg("alg"), py::arg("tol") = kDefaultTolerance);
  mod.def("sp_efm", [](const SuperAlgebra& a, const Eigen::VectorXd& c) { return dump(to_json(sp_efm(a, c))); });

  mod.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "superholonomy");
    std::vector<char*> argv;
    for (auto& s : args) argv.push_back(s.data());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
