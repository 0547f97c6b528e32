#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "krein/error.hpp"
#include "krein/minmax.hpp"
#include "krein/oracle.hpp"
#include "krein/pinv.hpp"

namespace py = pybind11;
using namespace krein;

namespace {

// Python-facing handle; SpacePtr is immutable and shared.
struct Space {
  SpacePtr ptr;
};

Operator op(const Space& s, const Matrix& m) { return {s.ptr, m}; }

py::dict report_dict(const SolveReport& r) {
  py::dict out;
  out["feasible"] = r.feasible;
  out["reason"] = std::string(to_string(r.reason));
  py::dict conditions;
  for (const auto& c : r.conditions) conditions[py::str(c.name)] = c.holds;
  out["conditions"] = conditions;
  py::dict residuals;
  for (const auto& [name, value] : r.residuals) residuals[py::str(name)] = value;
  out["residuals"] = residuals;
  out["residual_normal_eq"] = r.residual_normal_eq;
  out["seed"] = r.seed;
  out["solution"] = r.manifold ? py::cast(Matrix(r.manifold->particular.matrix())) : py::none();
  out["perturbation_basis"] = r.manifold ? py::cast(Matrix(r.manifold->perturbation_space.basis())) : py::none();
  out["value"] = r.value ? py::cast(Matrix(r.value->matrix())) : py::none();
  py::dict certs;
  for (const auto& [name, c] : r.certificates) certs[py::str(name)] = c.verdict;
  out["certificates"] = certs;
  return out;
}

py::dict subspace_dict(const Subspace& s) {
  const SubspaceClass& c = s.classification();
  py::dict out;
  out["dim"] = s.dim();
  out["basis"] = Matrix(s.basis());
  out["kind"] = std::string(to_string(c.kind));
  out["regular"] = c.regular;
  out["positive_dim"] = c.positive_dim;
  out["negative_dim"] = c.negative_dim;
  out["isotropic_dim"] = c.isotropic_dim;
  return out;
}

SolveOptions opts(std::uint64_t seed, int trials) { return {seed, trials}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linear algebra and operator least squares in finite-dimensional Krein spaces";
  py::register_exception<Error>(m, "KreinError");

  py::class_<Space>(m, "Space")
      .def(py::init([](const Matrix& gram) { return Space{KreinSpace::make(gram)}; }), py::arg("gram"))
      .def_property_readonly("dim", [](const Space& s) { return s.ptr->dim(); })
      .def_property_readonly("inertia", [](const Space& s) {
        return py::make_tuple(s.ptr->positive_index(), s.ptr->negative_index());
      })
      .def_property_readonly("gram", [](const Space& s) { return Matrix(s.ptr->gram()); })
      .def_property_readonly("signature", [](const Space& s) { return Matrix(s.ptr->signature()); })
      .def("adjoint", [](const Space& s, const Matrix& t) { return Matrix(op(s, t).adjoint().matrix()); })
      .def("form", [](const Space& s, const Vector& x, const Vector& y) { return s.ptr->krein(x, y); });

  m.def("classify", [](const Space& s, const Matrix& basis) { return subspace_dict(Subspace::span(s.ptr, basis)); });
  m.def("companion", [](const Space& s, const Matrix& basis) {
    return subspace_dict(orthogonal_companion(Subspace::span(s.ptr, basis)));
  });
  m.def("selfadjoint_projection", [](const Space& s, const Matrix& basis) {
    return Matrix(selfadjoint_projection(Subspace::span(s.ptr, basis)).op.matrix());
  });
  m.def("normal_projection", [](const Space& s, const Matrix& basis) {
    return Matrix(normal_projection(Subspace::span(s.ptr, basis)).op.matrix());
  });

  m.def("indefinite_inverse", [](const Space& s, const Matrix& b) { return report_dict(indefinite_inverse(op(s, b))); });
  m.def(
      "solve_ims",
      [](const Space& s, const Matrix& b, const Matrix& c, std::uint64_t seed, int trials) {
        return report_dict(solve_ims(op(s, b), op(s, c), opts(seed, trials)));
      },
      py::arg("space"), py::arg("b"), py::arg("c"), py::arg("seed") = 0, py::arg("trials") = 0);
  m.def(
      "solve_imax",
      [](const Space& s, const Matrix& b, const Matrix& c, std::uint64_t seed, int trials) {
        return report_dict(solve_imax(op(s, b), op(s, c), opts(seed, trials)));
      },
      py::arg("space"), py::arg("b"), py::arg("c"), py::arg("seed") = 0, py::arg("trials") = 0);
  m.def("solve_immso", [](const Space& s, const Matrix& b, const Matrix& c) {
    return report_dict(solve_immso(op(s, b), op(s, c)));
  });
  m.def("verify_immso", [](const Space& s, const Matrix& z0, const Matrix& b, const Matrix& c) {
    return verify_immso(op(s, z0), op(s, b), op(s, c));
  });
  m.def("moore_penrose", [](const Space& s, const Matrix& b) { return report_dict(krein_moore_penrose(op(s, b))); });
  m.def("generalized_inverse", [](const Space& s, const Matrix& b) {
    const GeneralizedInverse g = generalized_inverse(op(s, b));
    return py::make_tuple(Matrix(g.d.matrix()), std::string(to_string(g.kind)));
  });
  m.def(
      "solve_min_ims_norm",
      [](const Space& s, const Matrix& b, const Matrix& c, std::uint64_t seed, int trials) {
        return report_dict(solve_min_ims_norm(op(s, b), op(s, c), opts(seed, trials)));
      },
      py::arg("space"), py::arg("b"), py::arg("c"), py::arg("seed") = 0, py::arg("trials") = 0);
  m.def("is_krein_positive", [](const Space& s, const Matrix& t) { return oracle::is_krein_positive(op(s, t)).verdict; });
}
