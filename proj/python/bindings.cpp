#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gusvd/admissibility.hpp"
#include "gusvd/brute_oracle.hpp"
#include "gusvd/counting.hpp"
#include "gusvd/io.hpp"
#include "gusvd/orbit_invariant.hpp"

namespace py = pybind11;
using namespace gusvd;

namespace {

// Documents cross the boundary as plain dicts, through the json module.
Json to_json(const py::object& obj) {
  const auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return Json::parse(text);
}

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Partition to_partition(const std::vector<int>& parts) { return Partition::from_unsorted(parts); }

}  // namespace

PYBIND11_MODULE(_gusvd, m) {
  m.doc() = "Orbits of GU_m(q) x GU_n(q) on m x n matrices over GF(q^2)";
  m.attr("SCHEMA") = kSchemaVersion;

  m.def("field_info", [](std::uint32_t p, std::uint32_t e) {
    const auto f = make_field(p, e);
    py::dict d;
    d["p"] = f->p();
    d["e"] = f->e();
    d["q"] = f->q();
    d["order"] = f->order();
    d["modulus"] = f->modulus();
    d["generator"] = f->generator().code;
    return d;
  }, py::arg("p"), py::arg("e"));

  m.def("orbit_invariant", [](const py::object& matrix) {
    const Matrix a = matrix_from_json(to_json(matrix));
    return to_python(invariant_to_json(orbit_invariant(a), a.field()));
  }, py::arg("matrix"), "Invariant document of a matrix document {p, e, m, n, entries}.");

  m.def("canonical_string", [](const py::object& matrix) {
    return canonical_invariant_string(orbit_invariant(matrix_from_json(to_json(matrix))));
  }, py::arg("matrix"));

  m.def("same_orbit", [](const py::object& a, const py::object& b) {
    return same_orbit(matrix_from_json(to_json(a)), matrix_from_json(to_json(b)));
  }, py::arg("a"), py::arg("b"));

  m.def("realize", [](const py::object& invariant, std::uint64_t seed) {
    auto [inv, field] = invariant_from_json(to_json(invariant));
    return to_python(matrix_to_json(realize(inv, field, seed)));
  }, py::arg("invariant"), py::arg("seed") = 0);

  m.def("jordan_pair", [](const py::object& matrix) {
    auto [alpha, beta] = jordan_pair(matrix_from_json(to_json(matrix)));
    return py::make_tuple(alpha.parts(), beta.parts());
  }, py::arg("matrix"));

  m.def("total_orbits", &total_orbits, py::arg("m"), py::arg("n"), py::arg("q"));
  m.def("f_nilpotent", &f_nilpotent, py::arg("m"), py::arg("n"));
  m.def("k_gl", &k_gl, py::arg("n"), py::arg("q"));
  m.def("partition_count", &partition_count, py::arg("d"));

  m.def("star_admissible", [](const std::vector<int>& a, const std::vector<int>& b) {
    return star_admissible(to_partition(a), to_partition(b));
  }, py::arg("alpha"), py::arg("beta"));
  m.def("flanders_admissible", [](const std::vector<int>& a, const std::vector<int>& b) {
    return flanders_admissible(to_partition(a), to_partition(b));
  }, py::arg("alpha"), py::arg("beta"));

  m.def("star_witness", [](const std::vector<int>& a, const std::vector<int>& b, std::uint32_t p, std::uint32_t e,
                           std::uint64_t seed) {
    return to_python(matrix_to_json(star_witness(to_partition(a), to_partition(b), make_field(p, e), seed)));
  }, py::arg("alpha"), py::arg("beta"), py::arg("p") = 2, py::arg("e") = 1, py::arg("seed") = 0);

  m.def("verify_counts", [](std::size_t mm, std::size_t n, std::uint64_t q) {
    return to_python(count_report_to_json(verify_counts(mm, n, q)));
  }, py::arg("m"), py::arg("n"), py::arg("q"));
  m.def("verify_completeness", [](std::size_t mm, std::size_t n, std::uint64_t q) {
    return to_python(completeness_report_to_json(verify_invariant_completeness(mm, n, q)));
  }, py::arg("m"), py::arg("n"), py::arg("q"));
}
