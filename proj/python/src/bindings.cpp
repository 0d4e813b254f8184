#include <cstdint>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oxn/chain.hpp"
#include "oxn/checks.hpp"
#include "oxn/errors.hpp"
#include "oxn/semigroup.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_oxn, m) {
  m.doc() = "Order-preserving singular maps of a finite chain and their cone semigroups.";

  // derived classes last: pybind11 tries the most recent translator first
  auto error = py::register_exception<oxn::Error>(m, "Error");
  py::register_exception<oxn::DimensionError>(m, "DimensionError", error.ptr());
  py::register_exception<oxn::DomainError>(m, "DomainError", error.ptr());
  py::register_exception<oxn::ContractError>(m, "ContractError", error.ptr());
  py::register_exception<oxn::CompositionError>(m, "CompositionError", error.ptr());
  py::register_exception<oxn::ConstructionError>(m, "ConstructionError", error.ptr());
  py::register_exception<oxn::ResourceError>(m, "ResourceError", error.ptr());
  py::register_exception<oxn::ParseError>(m, "ParseError", error.ptr());

  py::class_<oxn::OPMap>(m, "OPMap")
      .def(py::init<std::vector<oxn::Point>>(), py::arg("images"))
      .def_static("parse", [](std::string const& text) { return oxn::parse_opmap(text); })
      .def_property_readonly("images", &oxn::OPMap::images)
      .def_property_readonly("degree", &oxn::OPMap::degree)
      .def("__call__", [](oxn::OPMap const& f, oxn::Point x) {
        if (x < 1 || x > f.degree()) {
          throw py::index_error("point outside the chain");
        }
        return f(x);
      })
      .def("is_singular", &oxn::OPMap::is_singular)
      .def("is_idempotent", &oxn::OPMap::is_idempotent)
      .def("rank", &oxn::OPMap::rank)
      .def("image", [](oxn::OPMap const& f) { return oxn::image(f).elements(); })
      .def("kernel", [](oxn::OPMap const& f) { return oxn::kernel(f).block_sizes(); })
      .def("__mul__", [](oxn::OPMap const& f, oxn::OPMap const& g) { return oxn::compose(f, g); })
      .def("__eq__", [](oxn::OPMap const& f, oxn::OPMap const& g) { return f == g; })
      .def("__lt__", [](oxn::OPMap const& f, oxn::OPMap const& g) { return f < g; })
      .def("__hash__", [](oxn::OPMap const& f) { return py::hash(py::tuple(py::cast(f.images()))); })
      .def("__str__", [](oxn::OPMap const& f) { return oxn::to_string(f); })
      .def("__repr__", [](oxn::OPMap const& f) { return "OPMap(" + oxn::to_string(f) + ")"; });

  m.def("compose", py::overload_cast<oxn::OPMap const&, oxn::OPMap const&>(&oxn::compose),
        "First f, then g.", py::arg("f"), py::arg("g"));
  m.def(
      "enumerate_oxn",
      [](int n) { return oxn::enumerate_oxn(oxn::ChainSize(n)); },
      "Elements of OX_n in lexicographic order.",
      py::arg("n"));
  m.def(
      "green",
      [](oxn::OPMap const& f, oxn::OPMap const& g, std::string const& rel) {
        return oxn::green(f, g, oxn::parse_green_relation(rel));
      },
      py::arg("f"), py::arg("g"), py::arg("relation"));
  m.def(
      "idempotent_for_image",
      [](int n, std::vector<oxn::Point> const& a) {
        return oxn::idempotent_for_image(oxn::Subset(n, a));
      },
      py::arg("n"), py::arg("image"));

  m.def("registered_checks", [] {
    std::vector<py::tuple> out;
    for (auto const& info : oxn::registered_checks()) {
      out.push_back(py::make_tuple(info.name, info.max_n, info.summary));
    }
    return out;
  });
  m.def(
      "run_check_json",
      [](std::string const& name, int n, std::uint64_t seed) {
        oxn::CheckOptions options;
        options.seed = seed;
        oxn::CheckReport report;
        {
          py::gil_scoped_release release;
          report = oxn::run_check(name, oxn::ChainSize(n), options);
        }
        return report.to_json().dump();
      },
      py::arg("name"), py::arg("n"), py::arg("seed") = 0);
  m.def(
      "cayley_json",
      [](std::string const& selector, int n) {
        std::string out;
        {
          py::gil_scoped_release release;
          out = oxn::cayley_json(oxn::cayley_semigroup(selector, oxn::ChainSize(n)));
        }
        return out;
      },
      py::arg("selector"), py::arg("n"));
}
