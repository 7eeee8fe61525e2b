#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "confred/analyze.hpp"
#include "confred/augment.hpp"
#include "confred/canonical.hpp"
#include "confred/core.hpp"
#include "confred/enumerate.hpp"
#include "confred/errors.hpp"
#include "confred/families.hpp"
#include "confred/io.hpp"
#include "confred/reduce.hpp"

namespace py = pybind11;
using namespace confred;

namespace {

SearchOptions options(std::size_t limit, unsigned threads) {
  SearchOptions o;
  o.limit = limit;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reductions and augmentations of combinatorial configurations";

  auto base = py::register_exception<Error>(m, "ConfredError", PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<InvalidWitness>(m, "InvalidWitness", base.ptr());
  py::register_exception<UnbalancedInput>(m, "UnbalancedInput", base.ptr());
  py::register_exception<FamilyError>(m, "FamilyError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<IncidenceStructure>(m, "IncidenceStructure")
      .def(py::init<int, std::vector<std::vector<int>>>(), py::arg("num_points"), py::arg("lines"))
      .def_property_readonly("num_points", &IncidenceStructure::num_points)
      .def_property_readonly("num_lines", &IncidenceStructure::num_lines)
      .def_property_readonly("lines", &IncidenceStructure::lines)
      .def("line", &IncidenceStructure::line)
      .def("lines_through", &IncidenceStructure::lines_through)
      .def("incident", &IncidenceStructure::incident)
      .def("__eq__", [](const IncidenceStructure& a, const IncidenceStructure& b) { return a == b; })
      .def("__repr__", [](const IncidenceStructure& s) {
        return "IncidenceStructure(" + std::to_string(s.num_points()) + " points, " +
               std::to_string(s.num_lines()) + " lines)";
      });

  py::class_<ConfigParams>(m, "ConfigParams")
      .def_readonly("v", &ConfigParams::v)
      .def_readonly("b", &ConfigParams::b)
      .def_readonly("r", &ConfigParams::r)
      .def_readonly("k", &ConfigParams::k)
      .def_readonly("d", &ConfigParams::d)
      .def_readonly("delta_p", &ConfigParams::delta_p)
      .def_readonly("delta_l", &ConfigParams::delta_l)
      .def_property_readonly("label", &ConfigParams::label)
      .def("balanced", &ConfigParams::balanced);

  m.def("validate", &validate);
  m.def("reduced_parameters", &reduced_parameters);
  m.def("girth", [](const IncidenceStructure& s) { return girth(levi_graph(s)); });
  m.def("num_components", [](const IncidenceStructure& s) { return connected_components(s).size(); });

  m.def("cyclic", &cyclic, py::arg("v"), py::arg("base"));
  m.def("affine_plane", &affine_plane);
  m.def("projective_plane", &projective_plane);
  m.def("transversal_design", &transversal_design, py::arg("k"), py::arg("n"));
  m.def("named", &named);
  m.def("generate", [](const std::string& spec) { return FamilySpec::parse(spec).build(); });

  m.def("parse_cfg", [](const std::string& text) { return parse_cfg_string(text); });
  m.def("to_cfg", [](const IncidenceStructure& s) { return to_cfg_string(s); });
  m.def("levi_dot", &levi_dot);

  m.def("canonical_digest", [](const IncidenceStructure& s) { return canonical_form(s).hex_digest(); });
  m.def("canonical_structure", &canonical_structure);
  m.def("are_isomorphic", &are_isomorphic);

  py::class_<BalancedReduction>(m, "BalancedReduction")
      .def_readonly("point", &BalancedReduction::point)
      .def_readonly("line", &BalancedReduction::line)
      .def_readonly("assignment", &BalancedReduction::assignment);
  py::class_<Rewire>(m, "Rewire")
      .def_readonly("q", &Rewire::q)
      .def_readonly("from_line", &Rewire::from_line)
      .def_readonly("m", &Rewire::m)
      .def_readonly("from_point", &Rewire::from_point);
  py::class_<GeneralReduction>(m, "GeneralReduction")
      .def_readonly("points", &GeneralReduction::points)
      .def_readonly("lines", &GeneralReduction::lines)
      .def_readonly("assignment", &GeneralReduction::assignment);
  py::class_<BalancedAugmentation>(m, "BalancedAugmentation")
      .def_readonly("points", &BalancedAugmentation::points)
      .def_readonly("lines", &BalancedAugmentation::lines)
      .def_readonly("post_swap", &BalancedAugmentation::post_swap);
  py::class_<Incidence>(m, "Incidence")
      .def_readonly("point", &Incidence::point)
      .def_readonly("line", &Incidence::line);
  py::class_<GeneralAugmentation>(m, "GeneralAugmentation")
      .def_readonly("incidences", &GeneralAugmentation::incidences)
      .def_readonly("line_parts", &GeneralAugmentation::line_parts)
      .def_readonly("point_parts", &GeneralAugmentation::point_parts);

  m.def(
      "find_reductions",
      [](const IncidenceStructure& s, const std::string& mode, std::size_t limit, unsigned threads) -> py::list {
        py::list out;
        const auto parsed = parse_reduction_mode(mode);
        if (parsed == ReductionMode::General) {
          for (auto& w : find_reductions_general(s, options(limit, threads))) out.append(py::cast(w));
        } else {
          for (auto& w : find_reductions_balanced(s, parsed, options(limit, threads))) out.append(py::cast(w));
        }
        return out;
      },
      py::arg("s"), py::arg("mode") = "boben", py::arg("limit") = 1, py::arg("threads") = 1);
  m.def("apply_reduction", &apply_reduction_balanced);
  m.def("apply_reduction", &apply_reduction_general);
  m.def(
      "is_irreducible",
      [](const IncidenceStructure& s, const std::string& mode, unsigned threads) {
        return is_irreducible(s, parse_reduction_mode(mode), threads);
      },
      py::arg("s"), py::arg("mode") = "boben", py::arg("threads") = 1);

  m.def(
      "find_augmentations",
      [](const IncidenceStructure& s, const std::string& mode, std::size_t limit, unsigned threads) -> py::list {
        py::list out;
        if (mode == "general") {
          for (auto& w : find_augmentations_general(s, options(limit, threads))) out.append(py::cast(w));
        } else if (mode == "balanced") {
          for (auto& w : find_augmentations_balanced(s, options(limit, threads))) out.append(py::cast(w));
        } else if (mode == "martinetti") {
          for (auto& w : martinetti_augment(s, options(limit, threads))) out.append(py::cast(w));
        } else {
          throw Error("unknown augmentation mode '" + mode + "'");
        }
        return out;
      },
      py::arg("s"), py::arg("mode") = "balanced", py::arg("limit") = 1, py::arg("threads") = 1);
  m.def("apply_augmentation", &apply_augmentation_balanced);
  m.def("apply_augmentation", &apply_augmentation_general);
  m.def("inverse_reduction", py::overload_cast<const IncidenceStructure&, const BalancedAugmentation&>(
                                 &inverse_reduction));
  m.def("inverse_reduction", py::overload_cast<const IncidenceStructure&, const GeneralAugmentation&>(
                                 &inverse_reduction));

  m.def(
      "analyze",
      [](const IncidenceStructure& s, bool search) {
        ClassifyOptions o;
        o.search = search;
        return report_json(classify(s, o));
      },
      py::arg("s"), py::arg("search") = true, "JSON report");

  m.def(
      "census_counts",
      [](int r, int k, int d_max) {
        std::map<int, std::size_t> counts;
        for (const auto& [key, cell] : enumerate_exhaustive(r, k, d_max).cells) counts[key.d] = cell.size();
        return counts;
      },
      py::arg("r"), py::arg("k"), py::arg("d_max"));
}
