#include "ctlhom/chainalg.hpp"
#include "ctlhom/cli.hpp"
#include "ctlhom/corpus.hpp"
#include "ctlhom/errors.hpp"
#include "ctlhom/laws.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace ctlhom;

namespace {

py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list counts(const sset::FiniteSimplicialSet& x) {
  py::list out;
  for (auto c : x.counts()) out.append(c);
  return out;
}

py::dict result_dict(const chain::TheoryResult& r) {
  py::list groups;
  for (const auto& d : r.degrees) {
    py::list torsion;
    for (const auto& t : d.group.torsion) torsion.append(to_py(t));
    py::dict g;
    g["degree"] = d.degree;
    g["free_rank"] = d.group.free_rank;
    g["torsion"] = torsion;
    g["stable"] = d.stable;
    g["depth"] = d.depth;
    g["text"] = d.group.to_string(r.coeffs);
    groups.append(g);
  }
  py::dict out;
  out["theory"] = chain::theory_tag(r.theory);
  out["coefficients"] = r.coeffs.to_string();
  out["groups"] = groups;
  out["stable"] = r.stable;
  out["depth"] = r.depth;
  out["window"] = r.window;
  out["max_depth"] = r.max_depth;
  out["caveats"] = r.caveats;
  return out;
}

py::dict compute(chain::Theory theory, const corpus::Space& space, const std::string& coeff, int window,
                 std::optional<int> max_depth) {
  chain::StabilizationOptions opts;
  opts.window = window;
  if (max_depth) opts.max_depth = *max_depth;
  return result_dict(chain::compute(theory, *space.exhaustion, Coefficients::parse(coeff), opts));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Homology theories of finite and locally finite simplicial sets";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DescriptorError>(m, "DescriptorError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<PresentationError>(m, "PresentationError", base.ptr());
  py::register_exception<ControlledError>(m, "ControlledError", base.ptr());

  py::class_<corpus::Space>(m, "Space")
      .def_readonly("name", &corpus::Space::name)
      .def_property_readonly("is_finite", &corpus::Space::is_finite)
      .def("counts", [](const corpus::Space& s) { return counts(s.exhaustion->base()); },
           "Nondegenerate simplex counts of the base (the complex itself when finite).")
      .def("truncation_counts",
           [](const corpus::Space& s, int depth) { return counts(s.exhaustion->truncate(depth)->complex); },
           py::arg("depth"))
      .def("locally_finite", [](const corpus::Space& s) {
        return s.is_finite() ? true : sset::is_locally_finite(*s.exhaustion).locally_finite;
      })
      .def("to_json", [](const corpus::Space& s) { return corpus::to_json(s); })
      .def("__repr__", [](const corpus::Space& s) { return "<Space " + s.name + ">"; });

  m.def("spaces", [] {
    py::list out;
    for (const auto& d : corpus::descriptors()) {
      py::dict e;
      e["descriptor"] = d.syntax;
      e["description"] = d.description;
      e["finite"] = d.finite;
      out.append(e);
    }
    return out;
  });
  m.def("build", py::overload_cast<const std::string&, int>(&corpus::build), py::arg("descriptor"),
        py::arg("max_dim") = corpus::kDefaultMaxDim);
  m.def("resolve", &corpus::resolve, py::arg("descriptor_or_path"), py::arg("max_dim") = corpus::kDefaultMaxDim);
  m.def("load", &corpus::load, py::arg("path"));
  m.def("save", &corpus::save, py::arg("space"), py::arg("path"));
  m.def("from_json", &corpus::from_json, py::arg("text"), py::arg("name") = "input");

  const auto theory = [&m](const char* name, chain::Theory t) {
    m.def(
        name,
        [t](const corpus::Space& s, const std::string& coeff, int window, std::optional<int> max_depth) {
          return compute(t, s, coeff, window, max_depth);
        },
        py::arg("space"), py::arg("coeff") = "z", py::arg("window") = 3, py::arg("max_depth") = py::none());
  };
  theory("homology", chain::Theory::Homology);
  theory("bm_homology", chain::Theory::BorelMoore);
  theory("cohomology", chain::Theory::Cohomology);
  theory("compact_cohomology", chain::Theory::CompactCohomology);

  m.def(
      "pairing_matrix",
      [](const corpus::Space& s, int degree) {
        const auto p = chain::generator_pairing(*s.exhaustion, degree);
        py::list rows;
        for (std::size_t r = 0; r < p.matrix.rows(); ++r) {
          py::list row;
          for (std::size_t c = 0; c < p.matrix.cols(); ++c) row.append(to_py(p.matrix(r, c)));
          rows.append(row);
        }
        return rows;
      },
      py::arg("space"), py::arg("degree"));

  m.def(
      "laws",
      [](int max_carrier) {
        const auto r = laws::run_laws(max_carrier);
        py::dict out;
        py::list sections;
        for (const auto& s : r.sections) {
          py::dict e;
          e["key"] = s.key;
          e["title"] = s.title;
          e["checked"] = s.checked;
          e["counterexamples"] = s.counterexamples;
          sections.append(e);
        }
        out["ok"] = r.ok();
        out["sections"] = sections;
        return out;
      },
      py::arg("max_carrier") = 3);

  m.def("theorem41_check", [] {
    py::list out;
    for (const auto& fx : corpus::map_fixtures()) {
      const auto r = sset::theorem41_check(fx.map);
      py::dict e;
      e["name"] = fx.name;
      e["expected_proper"] = fx.proper;
      e["proper"] = r.proper;
      e["controlled"] = r.controlled;
      e["agree"] = r.agree;
      e["witness"] = r.proper_report.witness;
      out.append(e);
    }
    return out;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one CLI command; returns (exit code, stdout, stderr).");
}
