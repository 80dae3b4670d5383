#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgtop/claims.hpp"

namespace py = pybind11;
using namespace sgtop;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

nlohmann::json py_to_json(const py::object& obj) {
  py::module_ json = py::module_::import("json");
  std::string dumped = py::cast<std::string>(json.attr("dumps")(obj));
  return nlohmann::json::parse(dumped);
}

FinTopology topology_from_opens(int n, const std::vector<std::vector<int>>& opens) {
  std::vector<PtSet> family;
  family.reserve(opens.size());
  for (const auto& members : opens) family.push_back(PtSet::of(n, members));
  return validate_topology(std::move(family), n);
}

}  // namespace

PYBIND11_MODULE(_sgtop, m) {
  m.doc() = "finite and symbolic topology engine for sg-closed set machinery";

  py::register_exception<CarrierMismatch>(m, "CarrierMismatchError", PyExc_ValueError);
  py::register_exception<PointOutOfRange>(m, "PointOutOfRangeError", PyExc_IndexError);
  py::register_exception<UnknownName>(m, "UnknownNameError", PyExc_KeyError);
  py::register_exception<UnknownClaim>(m, "UnknownClaimError", PyExc_KeyError);
  py::register_exception<Error>(m, "SgtopError", PyExc_RuntimeError);

  py::class_<PtSet>(m, "PtSet")
      .def(py::init([](int n, const std::vector<int>& members) { return PtSet::of(n, members); }),
           py::arg("n"), py::arg("members") = std::vector<int>{})
      .def_property_readonly("n", &PtSet::carrier_size)
      .def("members", &PtSet::members)
      .def("complement", &PtSet::complement)
      .def("count", &PtSet::count)
      .def("__or__", [](const PtSet& a, const PtSet& b) { return a | b; })
      .def("__and__", [](const PtSet& a, const PtSet& b) { return a & b; })
      .def("__sub__", &PtSet::minus)
      .def("__eq__", [](const PtSet& a, const PtSet& b) { return a == b; })
      .def("__len__", &PtSet::count)
      .def("__contains__", [](const PtSet& s, int x) { return s.test(x); })
      .def("__repr__", [](const PtSet& s) {
        return "PtSet(n=" + std::to_string(s.carrier_size()) + ", " + s.to_string() + ")";
      });

  py::class_<FinTopology>(m, "FinTopology")
      .def(py::init(&topology_from_opens), py::arg("n"), py::arg("opens"))
      .def_property_readonly("n", &FinTopology::carrier_size)
      .def("opens",
           [](const FinTopology& t) {
             std::vector<std::vector<int>> out;
             for (const auto& u : t.opens()) out.push_back(u.members());
             return out;
           })
      .def("min_nbhd", [](const FinTopology& t, int x) { return t.min_nbhd(x); })
      .def("is_open", &FinTopology::is_open)
      .def("is_closed", &FinTopology::is_closed)
      .def("to_json", [](const FinTopology& t) { return json_to_py(topology_to_json(t)); })
      .def("__eq__", [](const FinTopology& a, const FinTopology& b) { return a == b; })
      .def("__repr__", &FinTopology::to_string);

  m.def("from_json", [](const py::object& obj) { return topology_from_json(py_to_json(obj)); });

  py::class_<SetClass>(m, "SetClass")
      .def_readonly("open", &SetClass::open)
      .def_readonly("closed", &SetClass::closed)
      .def_readonly("semi_open", &SetClass::semi_open)
      .def_readonly("semi_closed", &SetClass::semi_closed)
      .def_readonly("preopen", &SetClass::preopen)
      .def_readonly("nowhere_dense", &SetClass::nowhere_dense)
      .def_readonly("dense", &SetClass::dense)
      .def_readonly("regular_open", &SetClass::regular_open)
      .def_readonly("regular_closed", &SetClass::regular_closed)
      .def_readonly("alpha_open", &SetClass::alpha_open)
      .def_readonly("beta_open", &SetClass::beta_open)
      .def_readonly("delta_open", &SetClass::delta_open)
      .def("__repr__", &SetClass::to_string);

  m.def("interior", &interior);
  m.def("closure", &closure);
  m.def("semi_interior", &semi_interior);
  m.def("semi_closure", &semi_closure);
  m.def("classify_set", &classify_set);

  py::enum_<PredicateMode>(m, "PredicateMode")
      .value("DEFINITIONAL", PredicateMode::Definitional)
      .value("CHARACTERIZATION", PredicateMode::Characterization);

  py::class_<SpaceDecomp>(m, "SpaceDecomp")
      .def_readonly("x1", &SpaceDecomp::x1)
      .def_readonly("x2", &SpaceDecomp::x2);
  m.def("decompose", &decompose);

  m.def(
      "is_sg_closed",
      [](const FinTopology& t, const PtSet& a, PredicateMode mode) {
        return is_sg_closed(t, a, mode);
      },
      py::arg("t"), py::arg("a"), py::arg("mode") = PredicateMode::Characterization);
  m.def(
      "is_sg_open",
      [](const FinTopology& t, const PtSet& a, PredicateMode mode) {
        return is_sg_open(t, a, mode);
      },
      py::arg("t"), py::arg("a"), py::arg("mode") = PredicateMode::Characterization);
  m.def(
      "is_hsg_closed",
      [](const FinTopology& t, const PtSet& a, PredicateMode mode) {
        return is_hsg_closed(t, a, mode);
      },
      py::arg("t"), py::arg("a"), py::arg("mode") = PredicateMode::Characterization);
  m.def("is_semi_td", &is_semi_td);
  m.def("is_cellular", &is_cellular);
  m.def("maximal_cellular_families", &maximal_cellular_families);
  m.def("is_semi_open", &is_semi_open);
  m.def("is_semi_closed", &is_semi_closed);
  m.def("is_nowhere_dense", &is_nowhere_dense);
  m.def("is_regular_open", &is_regular_open);
  m.def("is_delta_open", &is_delta_open);
  m.def(
      "is_pre_sg_continuous",
      [](const std::vector<int>& image, const FinTopology& dom, const FinTopology& cod) {
        PointMap f{dom.carrier_size(), cod.carrier_size(), image};
        return is_pre_sg_continuous(f, dom, cod);
      },
      py::arg("image"), py::arg("dom"), py::arg("cod"));

  py::class_<SubspaceResult>(m, "SubspaceResult")
      .def_readonly("space", &SubspaceResult::space)
      .def_readonly("to_parent", &SubspaceResult::to_parent);
  m.def("subspace", &subspace);
  m.def("product", &product);
  m.def("alpha_topology", &alpha_topology);
  m.def("semi_regularization", &semi_regularization);
  m.def("catalog", &catalog);

  m.def(
      "enumerate_topologies",
      [](int n, bool dedup, bool allow_large) {
        return enumerate_topologies(n, dedup ? EnumMode::UpToHomeomorphism : EnumMode::Labeled,
                                    allow_large);
      },
      py::arg("n"), py::arg("dedup") = false, py::arg("allow_large") = false);
  m.def(
      "count_topologies",
      [](int n, bool dedup, bool allow_large) {
        return count_topologies(n, dedup ? EnumMode::UpToHomeomorphism : EnumMode::Labeled,
                                allow_large);
      },
      py::arg("n"), py::arg("dedup") = false, py::arg("allow_large") = false);

  py::class_<SymSpace>(m, "SymSpace")
      .def(py::init(&SymSpace::by_name))
      .def_property_readonly("name", &SymSpace::name)
      .def_property_readonly("extra_names", &SymSpace::extra_names)
      .def("__repr__", [](const SymSpace& sp) { return "SymSpace(" + sp.name() + ")"; });
  m.def("sym_space_names", [] { return SymSpace::names(); });

  py::class_<SymSet>(m, "SymSet")
      .def_static("parse", [](const std::string& text, const SymSpace& sp) {
        return SymSet::parse(text, sp.extra_names());
      })
      .def("is_infinite", &SymSet::is_infinite)
      .def("__eq__", [](const SymSet& a, const SymSet& b) { return a == b; })
      .def("text", [](const SymSet& s, const SymSpace& sp) { return s.to_string(sp.extra_names()); });

  m.def("sym_interior", &sym_interior);
  m.def("sym_closure", &sym_closure);
  m.def("sym_decompose", [](const SymSpace& sp) {
    SymDecomp d = sym_decompose(sp);
    return py::make_tuple(d.x1, d.x2);
  });
  m.def("sym_is_nowhere_dense", &sym_is_nowhere_dense);
  m.def("sym_is_hsg_closed", &sym_is_hsg_closed);
  m.def("sym_is_c2", [](const SymSpace& sp) {
    SymVerdict v = sym_is_c2(sp);
    py::dict out;
    out["value"] = v.value;
    out["justification"] = v.justification;
    out["witness"] = v.witness ? py::cast(v.witness->to_string(sp.extra_names()))
                               : py::object(py::none());
    out["witness_family"] = v.witness_family;
    return out;
  });
  m.def("sym_is_c3", [](const SymSpace& sp) {
    SymVerdict v = sym_is_c3(sp);
    py::dict out;
    out["value"] = v.value;
    out["justification"] = v.justification;
    out["witness"] = v.witness ? py::cast(v.witness->to_string(sp.extra_names()))
                               : py::object(py::none());
    out["witness_family"] = v.witness_family;
    return out;
  });
  m.def("sym_is_sg_compact", &sym_is_sg_compact);
  m.def("sym_is_semi_compact", &sym_is_semi_compact);

  m.def("claim_registry", [] { return claim_registry(); });
  m.def(
      "verify_claim",
      [](const std::string& id, int max_n, bool symbolic, std::uint64_t seed,
         const std::string& mutation) {
        ClaimConfig cfg;
        cfg.max_n = max_n;
        cfg.symbolic = symbolic;
        cfg.seed = seed;
        cfg.mutation = mutation;
        return json_to_py(verify_claim(id, cfg).to_json());
      },
      py::arg("id"), py::arg("max_n") = 4, py::arg("symbolic") = true,
      py::arg("seed") = ClaimConfig{}.seed, py::arg("mutation") = std::string());
  m.def(
      "run_suite",
      [](const std::vector<std::string>& claims, int max_n, bool symbolic, std::uint64_t seed,
         int workers) {
        SuiteConfig cfg;
        cfg.claims = claims;
        cfg.max_n = max_n;
        cfg.symbolic = symbolic;
        cfg.seed = seed;
        cfg.workers = workers;
        SuiteResult result = run_suite(cfg);
        return json_to_py(suite_report_json(cfg, result.reports));
      },
      py::arg("claims") = std::vector<std::string>{}, py::arg("max_n") = 4,
      py::arg("symbolic") = true, py::arg("seed") = ClaimConfig{}.seed, py::arg("workers") = 1);
  m.def(
      "search_counterexample",
      [](const std::string& target, int max_n) -> py::object {
        auto rec = search_counterexample(target, max_n);
        if (!rec) return py::none();
        return json_to_py(rec->to_json());
      },
      py::arg("target"), py::arg("max_n") = 4);
  m.def("counterexample_targets", [] { return counterexample_targets(); });
  m.def("replay_counterexample",
        [](const py::object& record) { return replay_counterexample(py_to_json(record)); });

  m.attr("__version__") = "0.1.0";
}
