// Python bindings for the core operations. Kept thin: containers map to
// native lists/dicts/tuples, reports cross as JSON strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamlab/conditions.hpp"
#include "hamlab/connectivity.hpp"
#include "hamlab/cycle_factor.hpp"
#include "hamlab/cycles.hpp"
#include "hamlab/families.hpp"
#include "hamlab/harness.hpp"
#include "hamlab/version.hpp"

namespace py = pybind11;
using namespace hamlab;

namespace {

py::object certificate_or_none(const std::optional<CycleCertificate>& c) {
  if (!c) return py::none();
  return py::cast(c->vertices);
}

py::dict condition_result_dict(const ConditionResult& r) {
  py::dict out;
  out["satisfied"] = r.satisfied;
  out["vacuous"] = r.vacuous;
  if (r.witness) {
    py::dict w;
    w["vertices"] = r.witness->vertices;
    w["lhs"] = r.witness->lhs;
    w["rhs"] = r.witness->rhs;
    w["inequality"] = r.witness->inequality;
    out["witness"] = w;
  } else {
    out["witness"] = py::none();
  }
  return out;
}

EnumerationScope make_scope(int n, const std::string& mode,
                            std::optional<uint64_t> samples, uint64_t seed,
                            int pair_budget,
                            const std::vector<std::string>& prefilter) {
  EnumerationScope scope;
  scope.n = n;
  scope.mode = enumeration_mode_from_string(mode);
  scope.sample_count = samples;
  scope.seed = seed;
  scope.pair_budget = pair_budget;
  scope.prefilter = prefilter;
  return scope;
}

}  // namespace

PYBIND11_MODULE(hamlab, m) {
  m.doc() = "Degree conditions, exact cycle solvers, cycle factors, and "
            "theorem verification for loop-free digraphs";
  m.attr("__version__") = kVersion;
  m.attr("RNG_NAME") = kRngName;

  py::register_exception<ParseError>(m, "DigraphParseError",
                                     PyExc_ValueError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init<int>(), py::arg("order"))
      .def_static("parse", &Digraph::parse, py::arg("text"))
      .def("serialize", &Digraph::serialize)
      .def_property_readonly("order", &Digraph::order)
      .def("arc", &Digraph::arc, py::arg("u"), py::arg("v"))
      .def("adjacent", &Digraph::adjacent, py::arg("u"), py::arg("v"))
      .def("add_arc", &Digraph::add_arc, py::arg("u"), py::arg("v"))
      .def("remove_arc", &Digraph::remove_arc, py::arg("u"), py::arg("v"))
      .def("arc_count", &Digraph::arc_count)
      .def(
          "degrees",
          [](const Digraph& d, int x, std::optional<std::vector<int>> within) {
            DegreeSummary s =
                within ? d.degrees(x, std::span<const int>(*within))
                       : d.degrees(x);
            return py::make_tuple(s.out, s.in, s.total());
          },
          py::arg("x"), py::arg("within") = py::none(),
          "(out, in, total) degree triple, optionally within a vertex subset")
      .def("non_adjacent_pairs", &Digraph::non_adjacent_pairs)
      .def(
          "induced",
          [](const Digraph& d, const std::vector<int>& vertices) {
            std::vector<int> old_to_new;
            Digraph sub = d.induced(vertices, &old_to_new);
            return py::make_tuple(sub, old_to_new);
          },
          py::arg("vertices"),
          "(subdigraph, old_to_new) with -1 marking dropped vertices")
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__repr__", [](const Digraph& d) {
        return "<hamlab.Digraph order=" + std::to_string(d.order()) +
               " arcs=" + std::to_string(d.arc_count()) + ">";
      });

  m.def("find_isomorphism",
        [](const Digraph& a, const Digraph& b) -> py::object {
          auto mapping = find_isomorphism(a, b);
          if (!mapping) return py::none();
          return py::cast(*mapping);
        });
  m.def("is_isomorphic", &is_isomorphic);

  m.def("is_strong", &is_strong);
  m.def("is_k_strong", &is_k_strong, py::arg("d"), py::arg("k"));
  m.def("vertex_connectivity", [](const Digraph& d) {
    auto r = vertex_connectivity(d);
    py::dict out;
    out["kappa"] = r.kappa;
    out["separating_set"] =
        r.separating_set ? py::cast(*r.separating_set) : py::none();
    return out;
  });
  m.def("two_path_count", &two_path_count, py::arg("d"), py::arg("x"),
        py::arg("y"));
  m.def("has_two_path_between", &has_two_path_between, py::arg("d"),
        py::arg("u"), py::arg("v"));

  m.def(
      "evaluate_condition",
      [](const Digraph& d, const std::string& condition) {
        return condition_result_dict(
            evaluate(d, ConditionId::from_string(condition)));
      },
      py::arg("d"), py::arg("condition"));
  m.def("min_nonadjacent_pair_sum", [](const Digraph& d) -> py::object {
    auto r = min_nonadjacent_pair_sum(d);
    if (!r) return py::none();
    return py::make_tuple(r->value, r->pair);
  });

  m.def(
      "hamiltonian_cycle",
      [](const Digraph& d, int dp_threshold) {
        return certificate_or_none(hamiltonian_cycle(d, {dp_threshold}));
      },
      py::arg("d"), py::arg("dp_threshold") = 16);
  m.def(
      "cycle_through_pair",
      [](const Digraph& d, int x, int y, int dp_threshold) {
        return certificate_or_none(cycle_through_pair(d, x, y, {dp_threshold}));
      },
      py::arg("d"), py::arg("x"), py::arg("y"), py::arg("dp_threshold") = 16);
  m.def(
      "longest_cycle",
      [](const Digraph& d, std::optional<int> through,
         std::optional<int> avoiding, int dp_threshold) {
        return certificate_or_none(
            longest_cycle(d, through, avoiding, {dp_threshold}));
      },
      py::arg("d"), py::arg("through") = py::none(),
      py::arg("avoiding") = py::none(), py::arg("dp_threshold") = 16);
  m.def(
      "cycle_length_profile",
      [](const Digraph& d, int dp_threshold) {
        auto p = cycle_length_profile(d, {dp_threshold});
        py::dict out;
        out["lengths"] = p.present;
        py::list witnesses;
        for (const auto& w : p.witnesses) witnesses.append(w.vertices);
        out["witnesses"] = witnesses;
        out["pancyclic"] = p.pancyclic(d.order());
        return out;
      },
      py::arg("d"), py::arg("dp_threshold") = 16);
  m.def(
      "verify_certificate",
      [](const Digraph& d, const std::vector<int>& vertices) {
        return verify_certificate(d, CycleCertificate{vertices});
      },
      py::arg("d"), py::arg("vertices"));

  m.def("has_cycle_factor", &has_cycle_factor);
  m.def("extract_cycle_factor", [](const Digraph& d) -> py::object {
    auto f = extract_cycle_factor(d);
    if (!f) return py::none();
    py::list cycles;
    for (const auto& c : f->cycles) cycles.append(c.vertices);
    return cycles;
  });
  m.def("extract_partition_witness", [](const Digraph& d) {
    PartitionWitness w = extract_partition_witness(d);
    py::dict out;
    out["Y"] = w.y;
    out["Z"] = w.z;
    out["R1"] = w.r1;
    out["R2"] = w.r2;
    return out;
  });
  m.def("verify_partition_witness",
        [](const Digraph& d, const std::vector<int>& y,
           const std::vector<int>& z, const std::vector<int>& r1,
           const std::vector<int>& r2) {
          return verify_partition_witness(d, {y, z, r1, r2});
        },
        py::arg("d"), py::arg("y"), py::arg("z"), py::arg("r1"), py::arg("r2"));

  m.def("generate",
        [](const std::string& family) {
          return generate(FamilySpec::from_string(family));
        },
        py::arg("family"), "family spec string, e.g. 'phi:n=8,m=6'");
  m.def("phi_maximal", &phi_maximal, py::arg("n"), py::arg("m"));
  m.def("is_in_phi", &is_in_phi, py::arg("d"), py::arg("n"), py::arg("m"),
        py::arg("labeling"));
  m.def("sample_digraph", &sample_digraph, py::arg("n"), py::arg("seed"),
        py::arg("index"));
  m.def(
      "random_condition_m_digraph",
      [](int n, uint64_t seed, int pairs) -> py::object {
        auto d = random_condition_m_digraph(n, seed, pairs);
        if (!d) return py::none();
        return py::cast(*d);
      },
      py::arg("n"), py::arg("seed"), py::arg("nonadjacent_pairs"));

  m.def("registry_ids", [] {
    std::vector<std::string> ids;
    for (const auto& tc : theorem_registry()) ids.push_back(tc.id);
    return ids;
  });
  m.def(
      "verify_json",
      [](const std::string& theorem, int n, const std::string& mode,
         std::optional<uint64_t> samples, uint64_t seed, int pair_budget,
         const std::vector<std::string>& prefilter, int threads,
         const std::string& out_dir) {
        auto scope = make_scope(n, mode, samples, seed, pair_budget, prefilter);
        return verify(theorem, scope, {threads, out_dir}).to_json_string();
      },
      py::arg("theorem"), py::arg("n"), py::arg("mode") = "exhaustive",
      py::arg("samples") = py::none(), py::arg("seed") = 0,
      py::arg("pair_budget") = 3,
      py::arg("prefilter") = std::vector<std::string>{},
      py::arg("threads") = 1, py::arg("out_dir") = "",
      "run a registry theorem over a scope; returns the JSON report");
  m.def(
      "explore_problem_json",
      [](int n, const std::string& mode, std::optional<uint64_t> samples,
         uint64_t seed, int pair_budget, int threads,
         const std::string& out_dir) {
        auto scope = make_scope(n, mode, samples, seed, pair_budget, {});
        return explore_problem_1_17(scope, {threads, out_dir}).to_json_string();
      },
      py::arg("n"), py::arg("mode") = "complement",
      py::arg("samples") = py::none(), py::arg("seed") = 0,
      py::arg("pair_budget") = 3, py::arg("threads") = 1,
      py::arg("out_dir") = "",
      "search the open pancyclicity regime; returns the JSON report");
  m.def("find_remark_witness", [](int n) -> py::object {
    auto w = find_remark_witness(n);
    if (!w) return py::none();
    return py::cast(*w);
  });
  m.def(
      "find_factor_sharpness_exhibit",
      [](int n, int pair_budget) -> py::object {
        auto w = find_factor_sharpness_exhibit(n, pair_budget);
        if (!w) return py::none();
        return py::cast(*w);
      },
      py::arg("n"), py::arg("pair_budget") = 3);
}
