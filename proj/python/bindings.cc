// Copyright 2026 The divtree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "divtree/diversify.h"
#include "divtree/error.h"
#include "divtree/generate.h"
#include "divtree/instance.h"
#include "divtree/kernelizer.h"
#include "divtree/oracle.h"
#include "divtree/serialize.h"

namespace py = pybind11;

namespace divtree {
namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList ToPairs(const std::vector<Edge>& edges) {
  EdgeList out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<Edge> FromPairs(const EdgeList& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (const auto& [u, v] : pairs) out.push_back({u, v});
  return out;
}

std::vector<EdgeList> TreePairs(const std::vector<SpanningTree>& trees) {
  std::vector<EdgeList> out;
  for (const SpanningTree& t : trees) out.push_back(ToPairs(t.edges()));
  return out;
}

// Transcript entries cross the boundary as plain dicts.
py::object JsonToPython(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

KernelOptions Options(bool witness, const std::string& blackbox) {
  KernelOptions options;
  options.construct_witness = witness;
  if (blackbox == "none") {
    options.blackbox = BlackBox::None();
  } else if (blackbox != "exact") {
    throw PreconditionError("blackbox must be 'exact' or 'none'");
  }
  return options;
}

template <typename I>
void BindResult(py::module_& m, const char* name) {
  using R = KernelResult<I>;
  py::class_<R>(m, name)
      .def_property_readonly(
          "outcome", [](const R& r) { return std::string(OutcomeName(r.outcome)); })
      .def_readonly("instance", &R::instance)
      .def_readonly("reduced", &R::reduced)
      .def_readonly("reason", &R::reason)
      .def_readonly("bound_ok", &R::bound_ok)
      .def_property_readonly("transcript",
                             [](const R& r) {
                               py::list out;
                               for (const RuleApplication& a : r.transcript) {
                                 out.append(JsonToPython(ToJson(a)));
                               }
                               return out;
                             })
      .def_property_readonly("witness",
                             [](const R& r) { return TreePairs(r.witness); })
      .def("to_json", [](const R& r) { return ToJson(r).dump(); });
}

}  // namespace
}  // namespace divtree

PYBIND11_MODULE(_divtree, m) {
  using namespace divtree;
  m.doc() = "Kernelization for diverse constrained spanning trees.";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const EdgeList& edges) {
             return Graph::FromEdges(n, FromPairs(edges));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("m", &Graph::num_edges)
      .def_property_readonly("edges",
                             [](const Graph& g) { return ToPairs(g.edges()); })
      .def("degree", &Graph::degree)
      .def("is_connected", &Graph::IsConnected)
      .def("is_tree", &Graph::IsTree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("cycle", &CycleGraph);
  m.def("path", &PathGraph);
  m.def("complete", &CompleteGraph);
  m.def("cube_like", &CubeLike);
  m.def("subdivided", &Subdivided, py::arg("g"), py::arg("factor"));
  m.def("twin_pendant_gadget", &TwinPendantGadget, py::arg("g"),
        py::arg("count"));
  m.def("read_graph", [](const std::string& text) { return ReadGraph(text); });

  py::class_<Instance>(m, "Instance")
      .def(py::init([](const Graph& g, int p, int q, int k, int ell) {
             Instance inst{g, p, q, k, ell};
             inst.Validate();
             return inst;
           }),
           py::arg("graph"), py::arg("p") = 0, py::arg("q") = 0,
           py::arg("k") = 1, py::arg("ell") = 1)
      .def_readonly("graph", &Instance::graph)
      .def_readonly("p", &Instance::p)
      .def_readonly("q", &Instance::q)
      .def_readonly("k", &Instance::k)
      .def_readonly("ell", &Instance::ell)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("to_text", [](const Instance& i) { return WriteInstance(i); });

  py::class_<InstanceNT>(m, "InstanceNT")
      .def(py::init([](const Graph& g, std::vector<Vertex> nt, int p, int k,
                       int ell) {
             InstanceNT inst{g, MakeVertexSet(std::move(nt)), p, k, ell};
             inst.Validate();
             return inst;
           }),
           py::arg("graph"), py::arg("nonterminals") = std::vector<Vertex>{},
           py::arg("p") = 0, py::arg("k") = 1, py::arg("ell") = 1)
      .def_readonly("graph", &InstanceNT::graph)
      .def_readonly("nonterminals", &InstanceNT::nonterminals)
      .def_readonly("p", &InstanceNT::p)
      .def_readonly("k", &InstanceNT::k)
      .def_readonly("ell", &InstanceNT::ell)
      .def("__eq__",
           [](const InstanceNT& a, const InstanceNT& b) { return a == b; })
      .def("to_text", [](const InstanceNT& i) { return WriteInstance(i); });

  BindResult<Instance>(m, "LiKernelResult");
  BindResult<InstanceNT>(m, "LntKernelResult");

  m.def(
      "kernelize",
      [](const Instance& inst, bool witness, const std::string& blackbox) {
        return KernelizeLI(inst, Options(witness, blackbox));
      },
      py::arg("instance"), py::arg("witness") = false,
      py::arg("blackbox") = "exact");
  m.def(
      "kernelize",
      [](const InstanceNT& inst, bool witness, const std::string& blackbox) {
        return KernelizeLNT(inst, Options(witness, blackbox));
      },
      py::arg("instance"), py::arg("witness") = false,
      py::arg("blackbox") = "exact");

  // Returns (answer, witness trees).
  m.def(
      "solve",
      [](const Instance& inst, std::int64_t max_trees) {
        OracleVerdict v = SolveLI(inst, {.max_trees = max_trees});
        return py::make_tuple(std::string(AnswerName(v.answer)),
                              TreePairs(v.witness));
      },
      py::arg("instance"), py::arg("max_trees") = kDefaultTreeLimit);
  m.def(
      "solve",
      [](const InstanceNT& inst, std::int64_t max_trees) {
        OracleVerdict v = SolveLNT(inst, {.max_trees = max_trees});
        return py::make_tuple(std::string(AnswerName(v.answer)),
                              TreePairs(v.witness));
      },
      py::arg("instance"), py::arg("max_trees") = kDefaultTreeLimit);

  m.def(
      "verify_family",
      [](const Graph& g, const std::vector<EdgeList>& trees, int p, int q,
         int k, std::vector<Vertex> nt) {
        std::vector<std::vector<Edge>> family;
        for (const EdgeList& t : trees) family.push_back(FromPairs(t));
        return VerifyFamily(g, family, p, q, k, MakeVertexSet(std::move(nt)))
            .ok;
      },
      py::arg("graph"), py::arg("trees"), py::arg("p") = 0, py::arg("q") = 0,
      py::arg("k") = 1, py::arg("nonterminals") = std::vector<Vertex>{});
}
