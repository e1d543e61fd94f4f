// Copyright 2026 The corfl Authors
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

// Python bindings. Matrices cross the boundary as 2-D float64 numpy arrays,
// index sets as lists of ints.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "corfl/candidates.hpp"
#include "corfl/config.hpp"
#include "corfl/error.hpp"
#include "corfl/graph.hpp"
#include "corfl/objective.hpp"
#include "corfl/optimizer.hpp"
#include "corfl/ped.hpp"
#include "corfl/pipeline.hpp"
#include "corfl/synth.hpp"

namespace py = pybind11;

namespace corfl {
namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

SquareMatrix ToMatrix(const Array& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw Error(ErrorCode::kNonSquare, "expected a square 2-D array");
  }
  const auto m = static_cast<std::size_t>(a.shape(0));
  return SquareMatrix(m, std::vector<double>(a.data(), a.data() + m * m));
}

Array FromMatrix(const SquareMatrix& s) {
  const auto m = static_cast<py::ssize_t>(s.size());
  Array out({m, m});
  std::copy(s.values().begin(), s.values().end(), out.mutable_data());
  return out;
}

DescriptorSet ToDescriptors(const Array& a) {
  if (a.ndim() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "expected an (n, dim) array");
  }
  const auto n = static_cast<std::size_t>(a.shape(0));
  const auto dim = static_cast<std::size_t>(a.shape(1));
  return DescriptorSet(dim, std::vector<double>(a.data(), a.data() + n * dim));
}

RunConfig ToConfig(const py::dict& overrides) {
  RunConfig config;
  for (const auto& [key, value] : overrides) {
    std::string text;
    if (py::isinstance<py::bool_>(value)) {
      text = value.cast<bool>() ? "true" : "false";
    } else if (py::isinstance<py::list>(value) || py::isinstance<py::tuple>(value)) {
      for (const auto& item : value) {
        if (!text.empty()) text += ",";
        text += py::str(item).cast<std::string>();
      }
    } else {
      text = py::str(value).cast<std::string>();
    }
    config.Set(key.cast<std::string>(), text);
  }
  return config;
}

// Owns everything an Objective points at.
class PyObjective {
 public:
  PyObjective(const SimilarityGraph& graph, std::vector<std::uint32_t> groups,
              std::optional<std::vector<double>> bias, double tau,
              double lambda1, double lambda2)
      : graph_(graph),
        groups_(GroupIndex::FromAssignments(std::move(groups))),
        bias_(bias ? CenterBias(*bias) : CenterBias::Zeros(graph.size())),
        objective_(graph_, groups_, bias_, {tau, lambda1, lambda2}) {}

  const Objective& get() const { return objective_; }

 private:
  SimilarityGraph graph_;
  GroupIndex groups_;
  CenterBias bias_;
  Objective objective_;
};

}  // namespace
}  // namespace corfl

PYBIND11_MODULE(_corfl, m) {
  using namespace corfl;
  m.doc() = "Greedy co-selection of image regions over a similarity graph.";

  // Kept alive for the lifetime of the interpreter.
  static PyObject* error_type =
      PyErr_NewException("corfl._corfl.Error", PyExc_ValueError, nullptr);
  m.attr("Error") = py::reinterpret_borrow<py::object>(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<SimilarityGraph>(m, "SimilarityGraph")
      .def(py::init([](const Array& w) {
             return SimilarityGraph::FromDense(ToMatrix(w));
           }),
           py::arg("weights"))
      .def_property_readonly("size", &SimilarityGraph::size)
      .def_property_readonly("total", &SimilarityGraph::total)
      .def_property_readonly("row_sums",
                             [](const SimilarityGraph& g) {
                               return std::vector<double>(g.row_sums().begin(),
                                                          g.row_sums().end());
                             })
      .def_property_readonly("weights",
                             [](const SimilarityGraph& g) { return FromMatrix(g.weights()); })
      .def("__len__", &SimilarityGraph::size);

  py::class_<SelectionResult>(m, "SelectionResult")
      .def_readonly("chosen", &SelectionResult::chosen)
      .def_readonly("gains", &SelectionResult::gains)
      .def_readonly("objective_trace", &SelectionResult::objective_trace)
      .def_readonly("evaluations", &SelectionResult::evaluations)
      .def("__eq__", [](const SelectionResult& a, const SelectionResult& b) { return a == b; })
      .def("__repr__", [](const SelectionResult& r) {
        return "SelectionResult(chosen=" + py::repr(py::cast(r.chosen)).cast<std::string>() +
               ", evaluations=" + std::to_string(r.evaluations) + ")";
      });

  py::class_<PyObjective>(m, "Objective")
      .def(py::init<const SimilarityGraph&, std::vector<std::uint32_t>,
                    std::optional<std::vector<double>>, double, double, double>(),
           py::arg("graph"), py::arg("groups"), py::arg("bias") = py::none(),
           py::arg("tau") = 2.0, py::arg("lambda1") = 100.0, py::arg("lambda2") = 0.0)
      .def_property_readonly("mu", [](const PyObjective& o) { return o.get().mu(); })
      .def("evaluate",
           [](const PyObjective& o, const std::vector<Index>& a) { return o.get().Evaluate(a); },
           py::arg("selected"))
      .def("gain",
           [](const PyObjective& o, const std::vector<Index>& a, Index e) {
             return o.get().Gain(o.get().StateOf(a), e);
           },
           py::arg("selected"), py::arg("candidate"))
      .def("greedy_naive", [](const PyObjective& o, std::size_t k) { return GreedyNaive(o.get(), k); },
           py::arg("k"))
      .def("greedy_lazy", [](const PyObjective& o, std::size_t k) { return GreedyLazy(o.get(), k); },
           py::arg("k"));

  m.def("eval_h_direct",
        [](const SimilarityGraph& g, const std::vector<Index>& a, double tau) {
          return EvalHDirect(g, {tau, 0.0, 0.0}, a);
        },
        py::arg("graph"), py::arg("selected"), py::arg("tau") = 2.0);
  m.def("eval_h_closed",
        [](double mass, double tau) { return EvalHClosed({tau, 0.0, 0.0}, mass); },
        py::arg("rowsum_mass"), py::arg("tau") = 2.0);

  m.def("center_bias",
        [](const std::vector<std::pair<double, double>>& centers,
           std::vector<std::uint32_t> groups,
           const std::vector<std::pair<double, double>>& image_sizes, double sigma_c) {
          std::vector<Point2> pts;
          for (auto [x, y] : centers) pts.push_back({x, y});
          std::vector<ImageSize> dims;
          for (auto [w, h] : image_sizes) dims.push_back({w, h});
          const GroupIndex g(std::move(groups), dims.size());
          const CenterBias q = CenterBiasFromPositions(pts, g, dims, sigma_c);
          return std::vector<double>(q.values().begin(), q.values().end());
        },
        py::arg("centers"), py::arg("groups"), py::arg("image_sizes"),
        py::arg("sigma_c") = kDefaultCenterSigma);

  m.def("set_distance",
        [](const Array& x, const Array& y, double d_empty) {
          return SetDistance(ToDescriptors(x), ToDescriptors(y), d_empty);
        },
        py::arg("x"), py::arg("y"), py::arg("d_empty") = kDefaultEmptyCellDistance);
  m.def("kernelize", py::vectorize([](double d, double sigma) { return Kernelize(d, sigma); }),
        py::arg("distance"), py::arg("sigma") = kDefaultKernelSigma);
  m.def("kernelize_matrix",
        [](const Array& d, double sigma) { return FromMatrix(KernelizeMatrix(ToMatrix(d), sigma)); },
        py::arg("distances"), py::arg("sigma") = kDefaultKernelSigma);
  m.def("sparsify_knn",
        [](const Array& s, std::size_t k) { return FromMatrix(SparsifyKnn(ToMatrix(s), k)); },
        py::arg("similarities"), py::arg("k"));
  m.def("sparsify_eps",
        [](const Array& s, double t) { return FromMatrix(SparsifyEps(ToMatrix(s), t)); },
        py::arg("similarities"), py::arg("threshold"));
  m.def("pairwise_smooth",
        [](const Array& d, std::vector<std::uint32_t> groups, std::size_t m_keep) {
          const GroupIndex g = GroupIndex::FromAssignments(std::move(groups));
          return FromMatrix(PairwiseSmooth(ToMatrix(d), g, m_keep));
        },
        py::arg("distances"), py::arg("groups"), py::arg("m_keep") = 3);

  m.def("make_templates",
        [](int w, int h, std::vector<double> scales, int anchors) {
          std::vector<std::tuple<int, int, int, int>> out;
          for (const Rect& r : MakeTemplates(w, h, {std::move(scales), anchors})) {
            out.emplace_back(r.x0, r.y0, r.w, r.h);
          }
          return out;
        },
        py::arg("width"), py::arg("height"),
        py::arg("scales") = TemplateConfig{}.scales, py::arg("anchors") = 8);

  m.def("generate_synthetic",
        [](std::uint64_t seed, std::size_t per_cluster, double std) {
          const SyntheticInstance s = GenerateSynthetic({seed, per_cluster, std});
          Array pts({static_cast<py::ssize_t>(s.points.size()), py::ssize_t{2}});
          auto v = pts.mutable_unchecked<2>();
          for (std::size_t i = 0; i < s.points.size(); ++i) {
            v(i, 0) = s.points[i].x;
            v(i, 1) = s.points[i].y;
          }
          const auto a = s.clusters.assignments();
          return py::make_tuple(pts, std::vector<std::uint32_t>(a.begin(), a.end()));
        },
        py::arg("seed") = 42, py::arg("per_cluster") = 60, py::arg("std") = 0.35);
  m.def("run_demo",
        [](std::uint64_t seed, std::size_t per_cluster, double std, std::size_t k,
           double tau, double lambda1, double sigma, bool gain_field) {
          const SyntheticInstance s = GenerateSynthetic({seed, per_cluster, std});
          DemoParams p;
          p.k = k;
          p.tau = tau;
          p.lambda1 = lambda1;
          p.sigma = sigma;
          p.record_gain_field = gain_field;
          DemoResult r = RunDemo(s, p);
          return py::make_tuple(r.selection, r.gain_field);
        },
        py::arg("seed") = 42, py::arg("per_cluster") = 60, py::arg("std") = 0.35,
        py::arg("k") = 6, py::arg("tau") = 2.0, py::arg("lambda1") = 2.0,
        py::arg("sigma") = 0.3, py::arg("gain_field") = false);

  m.def("run_synth",
        [](const std::filesystem::path& out, const py::dict& config) {
          RunSynthCommand(ToConfig(config), out);
        },
        py::arg("out_dir"), py::arg("config") = py::dict());
  m.def("run_select",
        [](const std::filesystem::path& manifest, const std::filesystem::path& out,
           std::optional<std::string> category, const py::dict& config, unsigned threads) {
          RunSelectCommand(manifest, category, ToConfig(config), out, threads);
        },
        py::arg("manifest"), py::arg("out_dir"), py::arg("category") = py::none(),
        py::arg("config") = py::dict(), py::arg("threads") = 0);
  m.def("run_classify",
        [](const std::filesystem::path& manifest, const std::filesystem::path& selections,
           const std::filesystem::path& queries, const std::filesystem::path& out,
           const py::dict& config, bool use_index) {
          return RunClassifyCommand(manifest, selections, queries, ToConfig(config), out,
                                    use_index);
        },
        py::arg("manifest"), py::arg("selections"), py::arg("queries"), py::arg("out_dir"),
        py::arg("config") = py::dict(), py::arg("use_index") = true);
}
