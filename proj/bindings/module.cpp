// Python bindings for the core operations. Density thresholds cross the
// boundary as decimal strings so they stay exact.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "edqc/ablation.hpp"
#include "edqc/analysis.hpp"
#include "edqc/driver.hpp"
#include "edqc/extraction.hpp"
#include "edqc/io.hpp"
#include "edqc/oracle.hpp"

namespace py = pybind11;
using namespace edqc;

namespace {

ExactGamma gamma_from(const std::string& text) { return ExactGamma::parse(text); }

RunConfig config_from(const std::string& gamma, unsigned steps, double theta, double timeout,
                      std::uint64_t seed, unsigned workers) {
  RunConfig cfg;
  cfg.gamma = gamma_from(gamma);
  cfg.params.steps = steps;
  cfg.params.theta = theta;
  cfg.budget_seconds = timeout;
  cfg.seed = seed;
  cfg.workers = workers;
  cfg.validate();
  return cfg;
}

Variant variant_from(const std::string& name) {
  auto v = variant_from_name(name);
  if (!v) throw std::invalid_argument("unknown variant: '" + name + "'");
  return *v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Energy-diffusion quasi-clique discovery";

  py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
  py::register_exception<IoError>(m, "GraphIoError", PyExc_OSError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("degree", &Graph::degree, py::arg("v"))
      .def(
          "neighbors",
          [](const Graph& g, VertexId v) {
            auto nbrs = g.neighbors(v);
            return std::vector<VertexId>(nbrs.begin(), nbrs.end());
          },
          py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("original_label", &Graph::original_label, py::arg("v"))
      .def("edge_list", &Graph::edge_list)
      .def("__repr__", [](const Graph& g) {
        std::ostringstream ss;
        ss << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
        return ss.str();
      });

  py::class_<DiffusionParams>(m, "DiffusionParams")
      .def(py::init([](unsigned steps, double theta) {
             DiffusionParams p{steps, theta};
             p.validate();
             return p;
           }),
           py::arg("steps") = 3, py::arg("theta") = 0.001)
      .def_readonly("steps", &DiffusionParams::steps)
      .def_readonly("theta", &DiffusionParams::theta);

  py::class_<EnergyMap>(m, "EnergyMap")
      .def(py::init<>())
      .def(py::init([](std::vector<std::pair<VertexId, double>> entries) {
             std::sort(entries.begin(), entries.end());
             return EnergyMap(std::move(entries));
           }),
           py::arg("entries"))
      .def("at", &EnergyMap::at, py::arg("v"))
      .def("total", &EnergyMap::total)
      .def_property_readonly("support_size", &EnergyMap::support_size)
      .def("entries", &EnergyMap::entries);

  py::class_<ExtractionResult>(m, "ExtractionResult")
      .def_readonly("vertices", &ExtractionResult::vertices)
      .def_readonly("internal_edges", &ExtractionResult::internal_edges)
      .def_readonly("breakpoint", &ExtractionResult::breakpoint)
      .def_property_readonly("density",
                             [](const ExtractionResult& r) { return r.density.value(); })
      .def_property_readonly("density_exact", [](const ExtractionResult& r) {
        return std::make_pair(r.density.num, r.density.den);
      });

  py::class_<QuasiCliqueResult>(m, "QuasiCliqueResult")
      .def_readonly("vertices", &QuasiCliqueResult::vertices)
      .def_readonly("internal_edges", &QuasiCliqueResult::internal_edges)
      .def_readonly("size", &QuasiCliqueResult::size)
      .def_readonly("source", &QuasiCliqueResult::source)
      .def_readonly("elapsed_seconds", &QuasiCliqueResult::elapsed_seconds)
      .def_readonly("sources_processed", &QuasiCliqueResult::sources_processed)
      .def_property_readonly("density",
                             [](const QuasiCliqueResult& r) { return r.density.value(); })
      .def("__repr__", [](const QuasiCliqueResult& r) {
        std::ostringstream ss;
        ss << "QuasiCliqueResult(size=" << r.size << ", density=" << r.density.value() << ")";
        return ss.str();
      });

  py::class_<RunSummary>(m, "RunSummary")
      .def_readonly("mean_size", &RunSummary::mean_size)
      .def_readonly("stddev_size", &RunSummary::stddev_size)
      .def_readonly("runs", &RunSummary::runs);

  py::class_<CorrelationReport>(m, "CorrelationReport")
      .def_readonly("samples", &CorrelationReport::samples)
      .def_readonly("pearson_r", &CorrelationReport::pearson_r)
      .def_readonly("subset_size", &CorrelationReport::subset_size)
      .def_readonly("reference", &CorrelationReport::reference)
      .def_readonly("source", &CorrelationReport::source);

  py::class_<SweepTable>(m, "SweepTable")
      .def_readonly("steps", &SweepTable::steps)
      .def_readonly("thetas", &SweepTable::thetas)
      .def_readonly("mean_sizes", &SweepTable::mean_sizes);

  m.def(
      "build_graph",
      [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
        return Graph::from_edges(edges);
      },
      py::arg("edges"));
  m.def("load_graph", &load_graph, py::arg("path"));
  m.def(
      "write_graph",
      [](const Graph& g, const std::string& path, const std::string& format) {
        std::ofstream out(path);
        if (!out) throw IoError("cannot write '" + path + "'");
        if (format == "mtx")
          write_matrix_market(g, out);
        else if (format == "edgelist")
          write_edge_list(g, out);
        else
          throw std::invalid_argument("format must be 'mtx' or 'edgelist'");
      },
      py::arg("graph"), py::arg("path"), py::arg("format") = "mtx");
  m.def("gen_er", &gen_er, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("gen_planted_clique", &gen_planted_clique, py::arg("n"), py::arg("p"),
        py::arg("clique_size"), py::arg("seed"));
  m.def("graph_from_spec", &graph_from_spec, py::arg("spec"));

  m.def(
      "subset_density",
      [](const Graph& g, const std::vector<VertexId>& s) {
        Rational d = subset_density(g, s);
        return std::make_pair(d.num, d.den);
      },
      py::arg("graph"), py::arg("vertices"));

  m.def(
      "energy_diffusion",
      [](const Graph& g, VertexId source, unsigned steps, double theta, std::uint64_t seed) {
        DiffusionParams params{steps, theta};
        return energy_diffusion(g, source, params, seed);
      },
      py::arg("graph"), py::arg("source"), py::arg("steps") = 3, py::arg("theta") = 0.001,
      py::arg("seed") = 1);
  m.def(
      "diffusion_round",
      [](const Graph& g, const EnergyMap& f, const std::vector<VertexId>& active,
         std::uint64_t seed) {
        RandomStream rng(seed);
        return diffusion_round(g, f, active, rng);
      },
      py::arg("graph"), py::arg("f"), py::arg("active"), py::arg("seed"));
  m.def("active_set", &active_set, py::arg("f"), py::arg("theta"));
  m.def(
      "spectral_breakpoint",
      [](const std::vector<double>& energies) { return spectral_breakpoint(energies); },
      py::arg("energies_desc"));
  m.def(
      "extract_quasi_clique",
      [](const Graph& g, const EnergyMap& f, const std::string& gamma, double theta) {
        return extract_quasi_clique(g, f, gamma_from(gamma), theta);
      },
      py::arg("graph"), py::arg("f"), py::arg("gamma"), py::arg("theta") = 0.001);
  m.def(
      "extract_greedy_prefix",
      [](const Graph& g, const EnergyMap& f, const std::string& gamma, double theta) {
        return extract_greedy_prefix(g, f, gamma_from(gamma), theta);
      },
      py::arg("graph"), py::arg("f"), py::arg("gamma"), py::arg("theta") = 0.001);

  m.def("degree_order", &degree_order, py::arg("graph"));
  m.def(
      "edqc",
      [](const Graph& g, const std::string& gamma, unsigned steps, double theta, double timeout,
         std::uint64_t seed, unsigned workers) {
        return edqc::edqc(g, config_from(gamma, steps, theta, timeout, seed, workers));
      },
      py::arg("graph"), py::arg("gamma"), py::arg("steps") = 3, py::arg("theta") = 0.001,
      py::arg("timeout") = 60.0, py::arg("seed") = 1, py::arg("workers") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "run_many",
      [](const Graph& g, const std::string& gamma, std::size_t runs, unsigned steps, double theta,
         double timeout, std::uint64_t seed, unsigned workers) {
        return run_many(g, config_from(gamma, steps, theta, timeout, seed, workers), runs);
      },
      py::arg("graph"), py::arg("gamma"), py::arg("runs") = 1, py::arg("steps") = 3,
      py::arg("theta") = 0.001, py::arg("timeout") = 60.0, py::arg("seed") = 1,
      py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "run_variant",
      [](const Graph& g, const std::string& variant, const std::string& gamma, unsigned steps,
         double theta, double timeout, std::uint64_t seed, unsigned workers) {
        return run_variant(g, config_from(gamma, steps, theta, timeout, seed, workers),
                           variant_from(variant));
      },
      py::arg("graph"), py::arg("variant"), py::arg("gamma"), py::arg("steps") = 3,
      py::arg("theta") = 0.001, py::arg("timeout") = 60.0, py::arg("seed") = 1,
      py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "run_variant_many",
      [](const Graph& g, const std::string& variant, const std::string& gamma, std::size_t runs,
         unsigned steps, double theta, double timeout, std::uint64_t seed, unsigned workers) {
        return run_variant_many(g, config_from(gamma, steps, theta, timeout, seed, workers),
                                variant_from(variant), runs);
      },
      py::arg("graph"), py::arg("variant"), py::arg("gamma"), py::arg("runs") = 1,
      py::arg("steps") = 3, py::arg("theta") = 0.001, py::arg("timeout") = 60.0,
      py::arg("seed") = 1, py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());

  m.def(
      "is_quasi_clique",
      [](const Graph& g, const std::vector<VertexId>& s, const std::string& gamma) {
        return is_quasi_clique(g, s, gamma_from(gamma));
      },
      py::arg("graph"), py::arg("vertices"), py::arg("gamma"));
  m.def(
      "max_quasi_clique_bruteforce",
      [](const Graph& g, const std::string& gamma) {
        return max_quasi_clique_bruteforce(g, gamma_from(gamma));
      },
      py::arg("graph"), py::arg("gamma"));

  m.def(
      "pearson",
      [](const std::vector<double>& xs, const std::vector<double>& ys) {
        return pearson(xs, ys);
      },
      py::arg("xs"), py::arg("ys"));
  m.def(
      "sample_subset_stats",
      [](const Graph& g, const EnergyMap& f, std::size_t k, std::size_t count,
         std::uint64_t seed) { return sample_subset_stats(g, f, k, count, seed); },
      py::arg("graph"), py::arg("f"), py::arg("k"), py::arg("count"), py::arg("seed") = 1);
  m.def(
      "subset_energy_density_samples",
      [](const Graph& g, const EnergyMap& f, std::size_t k, std::size_t count, std::uint64_t seed,
         const std::vector<VertexId>& reference) {
        return subset_energy_density_samples(g, f, k, count, seed, reference);
      },
      py::arg("graph"), py::arg("f"), py::arg("k"), py::arg("count"), py::arg("seed") = 1,
      py::arg("reference") = std::vector<VertexId>{});
  m.def(
      "energy_density_correlation",
      [](const Graph& g, const std::string& gamma, std::size_t count, unsigned steps, double theta,
         double timeout, std::uint64_t seed, unsigned workers) {
        return energy_density_correlation(g, config_from(gamma, steps, theta, timeout, seed,
                                                         workers),
                                          count);
      },
      py::arg("graph"), py::arg("gamma"), py::arg("count") = 1000, py::arg("steps") = 3,
      py::arg("theta") = 0.001, py::arg("timeout") = 60.0, py::arg("seed") = 1,
      py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "parameter_sweep",
      [](const Graph& g, const std::string& gamma, const std::vector<unsigned>& steps_grid,
         const std::vector<double>& theta_grid, std::size_t runs, double timeout,
         std::uint64_t seed, unsigned workers) {
        return parameter_sweep(g, config_from(gamma, 3, 0.001, timeout, seed, workers),
                               steps_grid, theta_grid, runs);
      },
      py::arg("graph"), py::arg("gamma"),
      py::arg("steps_grid") = std::vector<unsigned>{1, 2, 3},
      py::arg("theta_grid") = std::vector<double>{0.0001, 0.0005, 0.001, 0.005, 0.01},
      py::arg("runs") = 1, py::arg("timeout") = 60.0, py::arg("seed") = 1, py::arg("workers") = 1,
      py::call_guard<py::gil_scoped_release>());
}
