#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pairwalk/families.hpp"
#include "pairwalk/graph.hpp"
#include "pairwalk/io.hpp"
#include "pairwalk/spectral.hpp"
#include "pairwalk/transfer.hpp"

namespace py = pybind11;
using namespace pairwalk;

namespace {

std::vector<Edge> edges_from_tuples(const std::vector<std::tuple<Vertex, Vertex, double>>& tuples) {
  std::vector<Edge> out;
  out.reserve(tuples.size());
  for (const auto& [u, v, w] : tuples) out.push_back({u, v, w});
  return out;
}

py::tuple instance_tuple(const PerturbedInstance& inst) { return py::make_tuple(inst.graph, inst.certificates); }

}  // namespace

PYBIND11_MODULE(_pairwalk, m) {
  m.doc() = "Laplacian pair state transfer on weighted graphs";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_ArithmeticError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  py::class_<PairState>(m, "PairState")
      .def(py::init<Vertex, Vertex>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("a", &PairState::a)
      .def_property_readonly("b", &PairState::b)
      .def("canonical", &PairState::canonical)
      .def("__eq__", [](const PairState& x, const PairState& y) { return x == y; })
      .def("__hash__", [](const PairState& p) { return std::hash<PairState>{}(p); })
      .def("__repr__", [](const PairState& p) {
        return "PairState(" + std::to_string(p.a()) + ", " + std::to_string(p.b()) + ")";
      });

  py::class_<Perturbation>(m, "Perturbation")
      .def(py::init<PairState, double>(), py::arg("pair"), py::arg("alpha"))
      .def_readonly("pair", &Perturbation::pair)
      .def_readonly("alpha", &Perturbation::alpha);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n") = 0)
      .def(py::init([](std::size_t n, const std::vector<std::tuple<Vertex, Vertex, double>>& edges) {
             return Graph(n, edges_from_tuples(edges));
           }),
           py::arg("n"), py::arg("edges"), "Edges as (u, v, weight) tuples")
      .def_property_readonly("n", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("weight", &Graph::weight)
      .def("degree", &Graph::degree)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::tuple<Vertex, Vertex, double>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.weight);
             return out;
           })
      .def("to_json", [](const Graph& g) { return io::dump_graph(g); })
      .def_static("from_json", [](const std::string& s) { return io::parse_graph(s); })
      .def("__eq__", [](const Graph& x, const Graph& y) { return x == y; });

  m.def("laplacian", &laplacian);
  m.def("neighbors", &neighbors);
  m.def("are_twins", &are_twins);
  m.def("all_twin_pairs", &all_twin_pairs);
  m.def("perturb", &perturb);

  py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
      .def_static("decompose", [](const Eigen::MatrixXd& l) { return SpectralDecomposition::decompose(l); })
      .def_static("of", &SpectralDecomposition::of)
      .def_property_readonly("eigenvalues", &SpectralDecomposition::eigenvalues)
      .def_property_readonly("eigenvectors", &SpectralDecomposition::eigenvectors)
      .def("evolve", py::overload_cast<double, const ComplexVector&>(&SpectralDecomposition::evolve, py::const_))
      .def("transition_matrix", &SpectralDecomposition::transition_matrix);

  py::class_<PairOverlap>(m, "PairOverlap")
      .def_readonly("fidelity", &PairOverlap::fidelity)
      .def_readonly("phase", &PairOverlap::phase);
  m.def("pair_fidelity", &pair_fidelity, py::arg("decomposition"), py::arg("t"), py::arg("src"), py::arg("dst"));

  py::class_<Lemma1Check>(m, "Lemma1Check")
      .def_readonly("residual", &Lemma1Check::residual)
      .def_readonly("passed", &Lemma1Check::pass);
  m.def("verify_lemma1", &verify_lemma1, py::arg("graph"), py::arg("perturbation"), py::arg("t"),
        py::arg("tol") = 1e-9);
  m.def("twin_factorization_residual", &twin_factorization_residual);

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init([](double horizon, int grid_points, int refine_iterations, double epsilon) {
             SearchConfig cfg{horizon, grid_points, refine_iterations, epsilon};
             cfg.validate();
             return cfg;
           }),
           py::arg("horizon") = 50.0, py::arg("grid_points") = 20001, py::arg("refine_iterations") = 60,
           py::arg("epsilon") = 0.01)
      .def_readonly("horizon", &SearchConfig::horizon)
      .def_readonly("grid_points", &SearchConfig::grid_points)
      .def_readonly("refine_iterations", &SearchConfig::refine_iterations)
      .def_readonly("epsilon", &SearchConfig::epsilon);

  py::class_<TransferCertificate>(m, "TransferCertificate")
      .def_readonly("src", &TransferCertificate::src)
      .def_readonly("dst", &TransferCertificate::dst)
      .def_readonly("time", &TransferCertificate::time)
      .def_readonly("fidelity", &TransferCertificate::fidelity)
      .def_readonly("phase", &TransferCertificate::phase)
      .def_property_readonly("method", [](const TransferCertificate& c) { return std::string(method_tag(c.method)); })
      .def_readonly("tolerance", &TransferCertificate::tolerance)
      .def_readonly("verdict", &TransferCertificate::verdict)
      .def("to_json", [](const TransferCertificate& c) { return io::certificate_to_json(c).dump(); });

  py::class_<NoTransferScan>(m, "NoTransferScan")
      .def_readonly("max_offpair_fidelity", &NoTransferScan::max_offpair_fidelity)
      .def_readonly("argmax", &NoTransferScan::argmax)
      .def_readonly("passed", &NoTransferScan::pass);

  m.def("check_pair_lpst", &check_pair_lpst, py::arg("graph"), py::arg("src"), py::arg("dst"), py::arg("tau"),
        py::arg("tol") = kLpstTolerance);
  m.def("check_no_lpst_twin_pair", &check_no_lpst_twin_pair, py::arg("graph"), py::arg("perturbation"),
        py::arg("tau"), py::arg("margin") = kNoLpstMargin);
  m.def("apply_lpst_preservation", &apply_lpst_preservation);
  m.def(
      "apply_periodicity_to_lpst",
      [](const Graph& g, const Perturbation& p, const std::vector<PairState>& pairs, double tau, double tol) {
        return instance_tuple(apply_periodicity_to_lpst(g, p, pairs, tau, tol));
      },
      py::arg("graph"), py::arg("perturbation"), py::arg("periodic_pairs"), py::arg("tau"),
      py::arg("tol") = kLpstTolerance);
  m.def("construct_kn_minus_edge",
        [](std::size_t n, Vertex a, Vertex b) { return instance_tuple(construct_kn_minus_edge(n, a, b)); });
  m.def("construct_kn_minus_matching",
        [](std::size_t n, const std::vector<PairState>& matching, const PairState& target) {
          return instance_tuple(construct_kn_minus_matching(n, matching, target));
        });
  m.def("search_pgst", &search_pgst, py::arg("graph"), py::arg("src"), py::arg("dst"),
        py::arg("config") = SearchConfig{});
  m.def("apply_pgst_preservation", &apply_pgst_preservation, py::arg("graph"), py::arg("perturbation"),
        py::arg("src"), py::arg("dst"), py::arg("config") = SearchConfig{});
  m.def(
      "scan_fidelity",
      [](const Graph& g, const PairState& src, const PairState& dst, double t0, double t1, int steps) {
        std::vector<std::pair<double, double>> out;
        for (const auto& s : scan_fidelity(g, src, dst, t0, t1, steps)) out.emplace_back(s.time, s.fidelity);
        return out;
      },
      py::arg("graph"), py::arg("src"), py::arg("dst"), py::arg("t0"), py::arg("t1"), py::arg("steps"));

  m.def("complete_graph", &complete_graph);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("circulant", &circulant);
  m.def("cycle", &cycle);
  m.def("path", &path);
  m.def("kn_minus_matching", &kn_minus_matching);
  m.def("parse_time", &io::parse_time);
}
