#include "pairwalk/graph.hpp"

#include <string>

namespace pairwalk {

PairState::PairState(Vertex a, Vertex b) : a_(a), b_(b) {
  if (a == b) {
    throw InvalidArgument("pair state needs two distinct vertices, got {" + std::to_string(a) + "," +
                          std::to_string(b) + "}");
  }
}

int PairState::shared_with(const PairState& other) const {
  return static_cast<int>(other.contains(a_)) + static_cast<int>(other.contains(b_));
}

Eigen::VectorXd PairState::vector(std::size_t n) const {
  if (a_ >= n || b_ >= n) {
    throw InvalidArgument("pair state {" + std::to_string(a_) + "," + std::to_string(b_) +
                          "} out of range for " + std::to_string(n) + " vertices");
  }
  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  x(static_cast<Eigen::Index>(a_)) = 1.0;
  x(static_cast<Eigen::Index>(b_)) = -1.0;
  return x;
}

Graph::Graph(std::size_t n) : n_(n), weights_(n * n, 0.0) {}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
  std::vector<bool> seen(n * n, false);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    }
    if (seen[e.u * n + e.v]) {
      throw InvalidArgument("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    seen[e.u * n + e.v] = seen[e.v * n + e.u] = true;
    weights_[e.u * n + e.v] = weights_[e.v * n + e.u] = e.weight;
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for " + std::to_string(n_) +
                          " vertices");
  }
}

std::size_t Graph::edge_count() const {
  std::size_t count = 0;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (weights_[u * n_ + v] != 0.0) ++count;
  return count;
}

double Graph::weight(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return weights_[u * n_ + v];
}

double Graph::degree(Vertex v) const {
  check_vertex(v);
  double d = 0.0;
  for (Vertex u = 0; u < n_; ++u) d += weights_[v * n_ + u];
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (const double w = weights_[u * n_ + v]; w != 0.0) out.push_back({u, v, w});
  return out;
}

Graph Graph::with_weight_added(Vertex a, Vertex b, double delta) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw InvalidArgument("cannot perturb a self-loop at vertex " + std::to_string(a));
  Graph out = *this;
  const double w = weights_[a * n_ + b] + delta;
  out.weights_[a * n_ + b] = out.weights_[b * n_ + a] = w;
  return out;
}

Eigen::MatrixXd laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    lap(u, v) -= e.weight;
    lap(v, u) -= e.weight;
    lap(u, u) += e.weight;
    lap(v, v) += e.weight;
  }
  return lap;
}

std::vector<std::pair<Vertex, double>> neighbors(const Graph& g, Vertex v) {
  std::vector<std::pair<Vertex, double>> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (const double w = g.weight(v, u); w != 0.0) out.emplace_back(u, w);
  }
  return out;
}

bool are_twins(const Graph& g, Vertex a, Vertex b) {
  if (a == b) throw InvalidArgument("twin test needs two distinct vertices, got " + std::to_string(a) + " twice");
  if (a >= g.order() || b >= g.order()) {
    throw InvalidArgument("twin test vertex out of range for " + std::to_string(g.order()) + " vertices");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == a || v == b) continue;
    if (g.weight(a, v) != g.weight(b, v)) return false;
  }
  return true;
}

std::vector<PairState> all_twin_pairs(const Graph& g) {
  std::vector<PairState> out;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      if (are_twins(g, a, b)) out.emplace_back(a, b);
  return out;
}

Graph perturb(const Graph& g, const Perturbation& p) {
  if (p.alpha == 0.0) return g;
  return g.with_weight_added(p.pair.a(), p.pair.b(), p.alpha);
}

}  // namespace pairwalk
