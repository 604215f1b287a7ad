#pragma once

// Test-only reference computations. Nothing here calls the library's
// eigensolver or evolution code.

#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pairwalk/graph.hpp"

namespace pairwalk::testing {

/// exp(-i t L) in long double: a truncated Taylor series for exp(-i t L / 2^s)
/// with ||t L|| / 2^s <= 1/2, squared s times. The order K is the first one with
/// ||x||^(K+1)/(K+1)! < 1e-18 for the scaled argument.
inline Eigen::MatrixXcd taylor_transition(const Eigen::MatrixXd& lap, double t) {
  using LComplex = std::complex<long double>;
  using LMatrix = std::vector<std::vector<LComplex>>;
  const auto n = lap.rows();
  long double norm = static_cast<long double>((t * lap).cwiseAbs().rowwise().sum().maxCoeff());
  int squarings = 0;
  long double scale = 1.0L;
  while (norm > 0.5L) {
    norm /= 2.0L;
    scale /= 2.0L;
    ++squarings;
  }

  int order = 0;
  long double bound = norm;  // norm^(K+1)/(K+1)! at K = 0
  while (!(bound < 1e-18L)) {
    ++order;
    bound *= norm / static_cast<long double>(order + 1);
  }

  auto multiply = [n](const LMatrix& x, const LMatrix& y) {
    LMatrix out(n, std::vector<LComplex>(n));
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        LComplex acc = 0.0L;
        for (Eigen::Index m = 0; m < n; ++m) acc += x[i][m] * y[m][j];
        out[i][j] = acc;
      }
    return out;
  };

  LMatrix a(n, std::vector<LComplex>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a[i][j] = LComplex(0.0L, -static_cast<long double>(t) * static_cast<long double>(lap(i, j)) * scale);

  LMatrix term(n, std::vector<LComplex>(n));
  for (Eigen::Index i = 0; i < n; ++i) term[i][i] = 1.0L;
  LMatrix sum = term;
  for (int k = 1; k <= order; ++k) {
    term = multiply(term, a);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        term[i][j] /= static_cast<long double>(k);
        sum[i][j] += term[i][j];
      }
  }
  for (int s = 0; s < squarings; ++s) sum = multiply(sum, sum);

  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = {static_cast<double>(sum[i][j].real()), static_cast<double>(sum[i][j].imag())};
  return out;
}

/// Twin test straight from the definition, via the edge list: the weighted
/// neighbourhoods of a and b agree once each other is removed.
inline bool brute_force_twins(const Graph& g, Vertex a, Vertex b) {
  std::map<Vertex, double> na, nb;
  for (const auto& e : g.edges()) {
    if (e.u == a && e.v != b) na[e.v] = e.weight;
    if (e.v == a && e.u != b) na[e.u] = e.weight;
    if (e.u == b && e.v != a) nb[e.v] = e.weight;
    if (e.v == b && e.u != a) nb[e.u] = e.weight;
  }
  return na == nb;
}

/// M = (e_a - e_b)(e_a - e_b)^T, materialized.
inline Eigen::MatrixXd pair_projector(std::size_t n, const PairState& p) {
  const Eigen::VectorXd v = p.vector(n);
  return v * v.transpose();
}

/// Weights drawn from {0, 1/2, 1, 3/2, 2}, exact in binary.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double density = 0.6) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> halves(1, 4);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < density) edges.push_back({u, v, 0.5 * halves(rng)});
  return Graph(n, edges);
}

/// Random graph in which b is made a twin of a by copying a's weights.
/// The a-b edge weight is random.
inline std::pair<Graph, PairState> random_twin_graph(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  const Vertex a = pick(rng);
  Vertex b = pick(rng);
  while (b == a) b = pick(rng);
  const Graph base = random_graph(rng, n);
  std::vector<Edge> edges;
  for (const auto& e : base.edges()) {
    if (e.u == b || e.v == b) continue;
    edges.push_back(e);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == a || v == b) continue;
    if (const double w = base.weight(a, v); w != 0.0) edges.push_back({b, v, w});
  }
  if (const double w = base.weight(a, b); w != 0.0) edges.push_back({a, b, w});
  return {Graph(n, edges), PairState(a, b)};
}

inline double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace pairwalk::testing
