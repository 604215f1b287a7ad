#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pairwalk/errors.hpp"

namespace pairwalk {

using Vertex = std::size_t;

/// The pair state e_a - e_b. Orientation is stored (it fixes the sign of the
/// vector) but equality and hashing use the unordered pair.
class PairState {
 public:
  PairState(Vertex a, Vertex b);

  Vertex a() const { return a_; }
  Vertex b() const { return b_; }
  Vertex low() const { return a_ < b_ ? a_ : b_; }
  Vertex high() const { return a_ < b_ ? b_ : a_; }

  /// Same pair with a < b.
  PairState canonical() const { return {low(), high()}; }
  PairState swapped() const { return {b_, a_}; }

  bool contains(Vertex v) const { return v == a_ || v == b_; }
  /// Number of endpoints shared with `other` (0, 1 or 2).
  int shared_with(const PairState& other) const;

  /// Dense real vector e_a - e_b of length n.
  Eigen::VectorXd vector(std::size_t n) const;

  friend bool operator==(const PairState& x, const PairState& y) {
    return x.low() == y.low() && x.high() == y.high();
  }
  friend bool operator<(const PairState& x, const PairState& y) {
    return std::pair(x.low(), x.high()) < std::pair(y.low(), y.high());
  }

 private:
  Vertex a_;
  Vertex b_;
};

struct Edge {
  Vertex u;
  Vertex v;
  double weight = 1.0;
};

/// Weight increment `alpha` on the pair {a,b}; the Laplacian shifts by
/// alpha * (e_a - e_b)(e_a - e_b)^T.
struct Perturbation {
  PairState pair;
  double alpha;
};

/// Weighted undirected simple graph on vertices 0..n-1. Immutable once built.
/// Zero weight means "no edge"; negative weights are allowed.
class Graph {
 public:
  explicit Graph(std::size_t n = 0);

  /// Throws InvalidArgument on self-loops, out-of-range endpoints or repeated
  /// unordered pairs. Edges given with weight 0 are dropped.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const;

  double weight(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return weight(u, v) != 0.0; }
  /// Weighted degree: sum of incident edge weights.
  double degree(Vertex v) const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Copy with w(a,b) += delta; an accumulated weight of exactly 0 removes
  /// the edge.
  Graph with_weight_added(Vertex a, Vertex b, double delta) const;

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.n_ == y.n_ && x.weights_ == y.weights_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_;
  std::vector<double> weights_;  // dense row-major n*n, symmetric, zero diagonal
};

/// L = D - A.
Eigen::MatrixXd laplacian(const Graph& g);

/// (u, w(u,v)) for every u with nonzero weight, ascending by u.
std::vector<std::pair<Vertex, double>> neighbors(const Graph& g, Vertex v);

/// True iff w(a,v) == w(b,v) for every v outside {a,b}. The a-b edge itself
/// does not matter. Weights are compared exactly.
bool are_twins(const Graph& g, Vertex a, Vertex b);

/// All twin pairs, canonical orientation, lexicographic order.
std::vector<PairState> all_twin_pairs(const Graph& g);

/// G + alpha{a,b}.
Graph perturb(const Graph& g, const Perturbation& p);

/// M x where M = (e_a - e_b)(e_a - e_b)^T, computed without forming M.
template <typename Vec>
Vec apply_pair_projector(const PairState& pair, const Vec& x) {
  Vec out = Vec::Zero(x.size());
  const auto diff = x(pair.a()) - x(pair.b());
  out(pair.a()) = diff;
  out(pair.b()) = -diff;
  return out;
}

}  // namespace pairwalk

template <>
struct std::hash<pairwalk::PairState> {
  std::size_t operator()(const pairwalk::PairState& p) const noexcept {
    return std::hash<std::size_t>{}(p.low()) * 1000003u ^ std::hash<std::size_t>{}(p.high());
  }
};
