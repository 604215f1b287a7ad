#include "pairwalk/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace pairwalk {

namespace {

std::size_t as_size(long long v, std::string_view what) {
  if (v < 0) throw InvalidArgument(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

void require_count(const FamilySpec& spec, std::size_t count) {
  if (spec.parameters.size() != count) {
    throw InvalidArgument("family " + std::string(family_tag(spec.family)) + " takes " + std::to_string(count) +
                          " parameter(s), got " + std::to_string(spec.parameters.size()));
  }
}

}  // namespace

std::string_view family_tag(Family f) {
  switch (f) {
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "complete-bipartite";
    case Family::Cycle: return "cycle";
    case Family::Path: return "path";
    case Family::Circulant: return "circulant";
    case Family::KnMinusMatching: return "kn-minus-matching";
  }
  return "unknown";
}

Family family_from_tag(std::string_view tag) {
  for (auto f : {Family::Complete, Family::CompleteBipartite, Family::Cycle, Family::Path, Family::Circulant,
                 Family::KnMinusMatching}) {
    if (family_tag(f) == tag) return f;
  }
  throw InvalidArgument("unknown graph family '" + std::string(tag) + "'");
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw InvalidArgument("complete bipartite graph needs both parts non-empty");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = m; v < m + n; ++v) edges.push_back({u, v, 1.0});
  return Graph(m + n, edges);
}

Graph circulant(std::size_t n, const std::vector<std::size_t>& connection_set) {
  if (n < 1) throw InvalidArgument("circulant needs n >= 1");
  const std::set<std::size_t> s(connection_set.begin(), connection_set.end());
  for (auto x : s) {
    if (x == 0 || x >= n) {
      throw InvalidArgument("circulant connection set element " + std::to_string(x) + " not in 1.." +
                            std::to_string(n - 1));
    }
    if (!s.contains(n - x)) {
      throw InvalidArgument("circulant connection set is not inverse-closed: " + std::to_string(x) +
                            " present, " + std::to_string(n - x) + " missing");
    }
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (auto x : s)
      if (const Vertex v = (u + x) % n; u < v) edges.push_back({u, v, 1.0});
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  return circulant(n, {1, n - 1});
}

Graph path(std::size_t n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, 1.0});
  return Graph(n, edges);
}

Graph kn_minus_matching(std::size_t n, const std::vector<PairState>& matching) {
  std::vector<bool> covered(n, false);
  Graph g = complete_graph(n);
  for (const auto& e : matching) {
    if (e.high() >= n) throw InvalidArgument("matching edge out of range");
    if (covered[e.a()] || covered[e.b()]) {
      throw InvalidArgument("matching edges must be pairwise vertex-disjoint");
    }
    covered[e.a()] = covered[e.b()] = true;
    g = g.with_weight_added(e.a(), e.b(), -1.0);
  }
  return g;
}

std::vector<double> circulant_spectrum(std::size_t n, const std::vector<std::size_t>& connection_set) {
  const std::set<std::size_t> s(connection_set.begin(), connection_set.end());
  std::vector<double> out(n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (auto x : s)
      out[j] += 1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(j * x % n) / static_cast<double>(n));
  return out;
}

Graph build_family(const FamilySpec& spec) {
  const auto& p = spec.parameters;
  switch (spec.family) {
    case Family::Complete:
      require_count(spec, 1);
      return complete_graph(as_size(p[0], "n"));
    case Family::CompleteBipartite:
      require_count(spec, 2);
      return complete_bipartite(as_size(p[0], "m"), as_size(p[1], "n"));
    case Family::Cycle:
      require_count(spec, 1);
      return cycle(as_size(p[0], "n"));
    case Family::Path:
      require_count(spec, 1);
      return path(as_size(p[0], "n"));
    case Family::Circulant: {
      require_count(spec, 1);
      std::vector<std::size_t> s;
      for (auto x : spec.connection_set) s.push_back(as_size(x, "connection set element"));
      return circulant(as_size(p[0], "n"), s);
    }
    case Family::KnMinusMatching: {
      if (p.empty() || p.size() % 2 != 1) {
        throw InvalidArgument("kn-minus-matching takes n followed by vertex pairs");
      }
      std::vector<PairState> matching;
      for (std::size_t i = 1; i + 1 < p.size(); i += 2)
        matching.emplace_back(as_size(p[i], "vertex"), as_size(p[i + 1], "vertex"));
      return kn_minus_matching(as_size(p[0], "n"), matching);
    }
  }
  throw InvalidArgument("unknown graph family");
}

}  // namespace pairwalk
