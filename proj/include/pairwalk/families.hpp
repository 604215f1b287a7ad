#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pairwalk/graph.hpp"

namespace pairwalk {

enum class Family { Complete, CompleteBipartite, Cycle, Path, Circulant, KnMinusMatching };

std::string_view family_tag(Family f);
Family family_from_tag(std::string_view tag);

/// Parameters per family:
///   complete n | complete-bipartite m n | cycle n | path n | circulant n
///   kn-minus-matching n u1 v1 u2 v2 ...  (matching edges as flat pairs)
/// `connection_set` is used by circulant only.
struct FamilySpec {
  Family family;
  std::vector<long long> parameters;
  std::vector<long long> connection_set;
};

Graph build_family(const FamilySpec& spec);

Graph complete_graph(std::size_t n);

/// Parts {0..m-1} and {m..m+n-1}; for K_{2,m} the named vertices a, b of the
/// usual drawing are 0 and 1.
Graph complete_bipartite(std::size_t m, std::size_t n);

/// Cay(Z_n, S): u ~ u + s (mod n). S must be inverse-closed and avoid 0.
Graph circulant(std::size_t n, const std::vector<std::size_t>& connection_set);

Graph cycle(std::size_t n);
Graph path(std::size_t n);

/// K_n with the given pairwise-disjoint edges removed.
Graph kn_minus_matching(std::size_t n, const std::vector<PairState>& matching);

/// Closed-form Laplacian spectrum of Cay(Z_n, S): sum_s (1 - cos(2 pi j s / n)),
/// indexed by j (not sorted).
std::vector<double> circulant_spectrum(std::size_t n, const std::vector<std::size_t>& connection_set);

}  // namespace pairwalk
