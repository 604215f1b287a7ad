#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "pairwalk/graph.hpp"
#include "pairwalk/spectral.hpp"

namespace pairwalk {

inline constexpr double kLpstTolerance = 1e-9;
inline constexpr double kNoLpstMargin = 1e-6;
// Absolute tolerance on x - k*pi when deciding x is a multiple of pi.
inline constexpr double kPiMultipleTolerance = 1e-9;

enum class Method {
  DirectCheck,
  GridSearch,
  Thm2b,
  Thm2c,
  Thm3b,
  Thm4,
  CorKnEdge,
  CorKnMatching,
};

std::string_view method_tag(Method m);
Method method_from_tag(std::string_view tag);

/// Uniform grid over [0, horizon] followed by golden-section refinement.
struct SearchConfig {
  double horizon = 50.0;
  int grid_points = 20001;
  int refine_iterations = 60;
  double epsilon = 0.01;

  /// Throws InvalidArgument unless horizon > 0, grid_points >= 2,
  /// refine_iterations >= 0 and 0 < epsilon < 1.
  void validate() const;
};

/// Numerically verified record of (pretty good) pair state transfer.
struct TransferCertificate {
  TransferCertificate(PairState source, PairState target) : src(source), dst(target) {}

  PairState src;
  PairState dst;
  double time = 0.0;
  double fidelity = 0.0;
  std::optional<Complex> phase;
  Method method = Method::DirectCheck;
  double tolerance = kLpstTolerance;
  bool verdict = false;
  // Present for grid-search based certificates.
  std::optional<SearchConfig> search;
};

/// Fidelity from src to dst at tau; verdict is fidelity >= 1 - tol. With
/// src == dst this is the periodicity check.
TransferCertificate check_pair_lpst(const Graph& g, const PairState& src, const PairState& dst, double tau,
                                    double tol = kLpstTolerance);

struct NoTransferScan {
  double max_offpair_fidelity = 0.0;
  std::optional<PairState> argmax;
  bool pass = true;
};

/// Scans every pair state other than {a,b} in G + alpha{a,b} and reports the
/// largest fidelity reached from e_a - e_b at tau.
NoTransferScan check_no_lpst_twin_pair(const Graph& g, const Perturbation& p, double tau,
                                       double margin = kNoLpstMargin);

struct PerturbedInstance {
  Graph graph;
  std::vector<TransferCertificate> certificates;
};

/// Carries a known transfer on g over to G + alpha{a,b} for twins a,b.
/// If src or dst shares exactly one vertex with {a,b}, alpha*tau must be a
/// multiple of pi (method thm-2b); if neither touches {a,b} no condition is
/// needed (thm-2c). The result is re-verified on the perturbed graph.
std::pair<Graph, TransferCertificate> apply_lpst_preservation(const Graph& g, const Perturbation& p,
                                                              const TransferCertificate& known);

/// For twins a,b and e_a - e_q periodic at tau, with 2*alpha*tau an odd
/// multiple of pi: G + alpha{a,b} transfers e_a - e_q to e_b - e_q at tau.
/// Each periodic pair must contain exactly one of a,b.
PerturbedInstance apply_periodicity_to_lpst(const Graph& g, const Perturbation& p,
                                            std::span<const PairState> periodic_pairs, double tau,
                                            double tol = kLpstTolerance);

/// K_n - {a,b} with certificates {a,q} -> {b,q} at pi/2 for every q.
PerturbedInstance construct_kn_minus_edge(std::size_t n, Vertex a, Vertex b);

/// K_n minus a matching; certificates {a,q} -> {b,q} at pi/2 for the target
/// edge {a,b} of the matching and every q outside it.
PerturbedInstance construct_kn_minus_matching(std::size_t n, std::span<const PairState> matching,
                                              const PairState& target_edge);

/// Best fidelity found over [0, horizon]. Semi-decision: a false verdict does
/// not disprove pretty good transfer.
TransferCertificate search_pgst(const Graph& g, const PairState& src, const PairState& dst,
                                const SearchConfig& cfg = {});

/// Applies G + alpha{a,b} for twins a,b and searches the perturbed graph.
/// Cases by how src meets {a,b}: equal (a), one shared vertex (b, needs
/// alpha*t* in pi*Z within 1e-6 or the verdict is false), disjoint (c, fidelity
/// at t* must match the unperturbed graph within 1e-9).
std::pair<Graph, TransferCertificate> apply_pgst_preservation(const Graph& g, const Perturbation& p,
                                                              const PairState& src, const PairState& dst,
                                                              const SearchConfig& cfg = {});

struct FidelitySample {
  double time;
  double fidelity;
};

/// `steps` uniform samples over [t0, t1], both ends included.
std::vector<FidelitySample> scan_fidelity(const Graph& g, const PairState& src, const PairState& dst, double t0,
                                          double t1, int steps);

/// |x - k pi| <= tol for some integer k (restricted to odd k when `odd`).
bool is_pi_multiple(double x, bool odd = false, double tol = kPiMultipleTolerance);

}  // namespace pairwalk
