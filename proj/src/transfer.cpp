#include "pairwalk/transfer.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "pairwalk/families.hpp"

namespace pairwalk {

namespace {

constexpr std::array kMethods = {
    std::pair{Method::DirectCheck, std::string_view{"direct-check"}},
    std::pair{Method::GridSearch, std::string_view{"grid-search"}},
    std::pair{Method::Thm2b, std::string_view{"thm-2b"}},
    std::pair{Method::Thm2c, std::string_view{"thm-2c"}},
    std::pair{Method::Thm3b, std::string_view{"thm-3b"}},
    std::pair{Method::Thm4, std::string_view{"thm-4"}},
    std::pair{Method::CorKnEdge, std::string_view{"cor-kn-edge"}},
    std::pair{Method::CorKnMatching, std::string_view{"cor-kn-matching"}},
};

// Fidelity ties closer than this are resolved toward the earlier time.
constexpr double kTieTolerance = 1e-12;

std::string describe(const PairState& p) {
  return "{" + std::to_string(p.a()) + "," + std::to_string(p.b()) + "}";
}

void require_twins(const Graph& g, const PairState& pair) {
  if (!are_twins(g, pair.a(), pair.b())) {
    throw PreconditionError("vertices " + describe(pair) + " are not twins");
  }
}

void require_in_range(const Graph& g, const PairState& pair) {
  if (pair.high() >= g.order()) {
    throw InvalidArgument("pair " + describe(pair) + " out of range for " + std::to_string(g.order()) + " vertices");
  }
}

TransferCertificate certify(const SpectralDecomposition& d, const PairState& src, const PairState& dst, double t,
                            double tol, Method method) {
  const auto overlap = pair_fidelity(d, t, src, dst);
  TransferCertificate cert{src, dst};
  cert.time = t;
  cert.fidelity = overlap.fidelity;
  cert.phase = overlap.phase;
  cert.method = method;
  cert.tolerance = tol;
  cert.verdict = overlap.fidelity >= 1.0 - tol;
  return cert;
}

struct Sample {
  double time;
  double fidelity;
};

// Golden-section maximisation on [lo, hi]; returns the best point evaluated.
template <typename F>
Sample golden_section_max(F&& f, double lo, double hi, int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  Sample best = f1 >= f2 ? Sample{x1, f1} : Sample{x2, f2};
  for (int i = 0; i < iterations; ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
      if (f2 > best.fidelity) best = {x2, f2};
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
      if (f1 > best.fidelity) best = {x1, f1};
    }
  }
  return best;
}

}  // namespace

std::string_view method_tag(Method m) {
  for (const auto& [method, tag] : kMethods)
    if (method == m) return tag;
  return "unknown";
}

Method method_from_tag(std::string_view tag) {
  for (const auto& [method, name] : kMethods)
    if (name == tag) return method;
  throw InvalidArgument("unknown certificate method '" + std::string(tag) + "'");
}

void SearchConfig::validate() const {
  if (!(horizon > 0.0)) throw InvalidArgument("search horizon must be positive");
  if (grid_points < 2) throw InvalidArgument("search grid needs at least 2 points");
  if (refine_iterations < 0) throw InvalidArgument("refine iterations must be non-negative");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("epsilon must lie in (0, 1)");
}

bool is_pi_multiple(double x, bool odd, double tol) {
  const double k = std::round(x / std::numbers::pi);
  if (std::abs(x - k * std::numbers::pi) > tol) return false;
  return !odd || std::fmod(std::abs(k), 2.0) == 1.0;
}

TransferCertificate check_pair_lpst(const Graph& g, const PairState& src, const PairState& dst, double tau,
                                    double tol) {
  require_in_range(g, src);
  require_in_range(g, dst);
  if (!(tau >= 0.0)) throw InvalidArgument("transfer time must be non-negative");
  return certify(SpectralDecomposition::of(g), src, dst, tau, tol, Method::DirectCheck);
}

NoTransferScan check_no_lpst_twin_pair(const Graph& g, const Perturbation& p, double tau, double margin) {
  require_in_range(g, p.pair);
  require_twins(g, p.pair);
  const auto d = SpectralDecomposition::of(perturb(g, p));
  NoTransferScan out;
  for (Vertex c = 0; c < g.order(); ++c) {
    for (Vertex e = c + 1; e < g.order(); ++e) {
      const PairState target(c, e);
      if (target == p.pair) continue;
      const double f = pair_fidelity(d, tau, p.pair, target).fidelity;
      if (!out.argmax || f > out.max_offpair_fidelity) {
        out.max_offpair_fidelity = f;
        out.argmax = target;
      }
    }
  }
  out.pass = out.max_offpair_fidelity <= 1.0 - margin;
  return out;
}

std::pair<Graph, TransferCertificate> apply_lpst_preservation(const Graph& g, const Perturbation& p,
                                                              const TransferCertificate& known) {
  require_in_range(g, p.pair);
  require_twins(g, p.pair);
  if (known.src == p.pair || known.dst == p.pair) {
    throw PreconditionError("transfer involving the perturbed pair " + describe(p.pair) +
                            " itself is not preserved by the perturbation");
  }
  const auto recheck = check_pair_lpst(g, known.src, known.dst, known.time, known.tolerance);
  if (!recheck.verdict) {
    throw PreconditionError("known transfer " + describe(known.src) + " -> " + describe(known.dst) +
                            " does not verify on the unperturbed graph (fidelity " +
                            std::to_string(recheck.fidelity) + ")");
  }
  if (p.alpha == 0.0) return {g, known};

  const bool touches = known.src.shared_with(p.pair) == 1 || known.dst.shared_with(p.pair) == 1;
  if (touches && !is_pi_multiple(p.alpha * known.time)) {
    throw PreconditionError("alpha * tau = " + std::to_string(p.alpha * known.time) +
                            " is not an integer multiple of pi");
  }
  Graph perturbed = perturb(g, p);
  auto cert = certify(SpectralDecomposition::of(perturbed), known.src, known.dst, known.time, known.tolerance,
                      touches ? Method::Thm2b : Method::Thm2c);
  return {std::move(perturbed), std::move(cert)};
}

PerturbedInstance apply_periodicity_to_lpst(const Graph& g, const Perturbation& p,
                                            std::span<const PairState> periodic_pairs, double tau, double tol) {
  require_in_range(g, p.pair);
  require_twins(g, p.pair);
  if (!(tau >= 0.0)) throw InvalidArgument("transfer time must be non-negative");

  const auto base = SpectralDecomposition::of(g);
  for (const auto& pp : periodic_pairs) {
    require_in_range(g, pp);
    if (pp.shared_with(p.pair) != 1) {
      throw PreconditionError("periodic pair " + describe(pp) + " must contain exactly one of " + describe(p.pair));
    }
    const auto self = certify(base, pp, pp, tau, tol, Method::DirectCheck);
    if (!self.verdict) {
      throw PreconditionError("pair " + describe(pp) + " is not periodic at the given time (fidelity " +
                              std::to_string(self.fidelity) + ")");
    }
  }
  if (!is_pi_multiple(2.0 * p.alpha * tau, /*odd=*/true)) {
    throw PreconditionError("2 * alpha * tau = " + std::to_string(2.0 * p.alpha * tau) +
                            " is not an odd multiple of pi");
  }

  PerturbedInstance out{perturb(g, p), {}};
  const auto d = SpectralDecomposition::of(out.graph);
  for (const auto& pp : periodic_pairs) {
    const Vertex from = p.pair.contains(pp.a()) ? pp.a() : pp.b();
    const Vertex q = from == pp.a() ? pp.b() : pp.a();
    const Vertex to = from == p.pair.a() ? p.pair.b() : p.pair.a();
    out.certificates.push_back(certify(d, PairState(from, q), PairState(to, q), tau, tol, Method::Thm3b));
  }
  return out;
}

PerturbedInstance construct_kn_minus_edge(std::size_t n, Vertex a, Vertex b) {
  if (n < 3) throw InvalidArgument("K_n - {a,b} construction needs n >= 3");
  const PairState edge(a, b);
  if (edge.high() >= n) throw InvalidArgument("edge " + describe(edge) + " out of range");

  std::vector<PairState> periodic;
  for (Vertex q = 0; q < n; ++q)
    if (!edge.contains(q)) periodic.emplace_back(a, q);

  auto out = apply_periodicity_to_lpst(complete_graph(n), {edge, -1.0}, periodic, std::numbers::pi / 2.0);
  for (auto& cert : out.certificates) cert.method = Method::CorKnEdge;
  return out;
}

PerturbedInstance construct_kn_minus_matching(std::size_t n, std::span<const PairState> matching,
                                              const PairState& target_edge) {
  if (n < 2) throw InvalidArgument("K_n minus a matching needs n >= 2");
  std::vector<bool> covered(n, false);
  bool has_target = false;
  for (const auto& e : matching) {
    if (e.high() >= n) throw InvalidArgument("matching edge " + describe(e) + " out of range");
    if (covered[e.a()] || covered[e.b()]) {
      throw InvalidArgument("matching edges must be pairwise vertex-disjoint (" + describe(e) + ")");
    }
    covered[e.a()] = covered[e.b()] = true;
    has_target = has_target || e == target_edge;
  }
  if (!has_target) throw InvalidArgument("target edge " + describe(target_edge) + " is not in the matching");

  // Each deletion removes the edge between a pair that is twin in the current
  // graph; the target edge goes last.
  Graph g = complete_graph(n);
  for (const auto& e : matching) {
    if (e == target_edge) continue;
    require_twins(g, e);
    g = perturb(g, {e, -1.0});
  }
  require_twins(g, target_edge);
  PerturbedInstance out{perturb(g, {target_edge, -1.0}), {}};

  const auto d = SpectralDecomposition::of(out.graph);
  const Vertex a = target_edge.a(), b = target_edge.b();
  for (Vertex q = 0; q < n; ++q) {
    if (target_edge.contains(q)) continue;
    out.certificates.push_back(
        certify(d, PairState(a, q), PairState(b, q), std::numbers::pi / 2.0, kLpstTolerance, Method::CorKnMatching));
  }
  return out;
}

TransferCertificate search_pgst(const Graph& g, const PairState& src, const PairState& dst, const SearchConfig& cfg) {
  cfg.validate();
  require_in_range(g, src);
  require_in_range(g, dst);
  const auto d = SpectralDecomposition::of(g);
  const auto fidelity_at = [&](double t) { return pair_fidelity(d, t, src, dst).fidelity; };

  const auto points = static_cast<std::size_t>(cfg.grid_points);
  const double step = cfg.horizon / static_cast<double>(points - 1);
  const auto time_at = [&](std::size_t i) { return i + 1 == points ? cfg.horizon : static_cast<double>(i) * step; };

  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) grid[i] = fidelity_at(time_at(i));

  // Refine around every local maximum of the grid (first point of a plateau);
  // keep the best, preferring the earliest time on ties.
  Sample best{0.0, -1.0};
  for (std::size_t i = 0; i < points; ++i) {
    const bool rises = i == 0 || grid[i] > grid[i - 1];
    const bool falls = i + 1 == points || grid[i] >= grid[i + 1];
    if (!rises || !falls) continue;

    Sample candidate{time_at(i), grid[i]};
    if (cfg.refine_iterations > 0) {
      const double lo = i == 0 ? time_at(i) : time_at(i - 1);
      const double hi = i + 1 == points ? time_at(i) : time_at(i + 1);
      if (hi > lo) {
        const auto refined = golden_section_max(fidelity_at, lo, hi, cfg.refine_iterations);
        if (refined.fidelity > candidate.fidelity) candidate = refined;
      }
    }
    if (candidate.fidelity > best.fidelity + kTieTolerance) best = candidate;
  }

  auto cert = certify(d, src, dst, best.time, cfg.epsilon, Method::GridSearch);
  cert.search = cfg;
  return cert;
}

std::pair<Graph, TransferCertificate> apply_pgst_preservation(const Graph& g, const Perturbation& p,
                                                              const PairState& src, const PairState& dst,
                                                              const SearchConfig& cfg) {
  cfg.validate();
  require_in_range(g, p.pair);
  require_twins(g, p.pair);
  if (p.alpha == 0.0) return {g, search_pgst(g, src, dst, cfg)};

  Graph perturbed = perturb(g, p);
  auto cert = search_pgst(perturbed, src, dst, cfg);
  cert.method = Method::Thm4;

  switch (src.shared_with(p.pair)) {
    case 2:
      break;
    case 1:
      if (!is_pi_multiple(p.alpha * cert.time, false, 1e-6)) cert.verdict = false;
      break;
    default: {
      const double before = pair_fidelity(SpectralDecomposition::of(g), cert.time, src, dst).fidelity;
      if (std::abs(before - cert.fidelity) > 1e-9) {
        throw NumericalFailure("fidelity of a pair disjoint from the perturbed twins changed from " +
                               std::to_string(before) + " to " + std::to_string(cert.fidelity));
      }
    }
  }
  return {std::move(perturbed), std::move(cert)};
}

std::vector<FidelitySample> scan_fidelity(const Graph& g, const PairState& src, const PairState& dst, double t0,
                                          double t1, int steps) {
  if (!(t0 <= t1)) throw InvalidArgument("scan range needs t0 <= t1");
  if (steps < 2) throw InvalidArgument("scan needs at least 2 steps");
  require_in_range(g, src);
  require_in_range(g, dst);
  const auto d = SpectralDecomposition::of(g);
  std::vector<FidelitySample> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double t = k + 1 == steps ? t1 : t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(steps - 1);
    out.push_back({t, pair_fidelity(d, t, src, dst).fidelity});
  }
  return out;
}

}  // namespace pairwalk
