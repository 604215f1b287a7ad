#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "pairwalk/graph.hpp"

namespace pairwalk {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

struct JacobiOptions {
  int max_sweeps = 100;
  // Off-diagonal entries below this multiple of max|L_ij| are treated as zero.
  double relative_threshold = 1e-12;
  double symmetry_tolerance = 1e-12;
};

/// Eigen-decomposition L = V diag(lambda) V^T of a real symmetric matrix,
/// eigenvalues ascending. Evaluates the walk U(t) = exp(-i t L).
class SpectralDecomposition {
 public:
  /// Cyclic Jacobi. Throws InvalidArgument for non-square or non-symmetric
  /// input and NumericalFailure when the sweep cap is hit.
  static SpectralDecomposition decompose(const Eigen::MatrixXd& symmetric,
                                         const JacobiOptions& options = {});
  static SpectralDecomposition of(const Graph& g) { return decompose(laplacian(g)); }

  std::size_t dimension() const { return static_cast<std::size_t>(eigenvalues_.size()); }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }
  int sweeps() const { return sweeps_; }

  /// U(t) x.
  ComplexVector evolve(double t, const ComplexVector& x) const;
  ComplexVector evolve(double t, const Eigen::VectorXd& x) const;

  /// Dense U(t).
  ComplexMatrix transition_matrix(double t) const;

  /// V diag(lambda) V^T, for residual checks.
  Eigen::MatrixXd reconstruct() const;

 private:
  SpectralDecomposition(Eigen::VectorXd values, Eigen::MatrixXd vectors, int sweeps)
      : eigenvalues_(std::move(values)), eigenvectors_(std::move(vectors)), sweeps_(sweeps) {}

  void check_length(Eigen::Index len) const;

  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  int sweeps_ = 0;
};

/// Squared overlap |1/2 (e_src)^T U(t) e_dst|^2 and its unit phase. The phase
/// is taken with both pairs in canonical (a < b) orientation and is empty when
/// the overlap is numerically zero (fidelity <= 1e-12).
struct PairOverlap {
  double fidelity = 0.0;
  std::optional<Complex> phase;
};

PairOverlap pair_fidelity(const SpectralDecomposition& d, double t, const PairState& src,
                          const PairState& dst);

struct Lemma1Check {
  double residual = 0.0;
  bool pass = false;
};

/// Max-entry difference between exp(-it L_{G+alpha{a,b}}) (from its own
/// eigensolve) and U_G(t) (I + (exp(-2 i alpha t) - 1)/2 M). No twin check.
double twin_factorization_residual(const Graph& g, const Perturbation& p, double t);

/// As above, requiring {a,b} to be twins (PreconditionError otherwise).
Lemma1Check verify_lemma1(const Graph& g, const Perturbation& p, double t, double tol = 1e-9);

}  // namespace pairwalk
