#include "pairwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace pairwalk {

namespace {

// Rotate rows/columns p,q of `a` so that a(p,q) vanishes; accumulate into v.
void jacobi_rotate(Eigen::MatrixXd& a, Eigen::MatrixXd& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < v.rows(); ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

double max_off_diagonal(const Eigen::MatrixXd& a) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

}  // namespace

SpectralDecomposition SpectralDecomposition::decompose(const Eigen::MatrixXd& symmetric,
                                                       const JacobiOptions& options) {
  if (symmetric.rows() != symmetric.cols()) {
    throw InvalidArgument("eigensolver needs a square matrix, got " + std::to_string(symmetric.rows()) + "x" +
                          std::to_string(symmetric.cols()));
  }
  const Eigen::Index n = symmetric.rows();
  const double scale = n == 0 ? 0.0 : symmetric.cwiseAbs().maxCoeff();
  const double asymmetry = n == 0 ? 0.0 : (symmetric - symmetric.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > options.symmetry_tolerance * std::max(1.0, scale)) {
    throw InvalidArgument("eigensolver needs a symmetric matrix (max asymmetry " + std::to_string(asymmetry) + ")");
  }

  Eigen::MatrixXd a = 0.5 * (symmetric + symmetric.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double threshold = options.relative_threshold * scale;

  int sweep = 0;
  for (; max_off_diagonal(a) > threshold; ++sweep) {
    if (sweep >= options.max_sweeps) {
      throw NumericalFailure("Jacobi eigensolver did not converge in " + std::to_string(options.max_sweeps) +
                             " sweeps");
    }
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > threshold) jacobi_rotate(a, v, p, q);
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

  Eigen::VectorXd values(n);
  Eigen::MatrixXd vectors(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
    vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return {std::move(values), std::move(vectors), sweep};
}

void SpectralDecomposition::check_length(Eigen::Index len) const {
  if (len != eigenvalues_.size()) {
    throw InvalidArgument("vector of length " + std::to_string(len) + " does not match dimension " +
                          std::to_string(eigenvalues_.size()));
  }
}

ComplexVector SpectralDecomposition::evolve(double t, const ComplexVector& x) const {
  check_length(x.size());
  ComplexVector coeffs = eigenvectors_.transpose().cast<Complex>() * x;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) coeffs(k) *= std::polar(1.0, -t * eigenvalues_(k));
  return eigenvectors_.cast<Complex>() * coeffs;
}

ComplexVector SpectralDecomposition::evolve(double t, const Eigen::VectorXd& x) const {
  return evolve(t, ComplexVector(x.cast<Complex>()));
}

ComplexMatrix SpectralDecomposition::transition_matrix(double t) const {
  const Eigen::Index n = eigenvalues_.size();
  ComplexVector phases(n);
  for (Eigen::Index k = 0; k < n; ++k) phases(k) = std::polar(1.0, -t * eigenvalues_(k));
  const ComplexMatrix v = eigenvectors_.cast<Complex>();
  return v * phases.asDiagonal() * v.transpose();
}

Eigen::MatrixXd SpectralDecomposition::reconstruct() const {
  return eigenvectors_ * eigenvalues_.asDiagonal() * eigenvectors_.transpose();
}

PairOverlap pair_fidelity(const SpectralDecomposition& d, double t, const PairState& src, const PairState& dst) {
  const auto n = d.dimension();
  for (const auto& p : {src, dst}) {
    if (p.high() >= n) {
      throw InvalidArgument("pair {" + std::to_string(p.a()) + "," + std::to_string(p.b()) +
                            "} out of range for dimension " + std::to_string(n));
    }
  }
  const auto& v = d.eigenvectors();
  const auto& lambda = d.eigenvalues();
  const auto s0 = static_cast<Eigen::Index>(src.low()), s1 = static_cast<Eigen::Index>(src.high());
  const auto d0 = static_cast<Eigen::Index>(dst.low()), d1 = static_cast<Eigen::Index>(dst.high());

  Complex amplitude{0.0, 0.0};
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    const double weight = (v(s0, k) - v(s1, k)) * (v(d0, k) - v(d1, k));
    amplitude += weight * std::polar(1.0, -t * lambda(k));
  }
  amplitude *= 0.5;

  const double fidelity = std::norm(amplitude);
  if (fidelity > 1.0 + 1e-9) {
    throw NumericalFailure("pair fidelity " + std::to_string(fidelity) + " exceeds 1");
  }
  PairOverlap out;
  out.fidelity = std::clamp(fidelity, 0.0, 1.0);
  if (fidelity > 1e-12) out.phase = amplitude / std::abs(amplitude);
  return out;
}

double twin_factorization_residual(const Graph& g, const Perturbation& p, double t) {
  const ComplexMatrix lhs = SpectralDecomposition::of(perturb(g, p)).transition_matrix(t);
  ComplexMatrix rhs = SpectralDecomposition::of(g).transition_matrix(t);

  // U (I + c M) = U + c (U e_a - U e_b)(e_a - e_b)^T
  const Complex c = 0.5 * (std::polar(1.0, -2.0 * p.alpha * t) - 1.0);
  const auto a = static_cast<Eigen::Index>(p.pair.a());
  const auto b = static_cast<Eigen::Index>(p.pair.b());
  const ComplexVector column_diff = rhs.col(a) - rhs.col(b);
  rhs.col(a) += c * column_diff;
  rhs.col(b) -= c * column_diff;

  return (lhs - rhs).cwiseAbs().maxCoeff();
}

Lemma1Check verify_lemma1(const Graph& g, const Perturbation& p, double t, double tol) {
  if (!are_twins(g, p.pair.a(), p.pair.b())) {
    throw PreconditionError("factorization requires twin vertices; {" + std::to_string(p.pair.a()) + "," +
                            std::to_string(p.pair.b()) + "} are not twins");
  }
  Lemma1Check out;
  out.residual = twin_factorization_residual(g, p, t);
  out.pass = out.residual <= tol;
  return out;
}

}  // namespace pairwalk
