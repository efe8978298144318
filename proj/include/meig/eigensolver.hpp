#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "meig/laplacian.hpp"

namespace meig {

/// Smallest eigenpairs of the normalized magnetic Laplacian, ascending.
/// psi are eigenvectors of L_N; phi = D^{-1/2} psi solve the generalized
/// problem L phi = lambda D phi.
struct EigenSystem {
	Eigen::VectorXd values;
	Eigen::MatrixXcd psi;
	Eigen::MatrixXcd phi;
	Eigen::VectorXd residuals; // ||L_N psi_k - lambda_k psi_k||_2
};

namespace detail {

inline EigenSystem finalize(const MagneticLaplacian& lap,
							const Eigen::VectorXd& vals,
							const Eigen::MatrixXcd& vecs) {
	EigenSystem es;
	es.values = vals;
	es.psi = vecs;
	es.phi = vecs;
	for (int i = 0; i < lap.size(); ++i)
		es.phi.row(i) /= std::sqrt(lap.sym().degree(i));
	es.residuals.resize(vals.size());
	for (int k = 0; k < vals.size(); ++k)
		es.residuals[k] =
			(lap.apply_normalized(vecs.col(k)) - vals[k] * vecs.col(k)).norm();
	return es;
}

} // namespace detail

inline constexpr int kDenseLimit = 4096;

/// Full Hermitian eigendecomposition of L_N, truncated to the k smallest
/// pairs. Deterministic; this is the reference path.
inline EigenSystem eig_dense(const MagneticLaplacian& lap, int k) {
	const int n = lap.size();
	if (n > kDenseLimit)
		throw DenseLimitExceeded("dense solve limited to n <= " +
								 std::to_string(kDenseLimit));
	if (k < 1 || k > n) throw IndexOutOfRange("eigenpair count out of range");
	Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(lap.dense_normalized());
	return detail::finalize(lap, solver.eigenvalues().head(k),
							solver.eigenvectors().leftCols(k));
}

/// k smallest eigenpairs of L_N by subspace (block power) iteration on the
/// shifted operator M = 2I - L_N, whose largest eigenvalues correspond to
/// the smallest of L_N and are nonnegative since spec(L_N) is in [0, 2].
/// Guard vectors plus Rayleigh-Ritz extraction keep clustered eigenvalues
/// converging; residuals are checked on the leading k Ritz pairs.
inline EigenSystem eig_iterative(const MagneticLaplacian& lap, int k,
								 double tol = 1e-10, int max_iter = 10000,
								 unsigned seed = 12345) {
	const int n = lap.size();
	if (k < 1 || k > n) throw IndexOutOfRange("eigenpair count out of range");
	const int block = std::min(n, k + 4);

	std::mt19937_64 rng(seed);
	std::normal_distribution<double> gauss(0.0, 1.0);
	Eigen::MatrixXcd Q(n, block);
	for (int j = 0; j < block; ++j)
		for (int i = 0; i < n; ++i) Q(i, j) = Complex(gauss(rng), gauss(rng));

	auto apply_shifted = [&](const Eigen::MatrixXcd& X) {
		Eigen::MatrixXcd Y(n, X.cols());
		for (int j = 0; j < X.cols(); ++j)
			Y.col(j) = 2.0 * X.col(j) - lap.apply_normalized(X.col(j));
		return Y;
	};

	Eigen::VectorXd ritz_vals(block);
	Eigen::MatrixXcd ritz_vecs(n, block);
	for (int it = 0; it < max_iter; ++it) {
		Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Q);
		Q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, block);
		const Eigen::MatrixXcd MQ = apply_shifted(Q);
		// Rayleigh-Ritz on the current subspace.
		const Eigen::MatrixXcd B = Q.adjoint() * MQ;
		Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> small(
			(B + B.adjoint()) / 2.0);
		// Largest of M first -> smallest of L_N first.
		Eigen::VectorXd mu = small.eigenvalues().reverse();
		Eigen::MatrixXcd V = small.eigenvectors().rowwise().reverse();
		ritz_vecs = Q * V;
		for (int j = 0; j < block; ++j) ritz_vals[j] = 2.0 - mu[j];

		bool converged = true;
		for (int j = 0; j < k; ++j) {
			const double res = (lap.apply_normalized(ritz_vecs.col(j)) -
								ritz_vals[j] * ritz_vecs.col(j))
								   .norm();
			if (res > tol) {
				converged = false;
				break;
			}
		}
		if (converged)
			return detail::finalize(lap, ritz_vals.head(k), ritz_vecs.leftCols(k));
		Q = MQ;
	}
	int achieved = 0;
	for (int j = 0; j < k; ++j) {
		const double res = (lap.apply_normalized(ritz_vecs.col(j)) -
							ritz_vals[j] * ritz_vecs.col(j))
							   .norm();
		if (res <= tol) ++achieved; else break;
	}
	throw NoConvergence("power iteration did not converge for all " +
							std::to_string(k) + " pairs",
						achieved);
}

/// Generalized Rayleigh quotient (f' L f) / (f' D f), real by Hermiticity.
inline double rayleigh_quotient(const MagneticLaplacian& lap,
								const Eigen::VectorXcd& f) {
	if (f.norm() == 0.0) throw ZeroVector("Rayleigh quotient of zero vector");
	Complex num = f.dot(lap.apply(f)); // Eigen's dot conjugates the left side
	double den = 0.0;
	for (int i = 0; i < lap.size(); ++i)
		den += lap.sym().degree(i) * std::norm(f[i]);
	return num.real() / den;
}

} // namespace meig
