#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "meig/charge.hpp"
#include "meig/eigensolver.hpp"
#include "meig/errors.hpp"

namespace meig {

inline constexpr double kTwoPi = 2.0 * M_PI;

/// Maps an angle to the canonical range [0, 2 pi).
inline double wrap_phase(double a) {
	a = std::fmod(a, kTwoPi);
	if (a < 0) a += kTwoPi;
	if (a >= kTwoPi) a = 0.0; // fmod can round up to 2 pi
	return a;
}

/// Wrap-around distance on one circle axis.
inline double circle_distance(double a, double b) {
	const double d = std::fabs(wrap_phase(a) - wrap_phase(b));
	return std::min(d, kTwoPi - d);
}

/// Euclidean combination of per-axis wrap-around distances.
inline double torus_distance(const std::vector<double>& p,
							 const std::vector<double>& q) {
	double s = 0.0;
	for (std::size_t k = 0; k < p.size(); ++k) {
		const double d = circle_distance(p[k], q[k]);
		s += d * d;
	}
	return std::sqrt(s);
}

/// Per-node phases of selected generalized eigenvectors, gauge-fixed so the
/// entry of largest modulus in each column has phase 0 (tie: smallest node
/// index). Nodes with vanishing modulus get phase 0 and a flag; the phase is
/// undefined there.
struct TorusEmbedding {
	Eigen::MatrixXd coords;  // n x m phases in [0, 2 pi)
	Eigen::MatrixXd moduli;  // n x m |phi_{k,i}|
	std::vector<double> gauge; // applied rotation per column
	std::vector<int> indices;  // eigen indices used
	Charge g;
	std::vector<std::vector<int>> flagged; // per column: nodes with ~zero modulus

	int column_of(int eigen_index) const {
		for (std::size_t c = 0; c < indices.size(); ++c)
			if (indices[c] == eigen_index) return int(c);
		throw IndexOutOfRange("eigen index not part of this embedding");
	}
};

inline TorusEmbedding phases(const EigenSystem& es, const std::vector<int>& indices,
							 const Charge& g = Charge()) {
	const int n = int(es.phi.rows());
	const int m = int(indices.size());
	TorusEmbedding emb;
	emb.coords.resize(n, m);
	emb.moduli.resize(n, m);
	emb.gauge.resize(m);
	emb.indices = indices;
	emb.g = g;
	emb.flagged.resize(m);
	for (int c = 0; c < m; ++c) {
		const int k = indices[c];
		if (k < 0 || k >= es.values.size())
			throw IndexOutOfRange("eigen index " + std::to_string(k) +
								  " out of computed range");
		const Eigen::VectorXcd col = es.phi.col(k);
		int pivot = 0;
		for (int i = 1; i < n; ++i)
			if (std::abs(col[i]) > std::abs(col[pivot])) pivot = i;
		const double alpha = -std::arg(col[pivot]);
		emb.gauge[c] = alpha;
		const Complex rot = std::polar(1.0, alpha);
		for (int i = 0; i < n; ++i) {
			const Complex z = col[i] * rot;
			emb.moduli(i, c) = std::abs(col[i]);
			if (std::abs(col[i]) < 1e-12) {
				emb.coords(i, c) = 0.0;
				emb.flagged[c].push_back(i);
			} else {
				emb.coords(i, c) = wrap_phase(std::arg(z));
			}
		}
		emb.coords(pivot, c) = 0.0; // exact by construction
	}
	return emb;
}

namespace detail {

inline double circular_mean(const std::vector<double>& angles,
							const std::vector<int>& members) {
	double cx = 0.0, cy = 0.0;
	for (int i : members) {
		cx += std::cos(angles[i]);
		cy += std::sin(angles[i]);
	}
	if (cx == 0.0 && cy == 0.0) return 0.0;
	return wrap_phase(std::atan2(cy, cx));
}

} // namespace detail

/// Purity of a circular k-means clustering of one phase axis against ground
/// truth labels; k = number of distinct labels, 50 restarts, fixed seed.
inline double circular_cluster_score(const TorusEmbedding& emb,
									 const std::vector<int>& labels,
									 int eigen_index, int restarts = 50,
									 unsigned seed = 777) {
	const int n = int(emb.coords.rows());
	if (int(labels.size()) != n)
		throw LabelMismatch("labels must cover all nodes");
	const int c = emb.column_of(eigen_index);
	std::vector<double> x(n);
	for (int i = 0; i < n; ++i) x[i] = emb.coords(i, c);

	std::vector<int> classes(labels);
	std::sort(classes.begin(), classes.end());
	classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
	const int k = int(classes.size());
	if (k < 1) throw LabelMismatch("no labels");

	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> uni(0.0, kTwoPi);

	double best_cost = std::numeric_limits<double>::infinity();
	std::vector<int> best_assign(n, 0);
	for (int r = 0; r < restarts; ++r) {
		std::vector<double> centers(k);
		for (auto& ctr : centers) ctr = uni(rng);
		std::vector<int> assign(n, -1);
		for (int iter = 0; iter < 100; ++iter) {
			bool changed = false;
			for (int i = 0; i < n; ++i) {
				int arg = 0;
				double bd = circle_distance(x[i], centers[0]);
				for (int j = 1; j < k; ++j) {
					const double d = circle_distance(x[i], centers[j]);
					if (d < bd) { bd = d; arg = j; }
				}
				if (assign[i] != arg) { assign[i] = arg; changed = true; }
			}
			if (!changed && iter > 0) break;
			for (int j = 0; j < k; ++j) {
				std::vector<int> members;
				for (int i = 0; i < n; ++i)
					if (assign[i] == j) members.push_back(i);
				if (!members.empty())
					centers[j] = detail::circular_mean(x, members);
			}
		}
		double cost = 0.0;
		for (int i = 0; i < n; ++i) {
			const double d = circle_distance(x[i], centers[assign[i]]);
			cost += d * d;
		}
		if (cost < best_cost) {
			best_cost = cost;
			best_assign = assign;
		}
	}

	// Purity: majority label per cluster.
	double correct = 0.0;
	for (int j = 0; j < k; ++j) {
		std::vector<int> counts(k, 0);
		for (int i = 0; i < n; ++i) {
			if (best_assign[i] != j) continue;
			const int li = int(std::lower_bound(classes.begin(), classes.end(),
												labels[i]) -
							   classes.begin());
			counts[li]++;
		}
		correct += *std::max_element(counts.begin(), counts.end());
	}
	return correct / n;
}

} // namespace meig
