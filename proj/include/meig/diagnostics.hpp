#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "meig/eigensolver.hpp"
#include "meig/embedding.hpp"
#include "meig/graph.hpp"
#include "meig/laplacian.hpp"

namespace meig {

/// Frustration eta_S(theta): normalized synchronization error of an angle
/// assignment against the edge transporters, restricted to edges inside S.
/// The double sum over ordered pairs in S collapses to one term per edge
/// after the 1/2 prefactor; the denominator is always vol(G). With S = V
/// and unit-modulus z_i = e^{i theta_i} this equals the generalized
/// Rayleigh quotient of z.
struct Frustration {
	double value;
	std::vector<int> subset;
	std::vector<double> theta;
};

namespace detail {

/// Sum over edges with both ends in `in_subset` of
/// w_bar |e^{i th_u} - t_uv e^{i th_v}|^2, with t_uv = e^{i 2 pi g a_vu}.
inline double sync_error_sum(const SymmetrizedView& sym, const Charge& g,
							 const std::vector<double>& theta,
							 const std::vector<char>& in_subset) {
	double s = 0.0;
	for (const auto& e : sym.edges()) {
		if (!in_subset[e.u] || !in_subset[e.v]) continue;
		const Complex t = g.unit_phase(-e.flow);
		const Complex diff =
			std::polar(1.0, theta[e.u]) - t * std::polar(1.0, theta[e.v]);
		s += e.w * std::norm(diff);
	}
	return s;
}

inline std::vector<char> subset_mask(const SymmetrizedView& sym,
									 const std::vector<int>& S) {
	std::vector<char> mask(sym.num_nodes(), 0);
	for (int i : S) {
		if (i < 0 || i >= sym.num_nodes())
			throw SubsetOutOfRange("subset node " + std::to_string(i) +
								   " out of range");
		mask[i] = 1;
	}
	return mask;
}

} // namespace detail

inline Frustration frustration(const SymmetrizedView& sym, const Charge& g,
							   const std::vector<double>& theta,
							   const std::vector<int>& S) {
	const auto mask = detail::subset_mask(sym, S);
	Frustration fr;
	fr.value = detail::sync_error_sum(sym, g, theta, mask) / sym.volume();
	fr.subset = S;
	fr.theta = theta;
	return fr;
}

inline std::vector<int> all_nodes(const SymmetrizedView& sym) {
	std::vector<int> v(sym.num_nodes());
	for (int i = 0; i < sym.num_nodes(); ++i) v[i] = i;
	return v;
}

/// Angles solving the relaxed angular synchronization problem: the phases of
/// the lowest generalized eigenvector.
struct SyncResult {
	std::vector<double> theta;
	double frustration_value;
};

inline SyncResult synchronize(const MagneticLaplacian& lap) {
	const EigenSystem es = eig_dense(lap, 1);
	const TorusEmbedding emb = phases(es, {0}, lap.charge());
	SyncResult r;
	r.theta.resize(lap.size());
	for (int i = 0; i < lap.size(); ++i) r.theta[i] = emb.coords(i, 0);
	r.frustration_value =
		frustration(lap.sym(), lap.charge(), r.theta, all_nodes(lap.sym())).value;
	return r;
}

/// The relaxation vector f_{A, Abar} built from theta* and a node split.
inline Eigen::VectorXcd cut_function(const SymmetrizedView& sym,
									 const std::vector<double>& theta_star,
									 const std::vector<int>& A) {
	const auto in_A = detail::subset_mask(sym, A);
	double vol_A = 0.0;
	for (int i = 0; i < sym.num_nodes(); ++i)
		if (in_A[i]) vol_A += sym.degree(i);
	const double vol_B = sym.volume() - vol_A;
	if (A.empty() || vol_A <= 0.0 || vol_B <= 0.0)
		throw EmptySide("both sides of the partition need positive volume");
	Eigen::VectorXcd f(sym.num_nodes());
	const double rA = std::sqrt(vol_B / vol_A);
	const double rB = std::sqrt(vol_A / vol_B);
	for (int i = 0; i < sym.num_nodes(); ++i)
		f[i] = in_A[i] ? rA * std::polar(1.0, theta_star[i])
					   : -rB * std::polar(1.0, theta_star[i]);
	return f;
}

/// The four terms of the partition energy E_{A, Abar}. Inside the energy the
/// subgraph frustrations are normalized by their own subgraph volumes (that
/// normalization is what makes the total equal the Rayleigh quotient of
/// f_{A, Abar}); the generalized cut keeps its -4 sin^2 sign.
struct PartitionEnergy {
	std::vector<int> A;
	double frustration_A_term;
	double frustration_B_term;
	double ncut_term;
	double generalized_cut; // gamma_{A, Abar}, <= 0
	double generalized_cut_term;
	double total;
};

inline PartitionEnergy partition_energy(const SymmetrizedView& sym,
										const Charge& g,
										const std::vector<double>& theta_star,
										const std::vector<int>& A) {
	const auto in_A = detail::subset_mask(sym, A);
	double vol_A = 0.0;
	for (int i = 0; i < sym.num_nodes(); ++i)
		if (in_A[i]) vol_A += sym.degree(i);
	const double vol = sym.volume();
	const double vol_B = vol - vol_A;
	if (A.empty() || int(A.size()) == sym.num_nodes() || vol_A <= 0.0 ||
		vol_B <= 0.0)
		throw EmptySide("both sides of the partition need positive volume");

	std::vector<char> in_B(sym.num_nodes());
	for (int i = 0; i < sym.num_nodes(); ++i) in_B[i] = !in_A[i];

	double cut = 0.0, gamma = 0.0;
	for (const auto& e : sym.edges()) {
		if (in_A[e.u] == in_A[e.v]) continue;
		cut += e.w;
		const int a = in_A[e.u] ? e.u : e.v; // endpoint on the A side
		const int b = in_A[e.u] ? e.v : e.u;
		const double theta_ab = g.angle(a == e.u ? -e.flow : e.flow); // 2 pi g a_ba
		const double half = (theta_star[a] - theta_star[b] - theta_ab) / 2.0;
		const double s = std::sin(half);
		gamma += -4.0 * e.w * s * s;
	}

	PartitionEnergy pe;
	pe.A = A;
	pe.frustration_A_term =
		(vol_B / vol) * detail::sync_error_sum(sym, g, theta_star, in_A) / vol_A;
	pe.frustration_B_term =
		(vol_A / vol) * detail::sync_error_sum(sym, g, theta_star, in_B) / vol_B;
	pe.ncut_term = cut / vol_A + cut / vol_B;
	pe.generalized_cut = gamma;
	pe.generalized_cut_term = gamma / vol;
	pe.total = pe.frustration_A_term + pe.frustration_B_term + pe.ncut_term +
			   pe.generalized_cut_term;
	return pe;
}

/// Integer potential h with a_ij = h_j - h_i for every edge, when it exists.
struct PotentialResult {
	std::optional<std::vector<int>> h;
	int violating_edge = -1; // edge index into sym.edges() when no potential
};

inline PotentialResult recover_potential(const SymmetrizedView& sym) {
	const SpanningTree tree(sym);
	std::vector<int> h(sym.num_nodes());
	for (int i = 0; i < sym.num_nodes(); ++i)
		h[i] = int(tree.tree_flow_to(i));
	for (std::size_t k = 0; k < sym.edges().size(); ++k) {
		const auto& e = sym.edges()[k];
		if (e.flow != h[e.v] - h[e.u]) return {std::nullopt, int(k)};
	}
	return {h, -1};
}

/// Holonomy of each fundamental cycle (one per cotree edge) and the
/// fundamental-cycle consistency bound epsilon = max |t_o - 1|.
struct HolonomyReport {
	struct Cycle {
		int edge;      // cotree edge index into sym.edges()
		long flux;     // discrete line integral of a around the cycle
		Complex holonomy; // e^{i 2 pi g flux}
	};
	std::vector<Cycle> cycles;
	double epsilon = 0.0;
	int beta1 = 0;
	bool gauge_trivial = true; // all holonomies exactly 1 (rational check)
};

inline HolonomyReport holonomies(const SymmetrizedView& sym,
								 const SpanningTree& tree, const Charge& g) {
	HolonomyReport rep;
	rep.beta1 = tree.betti1();
	for (int k : tree.cotree_edges()) {
		const auto& e = sym.edges()[k];
		// Cycle root -> u -> v -> root; flux = h_u + a_uv - h_v with h the
		// tree potential.
		const long flux = tree.tree_flow_to(e.u) + e.flow - tree.tree_flow_to(e.v);
		HolonomyReport::Cycle c;
		c.edge = k;
		c.flux = flux;
		c.holonomy = g.unit_phase(flux);
		rep.cycles.push_back(c);
		rep.epsilon = std::max(rep.epsilon, std::abs(c.holonomy - Complex(1.0)));
		if (!g.trivial_flux(flux)) rep.gauge_trivial = false;
	}
	return rep;
}

/// Diagonal unitary conjugation U' L U with U_ii the tree transporter from
/// the root: tree-edge entries become real -w_bar, cotree entries carry the
/// cycle holonomy. Spectrum is preserved.
inline MagneticLaplacian gauge_transform(const MagneticLaplacian& lap,
										 const SpanningTree& tree) {
	const auto& sym = lap.sym();
	const Charge& g = lap.charge();
	std::vector<long> h(sym.num_nodes());
	for (int i = 0; i < sym.num_nodes(); ++i) h[i] = tree.tree_flow_to(i);
	MagneticLaplacian out = lap;
	for (std::size_t k = 0; k < sym.edges().size(); ++k) {
		const auto& e = sym.edges()[k];
		// conj(U_uu) * (-w t_uv) * U_vv, with t_uv = e^{-i 2 pi g a_uv}:
		// the phase multiple is -(h_u + a_uv - h_v).
		out.set_off_diagonal(k, -e.w * g.unit_phase(-(h[e.u] + e.flow - h[e.v])));
	}
	return out;
}

/// One inequality of the consistency ledger: slack = rhs - lhs.
struct Bound {
	std::string name;
	double lhs, rhs;
	double slack() const { return rhs - lhs; }
};

struct BoundLedger {
	std::vector<Bound> bounds;
	double lambda0_g;
	double lambda1_comb; // spectral gap of the g = 0 problem
	double epsilon;
	int beta1;
};

/// Evaluates the modulus-variability bound, both spanning-tree eigenvalue
/// bounds, and the eps^2/2 consistency bound.
inline BoundLedger bound_ledger(const MagneticLaplacian& lap,
								const EigenSystem& es,
								const HolonomyReport& hol) {
	const auto& sym = lap.sym();
	BoundLedger led;
	led.lambda0_g = es.values[0];
	led.epsilon = hol.epsilon;
	led.beta1 = hol.beta1;

	// Spectral gap of the combinatorial problem.
	const MagneticLaplacian comb(sym, Charge(0, 1));
	const EigenSystem es0 = eig_dense(comb, std::min(2, lap.size()));
	if (lap.size() < 2 || es0.values[1] <= 1e-12)
		throw MissingSpectralGap("lambda_1 at g = 0 vanishes (disconnected?)");
	led.lambda1_comb = es0.values[1];

	// Modulus-variability bound on |phi_0|.
	const Eigen::VectorXcd phi0 = es.phi.col(0);
	double mu0 = 0.0, den = 0.0;
	for (int i = 0; i < lap.size(); ++i) {
		mu0 += sym.degree(i) * std::abs(phi0[i]);
		den += sym.degree(i) * std::norm(phi0[i]);
	}
	mu0 /= sym.volume();
	double var = 0.0;
	for (int i = 0; i < lap.size(); ++i) {
		const double d = std::abs(phi0[i]) - mu0;
		var += sym.degree(i) * d * d;
	}
	led.bounds.push_back(
		{"modulus_variability", var / den, led.lambda0_g / led.lambda1_comb});

	// Spanning-tree bounds on lambda_0.
	double cotree_weight = 0.0;
	for (const auto& c : hol.cycles) cotree_weight += sym.edges()[c.edge].w;
	const double eps2 = hol.epsilon * hol.epsilon;
	led.bounds.push_back({"lambda0_cotree_weight", led.lambda0_g,
						  eps2 * cotree_weight / sym.volume()});
	const double num_edges = double(sym.edges().size());
	led.bounds.push_back({"lambda0_betti_binary", led.lambda0_g,
						  eps2 * hol.beta1 / (2.0 * num_edges)});
	led.bounds.push_back({"lambda0_half_eps2", led.lambda0_g, eps2 / 2.0});
	return led;
}

} // namespace meig
