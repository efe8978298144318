#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "meig/charge.hpp"
#include "meig/graph.hpp"

namespace meig {

using Complex = std::complex<double>;

/// Per-edge transporter t_uv = e^{i 2 pi g a_vu} for each SymEdge (u, v).
/// Hermiticity is structural: t_vu is taken as conj(t_uv).
inline std::vector<Complex> transporter(const SymmetrizedView& sym, const Charge& g) {
	std::vector<Complex> t;
	t.reserve(sym.edges().size());
	for (const auto& e : sym.edges())
		t.push_back(g.unit_phase(-e.flow)); // a_vu = -a_uv
	return t;
}

/// Magnetic Laplacian L^(g) = D - T^(g) .* W_bar, stored edge-indexed.
/// Off-diagonal (u, v) is -w_bar_uv * t_uv; the (v, u) entry is its conjugate.
class MagneticLaplacian {
public:
	MagneticLaplacian(const SymmetrizedView& sym, const Charge& g)
		: sym_(&sym), g_(g), off_(sym.edges().size()) {
		for (int i = 0; i < sym.num_nodes(); ++i)
			if (sym.degree(i) <= 0.0)
				throw ZeroDegree("node " + std::to_string(i) + " has zero degree");
		const auto t = transporter(sym, g);
		for (std::size_t k = 0; k < t.size(); ++k)
			off_[k] = -sym.edges()[k].w * t[k];
	}

	const SymmetrizedView& sym() const { return *sym_; }
	const Charge& charge() const { return g_; }
	int size() const { return sym_->num_nodes(); }

	/// Off-diagonal entry for edge k in the (u, v) orientation.
	Complex off_diagonal(std::size_t k) const { return off_[k]; }

	/// y = L x.
	Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const {
		Eigen::VectorXcd y(size());
		for (int i = 0; i < size(); ++i) y[i] = sym_->degree(i) * x[i];
		const auto& es = sym_->edges();
		for (std::size_t k = 0; k < es.size(); ++k) {
			y[es[k].u] += off_[k] * x[es[k].v];
			y[es[k].v] += std::conj(off_[k]) * x[es[k].u];
		}
		return y;
	}

	/// y = L_N x with L_N = D^{-1/2} L D^{-1/2} (unit diagonal).
	Eigen::VectorXcd apply_normalized(const Eigen::VectorXcd& x) const {
		Eigen::VectorXcd y = x;
		const auto& es = sym_->edges();
		for (std::size_t k = 0; k < es.size(); ++k) {
			const double s =
				1.0 / std::sqrt(sym_->degree(es[k].u) * sym_->degree(es[k].v));
			y[es[k].u] += s * off_[k] * x[es[k].v];
			y[es[k].v] += s * std::conj(off_[k]) * x[es[k].u];
		}
		return y;
	}

	/// Explicit densification (never implicit).
	Eigen::MatrixXcd dense() const {
		Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(size(), size());
		for (int i = 0; i < size(); ++i) L(i, i) = sym_->degree(i);
		const auto& es = sym_->edges();
		for (std::size_t k = 0; k < es.size(); ++k) {
			L(es[k].u, es[k].v) = off_[k];
			L(es[k].v, es[k].u) = std::conj(off_[k]);
		}
		return L;
	}

	Eigen::MatrixXcd dense_normalized() const {
		Eigen::MatrixXcd L = Eigen::MatrixXcd::Identity(size(), size());
		const auto& es = sym_->edges();
		for (std::size_t k = 0; k < es.size(); ++k) {
			const double s =
				1.0 / std::sqrt(sym_->degree(es[k].u) * sym_->degree(es[k].v));
			L(es[k].u, es[k].v) = s * off_[k];
			L(es[k].v, es[k].u) = s * std::conj(off_[k]);
		}
		return L;
	}

	/// Replaces the off-diagonal entries (used by the gauge transform, which
	/// preserves moduli and Hermiticity of the edge entries).
	void set_off_diagonal(std::size_t k, Complex val) { off_[k] = val; }

private:
	const SymmetrizedView* sym_;
	Charge g_;
	std::vector<Complex> off_;
};

inline MagneticLaplacian build_magnetic_laplacian(const SymmetrizedView& sym,
												  const Charge& g) {
	return MagneticLaplacian(sym, g);
}

} // namespace meig
