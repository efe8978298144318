#include <doctest.h>

#include "meig/eigensolver.hpp"
#include "meig/generators.hpp"
#include "meig/laplacian.hpp"

using namespace meig;

namespace {

const std::vector<Charge> kCharges = {Charge(0, 1), Charge(1, 4), Charge(1, 3),
									  Charge(2, 5), Charge(1, 2)};

} // namespace

TEST_CASE("charge validation and parsing") {
	CHECK_THROWS_AS(Charge(3, 5), ChargeOutOfRange);
	CHECK_THROWS_AS(Charge(-1, 4), ChargeOutOfRange);
	CHECK(Charge::parse("1/4").value() == doctest::Approx(0.25));
	CHECK(Charge::parse("0").is_zero());
	CHECK(Charge(2, 4) == Charge(1, 2));
	CHECK_THROWS_AS(Charge::parse("x/y"), ChargeOutOfRange);
}

TEST_CASE("transporter values") {
	DirectedGraph g(2);
	g.add_edge(0, 1);
	const auto sym = symmetrize(g);
	// a_01 = +1, so t_01 = e^{i 2 pi g a_10} = e^{-i 2 pi g}.
	const auto t14 = transporter(sym, Charge(1, 4));
	CHECK(t14[0].real() == doctest::Approx(0.0).epsilon(1e-15));
	CHECK(t14[0].imag() == doctest::Approx(-1.0));
	const auto t12 = transporter(sym, Charge(1, 2));
	CHECK(t12[0] == Complex(-1.0, 0.0)); // signed Laplacian case, exact

	DirectedGraph u(2);
	u.add_edge(0, 1);
	u.add_edge(1, 0);
	CHECK(transporter(symmetrize(u), Charge(2, 5))[0] == Complex(1.0, 0.0));
}

TEST_CASE("g = 0 gives the real combinatorial Laplacian with zero row sums") {
	const auto g = gen_erdos_renyi_digraph(20, 0.2, 3);
	const auto sym = symmetrize(g);
	const auto L = build_magnetic_laplacian(sym, Charge(0, 1)).dense();
	CHECK(L.imag().cwiseAbs().maxCoeff() == 0.0);
	CHECK((L.rowwise().sum()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("single directed edge at g = 1/4 matches hand entries") {
	DirectedGraph g(2);
	g.add_edge(0, 1);
	const auto L = build_magnetic_laplacian(symmetrize(g), Charge(1, 4)).dense();
	CHECK(L(0, 0) == Complex(0.5, 0.0));
	CHECK(L(1, 1) == Complex(0.5, 0.0));
	// L_01 = -(1/2) e^{-i pi/2} = i/2.
	CHECK(L(0, 1).real() == doctest::Approx(0.0).epsilon(1e-15));
	CHECK(L(0, 1).imag() == doctest::Approx(0.5));
	CHECK(L(1, 0) == std::conj(L(0, 1)));
}

TEST_CASE("directed 3-cycle at g = 1/3 has zero lowest eigenvalue") {
	const auto sym = symmetrize(gen_cycle(3));
	const auto lap = build_magnetic_laplacian(sym, Charge(1, 3));
	const auto es = eig_dense(lap, 3);
	CHECK(std::abs(es.values[0]) < 1e-12);
}

TEST_CASE("Hermiticity is exact by construction") {
	for (unsigned seed : {5u, 6u}) {
		const auto sym = symmetrize(gen_erdos_renyi_digraph(25, 0.15, seed));
		for (const auto& g : kCharges) {
			const auto L = build_magnetic_laplacian(sym, g).dense();
			CHECK((L - L.adjoint()).cwiseAbs().maxCoeff() == 0.0);
		}
	}
}

TEST_CASE("positive semidefiniteness of L_N across random graphs and charges") {
	for (unsigned seed = 1; seed <= 20; ++seed) {
		const auto sym = symmetrize(gen_erdos_renyi_digraph(
			10 + int(seed % 5) * 10, 0.15, seed));
		for (const auto& g : kCharges) {
			const auto es = eig_dense(build_magnetic_laplacian(sym, g), 1);
			CHECK(es.values[0] >= -1e-10);
		}
	}
}

TEST_CASE("normalized Laplacian of a regular graph is L/d") {
	const auto sym = symmetrize(gen_cycle(5)); // every degree 1
	const auto lap = build_magnetic_laplacian(sym, Charge(1, 4));
	CHECK((lap.dense_normalized() - lap.dense()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("normalized eigenvalue at g = 0 vanishes with eigenvector D^{1/2} 1") {
	const auto sym = symmetrize(gen_erdos_renyi_digraph(15, 0.25, 8));
	const auto lap = build_magnetic_laplacian(sym, Charge(0, 1));
	Eigen::VectorXcd v(lap.size());
	for (int i = 0; i < lap.size(); ++i) v[i] = std::sqrt(sym.degree(i));
	CHECK(lap.apply_normalized(v).norm() < 1e-12 * v.norm());
}

TEST_CASE("3-cycle at g = 1/4: lambda_0 obeys the Betti bound 1/3") {
	const auto sym = symmetrize(gen_cycle(3));
	const auto es = eig_dense(build_magnetic_laplacian(sym, Charge(1, 4)), 1);
	CHECK(es.values[0] <= 1.0 / 3.0 + 1e-12);
	CHECK(es.values[0] > 1e-3);
}

TEST_CASE("spectrum at g equals spectrum at 1 - g via conjugation") {
	// Flipping all directions conjugates L, so spectra coincide.
	const auto sym = symmetrize(gen_erdos_renyi_digraph(20, 0.2, 17));
	for (const auto& g : {Charge(1, 4), Charge(1, 3), Charge(2, 5)}) {
		const auto L = build_magnetic_laplacian(sym, g).dense_normalized();
		Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> a(L), b(L.conjugate());
		CHECK((a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
	}
}

TEST_CASE("trees: magnetic spectrum equals combinatorial spectrum") {
	for (unsigned seed = 1; seed <= 6; ++seed) {
		const auto sym = symmetrize(gen_tree(5 + int(seed) * 7, seed));
		const auto es0 =
			eig_dense(build_magnetic_laplacian(sym, Charge(0, 1)), sym.num_nodes());
		for (const auto& g : {Charge(1, 4), Charge(1, 3), Charge(1, 2)}) {
			const auto es =
				eig_dense(build_magnetic_laplacian(sym, g), sym.num_nodes());
			CHECK((es.values - es0.values).cwiseAbs().maxCoeff() < 1e-8);
		}
	}
}

TEST_CASE("zero-degree nodes are rejected") {
	DirectedGraph g(3);
	g.add_edge(0, 1);
	CHECK_THROWS_AS(build_magnetic_laplacian(symmetrize(g), Charge(1, 4)),
					ZeroDegree);
}
