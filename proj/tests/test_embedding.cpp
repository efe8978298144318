#include <doctest.h>

#include <random>

#include "meig/embedding.hpp"
#include "meig/generators.hpp"

using namespace meig;

TEST_CASE("phases: g = 0 gives one constant column gauge-fixed to 0") {
	const auto sym = symmetrize(gen_erdos_renyi_digraph(15, 0.25, 2));
	const auto es = eig_dense(build_magnetic_laplacian(sym, Charge(0, 1)), 2);
	const auto emb = phases(es, {0});
	for (int i = 0; i < emb.coords.rows(); ++i)
		CHECK(circle_distance(emb.coords(i, 0), 0.0) < 1e-9);
}

TEST_CASE("phases: directed 3-cycle at g = 1/3 spaced by 2 pi / 3") {
	const auto sym = symmetrize(gen_cycle(3));
	const auto es = eig_dense(build_magnetic_laplacian(sym, Charge(1, 3)), 1);
	const auto emb = phases(es, {0}, Charge(1, 3));
	std::vector<double> ph = {emb.coords(0, 0), emb.coords(1, 0), emb.coords(2, 0)};
	for (int i = 0; i < 3; ++i)
		CHECK(circle_distance(ph[(i + 1) % 3] - ph[i], 2.0 * M_PI / 3.0) < 1e-8);
}

TEST_CASE("phases: two-node digraph at g = 1/4 differs by pi/2") {
	DirectedGraph g(2);
	g.add_edge(0, 1);
	const auto es = eig_dense(build_magnetic_laplacian(symmetrize(g), Charge(1, 4)), 1);
	const auto emb = phases(es, {0}, Charge(1, 4));
	CHECK(circle_distance(emb.coords(0, 0), emb.coords(1, 0)) ==
		  doctest::Approx(M_PI / 2.0).epsilon(1e-8));
}

TEST_CASE("phases: index out of range") {
	const auto sym = symmetrize(gen_cycle(3));
	const auto es = eig_dense(build_magnetic_laplacian(sym, Charge(1, 4)), 2);
	CHECK_THROWS_AS(phases(es, {0, 5}), IndexOutOfRange);
}

TEST_CASE("gauge invariance: global rotation leaves phases unchanged") {
	const auto sym = symmetrize(gen_erdos_renyi_digraph(20, 0.2, 6));
	const auto lap = build_magnetic_laplacian(sym, Charge(1, 4));
	EigenSystem es = eig_dense(lap, 3);
	const auto ref = phases(es, {0, 1});
	std::mt19937_64 rng(3);
	std::uniform_real_distribution<double> uni(0.0, 2 * M_PI);
	for (int t = 0; t < 10; ++t) {
		EigenSystem rot = es;
		for (int c = 0; c < 2; ++c) {
			const Complex z = std::polar(1.0, uni(rng));
			rot.phi.col(c) *= z;
			rot.psi.col(c) *= z;
		}
		const auto emb = phases(rot, {0, 1});
		for (int i = 0; i < emb.coords.rows(); ++i)
			for (int c = 0; c < 2; ++c)
				CHECK(circle_distance(emb.coords(i, c), ref.coords(i, c)) < 1e-12);
	}
}

TEST_CASE("phase range and flags") {
	const auto sym = symmetrize(gen_erdos_renyi_digraph(25, 0.2, 8));
	const auto es = eig_dense(build_magnetic_laplacian(sym, Charge(2, 5)), 3);
	const auto emb = phases(es, {0, 1, 2});
	for (int i = 0; i < emb.coords.rows(); ++i)
		for (int c = 0; c < 3; ++c) {
			CHECK(emb.coords(i, c) >= 0.0);
			CHECK(emb.coords(i, c) < kTwoPi);
			CHECK(!std::isnan(emb.coords(i, c)));
		}
	for (int c = 0; c < 3; ++c)
		for (int i : emb.flagged[c]) CHECK(emb.moduli(i, c) < 1e-12);
}

TEST_CASE("torus distance") {
	CHECK(torus_distance({0.1, 0.1}, {kTwoPi - 0.1, 0.1}) ==
		  doctest::Approx(0.2).epsilon(1e-12));
	CHECK(torus_distance({1.0, 2.0}, {1.0, 2.0}) == 0.0);
	CHECK(torus_distance({0.0, 0.0}, {M_PI, M_PI}) ==
		  doctest::Approx(M_PI * std::sqrt(2.0)));
}

namespace {

TorusEmbedding synthetic_embedding(const std::vector<double>& phases_in) {
	TorusEmbedding emb;
	emb.coords.resize(int(phases_in.size()), 1);
	emb.moduli = Eigen::MatrixXd::Ones(int(phases_in.size()), 1);
	for (std::size_t i = 0; i < phases_in.size(); ++i)
		emb.coords(int(i), 0) = wrap_phase(phases_in[i]);
	emb.indices = {0};
	emb.gauge = {0.0};
	emb.flagged.resize(1);
	return emb;
}

} // namespace

TEST_CASE("cluster score: perfectly separated phases") {
	const auto emb = synthetic_embedding({0.0, 0.01, M_PI, M_PI + 0.01});
	CHECK(circular_cluster_score(emb, {0, 0, 1, 1}, 0) == doctest::Approx(1.0));
}

TEST_CASE("cluster score: 3 singletons at 2 pi / 3 spacing") {
	const auto emb =
		synthetic_embedding({0.0, 2.0 * M_PI / 3.0, 4.0 * M_PI / 3.0});
	CHECK(circular_cluster_score(emb, {0, 1, 2}, 0) == doctest::Approx(1.0));
}

TEST_CASE("cluster score: random phases vs random labels is near 1/2") {
	std::mt19937_64 rng(1234);
	std::uniform_real_distribution<double> uni(0.0, kTwoPi);
	double total = 0.0;
	const int trials = 100, n = 60;
	for (int t = 0; t < trials; ++t) {
		std::vector<double> ph(n);
		std::vector<int> labels(n);
		for (int i = 0; i < n; ++i) {
			ph[i] = uni(rng);
			labels[i] = int(rng() & 1);
		}
		total += circular_cluster_score(synthetic_embedding(ph), labels, 0,
										/*restarts=*/10);
	}
	CHECK(total / trials == doctest::Approx(0.5).epsilon(0.2));
}

TEST_CASE("cluster score: label size mismatch") {
	const auto emb = synthetic_embedding({0.0, 1.0});
	CHECK_THROWS_AS(circular_cluster_score(emb, {0}, 0), LabelMismatch);
}
