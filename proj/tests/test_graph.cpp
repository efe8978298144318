#include <doctest.h>

#include "meig/generators.hpp"
#include "meig/graph.hpp"

using namespace meig;

namespace {

DirectedGraph three_cycle() {
	DirectedGraph g(3);
	g.add_edge(0, 1);
	g.add_edge(1, 2);
	g.add_edge(2, 0);
	return g;
}

} // namespace

TEST_CASE("symmetrize: single directed edge") {
	DirectedGraph g(2);
	g.add_edge(0, 1);
	const auto sym = symmetrize(g);
	REQUIRE(sym.edges().size() == 1);
	CHECK(sym.edges()[0].w == 0.5);
	CHECK(sym.edges()[0].flow == 1);
	CHECK(sym.degree(0) == 0.5);
	CHECK(sym.degree(1) == 0.5);
	CHECK(sym.volume() == 1.0);
}

TEST_CASE("symmetrize: reciprocal pair is undirected") {
	DirectedGraph g(2);
	g.add_edge(0, 1);
	g.add_edge(1, 0);
	const auto sym = symmetrize(g);
	CHECK(sym.edges()[0].w == 1.0);
	CHECK(sym.edges()[0].flow == 0);
}

TEST_CASE("symmetrize: directed 3-cycle degrees and volume") {
	const auto sym = symmetrize(three_cycle());
	for (int i = 0; i < 3; ++i) CHECK(sym.degree(i) == doctest::Approx(1.0));
	CHECK(sym.volume() == doctest::Approx(3.0));
}

TEST_CASE("volume equals twice the symmetric edge weight sum") {
	for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
		const auto g = gen_erdos_renyi_digraph(30, 0.12, seed);
		const auto sym = symmetrize(g);
		double wsum = 0.0;
		for (const auto& e : sym.edges()) wsum += e.w;
		CHECK(sym.volume() == doctest::Approx(2.0 * wsum).epsilon(1e-12));
	}
}

TEST_CASE("flow is antisymmetric per edge record") {
	const auto sym = symmetrize(gen_erdos_renyi_digraph(20, 0.2, 9));
	for (std::size_t k = 0; k < sym.edges().size(); ++k) {
		const auto& e = sym.edges()[k];
		CHECK(sym.flow_from(int(k), e.u) + sym.flow_from(int(k), e.v) == 0);
	}
}

TEST_CASE("connectivity") {
	CHECK(is_connected(three_cycle()));
	CHECK(is_connected(DirectedGraph(1)));
	DirectedGraph g(4);
	g.add_edge(0, 1);
	g.add_edge(2, 3);
	CHECK(!is_connected(g));
	const auto comps = symmetrize(g).components();
	REQUIRE(comps.size() == 2);
	CHECK(comps[0] == std::vector<int>{0, 1});
}

TEST_CASE("graph invariants: self-loops and bad indices rejected") {
	DirectedGraph g(3);
	CHECK_THROWS_AS(g.add_edge(1, 1), InvalidGraph);
	CHECK_THROWS_AS(g.add_edge(0, 3), InvalidGraph);
	CHECK_THROWS_AS(DirectedGraph(0), InvalidGraph);
}

TEST_CASE("spanning tree: 3-cycle has one cotree edge") {
	const auto sym = symmetrize(three_cycle());
	const auto t = spanning_tree(sym);
	CHECK(t.tree_edges().size() == 2);
	CHECK(t.cotree_edges().size() == 1);
	CHECK(t.betti1() == 1);
}

TEST_CASE("spanning tree: path graph is its own tree") {
	DirectedGraph g(3);
	g.add_edge(0, 1);
	g.add_edge(1, 2);
	const auto t = spanning_tree(symmetrize(g));
	CHECK(t.betti1() == 0);
}

TEST_CASE("spanning tree: K4 has beta1 = 3") {
	DirectedGraph g(4);
	for (int i = 0; i < 4; ++i)
		for (int j = i + 1; j < 4; ++j) {
			g.add_edge(i, j);
			g.add_edge(j, i);
		}
	CHECK(spanning_tree(symmetrize(g)).betti1() == 3);
}

TEST_CASE("spanning tree requires connectivity") {
	DirectedGraph g(4);
	g.add_edge(0, 1);
	g.add_edge(2, 3);
	CHECK_THROWS_AS(spanning_tree(symmetrize(g)), NotConnected);
}

TEST_CASE("beta1 = |E| - |V| + 1 on random connected graphs") {
	for (unsigned seed : {11u, 12u, 13u, 14u}) {
		const auto g = gen_erdos_renyi_digraph(25, 0.15, seed);
		const auto sym = symmetrize(g);
		const auto t = spanning_tree(sym);
		CHECK(t.betti1() ==
			  int(sym.edges().size()) - g.num_nodes() + 1);
	}
}

TEST_CASE("spanning tree is deterministic") {
	const auto g = gen_erdos_renyi_digraph(30, 0.15, 42);
	const auto sym = symmetrize(g);
	const auto t1 = spanning_tree(sym);
	const auto t2 = spanning_tree(sym);
	CHECK(t1.tree_edges() == t2.tree_edges());
	CHECK(t1.cotree_edges() == t2.cotree_edges());
}

TEST_CASE("tree path on a path graph") {
	DirectedGraph g(3);
	g.add_edge(0, 1);
	g.add_edge(1, 2);
	const auto t = spanning_tree(symmetrize(g));
	const auto p = t.path(0, 2);
	REQUIRE(p.size() == 2);
	CHECK(p[0] == std::make_pair(0, 1));
	CHECK(p[1] == std::make_pair(1, 2));
	CHECK(t.path(1, 1).empty());
}

TEST_CASE("tree path through a star center") {
	DirectedGraph g(4);
	for (int leaf = 1; leaf < 4; ++leaf) g.add_edge(0, leaf);
	const auto t = spanning_tree(symmetrize(g));
	const auto p = t.path(1, 2);
	REQUIRE(p.size() == 2);
	CHECK(p[0] == std::make_pair(1, 0));
	CHECK(p[1] == std::make_pair(0, 2));
}
