#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "meig/graph.hpp"

namespace meig {

struct LabeledGraph {
	DirectedGraph graph;
	std::vector<int> labels;
};

/// Groups arranged on a cycle with a running flow: intra-group links are
/// undirected, inter-group links sit between cyclically adjacent groups and
/// are mostly directed along the flow group_k -> group_{k+1}.
inline LabeledGraph gen_flow_groups(int groups, int size, double p_intra,
									double p_inter, double directed_fraction,
									unsigned seed) {
	if (groups < 2 || size < 1)
		throw ParamOutOfRange("need >= 2 groups of >= 1 node");
	if (p_intra < 0 || p_intra > 1 || p_inter < 0 || p_inter > 1 ||
		directed_fraction < 0 || directed_fraction > 1)
		throw ParamOutOfRange("probabilities must lie in [0, 1]");
	const int n = groups * size;
	DirectedGraph g(n);
	std::vector<int> labels(n);
	for (int i = 0; i < n; ++i) labels[i] = i / size;
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> uni(0.0, 1.0);
	// Intra-group, undirected.
	for (int grp = 0; grp < groups; ++grp)
		for (int i = grp * size; i < (grp + 1) * size; ++i)
			for (int j = i + 1; j < (grp + 1) * size; ++j)
				if (uni(rng) < p_intra) {
					g.add_edge(i, j);
					g.add_edge(j, i);
				}
	// Inter-group along the cycle grp -> grp + 1.
	for (int grp = 0; grp < groups; ++grp) {
		const int nxt = (grp + 1) % groups;
		for (int i = grp * size; i < (grp + 1) * size; ++i)
			for (int j = nxt * size; j < (nxt + 1) * size; ++j)
				if (uni(rng) < p_inter) {
					if (uni(rng) < directed_fraction) g.add_edge(i, j);
					else g.add_edge(j, i);
				}
	}
	return {g, labels};
}

/// Two dense undirected cores with a few interconnecting links, plus a pair
/// of pure sinks (in-coming links from every core node) and a pair of pure
/// sources (out-going links to every core node). Labels: 0/1 cores, 2 sinks,
/// 3 sources.
inline LabeledGraph gen_cluster_hubs(int group_size, double p_intra,
									 int n_interlinks, int pair_size,
									 unsigned seed) {
	if (group_size < 1 || pair_size < 1 || n_interlinks < 0)
		throw ParamOutOfRange("invalid cluster-hub sizes");
	if (p_intra < 0 || p_intra > 1)
		throw ParamOutOfRange("probability must lie in [0, 1]");
	if (n_interlinks > group_size * group_size)
		throw ParamOutOfRange("too many interlinks");
	const int core = 2 * group_size;
	const int n = core + 2 * pair_size;
	DirectedGraph g(n);
	std::vector<int> labels(n);
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> uni(0.0, 1.0);
	for (int grp = 0; grp < 2; ++grp)
		for (int i = grp * group_size; i < (grp + 1) * group_size; ++i) {
			labels[i] = grp;
			for (int j = i + 1; j < (grp + 1) * group_size; ++j)
				if (uni(rng) < p_intra) {
					g.add_edge(i, j);
					g.add_edge(j, i);
				}
		}
	// Distinct undirected cross-core links.
	std::uniform_int_distribution<int> pick(0, group_size - 1);
	std::set<std::pair<int, int>> used;
	while (int(used.size()) < n_interlinks) {
		const int i = pick(rng);
		const int j = group_size + pick(rng);
		if (used.insert({i, j}).second) {
			g.add_edge(i, j);
			g.add_edge(j, i);
		}
	}
	for (int s = 0; s < pair_size; ++s) {
		const int sink = core + s;
		const int source = core + pair_size + s;
		labels[sink] = 2;
		labels[source] = 3;
		for (int i = 0; i < core; ++i) {
			g.add_edge(i, sink);
			g.add_edge(source, i);
		}
	}
	return {g, labels};
}

/// Directed n-cycle 0 -> 1 -> ... -> 0.
inline DirectedGraph gen_cycle(int n) {
	if (n < 3) throw ParamOutOfRange("cycle needs >= 3 nodes");
	DirectedGraph g(n);
	for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
	return g;
}

/// Random tree: node i >= 1 attaches to a uniform earlier node, random link
/// direction.
inline DirectedGraph gen_tree(int n, unsigned seed) {
	if (n < 1) throw ParamOutOfRange("tree needs >= 1 node");
	DirectedGraph g(n);
	std::mt19937_64 rng(seed);
	for (int i = 1; i < n; ++i) {
		std::uniform_int_distribution<int> pick(0, i - 1);
		const int p = pick(rng);
		if (rng() & 1) g.add_edge(p, i);
		else g.add_edge(i, p);
	}
	return g;
}

/// Erdos-Renyi digraph: each ordered pair present independently with
/// probability p; resampled until the undirected support is connected.
inline DirectedGraph gen_erdos_renyi_digraph(int n, double p, unsigned seed,
											 int max_retries = 100) {
	if (n < 1) throw ParamOutOfRange("need >= 1 node");
	if (p < 0 || p > 1) throw ParamOutOfRange("probability must lie in [0, 1]");
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> uni(0.0, 1.0);
	for (int attempt = 0; attempt < max_retries; ++attempt) {
		DirectedGraph g(n);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				if (i != j && uni(rng) < p) g.add_edge(i, j);
		if (is_connected(g)) return g;
	}
	throw ConnectivityRetryExceeded("no connected sample in " +
									std::to_string(max_retries) + " tries");
}

} // namespace meig
