#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <utility>
#include <vector>

#include "meig/errors.hpp"

namespace meig {

/// Directed graph with binary weights. Each unordered pair {i, j} is stored
/// once, carrying the presence of both directed links, so w_ij and the edge
/// flow a_ij are recoverable per pair.
class DirectedGraph {
public:
	struct PairRecord {
		int u, v;       // u < v
		bool fwd, bwd;  // u->v present, v->u present
	};

	DirectedGraph() : n_(1) {} // placeholder; reassigned by readers/generators

	explicit DirectedGraph(int n) : n_(n) {
		if (n < 1) throw InvalidGraph("node count must be >= 1");
	}

	int num_nodes() const { return n_; }
	const std::vector<PairRecord>& pairs() const { return pairs_; }
	std::size_t num_pairs() const { return pairs_.size(); }

	/// Number of directed links (reciprocal pairs count twice).
	std::size_t num_directed_edges() const {
		std::size_t c = 0;
		for (const auto& p : pairs_) c += int(p.fwd) + int(p.bwd);
		return c;
	}

	void add_edge(int i, int j) {
		if (i < 0 || i >= n_ || j < 0 || j >= n_)
			throw InvalidGraph("node index out of range");
		if (i == j) throw InvalidGraph("self-loops are not allowed");
		const int u = std::min(i, j), v = std::max(i, j);
		auto it = index_.find({u, v});
		if (it == index_.end()) {
			index_[{u, v}] = pairs_.size();
			pairs_.push_back({u, v, i < j, i > j});
		} else {
			auto& rec = pairs_[it->second];
			if (i < j) rec.fwd = true; else rec.bwd = true;
		}
	}

	bool has_edge(int i, int j) const {
		const int u = std::min(i, j), v = std::max(i, j);
		auto it = index_.find({u, v});
		if (it == index_.end()) return false;
		const auto& rec = pairs_[it->second];
		return (i < j) ? rec.fwd : rec.bwd;
	}

	/// Directed links as (src, dst) pairs, sorted, for serialization.
	std::vector<std::pair<int, int>> directed_edges() const {
		std::vector<std::pair<int, int>> out;
		for (const auto& p : pairs_) {
			if (p.fwd) out.emplace_back(p.u, p.v);
			if (p.bwd) out.emplace_back(p.v, p.u);
		}
		std::sort(out.begin(), out.end());
		return out;
	}

private:
	int n_;
	std::vector<PairRecord> pairs_;
	std::map<std::pair<int, int>, std::size_t> index_;
};

/// Symmetric weights w_bar in {1/2, 1}, skew flow a in {-1, 0, +1}, degrees
/// and volume of the underlying undirected support.
struct SymEdge {
	int u, v;   // u < v
	double w;   // (w_uv + w_vu) / 2
	int flow;   // a_uv = w_uv - w_vu
};

class SymmetrizedView {
public:
	explicit SymmetrizedView(const DirectedGraph& g) : n_(g.num_nodes()) {
		edges_.reserve(g.num_pairs());
		for (const auto& p : g.pairs()) {
			SymEdge e;
			e.u = p.u;
			e.v = p.v;
			e.w = (int(p.fwd) + int(p.bwd)) / 2.0;
			e.flow = int(p.fwd) - int(p.bwd);
			edges_.push_back(e);
		}
		degree_.assign(n_, 0.0);
		for (const auto& e : edges_) {
			degree_[e.u] += e.w;
			degree_[e.v] += e.w;
		}
		volume_ = 0.0;
		for (double d : degree_) volume_ += d;
		// Incidence lists sorted by neighbor index for deterministic BFS.
		incident_.assign(n_, {});
		for (std::size_t k = 0; k < edges_.size(); ++k) {
			incident_[edges_[k].u].push_back(int(k));
			incident_[edges_[k].v].push_back(int(k));
		}
		for (int i = 0; i < n_; ++i) {
			std::sort(incident_[i].begin(), incident_[i].end(),
					  [&](int a, int b) {
						  return other(a, i) < other(b, i);
					  });
		}
	}

	int num_nodes() const { return n_; }
	const std::vector<SymEdge>& edges() const { return edges_; }
	const std::vector<double>& degrees() const { return degree_; }
	double degree(int i) const { return degree_[i]; }
	double volume() const { return volume_; }
	const std::vector<int>& incident(int i) const { return incident_[i]; }

	/// Endpoint of edge k opposite to node i.
	int other(int k, int i) const {
		const auto& e = edges_[k];
		return e.u == i ? e.v : e.u;
	}

	/// Edge flow seen from src: a_{src,dst} for edge k.
	int flow_from(int k, int src) const {
		const auto& e = edges_[k];
		return e.u == src ? e.flow : -e.flow;
	}

	bool is_connected() const {
		if (n_ == 1) return true;
		std::vector<char> seen(n_, 0);
		std::queue<int> q;
		q.push(0);
		seen[0] = 1;
		int count = 1;
		while (!q.empty()) {
			int i = q.front();
			q.pop();
			for (int k : incident_[i]) {
				int j = other(k, i);
				if (!seen[j]) {
					seen[j] = 1;
					++count;
					q.push(j);
				}
			}
		}
		return count == n_;
	}

	/// Connected components of the undirected support, each a sorted node list,
	/// ordered by smallest contained node.
	std::vector<std::vector<int>> components() const {
		std::vector<char> seen(n_, 0);
		std::vector<std::vector<int>> comps;
		for (int s = 0; s < n_; ++s) {
			if (seen[s]) continue;
			std::vector<int> comp;
			std::queue<int> q;
			q.push(s);
			seen[s] = 1;
			while (!q.empty()) {
				int i = q.front();
				q.pop();
				comp.push_back(i);
				for (int k : incident_[i]) {
					int j = other(k, i);
					if (!seen[j]) {
						seen[j] = 1;
						q.push(j);
					}
				}
			}
			std::sort(comp.begin(), comp.end());
			comps.push_back(std::move(comp));
		}
		return comps;
	}

private:
	int n_;
	std::vector<SymEdge> edges_;
	std::vector<double> degree_;
	double volume_ = 0.0;
	std::vector<std::vector<int>> incident_;
};

inline SymmetrizedView symmetrize(const DirectedGraph& g) {
	return SymmetrizedView(g);
}

inline bool is_connected(const DirectedGraph& g) {
	return SymmetrizedView(g).is_connected();
}

/// BFS spanning tree rooted at node 0, neighbors visited in index order.
class SpanningTree {
public:
	explicit SpanningTree(const SymmetrizedView& sym) : sym_(&sym) {
		const int n = sym.num_nodes();
		parent_.assign(n, -1);
		parent_edge_.assign(n, -1);
		depth_.assign(n, 0);
		std::vector<char> in_tree_edge(sym.edges().size(), 0);
		std::vector<char> seen(n, 0);
		std::queue<int> q;
		q.push(0);
		seen[0] = 1;
		int count = 1;
		while (!q.empty()) {
			int i = q.front();
			q.pop();
			for (int k : sym.incident(i)) {
				int j = sym.other(k, i);
				if (!seen[j]) {
					seen[j] = 1;
					++count;
					parent_[j] = i;
					parent_edge_[j] = k;
					depth_[j] = depth_[i] + 1;
					in_tree_edge[k] = 1;
					q.push(j);
				}
			}
		}
		if (count != n) throw NotConnected("graph is not connected");
		for (std::size_t k = 0; k < sym.edges().size(); ++k) {
			if (in_tree_edge[k]) tree_edges_.push_back(int(k));
			else cotree_edges_.push_back(int(k));
		}
	}

	const std::vector<int>& tree_edges() const { return tree_edges_; }
	const std::vector<int>& cotree_edges() const { return cotree_edges_; }
	int parent(int i) const { return parent_[i]; }
	int betti1() const { return int(cotree_edges_.size()); }

	/// Unique tree path src -> dst as a sequence of (from, to) node steps.
	std::vector<std::pair<int, int>> path(int src, int dst) const {
		std::vector<int> up_src, up_dst;
		int a = src, b = dst;
		while (depth_[a] > depth_[b]) { up_src.push_back(a); a = parent_[a]; }
		while (depth_[b] > depth_[a]) { up_dst.push_back(b); b = parent_[b]; }
		while (a != b) {
			up_src.push_back(a);
			up_dst.push_back(b);
			a = parent_[a];
			b = parent_[b];
		}
		std::vector<std::pair<int, int>> steps;
		int cur = src;
		for (std::size_t k = 0; k < up_src.size(); ++k) {
			int nxt = parent_[up_src[k]];
			steps.emplace_back(cur, nxt);
			cur = nxt;
		}
		for (auto it = up_dst.rbegin(); it != up_dst.rend(); ++it) {
			steps.emplace_back(cur, *it);
			cur = *it;
		}
		return steps;
	}

	/// Signed flow sum along the tree path root -> i (the tree potential).
	long tree_flow_to(int i) const {
		long s = 0;
		while (parent_[i] >= 0) {
			s += sym_->flow_from(parent_edge_[i], parent_[i]);
			i = parent_[i];
		}
		return s;
	}

private:
	const SymmetrizedView* sym_;
	std::vector<int> parent_, parent_edge_, depth_;
	std::vector<int> tree_edges_, cotree_edges_;
};

inline SpanningTree spanning_tree(const SymmetrizedView& sym) {
	return SpanningTree(sym);
}

} // namespace meig
