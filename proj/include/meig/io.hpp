#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "meig/graph.hpp"

namespace meig {

/// Graph plus the external node ids it was read with (internal indices are
/// first-seen order and never leak into outputs).
struct IoGraph {
	DirectedGraph graph;
	std::vector<std::string> node_ids;
	std::vector<int> labels; // empty when the source carries no labels
};

namespace detail {

inline std::string format_sig(double x) {
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.12g", x);
	return buf;
}

} // namespace detail

/// Plain edge list: one "src dst" pair per line, '#' comments, string or
/// integer ids.
inline IoGraph read_edge_list(std::istream& in) {
	std::vector<std::pair<std::string, std::string>> raw;
	std::map<std::string, int> index;
	std::vector<std::string> ids;
	std::string line;
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		const auto hash = line.find('#');
		if (hash != std::string::npos) line.erase(hash);
		std::istringstream ls(line);
		std::string a, b, extra;
		if (!(ls >> a)) continue; // blank line
		if (!(ls >> b) || (ls >> extra))
			throw ParseError("line " + std::to_string(lineno) +
							 ": expected exactly two node ids");
		if (a == b)
			throw ParseError("line " + std::to_string(lineno) + ": self-loop");
		for (const auto& id : {a, b})
			if (index.find(id) == index.end()) {
				index[id] = int(ids.size());
				ids.push_back(id);
			}
		raw.emplace_back(a, b);
	}
	if (ids.empty()) throw ParseError("empty edge list");
	DirectedGraph g(int(ids.size()));
	for (const auto& [a, b] : raw) g.add_edge(index[a], index[b]);
	return {g, ids, {}};
}

inline IoGraph read_edge_list(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw ParseError("cannot open " + path);
	return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const IoGraph& g) {
	for (const auto& [i, j] : g.graph.directed_edges())
		out << g.node_ids[i] << " " << g.node_ids[j] << "\n";
}

inline void write_edge_list(const std::string& path, const IoGraph& g) {
	std::ofstream out(path);
	if (!out) throw ParseError("cannot open " + path + " for writing");
	write_edge_list(out, g);
}

// ---------------------------------------------------------------------------
// GML subset: graph [ node [ id .. label ".." value .. ] edge [ source ..
// target .. ] ]. Self-loops in the data are skipped; duplicate directed
// edges collapse.

namespace gml {

struct Token {
	enum Kind { Ident, Number, String, Open, Close, End } kind;
	std::string text;
	std::size_t offset;
};

class Lexer {
public:
	explicit Lexer(const std::string& text) : s_(text) {}

	Token next() {
		while (pos_ < s_.size() && std::isspace(uchar(s_[pos_]))) ++pos_;
		if (pos_ >= s_.size()) return {Token::End, "", pos_};
		const std::size_t start = pos_;
		const char c = s_[pos_];
		if (c == '[') { ++pos_; return {Token::Open, "[", start}; }
		if (c == ']') { ++pos_; return {Token::Close, "]", start}; }
		if (c == '"') {
			++pos_;
			std::string out;
			while (pos_ < s_.size() && s_[pos_] != '"') out += s_[pos_++];
			if (pos_ >= s_.size())
				throw ParseError("unterminated string at byte " +
								 std::to_string(start));
			++pos_;
			return {Token::String, out, start};
		}
		if (c == '-' || c == '+' || c == '.' || std::isdigit(uchar(c))) {
			std::string out;
			while (pos_ < s_.size() && !std::isspace(uchar(s_[pos_])) &&
				   s_[pos_] != '[' && s_[pos_] != ']')
				out += s_[pos_++];
			return {Token::Number, out, start};
		}
		if (std::isalpha(uchar(c)) || c == '_') {
			std::string out;
			while (pos_ < s_.size() &&
				   (std::isalnum(uchar(s_[pos_])) || s_[pos_] == '_'))
				out += s_[pos_++];
			return {Token::Ident, out, start};
		}
		throw ParseError("unexpected character '" + std::string(1, c) +
						 "' at byte " + std::to_string(start));
	}

private:
	static unsigned char uchar(char c) { return static_cast<unsigned char>(c); }
	const std::string& s_;
	std::size_t pos_ = 0;
};

struct Value {
	std::string scalar; // number or string payload
	std::vector<std::pair<std::string, Value>> list;
	bool is_list = false;
};

inline Value parse_value(Lexer& lex, Token tok);

inline std::vector<std::pair<std::string, Value>> parse_list(Lexer& lex) {
	std::vector<std::pair<std::string, Value>> items;
	for (;;) {
		Token key = lex.next();
		if (key.kind == Token::Close || key.kind == Token::End) return items;
		if (key.kind != Token::Ident)
			throw ParseError("expected key at byte " + std::to_string(key.offset));
		items.emplace_back(key.text, parse_value(lex, lex.next()));
	}
}

inline Value parse_value(Lexer& lex, Token tok) {
	Value v;
	if (tok.kind == Token::Open) {
		v.is_list = true;
		v.list = parse_list(lex);
	} else if (tok.kind == Token::Number || tok.kind == Token::String) {
		v.scalar = tok.text;
	} else {
		throw ParseError("expected value at byte " + std::to_string(tok.offset));
	}
	return v;
}

inline const Value* find(const std::vector<std::pair<std::string, Value>>& list,
						 const std::string& key) {
	for (const auto& [k, v] : list)
		if (k == key) return &v;
	return nullptr;
}

} // namespace gml

struct GmlOptions {
	bool drop_isolated = false;
};

inline IoGraph drop_isolated_nodes(const IoGraph& in);

inline IoGraph read_gml(const std::string& text, const GmlOptions& opt = {}) {
	gml::Lexer lex(text);
	const auto top = gml::parse_list(lex);
	const gml::Value* graph = gml::find(top, "graph");
	if (!graph || !graph->is_list) throw MissingField("no graph block");

	std::map<std::string, int> index; // keyed by the GML id field
	std::vector<std::string> ids;     // display name: label when present
	std::vector<std::optional<int>> values;
	std::vector<std::pair<int, int>> edges;

	for (const auto& [key, val] : graph->list) {
		if (key == "node") {
			const gml::Value* id = gml::find(val.list, "id");
			if (!id) throw MissingField("node without id");
			if (index.count(id->scalar))
				throw ParseError("duplicate node id '" + id->scalar + "'");
			index[id->scalar] = int(ids.size());
			std::string name = id->scalar;
			if (const gml::Value* label = gml::find(val.list, "label");
				label && !label->scalar.empty())
				name = label->scalar;
			ids.push_back(name);
			if (const gml::Value* v = gml::find(val.list, "value"))
				values.push_back(int(std::lround(std::stod(v->scalar))));
			else
				values.push_back(std::nullopt);
		} else if (key == "edge") {
			const gml::Value* src = gml::find(val.list, "source");
			const gml::Value* dst = gml::find(val.list, "target");
			if (!src || !dst) throw MissingField("edge without source/target");
			const auto is = index.find(src->scalar);
			const auto it = index.find(dst->scalar);
			if (is == index.end() || it == index.end())
				throw ParseError("edge references unknown node");
			edges.emplace_back(is->second, it->second);
		}
	}

	if (ids.empty()) throw ParseError("GML graph has no nodes");
	DirectedGraph g(int(ids.size()));
	for (auto [s, t] : edges) {
		if (s == t) continue; // self-loops carry no direction information
		g.add_edge(s, t);
	}

	bool all_value = true;
	for (const auto& v : values)
		if (!v) all_value = false;
	std::vector<int> labels;
	if (all_value)
		for (const auto& v : values) labels.push_back(*v);

	IoGraph out{g, ids, labels};
	if (opt.drop_isolated) out = drop_isolated_nodes(out);
	return out;
}

inline IoGraph read_gml_file(const std::string& path, const GmlOptions& opt = {}) {
	std::ifstream in(path);
	if (!in) throw ParseError("cannot open " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	return read_gml(ss.str(), opt);
}

/// Nodes with no incident links removed; remaining indices compacted in
/// first-seen order.
inline IoGraph drop_isolated_nodes(const IoGraph& in) {
	std::vector<char> keep(in.graph.num_nodes(), 0);
	for (const auto& p : in.graph.pairs()) keep[p.u] = keep[p.v] = 1;
	std::vector<int> remap(in.graph.num_nodes(), -1);
	std::vector<std::string> ids;
	std::vector<int> labels;
	for (int i = 0; i < in.graph.num_nodes(); ++i) {
		if (!keep[i]) continue;
		remap[i] = int(ids.size());
		ids.push_back(in.node_ids[i]);
		if (!in.labels.empty()) labels.push_back(in.labels[i]);
	}
	if (ids.empty()) throw InvalidGraph("all nodes are isolated");
	DirectedGraph g(int(ids.size()));
	for (const auto& p : in.graph.pairs()) {
		if (p.fwd) g.add_edge(remap[p.u], remap[p.v]);
		if (p.bwd) g.add_edge(remap[p.v], remap[p.u]);
	}
	return {g, ids, labels};
}

/// Restriction to one connected component (sorted node list).
inline IoGraph restrict_to(const IoGraph& in, const std::vector<int>& nodes) {
	std::vector<int> remap(in.graph.num_nodes(), -1);
	std::vector<std::string> ids;
	std::vector<int> labels;
	for (int i : nodes) {
		remap[i] = int(ids.size());
		ids.push_back(in.node_ids[i]);
		if (!in.labels.empty()) labels.push_back(in.labels[i]);
	}
	DirectedGraph g(int(ids.size()));
	for (const auto& p : in.graph.pairs()) {
		if (remap[p.u] < 0 || remap[p.v] < 0) continue;
		if (p.fwd) g.add_edge(remap[p.u], remap[p.v]);
		if (p.bwd) g.add_edge(remap[p.v], remap[p.u]);
	}
	return {g, ids, labels};
}

} // namespace meig
