#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "meig/charge.hpp"
#include "meig/diagnostics.hpp"
#include "meig/eigensolver.hpp"
#include "meig/embedding.hpp"
#include "meig/generators.hpp"
#include "meig/io.hpp"

namespace meig {

struct GeneratorSpec {
	std::string kind; // flow_groups | cluster_hubs | erdos_renyi_digraph | tree | cycle
	std::map<std::string, double> params;
	unsigned seed = 1;
};

struct RunConfig {
	std::optional<std::string> input_path; // .gml or edge list
	std::optional<GeneratorSpec> generator;
	Charge g{1, 4};
	int k = 5;
	std::vector<int> axes{0, 1};
	bool use_power = false;
	double tol = 1e-10;
	int max_iter = 10000;
	std::string out_dir = ".";
	unsigned seed = 1;
	bool drop_isolated = false;
	std::optional<std::string> labels_path;
	std::vector<std::pair<int, double>> rotations; // (axis, angle) applied to output
};

namespace detail {

inline IoGraph generate(const GeneratorSpec& spec) {
	auto p = [&](const std::string& key, double def) {
		auto it = spec.params.find(key);
		return it == spec.params.end() ? def : it->second;
	};
	IoGraph out;
	if (spec.kind == "flow_groups") {
		auto [g, labels] = gen_flow_groups(int(p("groups", 3)), int(p("size", 10)),
										   p("p_intra", 0.5), p("p_inter", 0.5),
										   p("directed_fraction", 0.9), spec.seed);
		out.graph = g;
		out.labels = labels;
	} else if (spec.kind == "cluster_hubs") {
		auto [g, labels] =
			gen_cluster_hubs(int(p("group_size", 14)), p("p_intra", 0.5),
							 int(p("n_interlinks", 4)), int(p("pair_size", 2)),
							 spec.seed);
		out.graph = g;
		out.labels = labels;
	} else if (spec.kind == "erdos_renyi_digraph") {
		out.graph = gen_erdos_renyi_digraph(int(p("n", 40)), p("p", 0.15), spec.seed);
	} else if (spec.kind == "tree") {
		out.graph = gen_tree(int(p("n", 20)), spec.seed);
	} else if (spec.kind == "cycle") {
		out.graph = gen_cycle(int(p("n", 3)));
	} else {
		throw ParamOutOfRange("unknown generator kind '" + spec.kind + "'");
	}
	out.node_ids.resize(out.graph.num_nodes());
	for (int i = 0; i < out.graph.num_nodes(); ++i)
		out.node_ids[i] = std::to_string(i);
	return out;
}

} // namespace detail

/// Graph ready for the spectral pipeline, plus provenance notes (component
/// restriction is flagged, never silent).
struct PreparedGraph {
	IoGraph io;
	std::vector<std::string> notes;
};

inline PreparedGraph prepare_graph(const RunConfig& cfg) {
	PreparedGraph out;
	if (cfg.generator) {
		out.io = detail::generate(*cfg.generator);
	} else if (cfg.input_path) {
		const auto& path = *cfg.input_path;
		if (path.size() > 4 && path.substr(path.size() - 4) == ".gml")
			out.io = read_gml_file(path, {cfg.drop_isolated});
		else
			out.io = read_edge_list(path);
	} else {
		throw ParseError("no input source configured");
	}
	if (cfg.drop_isolated && !cfg.generator) out.io = drop_isolated_nodes(out.io);
	if (cfg.labels_path) {
		std::ifstream in(*cfg.labels_path);
		if (!in) throw ParseError("cannot open " + *cfg.labels_path);
		std::map<std::string, int> by_id;
		std::string id;
		int lab;
		while (in >> id >> lab) by_id[id] = lab;
		out.io.labels.assign(out.io.graph.num_nodes(), -1);
		for (int i = 0; i < out.io.graph.num_nodes(); ++i)
			if (auto it = by_id.find(out.io.node_ids[i]); it != by_id.end())
				out.io.labels[i] = it->second;
	}
	SymmetrizedView sym(out.io.graph);
	const auto comps = sym.components();
	if (comps.size() > 1) {
		std::size_t best = 0;
		for (std::size_t c = 1; c < comps.size(); ++c)
			if (comps[c].size() > comps[best].size()) best = c;
		out.notes.push_back("input is disconnected (" +
							std::to_string(comps.size()) +
							" components); using the largest with " +
							std::to_string(comps[best].size()) + " nodes");
		out.io = restrict_to(out.io, comps[best]);
	}
	if (out.io.graph.num_nodes() < 2)
		throw InvalidGraph("pipeline needs at least 2 connected nodes");
	return out;
}

// ---------------------------------------------------------------------------
// Exports.

inline void write_coords_csv(const std::string& path, const IoGraph& io,
							 const TorusEmbedding& emb) {
	std::ofstream out(path);
	if (!out) throw ParseError("cannot open " + path + " for writing");
	out << "node_id";
	for (std::size_t c = 0; c < emb.indices.size(); ++c)
		out << ",phase_" << emb.indices[c];
	for (std::size_t c = 0; c < emb.indices.size(); ++c)
		out << ",modulus_" << emb.indices[c];
	out << "\n";
	for (int i = 0; i < emb.coords.rows(); ++i) {
		out << io.node_ids[i];
		for (int c = 0; c < emb.coords.cols(); ++c)
			out << "," << detail::format_sig(emb.coords(i, c));
		for (int c = 0; c < emb.moduli.cols(); ++c)
			out << "," << detail::format_sig(emb.moduli(i, c));
		out << "\n";
	}
}

inline void write_spectrum_csv(const std::string& path, const Eigen::VectorXd& lam_g,
							   const Eigen::VectorXd& lam_0) {
	std::ofstream out(path);
	if (!out) throw ParseError("cannot open " + path + " for writing");
	out << "k,lambda_g,lambda_0\n";
	for (int k = 0; k < lam_g.size(); ++k)
		out << k << "," << detail::format_sig(lam_g[k]) << ","
			<< detail::format_sig(lam_0[k]) << "\n";
}

inline nlohmann::json diagnostics_json(const SymmetrizedView& sym,
									   const MagneticLaplacian& lap,
									   const EigenSystem& es) {
	const SpanningTree tree(sym);
	const auto hol = holonomies(sym, tree, lap.charge());
	const auto led = bound_ledger(lap, es, hol);
	const auto pot = recover_potential(sym);
	const auto sync = synchronize(lap);

	nlohmann::json j;
	j["charge"] = lap.charge().str();
	j["frustration"] = sync.frustration_value;
	j["epsilon"] = hol.epsilon;
	j["beta1"] = hol.beta1;
	j["gauge_trivial"] = hol.gauge_trivial;
	j["lambda0_g"] = led.lambda0_g;
	j["lambda1_comb"] = led.lambda1_comb;
	j["bounds"] = nlohmann::json::array();
	for (const auto& b : led.bounds)
		j["bounds"].push_back(
			{{"name", b.name}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"slack", b.slack()}});
	j["potential"]["exists"] = bool(pot.h);
	if (pot.h) j["potential"]["h"] = *pot.h;
	return j;
}

/// Torus square with cut lines; marker colors: class 0 blue, class 1 red,
/// further classes from a fixed palette, unlabeled gray.
inline void write_torus_svg(const std::string& path, const Eigen::MatrixXd& xy,
							const std::vector<int>& labels,
							const std::string& x_name, const std::string& y_name,
							bool torus_axes = true) {
	static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
									"#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
	const int size = 560, margin = 40, plot = size - 2 * margin;
	const double lo = torus_axes ? 0.0 : xy.minCoeff() - 1e-9;
	const double hi = torus_axes ? kTwoPi : xy.maxCoeff() + 1e-9;
	auto X = [&](double v) { return margin + plot * (v - lo) / (hi - lo); };
	auto Y = [&](double v) { return size - margin - plot * (v - lo) / (hi - lo); };
	std::ofstream out(path);
	if (!out) throw ParseError("cannot open " + path + " for writing");
	out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
		<< "\" height=\"" << size << "\">\n";
	out << "<!-- generator: meig svg 1 -->\n";
	out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << plot
		<< "\" height=\"" << plot
		<< "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\""
		<< (torus_axes ? " stroke-dasharray=\"8,4\"" : "") << "/>\n";
	out << "<text x=\"" << size / 2 << "\" y=\"" << size - 8
		<< "\" text-anchor=\"middle\" font-size=\"14\">" << x_name << "</text>\n";
	out << "<text x=\"14\" y=\"" << size / 2
		<< "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 14 "
		<< size / 2 << ")\">" << y_name << "</text>\n";
	for (int i = 0; i < xy.rows(); ++i) {
		const char* color = "#888888";
		if (i < int(labels.size()) && labels[i] >= 0)
			color = palette[labels[i] % 8];
		out << "<circle cx=\"" << detail::format_sig(X(xy(i, 0))) << "\" cy=\""
			<< detail::format_sig(Y(xy(i, 1))) << "\" r=\"4\" fill=\"" << color
			<< "\" fill-opacity=\"0.8\"/>\n";
	}
	out << "</svg>\n";
}

// ---------------------------------------------------------------------------
// Commands. Each returns the paths it wrote.

struct CommandResult {
	std::vector<std::string> files;
	std::vector<std::string> warnings;
	nlohmann::json diagnostics;
};

inline EigenSystem solve(const MagneticLaplacian& lap, const RunConfig& cfg) {
	if (cfg.use_power)
		return eig_iterative(lap, cfg.k, cfg.tol, cfg.max_iter, cfg.seed);
	return eig_dense(lap, cfg.k);
}

inline CommandResult cmd_embed(const RunConfig& cfg) {
	CommandResult res;
	auto prep = prepare_graph(cfg);
	res.warnings = prep.notes;
	const SymmetrizedView sym(prep.io.graph);
	const MagneticLaplacian lap(sym, cfg.g);
	const int k = std::max(cfg.k, *std::max_element(cfg.axes.begin(),
													cfg.axes.end()) + 1);
	RunConfig cfg2 = cfg;
	cfg2.k = std::min(k, lap.size());
	const EigenSystem es = solve(lap, cfg2);
	TorusEmbedding emb = phases(es, cfg.axes, cfg.g);
	for (auto [axis, angle] : cfg.rotations) {
		const int c = emb.column_of(axis);
		for (int i = 0; i < emb.coords.rows(); ++i)
			emb.coords(i, c) = wrap_phase(emb.coords(i, c) + angle);
	}
	if (cfg.g.is_zero())
		res.warnings.push_back(
			"g = 0 carries no directional information: phases are constant");

	const MagneticLaplacian comb(sym, Charge(0, 1));
	const EigenSystem es0 = eig_dense(comb, cfg2.k);

	namespace fs = std::filesystem;
	fs::create_directories(cfg.out_dir);
	const auto path = [&](const char* name) {
		return (fs::path(cfg.out_dir) / name).string();
	};
	write_coords_csv(path("coords.csv"), prep.io, emb);
	write_spectrum_csv(path("spectrum.csv"), es.values, es0.values);
	res.diagnostics = diagnostics_json(sym, lap, es);
	if (!prep.io.labels.empty() && emb.indices.size() >= 1) {
		res.diagnostics["cluster_score_axis0"] =
			circular_cluster_score(emb, prep.io.labels, emb.indices[0]);
	}
	{
		std::ofstream out(path("diagnostics.json"));
		out << res.diagnostics.dump(2) << "\n";
	}
	Eigen::MatrixXd xy(emb.coords.rows(), 2);
	xy.col(0) = emb.coords.col(0);
	xy.col(1) = emb.coords.cols() > 1 ? emb.coords.col(1) : emb.coords.col(0);
	write_torus_svg(path("embedding.svg"), xy, prep.io.labels,
					"phase_" + std::to_string(emb.indices[0]),
					"phase_" + std::to_string(emb.indices.size() > 1
												  ? emb.indices[1]
												  : emb.indices[0]));
	res.files = {path("coords.csv"), path("spectrum.csv"), path("diagnostics.json"),
				 path("embedding.svg")};
	return res;
}

/// Diffusion-maps style baseline: g = 0, plot real eigenvector components
/// (the constant phi_0 is excluded).
inline CommandResult cmd_diffusion_baseline(const RunConfig& cfg) {
	CommandResult res;
	auto prep = prepare_graph(cfg);
	res.warnings = prep.notes;
	const SymmetrizedView sym(prep.io.graph);
	const MagneticLaplacian comb(sym, Charge(0, 1));
	RunConfig cfg2 = cfg;
	cfg2.k = std::min(std::max(cfg.k, 3), comb.size());
	const EigenSystem es = eig_dense(comb, cfg2.k);

	int a1 = cfg.axes.size() > 0 ? cfg.axes[0] : 1;
	int a2 = cfg.axes.size() > 1 ? cfg.axes[1] : 2;
	if (a1 == 0) a1 = 1; // constant eigenvector carries nothing
	if (a2 == 0 || a2 == a1) a2 = a1 + 1;
	if (a2 >= cfg2.k)
		throw IndexOutOfRange("baseline axes exceed computed eigenpairs");

	namespace fs = std::filesystem;
	fs::create_directories(cfg.out_dir);
	const auto path = [&](const char* name) {
		return (fs::path(cfg.out_dir) / name).string();
	};
	// Real eigenvectors up to a global complex unit; take real parts after
	// phase-aligning each column.
	Eigen::MatrixXd xy(comb.size(), 2);
	for (int c = 0; c < 2; ++c) {
		const int k = c == 0 ? a1 : a2;
		Eigen::VectorXcd col = es.phi.col(k);
		int pivot = 0;
		for (int i = 1; i < comb.size(); ++i)
			if (std::abs(col[i]) > std::abs(col[pivot])) pivot = i;
		col *= std::polar(1.0, -std::arg(col[pivot]));
		xy.col(c) = col.real();
	}
	std::ofstream out(path("baseline_coords.csv"));
	out << "node_id,phi_" << a1 << ",phi_" << a2 << "\n";
	for (int i = 0; i < comb.size(); ++i)
		out << prep.io.node_ids[i] << "," << detail::format_sig(xy(i, 0)) << ","
			<< detail::format_sig(xy(i, 1)) << "\n";
	write_torus_svg(path("baseline.svg"), xy, prep.io.labels,
					"phi_" + std::to_string(a1), "phi_" + std::to_string(a2),
					/*torus_axes=*/false);
	res.files = {path("baseline_coords.csv"), path("baseline.svg")};
	return res;
}

} // namespace meig
