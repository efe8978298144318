// Command line front end: generate synthetic digraphs, embed them on the
// torus via the magnetic Laplacian, and export spectra and diagnostics.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "meig/meig.hpp"

namespace {

meig::GeneratorSpec parse_generator(const std::string& spec, unsigned seed) {
	// "kind" or "kind:key=value,key=value"
	meig::GeneratorSpec out;
	out.seed = seed;
	const auto colon = spec.find(':');
	out.kind = spec.substr(0, colon);
	if (colon != std::string::npos) {
		std::istringstream rest(spec.substr(colon + 1));
		std::string item;
		while (std::getline(rest, item, ',')) {
			const auto eq = item.find('=');
			if (eq == std::string::npos)
				throw meig::ParseError("bad generator parameter '" + item + "'");
			out.params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
		}
	}
	return out;
}

void add_common(CLI::App* cmd, meig::RunConfig& cfg, std::string& input,
				std::string& gen, std::string& charge, std::string& axes,
				std::string& solver, std::string& rotate) {
	cmd->add_option("--input", input, "edge list or .gml file");
	cmd->add_option("--gen", gen,
					"generator spec, e.g. flow_groups:groups=3,size=10");
	cmd->add_option("--g", charge, "charge as a rational k/m (default 1/4)");
	cmd->add_option("--k", cfg.k, "number of eigenpairs");
	cmd->add_option("--axes", axes, "eigen index pair, e.g. 0,1");
	cmd->add_option("--solver", solver, "dense|power");
	cmd->add_option("--tol", cfg.tol, "iterative solver residual tolerance");
	cmd->add_option("--seed", cfg.seed, "RNG seed");
	cmd->add_option("--out", cfg.out_dir, "output directory");
	cmd->add_option("--labels", cfg.labels_path,
					"node_id label file for coloring/scoring");
	cmd->add_flag("--drop-isolated", cfg.drop_isolated,
				  "drop nodes without links before embedding");
	cmd->add_option("--rotate", rotate, "axis,angle phase rotation of the output");
}

void finish_config(meig::RunConfig& cfg, const std::string& input,
				   const std::string& gen, const std::string& charge,
				   const std::string& axes, const std::string& solver,
				   const std::string& rotate) {
	if (!input.empty()) cfg.input_path = input;
	if (!gen.empty()) cfg.generator = parse_generator(gen, cfg.seed);
	if (!charge.empty()) cfg.g = meig::Charge::parse(charge);
	if (!axes.empty()) {
		cfg.axes.clear();
		std::istringstream ss(axes);
		std::string tok;
		while (std::getline(ss, tok, ',')) cfg.axes.push_back(std::stoi(tok));
	}
	if (solver == "power") cfg.use_power = true;
	else if (!solver.empty() && solver != "dense")
		throw meig::ParseError("unknown solver '" + solver + "'");
	if (!rotate.empty()) {
		const auto comma = rotate.find(',');
		if (comma == std::string::npos)
			throw meig::ParseError("--rotate expects axis,angle");
		cfg.rotations.emplace_back(std::stoi(rotate.substr(0, comma)),
								   std::stod(rotate.substr(comma + 1)));
	}
	for (int a : cfg.axes)
		if (a < 0) throw meig::IndexOutOfRange("negative eigen axis");
}

void report(const meig::CommandResult& res) {
	for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
	for (const auto& f : res.files) std::cout << "wrote " << f << "\n";
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Torus embeddings of directed graphs via the magnetic Laplacian"};
	app.require_subcommand(1);

	meig::RunConfig cfg;
	std::string input, gen, charge, axes, solver, rotate;

	auto* c_generate = app.add_subcommand("generate", "write a synthetic digraph");
	auto* c_embed = app.add_subcommand("embed", "torus embedding + diagnostics");
	auto* c_spectrum = app.add_subcommand("spectrum", "eigenvalues only");
	auto* c_diagnose = app.add_subcommand("diagnose", "diagnostics only");
	auto* c_baseline =
		app.add_subcommand("baseline", "diffusion-maps baseline at g = 0");
	for (auto* c : {c_generate, c_embed, c_spectrum, c_diagnose, c_baseline})
		add_common(c, cfg, input, gen, charge, axes, solver, rotate);

	CLI11_PARSE(app, argc, argv);

	try {
		finish_config(cfg, input, gen, charge, axes, solver, rotate);
		if (c_generate->parsed()) {
			if (!cfg.generator) throw meig::ParseError("generate needs --gen");
			const auto io = meig::detail::generate(*cfg.generator);
			namespace fs = std::filesystem;
			fs::create_directories(cfg.out_dir);
			const auto epath = (fs::path(cfg.out_dir) / "graph.edges").string();
			meig::write_edge_list(epath, io);
			std::cout << "wrote " << epath << "\n";
			if (!io.labels.empty()) {
				const auto lpath = (fs::path(cfg.out_dir) / "labels.csv").string();
				std::ofstream out(lpath);
				for (int i = 0; i < io.graph.num_nodes(); ++i)
					out << io.node_ids[i] << " " << io.labels[i] << "\n";
				std::cout << "wrote " << lpath << "\n";
			}
		} else if (c_embed->parsed()) {
			report(meig::cmd_embed(cfg));
		} else if (c_spectrum->parsed()) {
			auto prep = meig::prepare_graph(cfg);
			for (const auto& w : prep.notes) std::cerr << "warning: " << w << "\n";
			const meig::SymmetrizedView sym(prep.io.graph);
			const meig::MagneticLaplacian lap(sym, cfg.g);
			meig::RunConfig c2 = cfg;
			c2.k = std::min(cfg.k, lap.size());
			const auto es = meig::solve(lap, c2);
			const auto es0 =
				meig::eig_dense(meig::MagneticLaplacian(sym, meig::Charge(0, 1)),
								c2.k);
			namespace fs = std::filesystem;
			fs::create_directories(cfg.out_dir);
			const auto path = (fs::path(cfg.out_dir) / "spectrum.csv").string();
			meig::write_spectrum_csv(path, es.values, es0.values);
			std::cout << "wrote " << path << "\n";
		} else if (c_diagnose->parsed()) {
			auto prep = meig::prepare_graph(cfg);
			for (const auto& w : prep.notes) std::cerr << "warning: " << w << "\n";
			const meig::SymmetrizedView sym(prep.io.graph);
			const meig::MagneticLaplacian lap(sym, cfg.g);
			meig::RunConfig c2 = cfg;
			c2.k = std::min(cfg.k, lap.size());
			const auto es = meig::solve(lap, c2);
			const auto j = meig::diagnostics_json(sym, lap, es);
			namespace fs = std::filesystem;
			fs::create_directories(cfg.out_dir);
			const auto path = (fs::path(cfg.out_dir) / "diagnostics.json").string();
			std::ofstream out(path);
			out << j.dump(2) << "\n";
			std::cout << "wrote " << path << "\n";
		} else if (c_baseline->parsed()) {
			report(meig::cmd_diffusion_baseline(cfg));
		}
	} catch (const meig::ParseError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const meig::MissingField& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const meig::Error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	}
	return 0;
}
