// Pipeline driver: tagging, corpus variants, graph building, globalization,
// evaluation, statistics and plot emission.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "entgraph/corpus_variant.hpp"
#include "entgraph/errors.hpp"
#include "entgraph/eval.hpp"
#include "entgraph/globalize.hpp"
#include "entgraph/lexicon.hpp"
#include "entgraph/subgraph.hpp"
#include "entgraph/tagger.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace entgraph;

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  return out;
}

int run_tag(const std::string& parses, const std::string& lexicon_path,
            const std::string& out_path, const std::string& stats_path) {
  const Lexicon lexicon = Lexicon::load(lexicon_path);
  auto in = open_in(parses);
  auto out = open_out(out_path);
  TagStats stats = tag_corpus(
      in, lexicon,
      [&](const RelationTriple& t) { out << serialize_relation(t) << "\n"; },
      &std::cerr);
  if (!stats_path.empty()) {
    json j;
    j["total"] = stats.total;
    j["tagged"] = stats.tagged;
    j["tagged_fraction"] = stats.tagged_fraction();
    json per_tag = json::object();
    for (const auto& [tag, n] : stats.per_tag) {
      per_tag[std::string(to_string(tag))] = {
          {"count", n}, {"fraction", stats.tag_fraction(tag)}};
    }
    j["per_tag"] = std::move(per_tag);
    open_out(stats_path) << j.dump(2) << "\n";
  }
  return 0;
}

int run_build_corpus(const std::string& in_path, const std::string& variant,
                     double fraction, std::uint64_t seed,
                     const std::string& out_path,
                     const std::string& report_path) {
  VariantSpec spec;
  spec.variant = parse_variant(variant);
  spec.sample_fraction = fraction;
  spec.seed = seed;
  VariantBuilder builder(spec);
  auto in = open_in(in_path);
  auto out = open_out(out_path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    RelationTriple t;
    try {
      t = parse_relation_line(line);
    } catch (const ParseError& e) {
      throw ParseError(in_path + ":" + std::to_string(lineno) + ": " +
                       e.what());
    }
    builder.feed(t, [&](const RelationTriple& kept) {
      out << serialize_relation(kept) << "\n";
    });
  }
  if (!report_path.empty())
    open_out(report_path) << builder.report().to_json() << "\n";
  return 0;
}

int run_build_graphs(const std::string& corpus, const std::string& types_path,
                     const std::string& out_dir, int min_arg_pairs,
                     int min_preds, double score_floor,
                     const std::string& fallback, bool require_ne,
                     bool dirt, bool weeds, int workers) {
  const TypeMap types = TypeMap::load(types_path, fallback);
  CountTableMap tables;
  auto in = open_in(corpus);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    RelationTriple t;
    try {
      t = parse_relation_line(line);
    } catch (const ParseError& e) {
      throw ParseError(corpus + ":" + std::to_string(lineno) + ": " +
                       e.what());
    }
    if (require_ne && !filter_named_entity(t)) continue;
    const TypedRelation rel = type_relation(t, types);
    auto [it, inserted] = tables.try_emplace(rel.key);
    if (inserted) it->second.key = rel.key;
    it->second.add(rel);
  }

  EntailmentGraph graph;
  MeasureFlags measures{dirt, weeds};
  for (const auto& [key, table] : tables) {
    const CountTable filtered =
        apply_thresholds(table, min_arg_pairs, min_preds);
    if (filtered.total == 0) continue;
    const WeightTable weights = compute_weights(filtered);
    if (weights.rows.empty()) continue;
    graph.subgraphs[key] =
        build_subgraph(weights, score_floor, measures, &filtered, workers);
  }
  save_graph(graph, out_dir);
  std::cout << "wrote " << graph.subgraphs.size() << " subgraph(s), "
            << graph.node_count() << " nodes, " << graph.edge_count()
            << " edges to " << out_dir << "\n";
  return 0;
}

int run_globalize(const std::string& graphs_dir, double lambda,
                  const std::string& transitivity, double floor,
                  const std::string& out_dir) {
  EntailmentGraph graph = load_graph(graphs_dir);
  EntailmentGraph global = globalize(graph, lambda);
  if (transitivity == "one-pass") {
    transitivity_pass(global, floor);
  } else if (transitivity != "off") {
    throw DataError("transitivity must be off or one-pass");
  }
  save_graph(global, out_dir);
  return 0;
}

int run_eval(const std::string& graphs_dir, const std::string& dataset_path,
             const std::string& portion_str, const std::string& report_path,
             const std::string& curve_path) {
  const EntailmentGraph graph = load_graph(graphs_dir);
  const Portion portion = parse_portion(portion_str);
  const std::vector<EvalExample> dataset = load_dataset(dataset_path, portion);

  std::vector<double> scores;
  std::vector<bool> labels;
  scores.reserve(dataset.size());
  for (const EvalExample& ex : dataset) {
    scores.push_back(score_example(graph, ex));
    labels.push_back(ex.label);
  }
  const PRCurve curve = pr_sweep(scores, labels);
  const double auc = auc_range(curve, 0.5);
  const GraphStats stats = graph_stats(graph, dataset);

  json j;
  j["dataset"] = dataset_path;
  j["portion"] = portion_str;
  j["examples"] = dataset.size();
  j["auc_p50"] = auc;
  j["auc_full"] = auc_range(curve, 0.0);
  j["base_rate"] = curve.base_rate;
  j["graph"] = {{"nodes", stats.nodes},
                {"edges", stats.edges},
                {"coverage_pct", stats.coverage_pct}};
  open_out(report_path) << j.dump(2) << "\n";
  if (!curve_path.empty()) {
    auto out = open_out(curve_path);
    write_curve_csv(curve, out);
  }
  return 0;
}

int run_stats(const std::string& graphs_dir, const std::string& dataset_path,
              const std::string& portion_str, const std::string& report_path) {
  const EntailmentGraph graph = load_graph(graphs_dir);
  std::vector<EvalExample> dataset;
  if (!dataset_path.empty())
    dataset = load_dataset(dataset_path, parse_portion(portion_str));
  const GraphStats stats = graph_stats(graph, dataset);
  json j;
  j["nodes"] = stats.nodes;
  j["edges"] = stats.edges;
  j["subgraphs"] = graph.subgraphs.size();
  if (!dataset_path.empty()) j["coverage_pct"] = stats.coverage_pct;
  open_out(report_path) << j.dump(2) << "\n";
  return 0;
}

// Standalone SVG: up to three PR curves on one axis pair.
int run_pr_plot(const std::vector<std::string>& curve_paths,
                std::vector<std::string> labels, const std::string& out_path) {
  if (curve_paths.empty() || curve_paths.size() > 3)
    throw DataError("pr-plot takes between one and three curves");
  while (labels.size() < curve_paths.size())
    labels.push_back(fs::path(curve_paths[labels.size()]).stem().string());

  const double w = 640, h = 480, ml = 70, mr = 20, mt = 20, mb = 60;
  const double pw = w - ml - mr, ph = h - mt - mb;
  auto x = [&](double recall) { return ml + recall * pw; };
  auto y = [&](double precision) { return mt + (1.0 - precision) * ph; };
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c"};

  auto out = open_out(out_path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
      << "\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
      << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = i / 5.0;
    out << "<text x=\"" << x(v) << "\" y=\"" << h - mb + 20
        << "\" font-size=\"12\" text-anchor=\"middle\">" << v << "</text>\n";
    out << "<text x=\"" << ml - 10 << "\" y=\"" << y(v) + 4
        << "\" font-size=\"12\" text-anchor=\"end\">" << v << "</text>\n";
  }
  out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << h - 15
      << "\" font-size=\"14\" text-anchor=\"middle\">recall</text>\n";
  out << "<text x=\"18\" y=\"" << mt + ph / 2
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << mt + ph / 2 << ")\">precision</text>\n";

  for (std::size_t c = 0; c < curve_paths.size(); ++c) {
    auto in = open_in(curve_paths[c]);
    const PRCurve curve = read_curve_csv(in);
    out << "<polyline fill=\"none\" stroke=\"" << kColors[c]
        << "\" stroke-width=\"1.5\" points=\"";
    for (const PRPoint& p : curve.points)
      out << x(p.recall) << "," << y(p.precision) << " ";
    out << "\"/>\n";
    const double ly = mt + 20 + 18 * static_cast<double>(c);
    out << "<line x1=\"" << ml + 12 << "\" y1=\"" << ly << "\" x2=\""
        << ml + 42 << "\" y2=\"" << ly << "\" stroke=\"" << kColors[c]
        << "\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << ml + 48 << "\" y=\"" << ly + 4
        << "\" font-size=\"12\">" << labels[c] << "</text>\n";
  }
  out << "</svg>\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Typed entailment graph pipeline"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value config file");
  app.allow_config_extras(true);

  // tag
  std::string tag_parses, tag_lexicon, tag_out, tag_stats;
  auto* tag = app.add_subcommand("tag", "Tag modality over parsed sentences");
  tag->add_option("--parses", tag_parses, "JSON-lines parse file")->required();
  tag->add_option("--lexicon", tag_lexicon, "Trigger lexicon TSV")->required();
  tag->add_option("--out", tag_out, "Output triples JSON-lines")->required();
  tag->add_option("--stats", tag_stats, "Tagging statistics JSON");

  // build-corpus
  std::string bc_in, bc_variant, bc_out, bc_report;
  double bc_fraction = 0.85;
  std::uint64_t bc_seed = 42;
  auto* bc = app.add_subcommand("build-corpus", "Emit one corpus variant");
  bc->add_option("--in", bc_in, "Tagged triples JSON-lines")->required();
  bc->add_option("--variant", bc_variant,
                 "asserted|baseline-large|baseline-small")
      ->required();
  bc->add_option("--fraction", bc_fraction, "BaselineSmall sample fraction")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  bc->add_option("--seed", bc_seed, "Sampling seed")->capture_default_str();
  bc->add_option("--out", bc_out, "Output corpus JSON-lines")->required();
  bc->add_option("--report", bc_report, "Build report JSON");

  // build-graphs
  std::string bg_corpus, bg_types, bg_out, bg_fallback = "thing";
  int bg_min_arg_pairs = 4, bg_min_preds = 4, bg_workers = 1;
  double bg_floor = 0.01;
  bool bg_no_ne = false, bg_dirt = false, bg_weeds = false;
  auto* bg = app.add_subcommand("build-graphs", "Build local typed subgraphs");
  bg->add_option("--corpus", bg_corpus, "Corpus JSON-lines")->required();
  bg->add_option("--types", bg_types, "Entity-type map TSV")->required();
  bg->add_option("--out", bg_out, "Output graph directory")->required();
  bg->add_option("--min-arg-pairs-per-pred", bg_min_arg_pairs,
                 "Minimum distinct argument pairs per predicate")
      ->capture_default_str();
  bg->add_option("--min-preds-per-arg-pair", bg_min_preds,
                 "Minimum distinct predicates per argument pair")
      ->capture_default_str();
  bg->add_option("--score-floor", bg_floor, "Minimum BInc for a stored edge")
      ->capture_default_str();
  bg->add_option("--fallback-type", bg_fallback,
                 "Type for entities missing from the map")
      ->capture_default_str();
  bg->add_flag("--keep-non-ne", bg_no_ne,
               "Keep triples without a named entity");
  bg->add_flag("--dirt", bg_dirt, "Also compute the DIRT score");
  bg->add_flag("--weeds", bg_weeds, "Also compute symmetric Weeds");
  bg->add_option("--workers", bg_workers, "Scoring threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // globalize
  std::string gl_graphs, gl_out, gl_transitivity = "off";
  double gl_lambda = 0.5, gl_floor = 0.01;
  auto* gl = app.add_subcommand("globalize", "Share scores across subgraphs");
  gl->add_option("--graphs", gl_graphs, "Input graph directory")->required();
  gl->add_option("--lambda", gl_lambda, "Local/cross interpolation weight")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gl->add_option("--transitivity", gl_transitivity, "off|one-pass")
      ->capture_default_str();
  gl->add_option("--floor", gl_floor, "Storage floor for raised edges")
      ->capture_default_str();
  gl->add_option("--out", gl_out, "Output graph directory")->required();

  // eval
  std::string ev_graphs, ev_dataset, ev_portion = "all", ev_report, ev_curve;
  auto* ev = app.add_subcommand("eval", "Evaluate a graph on a dataset");
  ev->add_option("--graphs", ev_graphs, "Graph directory")->required();
  ev->add_option("--dataset", ev_dataset, "Dataset TSV")->required();
  ev->add_option("--portion", ev_portion, "all|directional|sports")
      ->capture_default_str();
  ev->add_option("--report", ev_report, "Report JSON")->required();
  ev->add_option("--curve", ev_curve, "PR-curve CSV");

  // stats
  std::string st_graphs, st_dataset, st_portion = "all", st_report;
  auto* st = app.add_subcommand("stats", "Graph size and coverage statistics");
  st->add_option("--graphs", st_graphs, "Graph directory")->required();
  st->add_option("--dataset", st_dataset, "Dataset TSV for coverage");
  st->add_option("--portion", st_portion, "all|directional|sports")
      ->capture_default_str();
  st->add_option("--report", st_report, "Report JSON")->required();

  // pr-plot
  std::vector<std::string> pp_curves, pp_labels;
  std::string pp_out;
  auto* pp = app.add_subcommand("pr-plot", "Render PR-curve CSVs to SVG");
  pp->add_option("--curves", pp_curves, "Up to three curve CSVs")->required();
  pp->add_option("--labels", pp_labels, "Legend labels");
  pp->add_option("--out", pp_out, "Output SVG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (*tag) return run_tag(tag_parses, tag_lexicon, tag_out, tag_stats);
    if (*bc)
      return run_build_corpus(bc_in, bc_variant, bc_fraction, bc_seed, bc_out,
                              bc_report);
    if (*bg)
      return run_build_graphs(bg_corpus, bg_types, bg_out, bg_min_arg_pairs,
                              bg_min_preds, bg_floor, bg_fallback, !bg_no_ne,
                              bg_dirt, bg_weeds, bg_workers);
    if (*gl)
      return run_globalize(gl_graphs, gl_lambda, gl_transitivity, gl_floor,
                           gl_out);
    if (*ev) return run_eval(ev_graphs, ev_dataset, ev_portion, ev_report,
                             ev_curve);
    if (*st) return run_stats(st_graphs, st_dataset, st_portion, st_report);
    if (*pp) return run_pr_plot(pp_curves, pp_labels, pp_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
