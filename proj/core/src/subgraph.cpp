#include "entgraph/subgraph.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "entgraph/errors.hpp"
#include "entgraph/similarity.hpp"

namespace entgraph {

namespace fs = std::filesystem;

namespace {

std::string format_score(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::general, 17);
  return std::string(buf, ptr);
}

double parse_score(const std::string& s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad score '" + s + "'");
  return v;
}

std::string typed_name(const std::string& pred, const TypePairKey& key) {
  return pred + "#" + key.type_a + "#" + key.type_b;
}

// Drops the trailing "#typeA#typeB" pair; "#rev" markers survive.
std::string strip_types(const std::string& name) {
  auto cut = name.rfind('#');
  if (cut == std::string::npos) throw ParseError("untyped node '" + name + "'");
  cut = name.rfind('#', cut - 1);
  if (cut == std::string::npos) throw ParseError("untyped node '" + name + "'");
  return name.substr(0, cut);
}

}  // namespace

const EdgeScores* LocalSubgraph::find_edge(const std::string& p,
                                           const std::string& q) const {
  auto it = edges.find({p, q});
  return it == edges.end() ? nullptr : &it->second;
}

LocalSubgraph build_subgraph(const WeightTable& weights, double score_floor,
                             MeasureFlags measures, const CountTable* counts,
                             int workers) {
  LocalSubgraph g;
  g.key = weights.key;
  std::vector<const std::string*> preds;
  for (const auto& [pred, row] : weights.rows) preds.push_back(&pred);
  // Nodes come from the thresholded counts when available: a predicate
  // whose cells were all PPMI-clamped is still a graph node.
  if (counts) {
    for (const auto& [pred, row] : counts->counts) g.nodes.insert(pred);
  } else {
    for (const std::string* p : preds) g.nodes.insert(*p);
  }

  WeightTable slot_a, slot_b;
  if (measures.dirt) {
    if (!counts) throw DataError("dirt measure requires the count table");
    slot_a = compute_slot_weights(*counts, 0);
    slot_b = compute_slot_weights(*counts, 1);
  }

  auto score_source = [&](const std::string& p,
                          std::vector<std::pair<std::pair<std::string, std::string>,
                                                EdgeScores>>& out) {
    const WeightRow& row_p = weights.rows.at(p);
    for (const std::string* qp : preds) {
      const std::string& q = *qp;
      if (q == p) continue;
      const WeightRow& row_q = weights.rows.at(q);
      EdgeScores s;
      s.lin = lin_similarity(row_p, row_q);
      s.weeds_p = weeds_precision(row_p, row_q);
      s.binc = std::sqrt(s.lin * s.weeds_p);
      if (s.binc < score_floor) continue;
      if (measures.weeds) s.weeds = weeds_similarity(row_p, row_q);
      if (measures.dirt) {
        auto slot_lin = [](const WeightTable& t, const std::string& a,
                           const std::string& b) {
          auto ia = t.rows.find(a);
          auto ib = t.rows.find(b);
          if (ia == t.rows.end() || ib == t.rows.end()) return 0.0;
          return lin_similarity(ia->second, ib->second);
        };
        s.dirt = std::sqrt(slot_lin(slot_a, p, q) * slot_lin(slot_b, p, q));
      }
      out.emplace_back(std::make_pair(p, q), s);
    }
  };

  const int n = static_cast<int>(preds.size());
  workers = std::max(1, std::min(workers, n == 0 ? 1 : n));
  std::vector<std::vector<std::pair<std::pair<std::string, std::string>,
                                    EdgeScores>>> results(n);
  if (workers == 1) {
    for (int i = 0; i < n; ++i) score_source(*preds[i], results[i]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < n; i += workers) score_source(*preds[i], results[i]);
      });
    }
    for (auto& t : pool) t.join();
  }
  // deterministic merge in predicate order, independent of worker count
  for (auto& chunk : results)
    for (auto& [pair, scores] : chunk) g.edges.emplace(pair, scores);
  return g;
}

void write_subgraph(const LocalSubgraph& g, std::ostream& out) {
  out << "types: " << g.key.str() << ", num_preds: " << g.nodes.size()
      << "\n\n";
  for (const std::string& p : g.nodes) {
    out << "predicate: " << typed_name(p, g.key) << "\n";
    for (const auto& [pair, s] : g.edges) {
      if (pair.first != p) continue;
      out << typed_name(pair.second, g.key) << " " << format_score(s.binc)
          << " " << format_score(s.weeds_p) << " " << format_score(s.lin);
      if (s.dirt) out << " dirt: " << format_score(*s.dirt);
      if (s.weeds) out << " weeds: " << format_score(*s.weeds);
      if (s.global) out << " global: " << format_score(*s.global);
      out << "\n";
    }
    out << "\n";
  }
}

LocalSubgraph read_subgraph(std::istream& in) {
  LocalSubgraph g;
  std::string line;
  if (!std::getline(in, line) || line.rfind("types: ", 0) != 0)
    throw ParseError("subgraph file lacks a types header");
  {
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("bad types header");
    const std::string pair = line.substr(7, comma - 7);
    const auto hash = pair.find('#');
    if (hash == std::string::npos) throw ParseError("bad types header");
    g.key = {pair.substr(0, hash), pair.substr(hash + 1)};
  }

  std::string current;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("predicate: ", 0) == 0) {
      current = strip_types(line.substr(11));
      g.nodes.insert(current);
      continue;
    }
    if (current.empty()) throw ParseError("edge line before any predicate");
    std::istringstream ls(line);
    std::string target, tok;
    ls >> target;
    EdgeScores s;
    std::vector<std::string> nums;
    std::string label;
    while (ls >> tok) {
      if (tok.back() == ':') {
        label = tok.substr(0, tok.size() - 1);
        continue;
      }
      if (label.empty()) {
        nums.push_back(tok);
      } else {
        const double v = parse_score(tok);
        if (label == "dirt") s.dirt = v;
        else if (label == "weeds") s.weeds = v;
        else if (label == "global") s.global = v;
        else throw ParseError("unknown score label '" + label + "'");
        label.clear();
      }
    }
    if (nums.size() != 3) throw ParseError("edge line needs binc weeds_p lin");
    s.binc = parse_score(nums[0]);
    s.weeds_p = parse_score(nums[1]);
    s.lin = parse_score(nums[2]);
    const std::string target_pred = strip_types(target);
    g.nodes.insert(target_pred);
    g.edges[{current, target_pred}] = s;
  }
  return g;
}

std::uint64_t EntailmentGraph::node_count() const {
  std::uint64_t n = 0;
  for (const auto& [key, g] : subgraphs) n += g.nodes.size();
  return n;
}

std::uint64_t EntailmentGraph::edge_count() const {
  std::uint64_t n = 0;
  for (const auto& [key, g] : subgraphs) n += g.edges.size();
  return n;
}

void save_graph(const EntailmentGraph& graph, const std::string& dir) {
  fs::create_directories(dir);
  for (const auto& [key, g] : graph.subgraphs) {
    std::ofstream out(fs::path(dir) / (key.str() + "_sim.txt"));
    if (!out) throw DataError("cannot write subgraph file in " + dir);
    write_subgraph(g, out);
  }
}

EntailmentGraph load_graph(const std::string& dir) {
  EntailmentGraph graph;
  if (!fs::is_directory(dir)) throw DataError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().filename().string().ends_with("_sim.txt"))
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& p : files) {
    std::ifstream in(p);
    if (!in) throw DataError("cannot read " + p.string());
    LocalSubgraph g = read_subgraph(in);
    graph.subgraphs[g.key] = std::move(g);
  }
  return graph;
}

}  // namespace entgraph
