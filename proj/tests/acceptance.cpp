// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 7 and 8 drive the installed CLI end to end on a
// generated 10k-relation corpus.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "entgraph/corpus_variant.hpp"
#include "entgraph/count_table.hpp"
#include "entgraph/eval.hpp"
#include "entgraph/similarity.hpp"
#include "entgraph/subgraph.hpp"
#include "entgraph/tagger.hpp"

namespace fs = std::filesystem;
using namespace entgraph;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << name;
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

// ---------------------------------------------------------------------------
// Independent oracles. These deliberately re-derive everything from raw
// counts with dense arithmetic instead of reusing the pipeline code.

struct DenseTable {
  std::vector<std::string> preds;
  std::vector<std::string> feats;
  std::vector<std::vector<std::int64_t>> cell;  // preds x feats
};

std::vector<std::vector<double>> oracle_ppmi(const DenseTable& t) {
  const std::size_t np = t.preds.size(), nf = t.feats.size();
  double total = 0;
  std::vector<double> pm(np, 0), fm(nf, 0);
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nf; ++j) {
      pm[i] += t.cell[i][j];
      fm[j] += t.cell[i][j];
      total += t.cell[i][j];
    }
  std::vector<std::vector<double>> w(np, std::vector<double>(nf, 0.0));
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nf; ++j) {
      if (t.cell[i][j] == 0) continue;
      const double v = std::log(t.cell[i][j] * total / (pm[i] * fm[j]));
      w[i][j] = v > 0 ? v : 0.0;
    }
  return w;
}

double oracle_weeds(const std::vector<double>& p, const std::vector<double>& q) {
  double shared = 0, all = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    all += p[j];
    if (p[j] > 0 && q[j] > 0) shared += p[j];
  }
  return all == 0 ? 0.0 : shared / all;
}

double oracle_lin(const std::vector<double>& p, const std::vector<double>& q) {
  double shared = 0, denom = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    denom += p[j] + q[j];
    if (p[j] > 0 && q[j] > 0) shared += p[j] + q[j];
  }
  return denom == 0 ? 0.0 : shared / denom;
}

double oracle_binc(const std::vector<double>& p, const std::vector<double>& q) {
  return std::sqrt(oracle_lin(p, q) * oracle_weeds(p, q));
}

// Clipped trapezoid integration of precision over recall, case by case.
double oracle_auc(const std::vector<std::pair<double, double>>& rp,
                  double p_min) {
  double area = 0;
  for (std::size_t i = 1; i < rp.size(); ++i) {
    double r0 = rp[i - 1].first, p0 = rp[i - 1].second;
    double r1 = rp[i].first, p1 = rp[i].second;
    if (r1 <= r0) continue;
    if (p0 >= p_min && p1 >= p_min) {
      area += (p0 + p1) / 2 * (r1 - r0);
    } else if (p0 >= p_min || p1 >= p_min) {
      const double frac = (p_min - p0) / (p1 - p0);
      const double rc = r0 + frac * (r1 - r0);
      if (p0 >= p_min)
        area += (p0 + p_min) / 2 * (rc - r0);
      else
        area += (p_min + p1) / 2 * (r1 - rc);
    }
  }
  return area;
}

// ---------------------------------------------------------------------------

void criterion1_score_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20130205);
  double max_err = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int np = 2 + static_cast<int>(rng() % 9);    // <= 10
    const int nf = 2 + static_cast<int>(rng() % 19);   // <= 20
    DenseTable dense;
    CountTable sparse;
    sparse.key = {"organization", "organization"};
    for (int i = 0; i < np; ++i) dense.preds.push_back("p" + std::to_string(i));
    for (int j = 0; j < nf; ++j) dense.feats.push_back("f" + std::to_string(j));
    dense.cell.assign(np, std::vector<std::int64_t>(nf, 0));
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < nf; ++j) {
        if (rng() % 3 == 0) continue;  // keep it sparse
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 9);
        dense.cell[i][j] = n;
        sparse.add(dense.preds[i], dense.feats[j], n);
      }
    if (sparse.total == 0) continue;

    const WeightTable w = compute_weights(sparse);
    const auto dw = oracle_ppmi(dense);
    static const WeightRow kEmpty;
    auto row = [&](int i) -> const WeightRow& {
      auto it = w.rows.find(dense.preds[i]);
      return it == w.rows.end() ? kEmpty : it->second;
    };
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j) {
        if (i == j) continue;
        max_err = std::max(
            max_err, std::abs(binc(row(i), row(j)) - oracle_binc(dw[i], dw[j])));
        max_err = std::max(max_err, std::abs(weeds_precision(row(i), row(j)) -
                                             oracle_weeds(dw[i], dw[j])));
        max_err = std::max(max_err, std::abs(lin_similarity(row(i), row(j)) -
                                             oracle_lin(dw[i], dw[j])));
      }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  report(1, "score-oracle equivalence on 200 random tables",
         max_err <= 1e-9 && secs < 10.0,
         "max_err=" + std::to_string(max_err) +
             " secs=" + std::to_string(secs));
}

void criterion2_inclusion_properties() {
  std::mt19937_64 rng(42);
  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < 500 && ok; ++trial) {
    // random positive rows over a small feature space
    auto gen_row = [&](int max_feats) {
      WeightRow row;
      const int n = 1 + static_cast<int>(rng() % max_feats);
      for (int i = 0; i < n; ++i)
        row["f" + std::to_string(rng() % 12)] =
            0.1 + (rng() % 100) / 50.0;
      return row;
    };
    const WeightRow p = gen_row(6);
    WeightRow q = gen_row(6);

    const bool subset = [&] {
      for (const auto& [f, w] : p)
        if (!q.count(f)) return false;
      return true;
    }();
    const double wp = weeds_precision(p, q);
    if (subset != (wp == 1.0)) {
      ok = false;
      detail = "weeds_precision=1 iff subset violated at trial " +
               std::to_string(trial);
      break;
    }

    // strict-superset direction: q := p plus at least one extra feature
    WeightRow superset = p;
    superset["extra" + std::to_string(rng() % 5)] = 0.5 + (rng() % 10) / 10.0;
    if (!(weeds_precision(p, superset) == 1.0) ||
        !(binc(p, superset) > binc(superset, p))) {
      ok = false;
      detail = "binc direction violated at trial " + std::to_string(trial);
    }
  }
  report(2, "inclusion properties over 500 generated cases", ok, detail);
}

void criterion3_directionality() {
  // every argument pair of elect also occurs with run_for, plus extra
  // run_for-only pairs; noise predicates vary the marginals
  CountTable table;
  table.key = {"organization", "organization"};
  std::mt19937_64 rng(5);
  std::vector<std::string> shared, extra;
  for (int i = 0; i < 8; ++i) shared.push_back("s" + std::to_string(i) + "\tx");
  for (int i = 0; i < 8; ++i) extra.push_back("e" + std::to_string(i) + "\tx");
  for (const std::string& f : shared) {
    table.add("elect.1,elect.2", f, 2 + rng() % 3);
    table.add("run_for.1,run_for.2", f, 2 + rng() % 3);
  }
  for (const std::string& f : extra) table.add("run_for.1,run_for.2", f, 1 + rng() % 3);
  // noise lives on disjoint features: it inflates the grand total (keeping
  // every elect/run_for cell PMI-positive) without touching their feature
  // marginals, so the count-level inclusion survives PPMI clamping
  for (int i = 0; i < 500; ++i)
    table.add("noise" + std::to_string(rng() % 5),
              "n" + std::to_string(rng() % 30) + "\tx", 1);

  const WeightTable weights = compute_weights(table);
  const LocalSubgraph g = build_subgraph(weights, 0.0, {}, &table);
  const EdgeScores* fwd = g.find_edge("elect.1,elect.2", "run_for.1,run_for.2");
  const EdgeScores* rev = g.find_edge("run_for.1,run_for.2", "elect.1,elect.2");
  const bool ok = fwd && rev && fwd->binc > rev->binc && fwd->binc > 0;
  report(3, "directionality: elect->run_for strictly above run_for->elect",
         ok,
         fwd && rev ? "fwd=" + std::to_string(fwd->binc) +
                          " rev=" + std::to_string(rev->binc)
                    : "edge missing");
}

// ---------------------------------------------------------------------------
// Synthetic corpus shared by criteria 4, 7 and 8.

struct SynthCorpus {
  std::vector<std::string> parse_lines;
  std::uint64_t relations = 0;
  std::uint64_t removal_tagged = 0;  // carries a removal-set tag
};

std::string json_token(const std::string& surface, const std::string& lemma,
                       const std::string& pos, int head,
                       const std::string& label) {
  std::ostringstream s;
  s << R"({"surface":")" << surface << R"(","lemma":")" << lemma
    << R"(","pos":")" << pos << R"(","head":)" << head << R"(,"label":")"
    << label << R"("})";
  return s.str();
}

SynthCorpus generate_corpus(std::uint64_t seed, int n_relations) {
  std::mt19937_64 rng(seed);
  const std::vector<std::string> verbs = {"beat", "play",   "defeat", "face",
                                          "host", "crush",  "meet",   "edge"};
  SynthCorpus corpus;
  for (int i = 0; i < n_relations; ++i) {
    const std::string& verb = verbs[rng() % verbs.size()];
    // skew pair choice so some pairs co-occur with many predicates
    const int a = static_cast<int>(rng() % 18);
    int b = static_cast<int>(rng() % 18);
    if (b == a) b = (b + 1) % 18;
    const std::string org1 = "Team" + std::to_string(a);
    const std::string org2 = "Team" + std::to_string(b);
    const std::string pred = verb + ".1," + verb + ".2";

    // ~14.5% carry a removal-set tag, ~1% LNEG only
    const int roll = static_cast<int>(rng() % 2000);
    std::vector<std::string> tokens;
    int rel_head, arg1_tok, arg2_tok;
    bool removal = true;
    if (roll < 200) {  // MOD: "Org1 may beat Org2"
      tokens = {json_token(org1, org1, "NNP", 2, "nsubj"),
                json_token("may", "may", "MD", 2, "aux"),
                json_token(verb, verb, "VB", -1, "root"),
                json_token(org2, org2, "NNP", 2, "dobj")};
      rel_head = 2; arg1_tok = 0; arg2_tok = 3;
    } else if (roll < 270) {  // ATT_SAY: "Reporters said Org1 beat Org2"
      tokens = {json_token("Reporters", "reporter", "NNS", 1, "nsubj"),
                json_token("said", "say", "VBD", -1, "root"),
                json_token(org1, org1, "NNP", 3, "nsubj"),
                json_token(verb, verb, "VBD", 1, "ccomp"),
                json_token(org2, org2, "NNP", 3, "dobj")};
      rel_head = 3; arg1_tok = 2; arg2_tok = 4;
    } else if (roll < 278) {  // ATT_THINK: "Fans think Org1 beat Org2"
      tokens = {json_token("Fans", "fan", "NNS", 1, "nsubj"),
                json_token("think", "think", "VBP", -1, "root"),
                json_token(org1, org1, "NNP", 3, "nsubj"),
                json_token(verb, verb, "VBD", 1, "ccomp"),
                json_token(org2, org2, "NNP", 3, "dobj")};
      rel_head = 3; arg1_tok = 2; arg2_tok = 4;
    } else if (roll < 290) {  // COND: "If Org1 beat Org2"
      tokens = {json_token("If", "if", "IN", 2, "mark"),
                json_token(org1, org1, "NNP", 2, "nsubj"),
                json_token(verb, verb, "VBP", -1, "root"),
                json_token(org2, org2, "NNP", 2, "dobj")};
      rel_head = 2; arg1_tok = 1; arg2_tok = 3;
    } else if (roll < 291) {  // COUNT: "Had Org1 beaten Org2"
      tokens = {json_token("Had", "have", "VBD", 2, "aux"),
                json_token(org1, org1, "NNP", 2, "nsubj"),
                json_token(verb, verb, "VBN", -1, "root"),
                json_token(org2, org2, "NNP", 2, "dobj")};
      rel_head = 2; arg1_tok = 1; arg2_tok = 3;
    } else if (roll < 311) {  // LNEG only: "Org1 never beat Org2"
      removal = false;
      tokens = {json_token(org1, org1, "NNP", 2, "nsubj"),
                json_token("never", "never", "RB", 2, "neg"),
                json_token(verb, verb, "VBD", -1, "root"),
                json_token(org2, org2, "NNP", 2, "dobj")};
      rel_head = 2; arg1_tok = 0; arg2_tok = 3;
    } else {  // asserted: "Org1 beat Org2"
      removal = false;
      tokens = {json_token(org1, org1, "NNP", 1, "nsubj"),
                json_token(verb, verb, "VBD", -1, "root"),
                json_token(org2, org2, "NNP", 1, "dobj")};
      rel_head = 1; arg1_tok = 0; arg2_tok = 2;
    }

    std::ostringstream line;
    line << R"({"tokens":[)";
    for (std::size_t t = 0; t < tokens.size(); ++t)
      line << (t ? "," : "") << tokens[t];
    line << R"(],"relations":[{"pred":")" << pred << R"(","head":)" << rel_head
         << R"(,"arg1":)" << arg1_tok << R"(,"arg2":)" << arg2_tok
         << R"(,"ne":true}],"doc":"d)" << i << R"("})";
    corpus.parse_lines.push_back(line.str());
    ++corpus.relations;
    if (removal) ++corpus.removal_tagged;
  }
  return corpus;
}

void write_type_map(const std::string& path) {
  std::ofstream out(path);
  for (int i = 0; i < 18; ++i)
    out << "Team" << i << "\torganization\n";
}

void write_eval_dataset(const std::string& path) {
  std::ofstream out(path);
  const char* oo = "organization\torganization";
  out << "beat.1,beat.2\tplay.1,play.2\t" << oo << "\t1\tall\n"
      << "defeat.1,defeat.2\tplay.1,play.2\t" << oo << "\t1\tall\n"
      << "crush.1,crush.2\tface.1,face.2\t" << oo << "\t1\tall\n"
      << "play.1,play.2\tbeat.1,beat.2\t" << oo << "\t0\tall\n"
      << "host.1,host.2\tcrush.1,crush.2\t" << oo << "\t0\tall\n"
      << "meet.1,meet.2\tedge.1,edge.2\t" << oo << "\t0\tall\n"
      << "edge.1,edge.2\tplay.1,play.2\t" << oo << "\t1\tdirectional\n"
      << "play.1,play.2\tedge.1,edge.2\t" << oo << "\t0\tdirectional\n"
      << "beat.1,beat.2\tmeet.1,meet.2\t" << oo << "\t1\tsports\n"
      << "beat.1,beat.2\tedge.1,edge.2\t" << oo << "\t0\tsports\n";
}

void criterion4_ablation_structure() {
  const SynthCorpus synth = generate_corpus(99, 10000);
  const Lexicon lexicon = Lexicon::load(LEXICON_PATH);
  std::stringstream parses;
  for (const std::string& l : synth.parse_lines) parses << l << "\n";
  std::vector<RelationTriple> tagged;
  tag_corpus(parses, lexicon,
             [&](const RelationTriple& t) { tagged.push_back(t); });

  auto run = [&](Variant v, double fraction) {
    VariantBuilder builder({v, fraction, 7});
    std::vector<RelationTriple> out;
    for (const RelationTriple& t : tagged)
      builder.feed(t, [&](const RelationTriple& k) { out.push_back(k); });
    return out;
  };
  const auto large = run(Variant::BaselineLarge, 0.85);
  const auto small = run(Variant::BaselineSmall, 0.85);
  const auto asserted = run(Variant::Asserted, 0.85);

  const bool exact_count =
      asserted.size() == synth.relations - synth.removal_tagged;
  const double n = static_cast<double>(synth.relations);
  const double sigma = std::sqrt(n * 0.85 * 0.15);
  const bool small_in_3sigma =
      std::abs(static_cast<double>(small.size()) - 0.85 * n) <= 3 * sigma;

  TypeMap types;
  for (int i = 0; i < 18; ++i)
    types.add("Team" + std::to_string(i), "organization");
  auto nodes_of = [&](const std::vector<RelationTriple>& triples) {
    CountTableMap tables;
    for (const RelationTriple& t : triples) {
      const TypedRelation rel = type_relation(t, types);
      auto [it, inserted] = tables.try_emplace(rel.key);
      if (inserted) it->second.key = rel.key;
      it->second.add(rel);
    }
    std::set<std::string> nodes;
    for (const auto& [key, table] : tables) {
      const CountTable filtered = apply_thresholds(table, 4, 4);
      for (const auto& [pred, row] : filtered.counts)
        nodes.insert(key.str() + "/" + pred);
    }
    return nodes;
  };
  const auto large_nodes = nodes_of(large);
  const auto asserted_nodes = nodes_of(asserted);
  bool subset = true;
  for (const std::string& node : asserted_nodes)
    if (!large_nodes.count(node)) subset = false;

  report(4, "ablation structure on the 10k synthetic corpus",
         exact_count && small_in_3sigma && subset && !asserted_nodes.empty(),
         "exact=" + std::to_string(exact_count) +
             " 3sigma=" + std::to_string(small_in_3sigma) +
             " subset=" + std::to_string(subset) +
             " asserted_nodes=" + std::to_string(asserted_nodes.size()));
}

void criterion5_tagger_golden() {
  const Lexicon lexicon = Lexicon::load(LEXICON_PATH);
  std::ifstream in(std::string(FIXTURE_DIR) + "/tagger_golden.jsonl");
  const std::vector<TagSet> gold = {
      {},
      {ModalityTag::MOD},
      {ModalityTag::COND},
      {ModalityTag::COUNT},
      {ModalityTag::ATT_SAY},
      {ModalityTag::LNEG},
      {ModalityTag::COND, ModalityTag::COUNT},
      {ModalityTag::ATT_SAY, ModalityTag::MOD},
  };
  bool ok = in.good();
  std::string line;
  std::size_t i = 0;
  std::string detail;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (i >= gold.size()) { ok = false; detail = "extra fixture lines"; break; }
    const DepGraph g = parse_dep_graph_line(line);
    const TagDecision d = tag_relation(g, 0, lexicon);
    if (d.tags != gold[i]) {
      ok = false;
      detail = "fixture " + std::to_string(i) + " disagrees";
      break;
    }
    ++i;
  }
  if (ok && i != gold.size()) { ok = false; detail = "missing fixtures"; }

  // LNEG-only relations survive Asserted filtering
  RelationTriple lneg;
  lneg.pred = "beat.1,beat.2";
  lneg.arg1 = "A";
  lneg.arg2 = "B";
  lneg.tags = {ModalityTag::LNEG};
  if (!variant_keep({Variant::Asserted, 0.85, 0}, lneg, 0)) {
    ok = false;
    detail = "LNEG-only triple was filtered";
  }
  report(5, "tagger golden fixtures at 100% agreement", ok, detail);
}

void criterion6_pr_auc() {
  bool ok = true;
  std::string detail;

  // 4-example hand case
  {
    const PRCurve c = pr_sweep({0.9, 0.8, 0.7, 0.6}, {true, true, false, true});
    const std::vector<std::pair<double, double>> expected = {
        {1.0, 1.0 / 3}, {1.0, 2.0 / 3}, {2.0 / 3, 2.0 / 3}, {0.75, 1.0}};
    if (c.points.size() != 4) { ok = false; detail = "hand case point count"; }
    for (std::size_t i = 0; ok && i < 4; ++i) {
      if (std::abs(c.points[i].precision - expected[i].first) > 1e-12 ||
          std::abs(c.points[i].recall - expected[i].second) > 1e-12) {
        ok = false;
        detail = "hand case point " + std::to_string(i);
      }
    }
  }

  // auc vs the independent trapezoid oracle on 100 random sets
  std::mt19937_64 rng(17);
  double max_err = 0;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 60);
    std::vector<double> scores;
    std::vector<bool> labels;
    bool any_pos = false;
    for (int i = 0; i < n; ++i) {
      scores.push_back((rng() % 40) / 40.0);
      labels.push_back(rng() % 3 == 0);
      any_pos = any_pos || labels.back();
    }
    if (!any_pos) labels[0] = true;
    const PRCurve c = pr_sweep(scores, labels);
    std::vector<std::pair<double, double>> rp;
    rp.emplace_back(0.0, c.points.front().precision);
    for (const PRPoint& p : c.points) rp.emplace_back(p.recall, p.precision);
    for (double p_min : {0.0, 0.3, 0.5, 0.8}) {
      max_err = std::max(max_err,
                         std::abs(auc_range(c, p_min) - oracle_auc(rp, p_min)));
    }
  }
  if (max_err > 1e-9) { ok = false; detail = "auc oracle err " + std::to_string(max_err); }

  // perfect ranking -> 1.0 over precision [0.5, 1]
  {
    const PRCurve c =
        pr_sweep({0.9, 0.8, 0.7, 0.3, 0.2}, {true, true, true, false, false});
    if (std::abs(auc_range(c, 0.5) - 1.0) > 1e-12) {
      ok = false;
      detail = "perfect ranking auc";
    }
  }

  // curve never reaching 0.5 precision -> 0.0
  {
    PRCurve c;
    c.points = {{0.9, 0.3, 0.2}, {0.5, 0.28, 0.6}, {0.1, 0.25, 1.0}};
    if (auc_range(c, 0.5) != 0.0) { ok = false; detail = "below-floor auc"; }
  }
  report(6, "PR sweep and range-restricted AUC correctness", ok, detail);
}

// ---------------------------------------------------------------------------
// End-to-end pipeline via the CLI.

int run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " >/dev/null";
  return std::system(cmd.c_str());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool dirs_identical(const fs::path& a, const fs::path& b) {
  std::vector<std::string> names_a, names_b;
  for (const auto& e : fs::directory_iterator(a))
    names_a.push_back(e.path().filename().string());
  for (const auto& e : fs::directory_iterator(b))
    names_b.push_back(e.path().filename().string());
  std::sort(names_a.begin(), names_a.end());
  std::sort(names_b.begin(), names_b.end());
  if (names_a != names_b) return false;
  for (const std::string& name : names_a)
    if (slurp(a / name) != slurp(b / name)) return false;
  return true;
}

// Runs the whole pipeline under `root`; returns false on any CLI failure.
bool run_pipeline(const fs::path& root, const std::string& parses,
                  const std::string& types, const std::string& dataset,
                  int workers) {
  fs::create_directories(root);
  const std::string r = root.string();
  if (run_cli("tag --parses " + parses + " --lexicon " + LEXICON_PATH +
              " --out " + r + "/triples.jsonl --stats " + r + "/tagstats.json"))
    return false;
  for (const std::string v :
       {"baseline-large", "baseline-small", "asserted"}) {
    if (run_cli("build-corpus --in " + r + "/triples.jsonl --variant " + v +
                " --fraction 0.85 --seed 42 --out " + r + "/" + v +
                ".jsonl --report " + r + "/" + v + ".report.json"))
      return false;
    if (run_cli("build-graphs --corpus " + r + "/" + v + ".jsonl --types " +
                types + " --out " + r + "/graphs-" + v +
                " --score-floor 0.01 --workers " + std::to_string(workers)))
      return false;
    if (run_cli("eval --graphs " + r + "/graphs-" + v + " --dataset " +
                dataset + " --portion all --report " + r + "/" + v +
                ".eval.json --curve " + r + "/" + v + ".curve.csv"))
      return false;
  }
  if (run_cli("globalize --graphs " + r +
              "/graphs-asserted --lambda 0.5 --transitivity one-pass --out " +
              r + "/graphs-asserted-global"))
    return false;
  if (run_cli("stats --graphs " + r + "/graphs-asserted --dataset " + dataset +
              " --report " + r + "/stats.json"))
    return false;
  return run_cli("pr-plot --curves " + r + "/baseline-large.curve.csv " + r +
                 "/baseline-small.curve.csv " + r +
                 "/asserted.curve.csv --labels BaselineLarge BaselineSmall "
                 "Asserted --out " + r + "/pr.svg") == 0;
}

void criteria7_8_end_to_end() {
  const fs::path base = fs::temp_directory_path() / "entgraph_acceptance";
  fs::remove_all(base);
  fs::create_directories(base);

  const SynthCorpus synth = generate_corpus(7, 10000);
  const std::string parses = (base / "parses.jsonl").string();
  {
    std::ofstream out(parses);
    for (const std::string& l : synth.parse_lines) out << l << "\n";
  }
  const std::string types = (base / "types.tsv").string();
  write_type_map(types);
  const std::string dataset = (base / "dataset.tsv").string();
  write_eval_dataset(dataset);

  const auto t0 = std::chrono::steady_clock::now();
  const bool run1 = run_pipeline(base / "run1", parses, types, dataset, 1);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool run2 = run_pipeline(base / "run2", parses, types, dataset, 1);
  const bool run8 = run_pipeline(base / "run8", parses, types, dataset, 8);

  bool identical = run1 && run2;
  bool workers_equal = run1 && run8;
  if (identical) {
    for (const std::string v :
         {"baseline-large", "baseline-small", "asserted"}) {
      identical = identical &&
                  dirs_identical(base / "run1" / ("graphs-" + v),
                                 base / "run2" / ("graphs-" + v)) &&
                  slurp(base / "run1" / (v + ".eval.json")) ==
                      slurp(base / "run2" / (v + ".eval.json"));
      if (workers_equal)
        workers_equal = dirs_identical(base / "run1" / ("graphs-" + v),
                                       base / "run8" / ("graphs-" + v));
    }
    identical = identical && dirs_identical(base / "run1" / "graphs-asserted-global",
                                            base / "run2" / "graphs-asserted-global");
  }
  report(7, "determinism: identical reruns and workers 8 == workers 1",
         run1 && run2 && run8 && identical && workers_equal,
         std::string(run1 ? "" : "run1 failed ") +
             (identical ? "" : "reruns differ ") +
             (workers_equal ? "" : "worker counts differ"));
  report(8, "end-to-end desk-scale budget under 60 s", run1 && secs < 60.0,
         "secs=" + std::to_string(secs));
}

}  // namespace

int main() {
  criterion1_score_oracle();
  criterion2_inclusion_properties();
  criterion3_directionality();
  criterion4_ablation_structure();
  criterion5_tagger_golden();
  criterion6_pr_auc();
  criteria7_8_end_to_end();
  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
