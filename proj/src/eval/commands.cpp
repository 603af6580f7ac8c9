// Copyright 2026 The artk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "artk/eval/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "artk/backbone/corpus.hpp"
#include "artk/core/error.hpp"
#include "artk/core/text.hpp"
#include "artk/eval/metrics.hpp"
#include "artk/pipelines/descriptors.hpp"
#include "artk/pipelines/fakta.hpp"
#include "artk/pipelines/kglm.hpp"
#include "artk/pipelines/lm.hpp"
#include "artk/pipelines/pullnet.hpp"
#include "artk/pipelines/qa.hpp"
#include "artk/pipelines/wizards.hpp"

namespace artk {
namespace {

using OJson = nlohmann::ordered_json;

bool is_lm_pipeline(const std::string& name) {
  return name == "base" || name == "knn-lm" || name == "cache-lm" || name == "gated-lm";
}

OJson report_header(const char* command, const RunConfig& config) {
  OJson report;
  report["command"] = command;
  report["pipeline"] = config.pipeline;
  report["seed"] = require_seed(config);
  report["descriptor"] = to_json(descriptor_for(config.pipeline));
  report["config"] = to_json(config);
  return report;
}

std::vector<std::vector<TokenId>> encode_documents(const std::vector<Document>& docs,
                                                   const Vocabulary& vocab) {
  std::vector<std::vector<TokenId>> out;
  for (const auto& tokens : tokenize_documents(docs)) out.push_back(vocab.encode(tokens));
  return out;
}

struct LmSetup {
  LmResources resources;
  std::vector<std::vector<TokenId>> train;
  std::vector<Document> eval_docs;
  std::vector<std::vector<TokenId>> eval;
};

LmSetup prepare_lm(const RunConfig& config, bool need_eval) {
  require(is_lm_pipeline(config.pipeline), ErrorCode::kInvalidArgument,
          "pipeline '" + config.pipeline + "' is not a language model");
  const std::uint64_t seed = require_seed(config);
  LmSetup setup;
  if (need_eval) setup.eval_docs = read_documents(require_path(config.corpus, "corpus"));
  const auto train_docs = config.train.empty() && need_eval
                              ? setup.eval_docs
                              : read_documents(require_path(config.train, "train"));
  require(!train_docs.empty(), ErrorCode::kEmptyInput, "training corpus is empty");

  const auto train_tokens = tokenize_documents(train_docs);
  auto vocab = std::make_shared<const Vocabulary>(Vocabulary::build(train_tokens));
  for (const auto& tokens : train_tokens) setup.train.push_back(vocab->encode(tokens));
  setup.eval = encode_documents(setup.eval_docs, *vocab);

  NGramOptions lm_options;
  lm_options.order = config.order;
  lm_options.add_k = config.add_k;
  setup.resources.vocab = vocab;
  setup.resources.lm =
      std::make_shared<const NGramLM>(train_ngram(setup.train, vocab->size(), lm_options));
  if (config.pipeline != "base") {
    PrefixEmbedderOptions embed_options;
    embed_options.dim = effective_dim(config);
    embed_options.decay = config.decay;
    embed_options.seed = seed;
    setup.resources.embedder = std::make_shared<const PrefixEmbedder>(*vocab, embed_options);
  }
  return setup;
}

CacheLmOptions cache_options(const RunConfig& config) {
  CacheLmOptions options;
  options.lambda = config.lambda;
  options.theta = config.theta;
  options.capacity = config.cache_capacity;
  return options;
}

GateParams gate_params(const RunConfig& config, const LmSetup& setup,
                       const std::shared_ptr<const MemorizedKB>& kb) {
  if (config.dev.empty()) {
    GateParams params;
    params.weights.assign(kb->dim(), 0.0);
    return params;
  }
  const auto dev =
      encode_documents(read_documents(require_path(config.dev, "dev")), *setup.resources.vocab);
  return fit_gate(setup.resources, kb, dev, effective_top_k(config));
}

std::shared_ptr<const MemorizedKB> memorized_kb(const LmSetup& setup, Metric metric) {
  return std::make_shared<const MemorizedKB>(
      MemorizedKB::build(setup.train, *setup.resources.embedder, metric));
}

std::unique_ptr<LmScorer> make_scorer(const RunConfig& config, const LmSetup& setup,
                                      OJson& metrics) {
  const auto& res = setup.resources;
  if (config.pipeline == "base") return std::make_unique<BaseLmScorer>(res);
  if (config.pipeline == "knn-lm") {
    return std::make_unique<KnnLmScorer>(
        KnnLm(res, memorized_kb(setup, Metric::kL2), config.lambda, effective_top_k(config),
              config.temperature));
  }
  if (config.pipeline == "cache-lm") {
    return std::make_unique<CacheLmScorer>(CacheLm(res, cache_options(config)));
  }
  const auto kb = memorized_kb(setup, Metric::kInnerProduct);
  auto params = gate_params(config, setup, kb);
  metrics["gate_bias"] = params.bias;
  return std::make_unique<GatedLmScorer>(GatedLm(res, kb, std::move(params), effective_top_k(config)));
}

void emit(const OJson& report, const std::string& summary, const RunConfig& config,
          std::ostream& out) {
  if (config.out.empty()) {
    out << report.dump(2) << "\n";
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  require(file.good(), ErrorCode::kIo, "cannot write " + config.out);
  file << report.dump(2) << "\n";
  require(file.good(), ErrorCode::kIo, "write failed: " + config.out);
  out << summary << "\n";
}

std::string fixed(double value, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << value;
  return s.str();
}

OJson candidates_json(const std::vector<std::pair<std::string, double>>& ranked) {
  OJson list = OJson::array();
  for (const auto& [item, score] : ranked) list.push_back({{"item", item}, {"score", score}});
  return list;
}

// ---------------------------------------------------------------------------
// run

struct RunInputs {
  std::string query;
  std::string tags;
  std::vector<std::string> entities;
  std::string relation;
  std::vector<std::string> history;
  std::string topic;
};

OJson run_lm(const RunConfig& config, const RunInputs& inputs) {
  const auto setup = prepare_lm(config, false);
  const auto& res = setup.resources;
  const auto prefix = res.vocab->encode(split_whitespace(inputs.query));
  LmStepResult step = [&] {
    if (config.pipeline == "base") return base_lm_step(prefix, res);
    if (config.pipeline == "knn-lm") {
      return knn_lm_step(prefix, res, memorized_kb(setup, Metric::kL2), config.lambda,
                         effective_top_k(config), config.temperature);
    }
    if (config.pipeline == "cache-lm") {
      CacheLm model(res, cache_options(config));
      for (std::size_t i = 1; i < prefix.size(); ++i) {
        model.push(std::span<const TokenId>(prefix).first(i), prefix[i]);
      }
      return model.score(prefix);
    }
    const auto kb = memorized_kb(setup, Metric::kInnerProduct);
    return gated_lm_step(prefix, res, kb, gate_params(config, setup, kb), effective_top_k(config));
  }();

  const auto& probs = step.p_m.probs();
  std::vector<TokenId> order(probs.size());
  std::iota(order.begin(), order.end(), TokenId{0});
  const std::size_t shown = std::min<std::size_t>(10, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(shown), order.end(),
                    [&](TokenId a, TokenId b) { return probs[a] != probs[b] ? probs[a] > probs[b] : a < b; });
  std::vector<std::pair<std::string, double>> top;
  for (std::size_t i = 0; i < shown; ++i) top.emplace_back(res.vocab->token(order[i]), probs[order[i]]);

  OJson output;
  output["next_tokens"] = candidates_json(top);
  output["gate"] = step.gate ? OJson(*step.gate) : OJson();
  output["trace"] = to_string(step.trace);
  return output;
}

OJson qa_output(const QaResult& result) {
  OJson output;
  output["answer"] = result.answer;
  output["passage_id"] = result.passage_id ? OJson(*result.passage_id) : OJson();
  output["retrieval"] = result.scores.retrieval;
  output["rerank"] = result.scores.rerank;
  output["selection"] = result.scores.selection;
  output["trace"] = to_string(result.trace);
  return output;
}

OJson run_pipeline(const RunConfig& config, const RunInputs& inputs) {
  const std::uint64_t seed = require_seed(config);
  const auto& name = config.pipeline;
  if (is_lm_pipeline(name)) return run_lm(config, inputs);

  const auto question = split_whitespace(inputs.query);
  if (name == "nn-qa") {
    const auto train = read_qa_pairs(require_path(config.train, "train"));
    auto encoder = std::make_shared<const BagOfWordsEmbedder>(effective_dim(config), seed);
    auto kb = std::make_shared<const DenseIndex>(build_qa_kb(train, *encoder));
    return qa_output(nn_qa(question, kb, encoder));
  }

  auto documents = [&] {
    const auto docs = read_documents(require_path(config.docs, "docs"));
    return std::make_shared<const InvertedIndex>(InvertedIndex::build(docs));
  };
  if (name == "dpr-qa") {
    const auto inverted = documents();
    auto encoder = std::make_shared<const BagOfWordsEmbedder>(effective_dim(config), seed);
    auto passages = std::make_shared<const DenseIndex>(build_passage_index(*inverted, *encoder));
    return qa_output(dpr_qa(question, passages, inverted, encoder, config.n, config.lambda_rr));
  }
  if (name == "fakta") {
    const auto inverted = documents();
    Claim claim{question, split_whitespace(inputs.tags), inputs.entities};
    FaktaOptions options;
    if (config.top_k > 0) options.top = config.top_k;
    const auto result = fakta_check(claim, *inverted, default_relevance(), default_stance(), options);
    OJson output;
    output["query"] = result.query;
    output["used_prefix_len"] = result.used_prefix_len;
    output["label"] = result.label;
    output["mean_stance"] = result.mean_stance;
    OJson evidence = OJson::array();
    for (const auto& e : result.evidence) {
      evidence.push_back({{"id", e.id}, {"retrieval", e.retrieval}, {"overlap", e.overlap},
                          {"stance", e.stance}});
    }
    output["evidence"] = evidence;
    output["trace"] = to_string(result.trace);
    return output;
  }
  if (name == "pullnet") {
    const auto store = TripleStore::load_tsv(require_path(config.kg, "kg"));
    const auto inverted = documents();
    PullNetOptions options;
    options.iterations = config.iterations;
    options.fanout = config.fanout;
    const auto result = pullnet_lite(inputs.entities, question, store, *inverted, options);
    OJson output = qa_output(result.qa);
    OJson sets = OJson::array();
    for (const auto& s : result.node_sets) sets.push_back(s);
    output["node_sets"] = sets;
    return output;
  }
  if (name == "wizards") {
    std::vector<std::vector<std::string>> history;
    for (const auto& u : inputs.history) history.push_back(split_whitespace(u));
    if (history.empty() && !question.empty()) history.push_back(question);
    auto space = std::make_shared<const PassageSpace>(documents());
    const auto result =
        wizards_select(history, split_whitespace(inputs.topic), space, effective_top_k(config));
    std::vector<std::pair<std::string, double>> chosen;
    for (const auto& c : result.chosen) chosen.emplace_back(space->index().document(c.doc).id, c.score);
    OJson output;
    output["passages"] = candidates_json(chosen);
    output["trace"] = to_string(result.trace);
    return output;
  }
  if (name == "kg-lm") {
    const auto store = TripleStore::load_tsv(require_path(config.kg, "kg"));
    require(!inputs.entities.empty(), ErrorCode::kInvalidArgument,
            "kg-lm needs a parent entity (--entities)");
    require(!inputs.relation.empty(), ErrorCode::kInvalidArgument,
            "kg-lm needs a relation (--relation)");
    KglmState state(seed);
    ScriptedDecisions script({{TokenType::kNewEntity, inputs.entities.front(), "", ""},
                              {TokenType::kRelatedEntity, "", inputs.entities.front(), inputs.relation}});
    const auto steps = kglm_run(state, script, store, 2);
    OJson output;
    output["entity"] = steps.back().entity ? OJson(*steps.back().entity) : OJson();
    output["source"] = steps.back().source == TokenSource::kEntity ? "entity" : "language-model";
    output["matches"] = steps.back().matches;
    return output;
  }
  fail(ErrorCode::kNotFound, "unknown pipeline '" + name + "'");
}

// ---------------------------------------------------------------------------
// CLI plumbing

/// Flags bound per subcommand; only explicitly given ones override the config.
struct Overlay {
  RunConfig flags;
  std::uint64_t seed = 0;
  std::string config_path;
  std::vector<std::function<void(RunConfig&)>> appliers;
};

template <typename T>
void add_field(CLI::App* cmd, Overlay& overlay, const std::string& flag, T RunConfig::*field,
               const std::string& help) {
  CLI::Option* opt = cmd->add_option(flag, overlay.flags.*field, help);
  overlay.appliers.push_back([opt, field, &overlay](RunConfig& config) {
    if (opt->count() > 0) config.*field = overlay.flags.*field;
  });
}

void add_common(CLI::App* cmd, Overlay& overlay) {
  cmd->add_option("--config", overlay.config_path, "JSON config file");
  CLI::Option* seed = cmd->add_option("--seed", overlay.seed, "random seed (required)");
  overlay.appliers.push_back([seed, &overlay](RunConfig& config) {
    if (seed->count() > 0) config.seed = overlay.seed;
  });
  add_field(cmd, overlay, "--pipeline", &RunConfig::pipeline, "pipeline name");
  add_field(cmd, overlay, "--out", &RunConfig::out, "report path (stdout when absent)");
  add_field(cmd, overlay, "--top-k", &RunConfig::top_k, "neighbours or passages retrieved");
  add_field(cmd, overlay, "--lambda", &RunConfig::lambda, "interpolation weight");
  add_field(cmd, overlay, "--theta", &RunConfig::theta, "cache flatness");
  add_field(cmd, overlay, "--temperature", &RunConfig::temperature, "kNN distance temperature");
  add_field(cmd, overlay, "--n", &RunConfig::n, "DPR passages before reranking");
  add_field(cmd, overlay, "--lambda-rr", &RunConfig::lambda_rr, "DPR rerank weight");
  add_field(cmd, overlay, "--dim", &RunConfig::dim, "key dimension");
  add_field(cmd, overlay, "--order", &RunConfig::order, "n-gram order");
  add_field(cmd, overlay, "--add-k", &RunConfig::add_k, "n-gram smoothing constant");
  add_field(cmd, overlay, "--decay", &RunConfig::decay, "prefix embedding decay");
  add_field(cmd, overlay, "--capacity", &RunConfig::cache_capacity, "cache capacity");
  add_field(cmd, overlay, "--iterations", &RunConfig::iterations, "PullNet iterations");
  add_field(cmd, overlay, "--fanout", &RunConfig::fanout, "PullNet facts and documents per node");
  add_field(cmd, overlay, "--train", &RunConfig::train, "training corpus or QA pairs");
  add_field(cmd, overlay, "--corpus", &RunConfig::corpus, "evaluation corpus or QA pairs");
  add_field(cmd, overlay, "--dev", &RunConfig::dev, "development corpus");
  add_field(cmd, overlay, "--docs", &RunConfig::docs, "document collection");
  add_field(cmd, overlay, "--kg", &RunConfig::kg, "knowledge graph TSV");
}

RunConfig resolve_config(const Overlay& overlay) {
  RunConfig config =
      overlay.config_path.empty() ? RunConfig{} : load_config(require_path(overlay.config_path, "config"));
  for (const auto& apply : overlay.appliers) apply(config);
  require(!config.pipeline.empty(), ErrorCode::kInvalidArgument, "no pipeline given (--pipeline)");
  descriptor_for(config.pipeline);
  return config;
}

std::string one_line(std::string message) {
  std::replace(message.begin(), message.end(), '\n', ' ');
  return message;
}

}  // namespace

OJson to_json(const PipelineDescriptor& d) {
  OJson j;
  j["name"] = d.name;
  j["system"] = d.system;
  j["fusion_point"] = to_string(d.fusion_point);
  j["fusion_mechanism"] = to_string(d.fusion_mechanism);
  j["kb_source"] = to_string(d.kb_source);
  j["fusion"] = d.fusion;
  j["fusion_detail"] = d.fusion_detail;
  j["kb"] = d.kb;
  j["key_type"] = d.key_type;
  j["value_type"] = d.value_type;
  j["aggregation"] = d.aggregation;
  return j;
}

OJson eval_lm_report(const RunConfig& config) {
  OJson report = report_header("eval-lm", config);
  const auto setup = prepare_lm(config, true);
  OJson metrics;
  auto scorer = make_scorer(config, setup, metrics);
  const auto result = perplexity(*scorer, setup.eval);
  metrics["perplexity"] = result.perplexity;
  metrics["total_nll"] = result.total_nll;
  metrics["tokens"] = result.tokens;
  metrics["documents"] = setup.eval.size();
  metrics["vocab_size"] = setup.resources.vocab->size();

  OJson examples = OJson::array();
  for (std::size_t i = 0; i < setup.eval.size(); ++i) {
    const auto n = setup.eval[i].size();
    examples.push_back({{"id", setup.eval_docs[i].id},
                        {"tokens", n},
                        {"nll", result.sequence_nll[i]},
                        {"perplexity", n == 0 ? OJson() : OJson(std::exp(result.sequence_nll[i] /
                                                                         static_cast<double>(n)))}});
  }
  report["metrics"] = metrics;
  report["examples"] = examples;
  return report;
}

OJson eval_qa_report(const RunConfig& config) {
  OJson report = report_header("eval-qa", config);
  const std::uint64_t seed = require_seed(config);
  const auto test = read_qa_pairs(require_path(config.corpus, "corpus"));
  require(!test.empty(), ErrorCode::kEmptyInput, "evaluation QA set is empty");
  auto encoder = std::make_shared<const BagOfWordsEmbedder>(effective_dim(config), seed);

  std::function<QaResult(const std::vector<std::string>&)> answer;
  if (config.pipeline == "nn-qa") {
    const auto train = read_qa_pairs(require_path(config.train, "train"));
    auto kb = std::make_shared<const NnQa>(
        std::make_shared<const DenseIndex>(build_qa_kb(train, *encoder)), encoder);
    answer = [kb](const std::vector<std::string>& q) { return kb->answer(q); };
  } else if (config.pipeline == "dpr-qa") {
    const auto docs = read_documents(require_path(config.docs, "docs"));
    auto inverted = std::make_shared<const InvertedIndex>(InvertedIndex::build(docs));
    auto passages = std::make_shared<const DenseIndex>(build_passage_index(*inverted, *encoder));
    DprOptions options;
    options.n = config.n;
    options.lambda_rr = config.lambda_rr;
    auto model = std::make_shared<const DprQa>(passages, inverted, encoder, options);
    answer = [model](const std::vector<std::string>& q) { return model->answer(q); };
  } else {
    fail(ErrorCode::kInvalidArgument, "pipeline '" + config.pipeline + "' is not a QA pipeline");
  }

  std::vector<std::string> predictions;
  std::vector<std::string> golds;
  OJson examples = OJson::array();
  for (const auto& pair : test) {
    const auto result = answer(split_whitespace(pair.question));
    predictions.push_back(result.answer);
    golds.push_back(pair.answer);
    examples.push_back({{"question", pair.question},
                        {"gold", pair.answer},
                        {"prediction", result.answer},
                        {"passage_id", result.passage_id ? OJson(*result.passage_id) : OJson()},
                        {"correct", normalize_answer(result.answer) == normalize_answer(pair.answer)}});
  }
  OJson metrics;
  metrics["exact_match"] = exact_match(predictions, golds);
  metrics["questions"] = test.size();
  report["metrics"] = metrics;
  report["examples"] = examples;
  return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Retrieval-augmented pipeline toolkit", "artk"};
  app.require_subcommand(1);

  Overlay overlay;
  RunInputs inputs;

  auto* ingest = app.add_subcommand("ingest", "normalize a corpus to JSONL");
  std::string ingest_in;
  std::string ingest_out;
  ingest->add_option("--corpus", ingest_in, "plain text or JSONL corpus")->required();
  ingest->add_option("--out", ingest_out, "JSONL output path")->required();

  auto* build = app.add_subcommand("build-index", "build and persist an index container");
  std::string kind;
  std::string build_in;
  std::string build_out;
  std::string metric_name = "ip";
  std::size_t build_dim = 256;
  std::uint64_t build_seed = 0;
  bool approximate = false;
  build->add_option("--kind", kind, "dense or sparse")->required()->check(CLI::IsMember({"dense", "sparse"}));
  build->add_option("--corpus", build_in, "document corpus")->required();
  build->add_option("--out", build_out, "container path")->required();
  build->add_option("--metric", metric_name, "l2, ip or cosine (dense)");
  build->add_option("--dim", build_dim, "embedding dimension (dense)");
  CLI::Option* build_seed_opt = build->add_option("--seed", build_seed, "encoder seed (dense)");
  build->add_flag("--approximate", approximate, "partition the dense index");

  auto* run = app.add_subcommand("run", "run one query through a pipeline");
  add_common(run, overlay);
  run->add_option("--query", inputs.query, "query, prefix, question or claim")->required();
  run->add_option("--tags", inputs.tags, "part-of-speech tags aligned with the claim");
  run->add_option("--entities", inputs.entities, "linked entities");
  run->add_option("--relation", inputs.relation, "relation to follow (kg-lm)");
  run->add_option("--history", inputs.history, "dialogue utterances, oldest first");
  run->add_option("--topic", inputs.topic, "dialogue topic");

  auto* eval_lm = app.add_subcommand("eval-lm", "perplexity of an LM pipeline");
  add_common(eval_lm, overlay);
  auto* eval_qa = app.add_subcommand("eval-qa", "exact match of a QA pipeline");
  add_common(eval_qa, overlay);

  auto* describe = app.add_subcommand("describe", "print a pipeline's typology record");
  std::string describe_name;
  describe->add_option("--pipeline", describe_name, "pipeline name")->required();

  std::vector<const char*> argv{"artk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "artk: error: " << one_line(e.what()) << "\n";
    return 2;
  }

  try {
    if (*ingest) {
      const auto docs = read_documents(require_path(ingest_in, "corpus"));
      std::ofstream file(ingest_out, std::ios::binary);
      require(file.good(), ErrorCode::kIo, "cannot write " + ingest_out);
      write_documents_jsonl(file, docs);
      out << "ingested " << docs.size() << " documents into " << ingest_out << "\n";
    } else if (*build) {
      const auto docs = read_documents(require_path(build_in, "corpus"));
      if (kind == "sparse") {
        InvertedIndex::build(docs).save(build_out);
      } else {
        require(build_seed_opt->count() > 0, ErrorCode::kInvalidArgument,
                "a seed is required (--seed)");
        const auto metric = parse_metric(metric_name);
        require(metric.has_value(), ErrorCode::kInvalidArgument, "unknown metric '" + metric_name + "'");
        const BagOfWordsEmbedder encoder(build_dim, build_seed);
        std::vector<IndexEntry> entries;
        for (const auto& d : docs) {
          const auto v = encoder.embed(split_whitespace(d.title + " " + d.text));
          entries.push_back({std::vector<float>(v.begin(), v.end()), d.id});
        }
        DenseIndex::build(entries, build_dim, *metric, approximate, build_seed).save(build_out);
      }
      out << "wrote " << kind << " index over " << docs.size() << " documents to " << build_out << "\n";
    } else if (*describe) {
      out << to_record(descriptor_for(describe_name));
    } else if (*run) {
      const auto config = resolve_config(overlay);
      OJson report = report_header("run", config);
      report["query"] = inputs.query;
      report["output"] = run_pipeline(config, inputs);
      emit(report, "run " + config.pipeline + ": wrote " + config.out, config, out);
    } else if (*eval_lm) {
      const auto config = resolve_config(overlay);
      const auto report = eval_lm_report(config);
      const auto& m = report["metrics"];
      emit(report,
           "eval-lm " + config.pipeline + ": perplexity " + fixed(m["perplexity"].get<double>()) +
               " over " + std::to_string(m["tokens"].get<std::size_t>()) + " tokens",
           config, out);
    } else if (*eval_qa) {
      const auto config = resolve_config(overlay);
      const auto report = eval_qa_report(config);
      const auto& m = report["metrics"];
      emit(report,
           "eval-qa " + config.pipeline + ": exact match " + fixed(m["exact_match"].get<double>()) +
               " over " + std::to_string(m["questions"].get<std::size_t>()) + " questions",
           config, out);
    }
  } catch (const std::exception& e) {
    err << "artk: error: " << one_line(e.what()) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace artk
