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

#include "artk/pipelines/qa.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>

#include <json.hpp>

#include "artk/core/error.hpp"
#include "artk/core/text.hpp"
#include "artk/pipelines/descriptors.hpp"
#include "artk/sparse_index/retrieval.hpp"

namespace artk {
namespace {

class BowEncoder final : public Encoder {
 public:
  explicit BowEncoder(std::shared_ptr<const BagOfWordsEmbedder> encoder)
      : encoder_(std::move(encoder)) {}
  std::string name() const override { return "bag-of-words"; }
  KeyKind key_kind() const override { return KeyKind::kDense; }
  Key encode(const Query& query) const override { return Key::dense(encoder_->embed(query.text)); }

 private:
  std::shared_ptr<const BagOfWordsEmbedder> encoder_;
};

/// Top-n passages; payloads resolved to documents of the inverted index.
class PassageRetriever final : public Retriever {
 public:
  PassageRetriever(std::shared_ptr<const DenseIndex> index,
                   std::shared_ptr<const InvertedIndex> inverted, std::size_t n)
      : index_(std::move(index)), inverted_(std::move(inverted)), n_(n) {}
  std::string name() const override { return "passage-mips"; }
  KeyKind key_kind() const override { return KeyKind::kDense; }
  std::vector<Candidate> retrieve(const Key& key) const override {
    std::vector<Candidate> out;
    for (const auto& hit : index_->knn(key, n_).hits) {
      const auto doc = inverted_->find(hit.payload);
      require(doc.has_value(), ErrorCode::kNotFound,
              "passage '" + hit.payload + "' missing from the inverted index");
      out.push_back({std::nullopt, DocRef{*doc, hit.payload}, hit.score});
    }
    return out;
  }

 private:
  std::shared_ptr<const DenseIndex> index_;
  std::shared_ptr<const InvertedIndex> inverted_;
  std::size_t n_;
};

std::vector<RankedPassage> rerank(std::span<const Candidate> candidates,
                                  std::span<const std::string> question,
                                  const InvertedIndex& inverted, double lambda_rr) {
  std::vector<RankedPassage> ranked;
  for (const auto& c : candidates) {
    const auto& doc = std::get<DocRef>(c.value);
    ranked.push_back({doc.index, c.score, bm25(question, doc.index, inverted) + lambda_rr * c.score, 0.0});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const RankedPassage& a, const RankedPassage& b) {
    return a.rerank > b.rerank || (a.rerank == b.rerank && a.doc < b.doc);
  });
  if (!ranked.empty()) {
    const double top = ranked.front().rerank;
    double total = 0.0;
    for (auto& r : ranked) total += (r.selection = std::exp(r.rerank - top));
    for (auto& r : ranked) r.selection /= total;
  }
  return ranked;
}

/// Candidates -> passages in rerank order; block score is the selection
/// probability.
class RerankAggregator final : public Aggregator {
 public:
  RerankAggregator(std::shared_ptr<const InvertedIndex> inverted, double lambda_rr)
      : inverted_(std::move(inverted)), lambda_rr_(lambda_rr) {}
  std::string name() const override { return "bm25-rerank"; }
  Artefact aggregate(std::span<const Candidate> candidates, const Key&, const Query& query,
                     Notes& notes) const override {
    if (candidates.empty()) {
      notes.push_back("no passages retrieved");
      return Artefact{};
    }
    std::vector<TextBlock> blocks;
    for (const auto& r : rerank(candidates, query.text, *inverted_, lambda_rr_)) {
      const auto& doc = inverted_->document(r.doc);
      blocks.push_back({doc.id, split_whitespace(doc.text), r.selection});
    }
    return Artefact::text_blocks(std::move(blocks));
  }

 private:
  std::shared_ptr<const InvertedIndex> inverted_;
  double lambda_rr_;
};

struct SpanAnswer {
  std::string answer{kNoAnswer};
  std::optional<std::string> passage_id;
  double selection = 0.0;
};

class SpanModel final : public Model<SpanAnswer> {
 public:
  explicit SpanModel(std::shared_ptr<const SpanScorer> scorer) : scorer_(std::move(scorer)) {}
  std::string name() const override { return "span-extractor"; }
  SpanAnswer predict(const Query& query, const Artefact& artefact, Notes& notes) const override {
    if (artefact.empty()) return {};
    const auto& top = artefact.as_text_blocks().front();
    SpanAnswer out{std::string(kNoAnswer), top.source_id, top.score};
    const auto span = scorer_->best_span(query.text, top.tokens);
    if (!span) {
      notes.push_back("no admissible span in passage " + top.source_id);
      return out;
    }
    const auto tokens = std::span<const std::string>(top.tokens).subspan(span->begin, span->end - span->begin);
    out.answer = join(tokens);
    return out;
  }

 private:
  std::shared_ptr<const SpanScorer> scorer_;
};

class DenseAnswerRetriever final : public Retriever {
 public:
  explicit DenseAnswerRetriever(std::shared_ptr<const DenseIndex> kb) : kb_(std::move(kb)) {}
  std::string name() const override { return "question-mips"; }
  KeyKind key_kind() const override { return KeyKind::kDense; }
  std::vector<Candidate> retrieve(const Key& key) const override {
    std::vector<Candidate> out;
    for (const auto& hit : kb_->knn(key, 1).hits) out.push_back({std::nullopt, hit.payload, hit.score});
    return out;
  }

 private:
  std::shared_ptr<const DenseIndex> kb_;
};

/// Closest answer string as the artefact.
class NearestAnswerAggregator final : public Aggregator {
 public:
  std::string name() const override { return "argmax"; }
  Artefact aggregate(std::span<const Candidate> candidates, const Key&, const Query&,
                     Notes&) const override {
    if (candidates.empty()) return Artefact{};
    const auto& c = candidates.front();
    return Artefact::text_blocks({TextBlock{"nearest", {std::get<std::string>(c.value)}, c.score}});
  }
};

/// Identity: the artefact is the output.
class NoModel final : public Model<std::string> {
 public:
  std::string name() const override { return "none"; }
  std::string predict(const Query&, const Artefact& artefact, Notes&) const override {
    if (artefact.empty()) return std::string(kNoAnswer);
    return artefact.as_text_blocks().front().tokens.front();
  }
};

}  // namespace

std::vector<QaPair> read_qa_pairs(std::istream& in) {
  std::vector<QaPair> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      out.push_back({j.at("question").get<std::string>(), j.at("answer").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::kFormat, "qa line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::vector<QaPair> read_qa_pairs(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.is_open(), ErrorCode::kIo, "cannot open " + path.string());
  return read_qa_pairs(in);
}

std::optional<Span> LexicalSpanScorer::best_span(std::span<const std::string> question,
                                                 std::span<const std::string> passage) const {
  std::set<std::string> q;
  for (const auto& t : analyze(question)) q.insert(t);
  const std::size_t n = passage.size();
  std::vector<std::uint8_t> in_q(n), admissible(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto term = normalize_term(passage[i]);
    in_q[i] = !term.empty() && q.count(term) > 0;
    admissible[i] = !term.empty() && !in_q[i];
  }
  std::vector<double> p_start(n, 0.0), p_end(n, 0.0);
  double z_start = 0.0;
  double z_end = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!admissible[i]) continue;
    p_start[i] = std::exp((i == 0 || in_q[i - 1]) ? 1.0 : 0.0);
    p_end[i] = std::exp((i + 1 == n || in_q[i + 1]) ? 1.0 : 0.0);
    z_start += p_start[i];
    z_end += p_end[i];
  }
  if (z_start == 0.0) return std::nullopt;

  std::optional<Span> best;
  for (std::size_t i = 0; i < n; ++i) {
    if (!admissible[i]) continue;
    for (std::size_t j = i; j < n && j < i + max_length_ && admissible[j]; ++j) {
      const double score = (p_start[i] / z_start) * (p_end[j] / z_end);
      if (!best || score > best->score) best = Span{i, j + 1, score};
    }
  }
  return best;
}

DenseIndex build_passage_index(const InvertedIndex& inverted, const BagOfWordsEmbedder& encoder) {
  std::vector<IndexEntry> entries;
  for (std::uint32_t doc = 0; doc < inverted.doc_count(); ++doc) {
    const auto& d = inverted.document(doc);
    entries.push_back({encoder.embed(split_whitespace(d.title + " " + d.text)), d.id});
  }
  return DenseIndex::build(entries, encoder.dim(), Metric::kInnerProduct);
}

struct DprQa::Impl {
  std::shared_ptr<const InvertedIndex> inverted;
  DprOptions options;
  Pipeline<SpanAnswer> pipeline;
};

DprQa::DprQa(std::shared_ptr<const DenseIndex> passages,
             std::shared_ptr<const InvertedIndex> inverted,
             std::shared_ptr<const BagOfWordsEmbedder> encoder, const DprOptions& options,
             std::shared_ptr<const SpanScorer> span_scorer) {
  require(options.n >= 1, ErrorCode::kInvalidArgument, "passage count n must be >= 1");
  require(passages && passages->size() > 0, ErrorCode::kEmptyInput, "passage index is empty");
  require(passages->metric() == Metric::kInnerProduct, ErrorCode::kInvalidArgument,
          "passage index must use inner product");
  if (!span_scorer) span_scorer = std::make_shared<LexicalSpanScorer>();
  impl_ = std::make_shared<const Impl>(Impl{
      inverted, options,
      Pipeline<SpanAnswer>(descriptor_for("dpr-qa"), std::make_shared<BowEncoder>(encoder),
                           std::make_shared<PassageRetriever>(passages, inverted, options.n),
                           std::make_shared<RerankAggregator>(inverted, options.lambda_rr),
                           std::make_shared<SpanModel>(span_scorer))});
}

std::vector<RankedPassage> DprQa::rank(std::span<const std::string> question) const {
  Query q;
  q.task = TaskKind::kQa;
  q.text.assign(question.begin(), question.end());
  const auto key = impl_->pipeline.encoder().encode(q);
  const auto candidates = impl_->pipeline.retriever().retrieve(key);
  return rerank(candidates, question, *impl_->inverted, impl_->options.lambda_rr);
}

QaResult DprQa::answer(std::span<const std::string> question) const {
  Query q;
  q.task = TaskKind::kQa;
  q.text.assign(question.begin(), question.end());
  auto run = impl_->pipeline.run(q);
  QaResult result;
  result.answer = run.output.answer;
  result.passage_id = run.output.passage_id;
  result.scores.selection = run.output.selection;
  if (result.passage_id) {
    for (const auto& c : run.trace.candidates) {
      const auto& doc = std::get<DocRef>(c.value);
      if (doc.id != *result.passage_id) continue;
      result.scores.retrieval = c.score;
      result.scores.rerank =
          bm25(question, doc.index, *impl_->inverted) + impl_->options.lambda_rr * c.score;
      break;
    }
  }
  result.trace = std::move(run.trace);
  return result;
}

QaResult dpr_qa(std::span<const std::string> question, std::shared_ptr<const DenseIndex> passages,
                std::shared_ptr<const InvertedIndex> inverted,
                std::shared_ptr<const BagOfWordsEmbedder> encoder, std::size_t n,
                double lambda_rr) {
  return DprQa(std::move(passages), std::move(inverted), std::move(encoder), {n, lambda_rr})
      .answer(question);
}

DenseIndex build_qa_kb(std::span<const QaPair> train, const BagOfWordsEmbedder& encoder) {
  require(!train.empty(), ErrorCode::kEmptyInput, "no training questions");
  std::vector<IndexEntry> entries;
  for (const auto& pair : train) {
    entries.push_back({encoder.embed(split_whitespace(pair.question)), pair.answer});
  }
  return DenseIndex::build(entries, encoder.dim(), Metric::kInnerProduct);
}

NnQa::NnQa(std::shared_ptr<const DenseIndex> kb, std::shared_ptr<const BagOfWordsEmbedder> encoder)
    : pipeline_(descriptor_for("nn-qa"), std::make_shared<BowEncoder>(std::move(encoder)),
                std::make_shared<DenseAnswerRetriever>(std::move(kb)),
                std::make_shared<NearestAnswerAggregator>(), std::make_shared<NoModel>()) {}

QaResult NnQa::answer(std::span<const std::string> question) const {
  Query q;
  q.task = TaskKind::kQa;
  q.text.assign(question.begin(), question.end());
  auto run = pipeline_.run(q);
  QaResult result;
  result.answer = run.output;
  if (!run.trace.candidates.empty()) {
    result.scores.retrieval = run.trace.candidates.front().score;
    result.scores.selection = 1.0;
  }
  result.trace = std::move(run.trace);
  return result;
}

QaResult nn_qa(std::span<const std::string> question, std::shared_ptr<const DenseIndex> kb,
               std::shared_ptr<const BagOfWordsEmbedder> encoder) {
  return NnQa(std::move(kb), std::move(encoder)).answer(question);
}

}  // namespace artk
