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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "artk/backbone/corpus.hpp"
#include "artk/backbone/embedder.hpp"
#include "artk/backbone/ngram_lm.hpp"
#include "artk/backbone/vocabulary.hpp"
#include "artk/core/error.hpp"
#include "artk/core/text.hpp"
#include "test_util.hpp"

namespace artk {
namespace {

using testing::for_all;
using testing::Gen;

std::vector<std::vector<std::string>> sentences(std::initializer_list<const char*> lines) {
  std::vector<std::vector<std::string>> out;
  for (const char* l : lines) out.push_back(split_whitespace(l));
  return out;
}

struct Toy {
  Vocabulary vocab;
  std::vector<std::vector<TokenId>> ids;
};

Toy encode(std::initializer_list<const char*> lines) {
  const auto s = sentences(lines);
  Toy t{Vocabulary::build(s), {}};
  for (const auto& x : s) t.ids.push_back(t.vocab.encode(x));
  return t;
}

double l2(const DenseVector& a, const DenseVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

double norm(std::span<const double> v) {
  double s = 0.0;
  for (const double x : v) s += x * x;
  return std::sqrt(s);
}

TEST(VocabularyTest, ReservedIdsAndFirstAppearanceOrder) {
  const auto v = Vocabulary::build(sentences({"b a b", "c"}));
  EXPECT_EQ(v.size(), 5u);
  EXPECT_EQ(v.token(Vocabulary::kUnk), "<unk>");
  EXPECT_EQ(v.token(Vocabulary::kEos), "</s>");
  EXPECT_EQ(v.id("b"), 2u);
  EXPECT_EQ(v.id("a"), 3u);
  EXPECT_EQ(v.id("zzz"), Vocabulary::kUnk);
  EXPECT_THROW(v.token(99), Error);
}

TEST(CorpusTest, ReadsPlainAndJsonLines) {
  std::istringstream in("first line here\n\n{\"id\":\"d9\",\"title\":\"T\",\"text\":\"body\","
                        "\"entities\":[\"E\"]}\nlast\n");
  const auto docs = read_documents(in);
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(docs[0].id, "1");
  EXPECT_EQ(docs[1].id, "d9");
  EXPECT_EQ(docs[1].title, "T");
  EXPECT_EQ(docs[1].entities, std::vector<std::string>{"E"});
  EXPECT_EQ(docs[2].text, "last");

  std::ostringstream out;
  write_documents_jsonl(out, docs);
  std::istringstream back(out.str());
  EXPECT_EQ(read_documents(back), docs);
}

TEST(CorpusTest, MalformedJsonIsAFormatError) {
  std::istringstream in("{\"id\": 3\n");
  try {
    read_documents(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFormat);
  }
}

TEST(CorpusTest, FirstParagraph) {
  EXPECT_EQ(first_paragraph("one two\nthree"), "one two");
  EXPECT_EQ(first_paragraph("single"), "single");
}

TEST(NGramTest, CountsBigrams) {
  const auto t = encode({"a b a b"});
  const auto lm = train_ngram(t.ids, t.vocab.size(), {2, 0.1, true});
  const TokenId a = t.vocab.id("a");
  const TokenId b = t.vocab.id("b");
  const std::vector<TokenId> ctx{a};
  EXPECT_EQ(lm.count(ctx, b), 2u);
  EXPECT_EQ(lm.context_count(ctx), 2u);
  const std::vector<TokenId> bos{NGramLM::kBos};
  EXPECT_EQ(lm.count(bos, a), 1u);
  const std::vector<TokenId> last{b};
  EXPECT_EQ(lm.count(last, Vocabulary::kEos), 1u);
}

TEST(NGramTest, UnigramIgnoresContext) {
  const auto t = encode({"a b c a", "c c b"});
  const auto lm = train_ngram(t.ids, t.vocab.size(), {1, 0.5, true});
  const std::vector<TokenId> p1{t.vocab.id("a")};
  const std::vector<TokenId> p2{t.vocab.id("c"), t.vocab.id("b")};
  const auto d1 = lm.next_distribution(p1);
  const auto d2 = lm.next_distribution(p2);
  for (std::size_t i = 0; i < d1.size(); ++i) EXPECT_DOUBLE_EQ(d1[i], d2[i]);
}

TEST(NGramTest, HugeKApproachesUniform) {
  const auto t = encode({"a b"});
  ASSERT_EQ(t.vocab.size(), 4u);
  const auto lm = train_ngram(t.ids, 4, {2, 1e9, true});
  const std::vector<TokenId> p{t.vocab.id("a")};
  const auto d = lm.next_distribution(p);
  for (const double x : d.probs()) EXPECT_NEAR(x, 0.25, 1e-3);
}

TEST(NGramTest, UnseenContextWithoutBackoffIsUniform) {
  const auto t = encode({"a b", "c"});
  const auto lm = train_ngram(t.ids, t.vocab.size(), {3, 1.0, false});
  const std::vector<TokenId> p{t.vocab.id("c"), t.vocab.id("c")};
  const double v = static_cast<double>(t.vocab.size());
  const auto d = lm.next_distribution(p);
  for (const double x : d.probs()) EXPECT_DOUBLE_EQ(x, 1.0 / v);
}

TEST(NGramTest, AddKArgmaxFollowsCounts) {
  const auto t = encode({"a b a b"});
  const auto lm = train_ngram(t.ids, t.vocab.size(), {2, 0.01, true});
  const std::vector<TokenId> p{t.vocab.id("b"), t.vocab.id("a")};
  const auto d = lm.next_distribution(p);
  EXPECT_EQ(d.argmax(), t.vocab.id("b"));
  // Oracle: plain add-k at a seen context with a uniform prior under it
  // (unigram level: (c(w) + k V / V) / (N + k V)).
  const double V = static_cast<double>(t.vocab.size());
  const double k = 0.01;
  const double n_tokens = 5.0;  // a b a b </s>
  const double uni_b = (2.0 + k) / (n_tokens + k * V);
  const double expected = (2.0 + k * V * uni_b) / (2.0 + k * V);
  EXPECT_NEAR(d[t.vocab.id("b")], expected, 1e-12);
}

TEST(NGramTest, DistributionsAreValidAndPositive) {
  for_all(300, 5, [](Gen& g, std::size_t) {
    std::vector<std::vector<std::string>> corpus(g.index(1, 4));
    for (auto& s : corpus) {
      for (std::size_t i = g.index(1, 8); i > 0; --i) s.push_back(g.word(4, 1));
    }
    const auto vocab = Vocabulary::build(corpus);
    std::vector<std::vector<TokenId>> ids;
    for (const auto& s : corpus) ids.push_back(vocab.encode(s));
    const NGramOptions o{static_cast<int>(g.index(1, 4)), g.uniform(0.01, 2.0), g.coin()};
    const auto lm = train_ngram(ids, vocab.size(), o);
    std::vector<TokenId> prefix;
    for (std::size_t i = g.index(0, 5); i > 0; --i) {
      prefix.push_back(static_cast<TokenId>(g.index(0, vocab.size() - 1)));
    }
    const auto d = lm.next_distribution(prefix);
    EXPECT_NEAR(testing::sum(d.probs()), 1.0, 1e-9);
    for (const double x : d.probs()) EXPECT_GT(x, 0.0);
  });
}

TEST(NGramTest, TrainingPerplexityBeatsUniform) {
  for_all(100, 8, [](Gen& g, std::size_t) {
    std::vector<std::vector<std::string>> corpus(g.index(1, 5));
    for (auto& s : corpus) {
      for (std::size_t i = g.index(1, 10); i > 0; --i) s.push_back(g.word(5, 1));
    }
    const auto vocab = Vocabulary::build(corpus);
    std::vector<std::vector<TokenId>> ids;
    for (const auto& s : corpus) ids.push_back(vocab.encode(s));
    const auto lm = train_ngram(ids, vocab.size(), {static_cast<int>(g.index(1, 3)), g.uniform(0.01, 1.0), true});
    double nll = 0.0;
    std::size_t n = 0;
    for (auto s : ids) {
      s.push_back(Vocabulary::kEos);
      for (std::size_t i = 0; i < s.size(); ++i) {
        nll -= std::log(lm.next_distribution(std::span<const TokenId>(s).first(i))[s[i]]);
        ++n;
      }
    }
    EXPECT_LE(std::exp(nll / static_cast<double>(n)), static_cast<double>(vocab.size()) + 1e-9);
  });
}

TEST(NGramTest, RejectsBadArguments) {
  const std::vector<std::vector<TokenId>> empty;
  EXPECT_THROW(train_ngram(empty, 3, {}), Error);
  const std::vector<std::vector<TokenId>> one{{2}};
  EXPECT_THROW(train_ngram(one, 3, {0, 0.1, true}), Error);
  EXPECT_THROW(train_ngram(one, 3, {2, 0.0, true}), Error);
}

TEST(EmbedderTest, SingleTokenIsItsUnitVector) {
  const auto v = Vocabulary::build(sentences({"x y z"}));
  const PrefixEmbedder e(v, {32, 0.7, 9});
  const std::vector<TokenId> p{v.id("y")};
  const auto key = e.embed(p);
  const auto tv = e.token_vector(v.id("y"));
  for (std::size_t i = 0; i < 32; ++i) EXPECT_NEAR(key[i], tv[i], 1e-6);
  EXPECT_THROW(e.embed(std::span<const TokenId>{}), Error);
}

TEST(EmbedderTest, Deterministic) {
  const auto v = Vocabulary::build(sentences({"x y z"}));
  const PrefixEmbedder a(v, {32, 0.7, 9});
  const PrefixEmbedder b(v, {32, 0.7, 9});
  const std::vector<TokenId> p{2, 3, 4};
  EXPECT_EQ(a.embed(p), b.embed(p));
}

TEST(EmbedderTest, SharedSuffixIsCloserForMostSeeds) {
  const auto v = Vocabulary::build(sentences({"x y z w q r"}));
  const std::vector<TokenId> xyz{v.id("x"), v.id("y"), v.id("z")};
  const std::vector<TokenId> wyz{v.id("w"), v.id("y"), v.id("z")};
  const std::vector<TokenId> xqr{v.id("x"), v.id("q"), v.id("r")};
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PrefixEmbedder e(v, {32, 0.7, seed});
    wins += l2(e.embed(xyz), e.embed(wyz)) < l2(e.embed(xyz), e.embed(xqr));
  }
  EXPECT_GT(wins, 50);
}

TEST(EmbedderTest, AppendingATokenMovesTheSumByOne) {
  for_all(200, 21, [](Gen& g, std::size_t) {
    const auto v = Vocabulary::build(sentences({"a b c d e f g h"}));
    const double decay = g.uniform(0.05, 1.0);
    const PrefixEmbedder e(v, {16, decay, g.index(0, 1000)});
    std::vector<TokenId> p;
    for (std::size_t i = g.index(1, 10); i > 0; --i) p.push_back(static_cast<TokenId>(g.index(0, v.size() - 1)));
    const auto before = e.embed_unnormalized(p);
    p.push_back(static_cast<TokenId>(g.index(0, v.size() - 1)));
    const auto after = e.embed_unnormalized(p);
    std::vector<double> step(after.size());
    for (std::size_t i = 0; i < step.size(); ++i) step[i] = after[i] - decay * before[i];
    EXPECT_NEAR(norm(step), 1.0, 1e-5);
    EXPECT_LE(norm(after), decay * norm(before) + 1.0 + 1e-6);
  });
}

TEST(EmbedderTest, BagOfWordsIsOrderFree) {
  const BagOfWordsEmbedder e(32, 4);
  const auto a = e.embed(split_whitespace("Red apple pie"));
  const auto b = e.embed(split_whitespace("pie, apple red"));
  for (std::size_t i = 0; i < 32; ++i) EXPECT_NEAR(a[i], b[i], 1e-6);
  const auto zero = e.embed(split_whitespace("..."));
  for (const float x : zero) EXPECT_EQ(x, 0.0f);
}

}  // namespace
}  // namespace artk
