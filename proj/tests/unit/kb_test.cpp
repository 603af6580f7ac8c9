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

#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "artk/backbone/embedder.hpp"
#include "artk/backbone/vocabulary.hpp"
#include "artk/core/error.hpp"
#include "artk/core/text.hpp"
#include "artk/kb/dynamic_cache.hpp"
#include "artk/kb/memorized_kb.hpp"
#include "artk/kb/triple_store.hpp"
#include "test_util.hpp"

namespace artk {
namespace {

using testing::for_all;
using testing::Gen;

struct Memorized {
  Vocabulary vocab;
  std::vector<std::vector<TokenId>> ids;
  std::unique_ptr<PrefixEmbedder> embedder;
};

Memorized memorize(std::initializer_list<const char*> lines, std::size_t dim = 16) {
  std::vector<std::vector<std::string>> s;
  for (const char* l : lines) s.push_back(split_whitespace(l));
  Memorized m{Vocabulary::build(s), {}, nullptr};
  for (const auto& x : s) m.ids.push_back(m.vocab.encode(x));
  m.embedder = std::make_unique<PrefixEmbedder>(m.vocab, PrefixEmbedderOptions{dim, 0.7, 3});
  return m;
}

TripleStore toy_graph() {
  TripleStore s;
  s.insert({"A", "likes", "B"});
  s.insert({"A", "likes", "C"});
  s.insert({"A", "knows", "D"});
  s.insert({"B", "likes", "C"});
  s.insert({"C", "born_in", "E"});
  return s;
}

TEST(MemorizedKbTest, OneEntryPerPositionAfterTheFirst) {
  const auto m = memorize({"w x y z"});
  const auto kb = MemorizedKB::build(m.ids, *m.embedder);
  EXPECT_EQ(kb.size(), 3u);
  EXPECT_EQ(kb.target(0), m.vocab.id("x"));
  EXPECT_EQ(kb.target(2), m.vocab.id("z"));
}

TEST(MemorizedKbTest, ExactPrefixRetrievesItsTarget) {
  const auto m = memorize({"w x y z", "q r s"});
  const auto kb = MemorizedKB::build(m.ids, *m.embedder);
  const std::vector<TokenId> prefix{m.vocab.id("w"), m.vocab.id("x")};
  const auto r = kb.search(m.embedder->embed(prefix), 1);
  ASSERT_EQ(r.hits.size(), 1u);
  EXPECT_EQ(kb.target(r.hits[0].row), m.vocab.id("y"));
  EXPECT_EQ(r.hits[0].score, 0.0);
  EXPECT_EQ(r.hits[0].payload, std::to_string(m.vocab.id("y")));
}

TEST(MemorizedKbTest, DuplicateSentencesKeepDuplicateEntries) {
  const auto m = memorize({"a b", "a b"});
  const auto kb = MemorizedKB::build(m.ids, *m.embedder);
  ASSERT_EQ(kb.size(), 2u);
  const std::vector<TokenId> prefix{m.vocab.id("a")};
  const auto r = kb.search(m.embedder->embed(prefix), 2);
  ASSERT_EQ(r.hits.size(), 2u);
  EXPECT_EQ(r.hits[0].score, 0.0);
  EXPECT_EQ(r.hits[1].score, 0.0);
}

TEST(MemorizedKbTest, EmptyCorpusIsRejected) {
  const auto m = memorize({"single"});
  EXPECT_THROW(MemorizedKB::build(m.ids, *m.embedder), Error);
  const std::vector<std::vector<TokenId>> none;
  EXPECT_THROW(MemorizedKB::build(none, *m.embedder), Error);
}

TEST(MemorizedKbTest, TrainingPrefixFindsOwnTargetAtDistanceZero) {
  for_all(50, 41, [](Gen& g, std::size_t) {
    std::vector<std::vector<std::string>> s(g.index(1, 4));
    for (auto& x : s) {
      for (std::size_t i = g.index(2, 6); i > 0; --i) x.push_back(g.word(4, 1));
    }
    const auto vocab = Vocabulary::build(s);
    std::vector<std::vector<TokenId>> ids;
    for (const auto& x : s) ids.push_back(vocab.encode(x));
    const PrefixEmbedder e(vocab, {16, 0.7, g.index(0, 99)});
    const auto kb = MemorizedKB::build(ids, e);
    const auto& seq = ids[g.index(0, ids.size() - 1)];
    const std::size_t i = g.index(1, seq.size() - 1);
    const auto prefix = std::span<const TokenId>(seq).first(i);
    const auto r = kb.search(e.embed(prefix), kb.size());
    bool found = false;
    for (const auto& h : r.hits) {
      if (h.score != 0.0) break;
      found = found || kb.target(h.row) == seq[i];
    }
    EXPECT_TRUE(found);
  });
}

TEST(MemorizedRetrieverTest, ClampsCountToKbSize) {
  const auto m = memorize({"a b c"});
  auto kb = std::make_shared<const MemorizedKB>(MemorizedKB::build(m.ids, *m.embedder));
  const MemorizedRetriever r(kb, 1024);
  const std::vector<TokenId> prefix{m.vocab.id("a")};
  const auto c = r.retrieve(Key::dense(m.embedder->embed(prefix)));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(std::get<TokenId>(c[0].value), m.vocab.id("b"));
}

TEST(DynamicCacheTest, EvictsOldestFirst) {
  DynamicCache cache(2);
  cache_push(cache, {1.0f}, 10);
  cache_push(cache, {2.0f}, 11);
  cache_push(cache, {3.0f}, 12);
  const auto entries = cache_entries(cache);
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].token, 12u);
  EXPECT_EQ(entries[1].token, 11u);
  EXPECT_THROW(DynamicCache(0), Error);
  EXPECT_THROW(cache_push(cache, {1.0f, 2.0f}, 1), Error);
}

TEST(DynamicCacheTest, CapacityAndFifoHoldForAnyPushSequence) {
  for_all(200, 43, [](Gen& g, std::size_t) {
    const std::size_t capacity = g.index(1, 10);
    DynamicCache a(capacity);
    DynamicCache b(capacity);
    std::vector<TokenId> pushed;
    for (std::size_t i = g.index(0, 30); i > 0; --i) {
      const auto token = static_cast<TokenId>(g.index(0, 50));
      const DenseVector key{static_cast<float>(g.uniform())};
      cache_push(a, key, token);
      cache_push(b, key, token);
      pushed.push_back(token);
      EXPECT_LE(a.size(), capacity);
    }
    EXPECT_EQ(cache_entries(a), cache_entries(b));
    const auto entries = cache_entries(a);
    ASSERT_EQ(entries.size(), std::min(capacity, pushed.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) {
      EXPECT_EQ(entries[i].token, pushed[pushed.size() - 1 - i]);
    }
  });
}

TEST(TripleStoreTest, InsertIsSetLike) {
  auto s = toy_graph();
  EXPECT_EQ(s.size(), 5u);
  EXPECT_FALSE(s.insert({"A", "likes", "B"}));
  EXPECT_EQ(s.size(), 5u);
  EXPECT_TRUE(s.has_entity("E"));
  EXPECT_EQ(s.relations().size(), 3u);
}

TEST(TripleStoreTest, MatchHandPlacedTriples) {
  const auto s = toy_graph();
  TriplePattern p;
  p.parent = "A";
  p.relation = "likes";
  EXPECT_EQ(kg_match(s, p), (std::vector<Triple>{{"A", "likes", "B"}, {"A", "likes", "C"}}));

  TriplePattern by_entity;
  by_entity.entity = "C";
  EXPECT_EQ(kg_match(s, by_entity).size(), 2u);

  TriplePattern full{"C", "born_in", "E"};
  EXPECT_EQ(kg_match(s, full).size(), 1u);
  full.entity = "F";
  EXPECT_TRUE(kg_match(s, full).empty());

  EXPECT_TRUE(kg_match(TripleStore{}, p).empty());
  EXPECT_THROW(kg_match(s, TriplePattern{}), Error);
}

TEST(TripleStoreTest, MatchAgreesWithScan) {
  for_all(200, 47, [](Gen& g, std::size_t) {
    TripleStore s;
    for (std::size_t i = g.index(0, 30); i > 0; --i) {
      s.insert({g.word(3, 1), "r" + g.word(2, 1), g.word(3, 1)});
    }
    TriplePattern p;
    if (g.coin()) p.parent = g.word(3, 1);
    if (g.coin()) p.relation = "r" + g.word(2, 1);
    if (g.coin() || p.bound_slots() == 0) p.entity = g.word(3, 1);
    std::vector<Triple> expected;
    for (const auto& t : s.triples()) {
      if (p.matches(t)) expected.push_back(t);
    }
    const auto got = kg_match(s, p);
    EXPECT_EQ(got, expected);
    for (const auto& t : got) EXPECT_TRUE(s.contains(t));
  });
}

TEST(TripleStoreTest, LoadsTsv) {
  std::istringstream in("# comment\nA\tlikes\tB\n\nB\tknows\tC\n");
  const auto s = TripleStore::load_tsv(in);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains({"B", "knows", "C"}));

  std::istringstream bad("A\tlikes\tB\nbroken line\n");
  try {
    TripleStore::load_tsv(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFormat);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(LocalGraphTest, ExpandAddsOutgoingTriples) {
  const auto s = toy_graph();
  const auto local = kg_expand_local(LocalGraph{}, s, "A");
  EXPECT_EQ(local.size(), 3u);
  TriplePattern p;
  p.parent = "A";
  p.relation = "likes";
  EXPECT_EQ(kg_match(local.graph(), p), kg_match(s, p));
}

TEST(LocalGraphTest, ExpandIsIdempotentAndLeafSafe) {
  const auto s = toy_graph();
  const auto once = kg_expand_local(LocalGraph{}, s, "A");
  const auto twice = kg_expand_local(once, s, "A");
  EXPECT_EQ(once.graph().triples(), twice.graph().triples());
  const auto leaf = kg_expand_local(once, s, "E");
  EXPECT_EQ(leaf.graph().triples(), once.graph().triples());
  EXPECT_THROW(kg_expand_local(once, s, "nobody"), Error);
}

TEST(LocalGraphTest, StaysInsideStore) {
  for_all(100, 53, [](Gen& g, std::size_t) {
    TripleStore s;
    for (std::size_t i = g.index(1, 25); i > 0; --i) s.insert({g.word(3, 1), "r", g.word(3, 1)});
    const std::vector<std::string> entities(s.entities().begin(), s.entities().end());
    LocalGraph local;
    for (std::size_t i = g.index(1, 6); i > 0; --i) {
      local = kg_expand_local(local, s, entities[g.index(0, entities.size() - 1)]);
    }
    for (const auto& t : local.graph().triples()) EXPECT_TRUE(s.contains(t));
  });
}

TEST(TripleRetrieverTest, ReturnsTripleCandidates) {
  auto s = std::make_shared<const TripleStore>(toy_graph());
  const TripleRetriever r(s);
  TriplePattern p;
  p.relation = "likes";
  const auto c = r.retrieve(Key::pattern(p));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(std::get<Triple>(c[0].value), (Triple{"A", "likes", "B"}));
}

}  // namespace
}  // namespace artk
