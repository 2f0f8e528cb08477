// Copyright 2026 The Typogen Authors
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

#include "typogen/error_generator.h"

#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "test_util.h"
#include "typogen/error.h"
#include "typogen/random.h"

namespace typogen {
namespace {

using testing::SeedModel;

GenerationConfig ConfigWith(Coefficients coefficients, uint64_t seed = 1) {
  GenerationConfig config;
  config.coefficients = coefficients;
  config.seed = seed;
  return config;
}

std::vector<Tokens> RandomDocuments(std::size_t count, uint64_t seed) {
  Rng rng = Rng::ForStream(seed, 0);
  const std::string chars = "abcdefghijklmnopqrstuvwxyz'.,!0";
  std::vector<Tokens> docs(count);
  for (Tokens& doc : docs) {
    const std::size_t words = 1 + rng.Below(12);
    for (std::size_t w = 0; w < words; ++w) {
      std::string token;
      const std::size_t len = 1 + rng.Below(9);
      for (std::size_t i = 0; i < len; ++i) token.push_back(chars[rng.Below(chars.size())]);
      doc.push_back(token);
    }
  }
  return docs;
}

TEST(GenerationConfigTest, Validate) {
  GenerationConfig config;
  EXPECT_NO_THROW(config.Validate());
  for (double bad : {-1.0, std::numeric_limits<double>::infinity(), std::nan("")}) {
    config.coefficients = Coefficients::Uniform(1.0);
    config.coefficients.weights[2] = bad;
    EXPECT_THROW(config.Validate(), Error) << bad;
  }
  config.coefficients = Coefficients::Uniform(1.0);
  for (const char* bad : {"", "<U NK>", "\t"}) {
    config.placeholder = bad;
    EXPECT_THROW(config.Validate(), Error) << bad;
  }
}

TEST(TokenizeTest, SplitsOnWhitespace) {
  EXPECT_EQ((Tokens{"the", "cat,", "sat"}), Tokenize("  the\tcat,  sat\r\n"));
  EXPECT_TRUE(Tokenize(" \t ").empty());
  EXPECT_EQ("a <UNK> b", JoinTokens({"a", "", "b"}, "<UNK>"));
  EXPECT_EQ("a  b", JoinTokens({"a", "", "b"}));
}

TEST(CleanCorpusTest, Examples) {
  const Lexicon lexicon = testing::MakeLexicon({{"the", 5}, {"cat", 2}, {"sat", 1}});
  const CleanResult kept = CleanCorpus({Tokenize("the cat sat")}, lexicon);
  ASSERT_EQ(1u, kept.kept.size());
  EXPECT_TRUE(kept.rejections.empty());

  const CleanResult dropped = CleanCorpus({Tokenize("the qzx sat")}, lexicon);
  EXPECT_TRUE(dropped.kept.empty());
  ASSERT_EQ(1u, dropped.rejections.size());
  EXPECT_EQ("qzx", dropped.rejections[0].token);

  const CleanResult none = CleanCorpus({}, lexicon);
  EXPECT_TRUE(none.kept.empty());
  EXPECT_TRUE(none.rejections.empty());
}

TEST(CleanCorpusTest, LowercasesAndIgnoresPunctuation) {
  const Lexicon lexicon = testing::MakeLexicon({{"the", 5}, {"cat", 2}});
  const CleanResult r = CleanCorpus(
      {Tokenize("The CAT! 42 ..."), Tokenize("the cat's"), Tokenize("")}, lexicon);
  ASSERT_EQ(2u, r.kept.size());
  EXPECT_EQ((Tokens{"the", "cat!", "42", "..."}), r.kept[0]);
  EXPECT_EQ((std::vector<std::size_t>{0, 2}), r.kept_indices);
  ASSERT_EQ(1u, r.rejections.size());
  EXPECT_EQ(1u, r.rejections[0].doc);
}

TEST(EditRecordTest, DetailAndTsvRoundTrip) {
  std::vector<EditRecord> records = {
      {0, 1, 2, ErrorCategory::kSubstitution, 'a', 's', InsertionSide::kBefore},
      {3, 0, 0, ErrorCategory::kInsertion, 'a', 'x', InsertionSide::kBefore},
      {3, 0, 1, ErrorCategory::kInsertion, 'a', 'x', InsertionSide::kAfter},
      {7, 2, 4, ErrorCategory::kReplication, 'l', 'l', InsertionSide::kBefore},
      {9, 9, 9, ErrorCategory::kDeletion, 'q', 0, InsertionSide::kBefore},
      {1, 1, 0, ErrorCategory::kTransposition, 'a', 'b', InsertionSide::kBefore},
  };
  const std::vector<std::string> details = {"a>s", "before:a:x", "after:a:x", "ll", "q",
                                            "ab>ba"};
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(details[i], records[i].Detail());
    EditRecord back = EditRecord::FromTsv(records[i].ToTsv());
    if (records[i].category == ErrorCategory::kReplication) {
      EXPECT_EQ('l', back.produced);
      back.side = records[i].side;
    }
    EXPECT_EQ(records[i], back) << records[i].ToTsv();
  }
  EXPECT_EQ("0\t1\t2\tsubstitution\ta>s", records[0].ToTsv());
}

TEST(EditRecordTest, RejectsMalformedLines) {
  for (const char* bad : {"", "0\t1\t2\tsubstitution", "0\t1\t2\tsubstitution\ta>s\textra",
                          "x\t1\t2\tdeletion\ta", "0\t1\t2\ttypo\ta", "0\t1\t2\tdeletion\tab",
                          "0\t1\t2\ttransposition\tab>ab", "0\t1\t2\tinsertion\tleft:a:b",
                          "0\t1\t2\treplication\tab", "-1\t1\t2\tdeletion\ta"}) {
    try {
      EditRecord::FromTsv(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(ErrorCode::kFormat, e.code()) << bad;
    }
  }
}

TEST(ErrorGeneratorTest, ZeroCoefficientsAreIdentity) {
  const ErrorGenerator generator(SeedModel(), ConfigWith(Coefficients::Uniform(0.0)));
  const std::vector<Tokens> docs = RandomDocuments(300, 4);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const Corruption c = generator.Corrupt(docs[d], d);
    EXPECT_EQ(docs[d], c.tokens);
    EXPECT_TRUE(c.edits.empty());
  }
}

TEST(ErrorGeneratorTest, DeletingTheOnlyCharacterLeavesAnEmptyToken) {
  const NoiseModel model = NoiseModel::Induce(testing::CountsFor({{"", "a"}}));
  ASSERT_EQ((Fraction{1, 1}), model.Deletion('a'));
  const ErrorGenerator generator(model, ConfigWith(Coefficients{{0, 0, 0, 1, 0}}));
  const Corruption c = generator.Corrupt({"b", "a", "ba"}, 0);
  EXPECT_EQ((Tokens{"b", "", "b"}), c.tokens);
  ASSERT_EQ(2u, c.edits.size());
  EXPECT_EQ(ErrorCategory::kDeletion, c.edits[0].category);
  EXPECT_EQ(1u, c.edits[0].token);
  EXPECT_EQ("b <UNK> b", JoinTokens(c.tokens, kDefaultPlaceholder));
}

TEST(ErrorGeneratorTest, CertainTranspositionSwapsPairsOnce) {
  const NoiseModel model = NoiseModel::Induce(testing::CountsFor({{"ba", "ab"}}));
  const ErrorGenerator generator(model, ConfigWith(Coefficients{{0, 0, 0, 0, 1}}));
  // "abab": the first pair swaps, then the second; neither touches "ba".
  const Corruption c = generator.Corrupt({"abab", "a", "b"}, 0);
  EXPECT_EQ((Tokens{"baba", "a", "b"}), c.tokens);
  ASSERT_EQ(2u, c.edits.size());
  EXPECT_EQ(0u, c.edits[0].char_index);
  EXPECT_EQ(2u, c.edits[1].char_index);
}

TEST(ErrorGeneratorTest, NonAlphabetBytesAreNeverTouched) {
  const ErrorGenerator generator(SeedModel(), ConfigWith(Coefficients::Uniform(4.0)));
  const Tokens doc = {"12,", "!?", "<UNK>"};
  for (std::size_t d = 0; d < 50; ++d) {
    const Corruption c = generator.Corrupt(doc, d);
    EXPECT_EQ("12,", c.tokens[0]);
    EXPECT_EQ("!?", c.tokens[1]);
    for (const EditRecord& e : c.edits) EXPECT_EQ(2u, e.token);
  }
}

TEST(ErrorGeneratorTest, ReplayReproducesOutputAndEditsAreExclusive) {
  const ErrorGenerator generator(SeedModel(), ConfigWith(Coefficients::Uniform(2.0)));
  const std::vector<Tokens>& docs = testing::CleanReviews();
  std::size_t edits = 0;
  for (std::size_t d = 0; d < 2000; ++d) {
    const Corruption c = generator.Corrupt(docs[d], d);
    ASSERT_EQ(docs[d].size(), c.tokens.size());
    ASSERT_EQ(c.tokens, ReplayEdits(docs[d], c.edits));
    std::set<std::pair<std::size_t, std::size_t>> used;
    for (const EditRecord& e : c.edits) {
      EXPECT_EQ(d, e.doc);
      EXPECT_TRUE(used.insert({e.token, e.char_index}).second);
      if (e.category == ErrorCategory::kTransposition) {
        EXPECT_TRUE(used.insert({e.token, e.char_index + 1}).second);
      }
    }
    edits += c.edits.size();
  }
  EXPECT_GT(edits, 1000u);
}

TEST(ErrorGeneratorTest, ReplayRejectsForeignLogs) {
  const Tokens clean = {"cat"};
  EXPECT_THROW(ReplayEdits(clean, {{0, 0, 0, ErrorCategory::kDeletion, 'x', 0,
                                    InsertionSide::kBefore}}),
               Error);
  EXPECT_THROW(ReplayEdits(clean, {{0, 3, 0, ErrorCategory::kDeletion, 'c', 0,
                                    InsertionSide::kBefore}}),
               Error);
  EXPECT_THROW(ReplayEdits(clean, {{0, 0, 2, ErrorCategory::kTransposition, 't', 'x',
                                    InsertionSide::kBefore}}),
               Error);
}

TEST(ErrorGeneratorTest, DeterministicPerDocument) {
  const std::vector<Tokens>& docs = testing::CleanReviews();
  const ErrorGenerator a(SeedModel(), ConfigWith(Coefficients::Uniform(1.0), 9));
  const ErrorGenerator b(SeedModel(), ConfigWith(Coefficients::Uniform(1.0), 9));
  const ErrorGenerator other(SeedModel(), ConfigWith(Coefficients::Uniform(1.0), 10));
  // Each document depends only on its index, so visiting order is irrelevant.
  std::vector<Corruption> forward;
  for (std::size_t d = 0; d < 300; ++d) forward.push_back(a.Corrupt(docs[d], d));
  std::size_t differ = 0;
  for (std::size_t k = 0; k < 300; ++k) {
    const std::size_t d = 299 - k;
    const Corruption again = b.Corrupt(docs[d], d);
    EXPECT_EQ(forward[d].tokens, again.tokens);
    EXPECT_EQ(forward[d].edits, again.edits);
    differ += other.Corrupt(docs[d], d).tokens != again.tokens;
  }
  EXPECT_GT(differ, 50u);
}

// Proportions of edits by category when corrupting the seed's own correct
// words with the seed model at unit weights.
TEST(ErrorGeneratorTest, UniformWeightsReproduceSeedCategoryMix) {
  const AccumulateResult& seed = testing::SeedCounts();
  const ErrorGenerator generator(SeedModel(), ConfigWith(Coefficients::Uniform(1.0), 3));
  std::array<uint64_t, kNumCategories> observed = {};
  uint64_t total = 0;
  std::size_t doc = 0;
  for (int pass = 0; pass < 3; ++pass) {
    for (const TypoPair& p : testing::SeedPairs().pairs) {
      if (OsaDistance(p.correct, p.typo) > 4) continue;
      for (const EditRecord& e : generator.Corrupt({p.correct}, doc++).edits) {
        ++observed[CategoryIndex(e.category)];
        ++total;
      }
    }
  }
  const uint64_t seed_total = seed.counts.TotalEdits();
  for (ErrorCategory k : kAllCategories) {
    const double want = static_cast<double>(seed.counts.CategoryTotal(k)) / seed_total;
    const double got = static_cast<double>(observed[CategoryIndex(k)]) / total;
    EXPECT_NEAR(want, got, 0.02) << CategoryName(k);
  }
}

int64_t LengthDrift(const NoiseModel& model, const std::vector<Tokens>& docs) {
  const ErrorGenerator generator(model, ConfigWith(Coefficients::Uniform(1.0), 5));
  int64_t drift = 0;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (const EditRecord& e : generator.Corrupt(docs[d], d).edits) {
      if (e.category == ErrorCategory::kInsertion ||
          e.category == ErrorCategory::kReplication) {
        ++drift;
      } else if (e.category == ErrorCategory::kDeletion) {
        --drift;
      }
    }
  }
  return drift;
}

TEST(ErrorGeneratorTest, LengthDriftFollowsLengtheningMass) {
  const std::vector<Tokens>& docs = testing::CleanReviews();
  const NoiseModel& seed = SeedModel();
  const ErrorCounts& counts = seed.counts();
  const int64_t lengthening = counts.CategoryTotal(ErrorCategory::kInsertion) +
                              counts.CategoryTotal(ErrorCategory::kReplication);
  const int64_t shortening = counts.CategoryTotal(ErrorCategory::kDeletion);
  const int64_t drift = LengthDrift(seed, docs);
  // The bundled seed deletes more than it inserts, so text gets shorter.
  ASSERT_LT(lengthening, shortening);
  EXPECT_LT(drift, 0);

  const NoiseModel inserting = NoiseModel::Induce(testing::CountsFor(
      {{"thhe", "the"}, {"cart", "cat"}, {"dogg", "dog"}, {"th", "the"}, {"the", "the"}}));
  EXPECT_GT(LengthDrift(inserting, {Tokenize("the cat and the dog the end")}) +
                LengthDrift(inserting, std::vector<Tokens>(500, Tokenize("the cat the dog"))),
            0);
}

TEST(ErrorGeneratorTest, MoreWeightMeansMoreEdits) {
  const std::vector<Tokens>& docs = testing::CleanReviews();
  for (std::size_t k = 0; k < kNumCategories; ++k) {
    uint64_t previous = 0;
    for (double w : {0.0, 1.0, 3.0}) {
      Coefficients c = Coefficients::Uniform(0.5);
      c.weights[k] = w;
      const ErrorGenerator generator(SeedModel(), ConfigWith(c, 11));
      uint64_t edits = 0;
      for (std::size_t d = 0; d < 1500; ++d) edits += generator.Corrupt(docs[d], d).edits.size();
      EXPECT_GT(edits, previous) << k << " " << w;
      previous = edits;
    }
  }
}

}  // namespace
}  // namespace typogen
