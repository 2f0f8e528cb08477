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

#include "typogen/eval_stats.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "test_util.h"
#include "typogen/dataset_emitter.h"
#include "typogen/error.h"
#include "typogen/random.h"

namespace typogen {
namespace {

std::vector<std::vector<std::string>> ReadCsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string Csv(void (*write)(const StatsReport&, std::ostream&), const StatsReport& r) {
  std::ostringstream out;
  write(r, out);
  return out.str();
}

EditRecord Edit(ErrorCategory category, char original, char produced = 0) {
  EditRecord e;
  e.category = category;
  e.original = original;
  e.produced = produced;
  return e;
}

TEST(CategoryDistributionTest, Examples) {
  CategoryTally toy;
  toy.Add(ErrorCategory::kSubstitution, 2);
  toy.Add(ErrorCategory::kDeletion);
  toy.Add(ErrorCategory::kInsertion);
  EXPECT_EQ((CategoryProportions{0.5, 0.25, 0, 0.25, 0}), CategoryDistribution(toy));

  CategoryTally one;
  one.Add(ErrorCategory::kTransposition);
  EXPECT_EQ((CategoryProportions{0, 0, 0, 0, 1}), CategoryDistribution(one));

  try {
    CategoryDistribution(CategoryTally{});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::kNoEdits, e.code());
  }
}

TEST(CategoryDistributionTest, SourcesAgree) {
  const std::vector<EditScript> scripts = {
      {ClassifiedEdit::Substitution(0, 'a', 's'), ClassifiedEdit::Deletion(2, 't')},
      {ClassifiedEdit::Transposition(1, 'h', 'e')}};
  const std::vector<EditRecord> edits = {Edit(ErrorCategory::kSubstitution, 'a', 's'),
                                         Edit(ErrorCategory::kDeletion, 't'),
                                         Edit(ErrorCategory::kTransposition, 'h', 'e')};
  ErrorCounts counts;
  for (const EditScript& s : scripts) {
    for (const ClassifiedEdit& e : s) counts.AddEdit(e);
  }
  EXPECT_EQ(CategoryTally::FromScripts(scripts), CategoryTally::FromEdits(edits));
  EXPECT_EQ(CategoryTally::FromScripts(scripts), CategoryTally::FromCounts(counts));
}

TEST(CategoryDistributionTest, SeedIsDominatedBySubInsDel) {
  const CategoryProportions p =
      CategoryDistribution(CategoryTally::FromCounts(testing::SeedCounts().counts));
  EXPECT_GE(p[0] + p[1] + p[3], 0.75);
  double sum = 0;
  for (double x : p) sum += x;
  EXPECT_NEAR(1.0, sum, 1e-9);
}

TEST(WordRateTest, Examples) {
  EXPECT_EQ(0.0, CorruptedWordRate({{"a", "b"}}, {{"a", "b"}}));
  EXPECT_EQ(0.5, CorruptedWordRate({{"a", "b"}, {"c", "d"}}, {{"a", "x"}, {"", "d"}}));
  EXPECT_EQ(0.0, CorruptedWordRate({}, {}));
  try {
    CorruptedWordRate({{"a", "b"}}, {{"a"}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::kAlignmentViolation, e.code());
  }
}

TEST(WordRateTest, EqualsPositiveLabelFraction) {
  Rng rng = Rng::ForStream(3, 3);
  WordTally tally;
  uint64_t positives = 0;
  uint64_t tokens = 0;
  for (int d = 0; d < 500; ++d) {
    Tokens original;
    Tokens final_tokens;
    for (std::size_t i = rng.Below(8); i > 0; --i) {
      original.push_back(std::string(1 + rng.Below(3), static_cast<char>('a' + rng.Below(3))));
      switch (rng.Below(3)) {
        case 0: final_tokens.push_back(original.back()); break;
        case 1: final_tokens.push_back(""); break;
        default: final_tokens.push_back(std::string(1 + rng.Below(3), 'a')); break;
      }
    }
    tally.AddDocument(original, final_tokens);
    for (const LabeledToken& t : Emit(original, final_tokens).tokens) positives += t.label;
    tokens += original.size();
  }
  EXPECT_EQ(tokens, tally.tokens);
  EXPECT_EQ(positives, tally.corrupted);
  EXPECT_EQ(static_cast<double>(positives) / tokens, tally.rate());
}

TEST(BleuTest, HandComputedExample) {
  // p1 = 5/5, p2 = 3/4, p3 = 2/3, p4 = 1/2; c = 5, r = 6.
  const double want = std::exp(1.0 - 6.0 / 5.0) * std::pow(1.0 * 0.75 * (2.0 / 3.0) * 0.5, 0.25);
  EXPECT_NEAR(want, CorpusBleu({Tokenize("the cat sat on the mat")},
                               {Tokenize("the cat sat on mat")}),
              1e-12);
  // Unigram clipping: "the" counts at most twice.
  EXPECT_NEAR(2.0 / 7.0, CorpusBleu({Tokenize("the cat is on the mat")},
                                    {Tokenize("the the the the the the the")}, 1),
              1e-12);
}

TEST(BleuTest, IdentityIsOne) {
  const std::vector<Tokens>& docs = testing::CleanReviews();
  const std::vector<Tokens> some(docs.begin(), docs.begin() + 500);
  EXPECT_DOUBLE_EQ(1.0, CorpusBleu(some, some));
  EXPECT_DOUBLE_EQ(1.0, CorpusBleu({Tokenize("a b c d e")}, {Tokenize("a b c d e")}));
}

TEST(BleuTest, NoFourGramMatchIsZero) {
  EXPECT_EQ(0.0, CorpusBleu({Tokenize("a b c d")}, {Tokenize("a b c e")}));
  EXPECT_EQ(0.0, CorpusBleu({Tokenize("a b")}, {Tokenize("a b")}));
  EXPECT_EQ(0.0, CorpusBleu({Tokenize("a b")}, {Tokens{}}));
}

TEST(BleuTest, CorpusLevelNotAveraged) {
  // Per-sentence scores would be 1 and 0; pooled counts give neither.
  const double bleu = CorpusBleu({Tokenize("a b c d"), Tokenize("e f g h")},
                                 {Tokenize("a b c d"), Tokenize("e f g x")});
  EXPECT_NEAR(std::pow((7.0 / 8) * (5.0 / 6) * (3.0 / 4) * (1.0 / 2), 0.25), bleu, 1e-12);
}

TEST(BleuTest, InvariantUnderDocumentReordering) {
  const std::vector<Tokens>& docs = testing::CleanReviews();
  std::vector<Tokens> refs(docs.begin(), docs.begin() + 300);
  std::vector<Tokens> cands = refs;
  Rng rng = Rng::ForStream(1, 2);
  for (Tokens& doc : cands) {
    for (std::string& t : doc) {
      if (rng.Bernoulli(0.3)) t += "x";
    }
  }
  const double before = CorpusBleu(refs, cands);
  std::vector<std::size_t> order(refs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size() - 1; i > 0; --i) std::swap(order[i], order[rng.Below(i + 1)]);
  std::vector<Tokens> r2;
  std::vector<Tokens> c2;
  for (std::size_t i : order) {
    r2.push_back(refs[i]);
    c2.push_back(cands[i]);
  }
  EXPECT_DOUBLE_EQ(before, CorpusBleu(r2, c2));
  EXPECT_GT(before, 0.0);
  EXPECT_LT(before, 1.0);
}

TEST(BleuTest, MergedStatsEqualSequential) {
  const std::vector<Tokens>& docs = testing::CleanReviews();
  BleuStats all;
  BleuStats first;
  BleuStats second;
  for (std::size_t d = 0; d < 200; ++d) {
    Tokens cand = docs[d];
    if (!cand.empty()) cand.pop_back();
    all.AddSentence(docs[d], cand);
    (d < 77 ? first : second).AddSentence(docs[d], cand);
  }
  first.Merge(second);
  EXPECT_EQ(all.matches, first.matches);
  EXPECT_EQ(all.totals, first.totals);
  EXPECT_EQ(all.Score(), first.Score());
}

TEST(BleuTest, Errors) {
  try {
    CorpusBleu({}, {});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::kEmptyCorpus, e.code());
  }
  try {
    CorpusBleu({{"a"}}, {{"a"}, {"b"}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::kAlignmentViolation, e.code());
  }
}

StatsReport ToyReport() {
  StatsReport r(Alphabet("abc"));
  r.AddEdit(Edit(ErrorCategory::kSubstitution, 'a', 'b'));
  r.AddEdit(Edit(ErrorCategory::kSubstitution, 'a', 'c'));
  r.AddEdit(Edit(ErrorCategory::kSubstitution, 'a', 'c'));
  r.AddEdit(Edit(ErrorCategory::kSubstitution, 'b', 'a'));
  r.AddEdit(Edit(ErrorCategory::kDeletion, 'c'));
  EditRecord ins = Edit(ErrorCategory::kInsertion, 'a', 'b');
  r.AddEdit(ins);
  return r;
}

TEST(ExportTest, ToyTables) {
  const StatsReport r = ToyReport();
  EXPECT_EQ(
      "category,count,proportion\n"
      "substitution,4,0.6666666666666666\n"
      "insertion,1,0.16666666666666666\n"
      "replication,0,0\n"
      "deletion,1,0.16666666666666666\n"
      "transposition,0,0\n",
      Csv(WriteCategoryCsv, r));
  EXPECT_EQ("char,count,proportion\na,3,0.75\nb,1,0.25\nc,0,0\n", Csv(WriteSubstitutionCsv, r));
  EXPECT_EQ("char,count,proportion\na,0,0\nb,1,1\nc,0,0\n", Csv(WriteInsertionCsv, r));
  EXPECT_EQ("char,count,proportion\na,0,0\nb,0,0\nc,1,1\n", Csv(WriteDeletionCsv, r));
  EXPECT_EQ("from,a,b,c\na,0,0.3333333333333333,0.6666666666666666\nb,1,0,0\nc,0,0,0\n",
            Csv(WriteSubstitutionMatrixCsv, r));
}

TEST(ExportTest, WritesFiveFiles) {
  testing::ScratchDir dir("export");
  const auto paths = ExportTables(ToyReport(), dir.path() / "tables");
  ASSERT_EQ(5u, paths.size());
  for (const auto& p : paths) EXPECT_TRUE(std::filesystem::exists(p)) << p;
  EXPECT_EQ(Csv(WriteSubstitutionMatrixCsv, ToyReport()),
            testing::ReadFile(dir.path() / "tables" / "substitution_matrix.csv"));
}

TEST(ExportTest, EmptyAlphabetGivesHeadersOnly) {
  const StatsReport r{Alphabet("")};
  EXPECT_EQ("char,count,proportion\n", Csv(WriteInsertionCsv, r));
  EXPECT_EQ("char,count,proportion\n", Csv(WriteDeletionCsv, r));
  EXPECT_EQ("char,count,proportion\n", Csv(WriteSubstitutionCsv, r));
  EXPECT_EQ("from\n", Csv(WriteSubstitutionMatrixCsv, r));
  EXPECT_EQ("category,count,proportion\n", Csv(WriteCategoryCsv, r));
}

TEST(ExportTest, SeedTablesAreNormalized) {
  const StatsReport r = StatsReport::FromCounts(testing::SeedCounts().counts);
  const auto matrix = ReadCsv(Csv(WriteSubstitutionMatrixCsv, r));
  ASSERT_EQ(27u, matrix.size());
  for (std::size_t i = 1; i < matrix.size(); ++i) {
    ASSERT_EQ(27u, matrix[i].size());
    double sum = 0;
    for (std::size_t j = 1; j < matrix[i].size(); ++j) sum += std::stod(matrix[i][j]);
    const char from = matrix[i][0][0];
    if (r.substituted[r.alphabet.IndexOf(from)] > 0) {
      EXPECT_NEAR(1.0, sum, 1e-6) << from;
    } else {
      EXPECT_EQ(0.0, sum) << from;
    }
  }
  for (auto write : {WriteInsertionCsv, WriteDeletionCsv, WriteSubstitutionCsv, WriteCategoryCsv}) {
    const auto rows = ReadCsv(Csv(write, r));
    double sum = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) sum += std::stod(rows[i][2]);
    EXPECT_NEAR(1.0, sum, 1e-9);
  }
}

TEST(StatsReportTest, MergeEqualsSequential) {
  const std::vector<EditRecord> edits = {
      Edit(ErrorCategory::kSubstitution, 'a', 'b'), Edit(ErrorCategory::kDeletion, 'c'),
      Edit(ErrorCategory::kReplication, 'a', 'a'), Edit(ErrorCategory::kInsertion, 'b', 'z'),
      Edit(ErrorCategory::kTransposition, 'a', 'b')};
  StatsReport all;
  StatsReport left;
  StatsReport right;
  for (std::size_t i = 0; i < edits.size(); ++i) {
    all.AddEdit(edits[i]);
    (i % 2 ? left : right).AddEdit(edits[i]);
  }
  left.Merge(right);
  EXPECT_EQ(all, left);
}

}  // namespace
}  // namespace typogen
