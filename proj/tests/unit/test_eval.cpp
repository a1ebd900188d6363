// Copyright 2026 The fallacyforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "fallacy/error.hpp"
#include "fallacy/eval/dataset.hpp"
#include "fallacy/eval/metrics.hpp"
#include "fallacy/eval/rational.hpp"
#include "fallacy/eval/report.hpp"
#include "fallacy/eval/score_stats.hpp"

namespace fallacy::eval {
namespace {

using rules::FallacyCode;
using C = FallacyCode;

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

std::pair<std::vector<BenchmarkEntry>, std::vector<Prediction>> mix(int fallacious, int benign,
                                                                    bool flag_fallacious,
                                                                    bool flag_benign) {
  std::vector<BenchmarkEntry> entries;
  std::vector<Prediction> preds;
  for (int i = 0; i < fallacious + benign; ++i) {
    const bool bad = i < fallacious;
    const std::string id = "e" + std::to_string(i);
    entries.push_back({id, "s", bad ? std::vector<C>{C::FP} : std::vector<C>{},
                       bad ? Source::kBench : Source::kBenign});
    preds.push_back({id, bad ? flag_fallacious : flag_benign, {}});
  }
  return {entries, preds};
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("2.27"), q(227, 100));
  EXPECT_EQ(parse_rational("-8/3"), q(-8, 3));
  EXPECT_EQ(to_fixed(q(8, 3), 2), "2.67");
  EXPECT_EQ(to_fixed(q(-1, 200), 2), "-0.01");
  EXPECT_EQ(to_fraction(q(6, 4)), "3/2");
  EXPECT_EQ(harmonic(3), q(11, 6));
  EXPECT_THROW((void)make_rational(1, 0), DivisionDomainError);
  EXPECT_THROW((void)parse_rational("abc"), InputError);
}

TEST(Detection, PerfectClassifier) {
  const auto [entries, preds] = mix(10, 10, true, false);
  const auto m = detection_metrics(entries, preds);
  EXPECT_EQ(m.fp_rate, 0);
  EXPECT_EQ(m.fn_rate, 0);
  EXPECT_EQ(m.f1, 1);
}

TEST(Detection, DirectFormula) {
  const auto m = metrics_from_confusion(Confusion{8, 2, 8, 2});
  EXPECT_EQ(m.precision, q(4, 5));
  EXPECT_EQ(m.recall, q(4, 5));
  EXPECT_EQ(m.f1, q(4, 5));
  EXPECT_EQ(m.fp_rate, q(1, 5));
}

TEST(Detection, AllPositiveHalfMix) {
  const auto [entries, preds] = mix(502, 502, true, true);
  const auto m = detection_metrics(entries, preds);
  EXPECT_EQ(m.counts, (Confusion{502, 502, 0, 0}));
  EXPECT_EQ(m.recall, 1);
  EXPECT_EQ(m.fp_rate, 1);
  EXPECT_EQ(m.precision, q(1, 2));
  EXPECT_EQ(m.f1, q(2, 3));
}

TEST(Detection, DegenerateDenominators) {
  const auto m = metrics_from_confusion(Confusion{});
  EXPECT_EQ(m.f1, 0);
  EXPECT_EQ(m.precision, 0);
}

TEST(Detection, MismatchedPredictions) {
  auto [entries, preds] = mix(2, 2, true, false);
  preds.pop_back();
  EXPECT_THROW((void)detection_metrics(entries, preds), MismatchError);
  preds.push_back(preds.front());
  EXPECT_THROW((void)detection_metrics(entries, preds), MismatchError);
}

TEST(Accuracy, MembershipRatioAndMultiLabel) {
  std::vector<BenchmarkEntry> entries = {
      {"a", "s", {C::FP}, Source::kBench},
      {"b", "s", {C::FS}, Source::kBench},
      {"c", "s", {C::FS}, Source::kBench},
      {"d", "s", {C::EC, C::FA}, Source::kBench},
      {"e", "s", {}, Source::kBenign},
  };
  std::vector<Prediction> preds = {
      {"a", true, {C::FP, C::EC}}, {"b", true, {C::FS}}, {"c", true, {}},
      {"d", true, {C::FA}},        {"e", false, {}},
  };
  const auto acc = per_fallacy_accuracy(entries, preds);
  EXPECT_EQ(acc.at(C::FP), 1);
  EXPECT_EQ(acc.at(C::FS), q(1, 2));
  EXPECT_EQ(acc.at(C::FA), 1);
  EXPECT_EQ(acc.at(C::EC), 0);
  EXPECT_FALSE(acc.count(C::IT));
}

TEST(Ranked, Examples) {
  EXPECT_EQ(ranked_score(std::vector<C>{C::FP}, std::vector<C>{C::FP}), 1);
  EXPECT_EQ(ranked_score(std::vector<C>{C::EC}, std::vector<C>{C::FA, C::EC}), q(-1, 2));
  std::vector<C> wrong;
  for (auto c : rules::kAllCodes) {
    if (c != C::FP) wrong.push_back(c);
  }
  EXPECT_EQ(ranked_score(std::vector<C>{C::FP}, wrong), -harmonic(13));
  EXPECT_NEAR(to_double(-harmonic(13)), -3.180134, 1e-6);
  EXPECT_EQ(ranked_score(std::vector<C>{C::FP}, std::vector<C>{}), 0);
}

TEST(Ranked, Errors) {
  EXPECT_THROW((void)ranked_score(std::vector<C>{C::FP}, std::vector<C>{C::FP, C::FP}),
               DuplicateLabelError);
  std::vector<C> all(rules::kAllCodes.begin(), rules::kAllCodes.end());
  EXPECT_THROW((void)ranked_score(std::vector<C>{C::FP}, all), PreconditionError);
}

TEST(Ranked, MeanOverFallaciousEntries) {
  std::vector<BenchmarkEntry> entries = {{"a", "s", {C::FP}, Source::kBench},
                                         {"b", "s", {C::EC}, Source::kAugmented},
                                         {"c", "s", {}, Source::kBenign}};
  std::vector<Prediction> preds = {
      {"a", true, {C::FP}}, {"b", true, {C::FA, C::EC}}, {"c", true, {C::FS}}};
  const auto r = ranked_scores(entries, preds);
  ASSERT_EQ(r.scores.size(), 2u);
  EXPECT_EQ(r.mean, q(1, 4));
}

// Reference kappa from an explicit contingency table.
Rational contingency_kappa(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::set<std::string> cats(a.begin(), a.end());
  cats.insert(b.begin(), b.end());
  std::map<std::pair<std::string, std::string>, int> table;
  for (std::size_t i = 0; i < a.size(); ++i) ++table[{a[i], b[i]}];
  const auto n = static_cast<std::int64_t>(a.size());
  Rational po = 0;
  Rational pe = 0;
  for (const auto& x : cats) {
    po += q(table[{x, x}], n);
    std::int64_t row = 0;
    std::int64_t col = 0;
    for (const auto& y : cats) {
      row += table[{x, y}];
      col += table[{y, x}];
    }
    pe += q(row, n) * q(col, n);
  }
  return pe == 1 ? Rational(1) : (po - pe) / (1 - pe);
}

TEST(Kappa, Fixtures) {
  using V = std::vector<std::string>;
  EXPECT_EQ(cohens_kappa(V{"x", "y", "z"}, V{"x", "y", "z"}), 1);
  EXPECT_EQ(cohens_kappa(V{"x", "x"}, V{"x", "x"}), 1);
  EXPECT_EQ(cohens_kappa(V{"x", "x", "y", "y"}, V{"x", "y", "x", "y"}), 0);
  EXPECT_EQ(cohens_kappa(V{"x", "x", "x", "y"}, V{"x", "x", "x", "x"}), 0);
  EXPECT_EQ(cohens_kappa(V{"x", "x", "x", "y"}, V{"x", "x", "x", "x"}),
            contingency_kappa(V{"x", "x", "x", "y"}, V{"x", "x", "x", "x"}));
  EXPECT_THROW((void)cohens_kappa(V{"x"}, V{"x", "y"}), LengthMismatchError);
  EXPECT_THROW((void)cohens_kappa(V{}, V{}), LengthMismatchError);
}

TEST(Kappa, SymmetricAndMatchesContingencyTable) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 30;
    std::vector<std::string> a;
    std::vector<std::string> b;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(std::string(1, static_cast<char>('a' + rng() % 3)));
      b.push_back(rng() % 2 ? a.back() : std::string(1, static_cast<char>('a' + rng() % 3)));
    }
    EXPECT_EQ(cohens_kappa(a, b), cohens_kappa(b, a));
    EXPECT_EQ(cohens_kappa(a, b), contingency_kappa(a, b));
  }
}

TEST(Kappa, IntegerScores) {
  EXPECT_EQ(cohens_kappa(std::vector<int>{3, 2, 3, 1}, std::vector<int>{3, 2, 3, 1}), 1);
}

TEST(LabelCount, SumsAndRanks) {
  EXPECT_EQ(label_count(std::vector<Prediction>{}), 0u);
  std::vector<Prediction> preds = {
      {"a", true, {C::FP, C::EC}}, {"b", true, {C::FA}}, {"c", false, {}}};
  EXPECT_EQ(label_count(preds), 3u);
  const auto ranked = rank_by_label_count({{"terse", 1139}, {"verbose", 1836}, {"mid", 1500}});
  EXPECT_EQ(ranked.front().model, "verbose");
  EXPECT_EQ(ranked.back().model, "terse");
}

TEST(Enhancement, Formula) {
  EXPECT_EQ(to_fixed(enhancement(q(227, 100), q(292, 100)), 2), "28.63");
  EXPECT_EQ(to_fixed(enhancement(q(178, 100), q(283, 100)), 2), "58.99");
  EXPECT_EQ(enhancement(q(2), q(2)), 0);
  EXPECT_THROW((void)enhancement(q(0), q(2)), DivisionDomainError);
}

TEST(ScoreStats, MeansAndHistogram) {
  std::vector<llm::ScoreTriple> all_three(20, llm::ScoreTriple{"s", C::AF, {3, 3, 3}});
  const auto stats = score_stats(all_three, "schema");
  EXPECT_EQ(to_fixed(stats.means.at({"schema", C::AF}), 2), "3.00");
  EXPECT_EQ(stats.histogram.at({"schema", C::AF, 3}), 60u);

  // 20 sentences, 60 scores summing to 170: 170/60 = 2.8333...
  std::vector<llm::ScoreTriple> ie;
  for (int i = 0; i < 20; ++i) {
    ie.push_back({"s", C::IE, i < 10 ? std::array<int, 3>{3, 3, 2} : std::array<int, 3>{3, 3, 3}});
  }
  const auto ie_stats = score_stats(ie, "schema");
  EXPECT_EQ(ie_stats.means.at({"schema", C::IE}), q(170, 60));
  EXPECT_EQ(to_fixed(ie_stats.means.at({"schema", C::IE}), 2), "2.83");

  const auto empty = score_stats({}, "schema");
  EXPECT_TRUE(empty.histogram.empty());
  EXPECT_TRUE(empty.means.empty());
}

TEST(ScoreStats, SummaryWithEnhanceRow) {
  auto stats = score_stats(std::vector<llm::ScoreTriple>{{"s", C::CT, {2, 2, 2}}}, "direct");
  stats.merge(score_stats(std::vector<llm::ScoreTriple>{{"s", C::CT, {3, 3, 3}}}, "schema"));
  const auto text = score_summary(stats);
  EXPECT_NE(text.find("enhance%    50.00"), std::string::npos) << text;
  const auto csv = histogram_csv(stats);
  EXPECT_EQ(csv.rfind("method,code,score,count\n", 0), 0u);
  EXPECT_NE(csv.find("schema,CT,3,3"), std::string::npos);
}

TEST(Dataset, ParseAndValidate) {
  const auto entries = parse_benchmark(
      "{\"id\":\"1\",\"sentence\":\"s\",\"labels\":[\"AC\",\"FP\"],\"source\":\"bench\"}\n"
      "\n{\"id\":\"2\",\"sentence\":\"t\",\"labels\":[],\"source\":\"benign\"}\n");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].labels, (std::vector<C>{C::AF, C::FP}));
  EXPECT_EQ(parse_benchmark(to_jsonl(entries)), entries);
  EXPECT_THROW((void)parse_benchmark(R"({"id":"1","sentence":"s","labels":[],"source":"bench"})"),
               InputError);
  EXPECT_THROW((void)parse_benchmark(R"({"id":"1","sentence":"s","labels":["FP"],"source":"benign"})"),
               InputError);
  EXPECT_THROW((void)parse_predictions(R"({"id":"1","logic_error":true,"labels":["FP","FP"]})"),
               DuplicateLabelError);
  const auto preds = parse_predictions(R"({"id":"1","logic_error":true,"labels":["FP"]})");
  EXPECT_EQ(parse_predictions(to_jsonl(preds)), preds);
}

TEST(Report, TextAndJson) {
  const auto [entries, preds] = mix(3, 3, true, false);
  auto report = build_report(entries, preds);
  EXPECT_EQ(report.fallacious_entries, 3u);
  const auto text = report_text(report);
  EXPECT_NE(text.find("f1=1.000"), std::string::npos) << text;
  const auto json = report_json(report);
  EXPECT_EQ(json["detection"]["f1"]["exact"], "1");
}

}  // namespace
}  // namespace fallacy::eval
