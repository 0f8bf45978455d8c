#include "listfold/certificate.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include <json.hpp>

namespace listfold {
namespace {

using ::testing::HasSubstr;

class Lemma1Certificate : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { result_ = new Lemma1Result(verify_lemma1(FoldParams::of(1), Budget::seconds(60))); }
  static void TearDownTestSuite() { delete result_; }
  static Lemma1Result* result_;
};
Lemma1Result* Lemma1Certificate::result_ = nullptr;

TEST_F(Lemma1Certificate, StatusIsVerified) { EXPECT_EQ(lemma1_status(*result_), ClaimStatus::kVerified); }

TEST_F(Lemma1Certificate, ReValidatesOffline) {
  const auto check = check_certificate(lemma1_certificate_json(*result_));
  EXPECT_TRUE(check.accepted) << check.reason;
  EXPECT_EQ(check.kind, "lemma1");
  EXPECT_THAT(check.log, ::testing::Contains(HasSubstr("witness of loose accepted")));
  EXPECT_THAT(check.log, ::testing::Contains(HasSubstr("tight: UNSAT (search-attested)")));
}

TEST_F(Lemma1Certificate, IsByteIdenticalAcrossRuns) {
  const auto again = verify_lemma1(FoldParams::of(1), Budget::seconds(60));
  EXPECT_EQ(lemma1_certificate_json(again), lemma1_certificate_json(*result_));
  EXPECT_THAT(lemma1_certificate_json(*result_), ::testing::Not(HasSubstr("wall_ms")));
  EXPECT_THAT(lemma1_stats_json(*result_), HasSubstr("wall_ms"));
}

TEST_F(Lemma1Certificate, TamperedWitnessIsRejected) {
  auto doc = nlohmann::ordered_json::parse(lemma1_certificate_json(*result_));
  auto& w = doc["loose"]["witness"]["phi"];
  w["x1"] = w["u"];
  const auto check = check_certificate(doc.dump());
  EXPECT_FALSE(check.accepted);
  EXPECT_THAT(check.reason, HasSubstr("witness rejected"));
}

TEST_F(Lemma1Certificate, TamperedListsAreRejected) {
  auto doc = nlohmann::ordered_json::parse(lemma1_certificate_json(*result_));
  doc["tight"]["lists"]["lists"]["w"].push_back("E:0");
  EXPECT_FALSE(check_certificate(doc.dump()).accepted);
}

TEST_F(Lemma1Certificate, WrongEpsilonIsRejected) {
  auto doc = nlohmann::ordered_json::parse(lemma1_certificate_json(*result_));
  doc["epsilon"] = "1/17";
  EXPECT_THAT(check_certificate(doc.dump()).reason, HasSubstr("epsilon"));
}

TEST_F(Lemma1Certificate, ClaimedVerifiedWithWrongVerdictIsRejected) {
  auto doc = nlohmann::ordered_json::parse(lemma1_certificate_json(*result_));
  doc["tight"]["verdict"] = "TIMEOUT";
  EXPECT_FALSE(check_certificate(doc.dump()).accepted);
}

TEST(Lemma1Status, TimeoutIsInconclusiveAndOppositeIsRefuted) {
  Lemma1Result r;
  r.params = FoldParams::of(1);
  r.tight.verdict = Verdict::kTimeout;
  r.loose.verdict = Verdict::kSat;
  EXPECT_EQ(lemma1_status(r), ClaimStatus::kInconclusive);
  r.tight.verdict = Verdict::kSat;
  EXPECT_EQ(lemma1_status(r), ClaimStatus::kRefuted);
}

TEST(Theorem1Certificate, ExhaustiveReValidates) {
  const auto c = verify_theorem1(FoldParams::of(1), Theorem1Mode::kExhaustive, Budget::seconds(60));
  EXPECT_EQ(theorem1_status(c), ClaimStatus::kVerified);
  const auto check = check_certificate(theorem1_certificate_json(c));
  EXPECT_TRUE(check.accepted) << check.reason;
  EXPECT_THAT(theorem1_markdown(c), HasSubstr("blocked"));
}

TEST(Theorem1Certificate, RepresentativeReValidates) {
  const auto c = verify_theorem1(FoldParams::of(1), Theorem1Mode::kRepresentative, Budget::seconds(60));
  const auto check = check_certificate(theorem1_certificate_json(c));
  EXPECT_TRUE(check.accepted) << check.reason;
  EXPECT_THAT(check.log, ::testing::Contains(HasSubstr("9 relabeling bijections")));
}

TEST(Theorem1Certificate, TamperedCountsAndBijectionsAreRejected) {
  const auto c = verify_theorem1(FoldParams::of(1), Theorem1Mode::kRepresentative, Budget::seconds(60));
  auto doc = nlohmann::ordered_json::parse(theorem1_certificate_json(c));
  auto bad = doc;
  bad["copies"] = "8";
  EXPECT_FALSE(check_certificate(bad.dump()).accepted);
  bad = doc;
  std::swap(bad["relabeling"][4]["x_perm"][0], bad["relabeling"][4]["x_perm"][1]);
  EXPECT_FALSE(check_certificate(bad.dump()).accepted);
  bad = doc;
  bad["pairs"][0]["verdict"] = "SAT";
  EXPECT_FALSE(check_certificate(bad.dump()).accepted);
}

TEST(CheckCertificate, MalformedInput) {
  EXPECT_THAT(check_certificate("{").reason, HasSubstr("malformed"));
  EXPECT_THAT(check_certificate(R"({"kind":"other"})").reason, HasSubstr("unknown certificate kind"));
}

TEST(Sweep, EmptyRangeIsJustAHeader) {
  EXPECT_EQ(sweep_to_csv(std::vector<SweepRow>{}, false), "m,e_size,list_size,tight,loose\n");
}

TEST(Sweep, RowsForSmallM) {
  std::vector<SweepRow> rows;
  for (int m = 1; m <= 2; ++m) rows.push_back(sweep_row(verify_lemma1(FoldParams::of(m), Budget::seconds(300))));
  EXPECT_EQ(sweep_to_csv(rows, false), "m,e_size,list_size,tight,loose\n1,0,3,UNSAT,SAT\n2,0,6,UNSAT,SAT\n");
  EXPECT_THAT(sweep_to_markdown(rows, true), HasSubstr("time (ms)"));
}

TEST(Sweep, ESizeIsZeroUpToSeventeen) {
  for (int m = 1; m <= 17; ++m) {
    Lemma1Result r;
    r.params = FoldParams::of(m);
    const auto row = sweep_row(r);
    EXPECT_EQ(row.e_size, 0);
    EXPECT_EQ(row.list_size, 3 * m);
  }
}

}  // namespace
}  // namespace listfold
