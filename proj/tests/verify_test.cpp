#include <gtest/gtest.h>

#include <set>

#include "cutscope/verify.hpp"

using namespace cutscope;

TEST(Verify, EveryClaimAppearsOnceAndNothingFails) {
  const VerificationLedger ledger = run_verification("all");
  std::set<std::string> ids;
  for (const auto& r : ledger.records) {
    EXPECT_TRUE(ids.insert(r.id).second) << r.id;
    EXPECT_NE(r.status, ClaimStatus::fail) << r.id << ": " << r.details;
  }
  EXPECT_EQ(ids.size(), detail::registry().size());
  EXPECT_FALSE(ledger.any_failed());
}

TEST(Verify, SuitesPartitionTheRegistry) {
  std::size_t total = 0;
  for (const auto& suite : verify_suites())
    if (suite != "all") total += run_verification(suite).records.size();
  EXPECT_EQ(total, detail::registry().size());
}

TEST(Verify, ExpectedAdjudications) {
  std::set<std::string> adjudicated;
  for (const auto& r : run_verification("all").records)
    if (r.status == ClaimStatus::adjudicated) adjudicated.insert(r.id);
  EXPECT_EQ(adjudicated, (std::set<std::string>{"sum.forest-shift", "cycle.beta2-base", "cycle.closed-index"}));
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_verification("everything"), Error); }

TEST(Verify, LibraryErrorsBecomeFailures) {
  VerifyOptions opt;
  opt.element_budget = 3;
  const VerificationLedger ledger = run_verification("cycle", opt);
  EXPECT_TRUE(ledger.any_failed());
}
