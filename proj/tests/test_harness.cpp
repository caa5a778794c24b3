#include <gtest/gtest.h>

#include "qtile/harness.hpp"

using namespace qtile;

TEST(Reports, JsonShape) {
  VerificationReport rep = verify_kamioka(BoxBounds{1, 1, 1});
  EXPECT_TRUE(rep.pass);
  nlohmann::json j = rep.to_json(false);
  EXPECT_EQ(j.dump(), R"({"identity":"kamioka","millis":0,"params":{"c":1,"n":1,"r":1},"status":"pass"})");
  EXPECT_FALSE(j.contains("witness"));
}

TEST(Reports, FailureCarriesBothSides) {
  VerificationReport rep = verify_recurrence(BoxBounds{1, 1, 1}, RecurrenceForm::AsPrinted);
  EXPECT_FALSE(rep.pass);
  ASSERT_TRUE(rep.witness.has_value());
  EXPECT_TRUE(rep.witness->contains("lhs"));
  EXPECT_TRUE(rep.witness->contains("rhs"));
  EXPECT_TRUE((*rep.witness)["lhs"].contains("num"));
  EXPECT_EQ(rep.to_json()["status"], "fail");
}

TEST(Verify, SmallBoxes) {
  for (auto b : box_grid(BoxBounds{2, 2, 2})) {
    EXPECT_TRUE(verify_kamioka(b).pass) << to_string(b);
    EXPECT_TRUE(verify_macmahon(b).pass) << to_string(b);
    EXPECT_TRUE(verify_lemma(b).pass) << to_string(b);
    EXPECT_TRUE(verify_proof_chain(b).pass) << to_string(b);
  }
  EXPECT_EQ(verify_macmahon(BoxBounds{2, 2, 2}).params["count"], "20");
  EXPECT_TRUE(verify_stanley(1, 1, 3).pass);
  EXPECT_TRUE(verify_stanley(2, 3, 0).pass);
  EXPECT_TRUE(verify_kuo(BoxBounds{2, 2, 2}).pass);
  EXPECT_TRUE(verify_kuo_grid(0, 5).pass);
}

TEST(Verify, AsPrintedChainStopsAtLemma) {
  VerificationReport rep = verify_proof_chain(BoxBounds{1, 1, 1}, ChainForm::AsPrinted);
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ((*rep.witness)["step"], "lemma");
  // No diagonal, no discrepancy.
  EXPECT_TRUE(verify_proof_chain(BoxBounds{0, 2, 2}, ChainForm::AsPrinted).pass);
}

TEST(Verify, GridCasesDependOnSeedAndIndexOnly) {
  EXPECT_EQ(verify_kuo_grid(3, 7).params, verify_kuo_grid(3, 7).params);
  EXPECT_EQ(verify_kuo_grid(3, 7).to_json(false), verify_kuo_grid(3, 7).to_json(false));
}

TEST(BoxGrid, Order) {
  auto g = box_grid(BoxBounds{1, 2, 1});
  ASSERT_EQ(g.size(), 12u);
  EXPECT_EQ(g.front(), (BoxBounds{0, 0, 0}));
  EXPECT_EQ(g[1], (BoxBounds{0, 0, 1}));
  EXPECT_EQ(g.back(), (BoxBounds{1, 2, 1}));
  EXPECT_EQ(box_grid(BoxBounds{3, 3, 3}, true).size(), 27u);
  EXPECT_TRUE(box_grid(BoxBounds{0, 3, 3}, true).empty());
}

TEST(Campaign, OrderStableAcrossJobCounts) {
  std::vector<Task> tasks;
  for (auto b : box_grid(BoxBounds{2, 2, 1})) tasks.push_back([b] { return verify_kamioka(b); });
  tasks.push_back([]() -> VerificationReport { throw std::runtime_error("boom"); });
  std::vector<std::string> serial, parallel;
  run_campaign(tasks, 1, [&](const VerificationReport& r) { serial.push_back(r.to_json(false).dump()); });
  run_campaign(tasks, 4, [&](const VerificationReport& r) { parallel.push_back(r.to_json(false).dump()); });
  EXPECT_EQ(serial, parallel);
  ASSERT_EQ(serial.size(), tasks.size());
  EXPECT_NE(serial.back().find("boom"), std::string::npos);
  EXPECT_NE(serial.back().find("\"fail\""), std::string::npos);
  run_campaign({}, 3, [](const VerificationReport&) { FAIL(); });
}
