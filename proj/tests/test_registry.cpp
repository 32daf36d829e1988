#include <gtest/gtest.h>

#include <set>

#include "gbe/json.hpp"
#include "gbe/registry.hpp"

using namespace gbe;

TEST(Formulas, Examples) {
  EXPECT_EQ(reg_power_formula(3, 1), 2);
  EXPECT_EQ(reg_power_formula(3, 2), 4);
  EXPECT_EQ(reg_power_formula(2, 1), 1);
  EXPECT_EQ(depth_formula(3, 3), 5);
  EXPECT_EQ(depth_limit(2, 5), 6);
  EXPECT_EQ(depth_limit(4, 5), 3);
  EXPECT_EQ(analytic_spread(2, 5), 4);
  EXPECT_EQ(analytic_spread(4, 4), 13);
  EXPECT_EQ(match_formula(4, 6), 11);
  EXPECT_EQ(match_formula(4, 7), 12);
  EXPECT_EQ(rees_reg_formula(4, 6), 11);
  EXPECT_EQ(cochord_bound(5), 4);
  EXPECT_EQ(a_inv_formula(6, 8), 24);
  EXPECT_EQ(a_inv_formula(6, 7), 22);
  EXPECT_EQ(fiber_reg_formula(6, 8), 21);
  EXPECT_EQ(fiber_reg_formula(6, 7), 17);
  EXPECT_EQ(fiber_reg_formula(3, 9), 0);
  EXPECT_EQ(reg_upper_bound(3, 2), 5);
}

TEST(Formulas, DomainChecks) {
  EXPECT_THROW(reg_power_formula(1, 1), Error);
  EXPECT_THROW(reg_power_formula(3, 0), Error);
  EXPECT_THROW(a_inv_formula(3, 5), Error);
  EXPECT_THROW(depth_formula(1, 4), Error);
  try {
    a_inv_formula(2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadParams);
  }
}

TEST(Formulas, Catalogue) {
  auto small = formulas_at(3, 4, 2);
  auto large = formulas_at(5, 4, 2);
  EXPECT_EQ(large.size(), small.size() + 1);
  std::set<std::string> names;
  for (const auto& f : large) {
    names.insert(f.name);
    EXPECT_FALSE(f.statement.empty());
  }
  EXPECT_EQ(names.size(), large.size());
  EXPECT_TRUE(names.count("a_inv"));
}

TEST(Verify, SmallGridAgrees) {
  VerificationReport rep = verify_all({{2, 3, 1}, {2, 3, 2}});
  ASSERT_FALSE(rep.entries.empty());
  EXPECT_TRUE(rep.all_agree());
  EXPECT_FALSE(rep.any_failure());
  EXPECT_FALSE(rep.any_skipped());
  std::set<std::string> checks;
  for (const auto& e : rep.entries) checks.insert(e.check);
  for (const char* c : {"reg_power", "depth", "match", "sagbi_identities", "ini_power_commutes", "fiber_reg"})
    EXPECT_TRUE(checks.count(c)) << c;
  EXPECT_TRUE(std::is_sorted(rep.entries.begin(), rep.entries.end(),
                             [](const auto& a, const auto& b) { return a.params < b.params; }));
}

TEST(Verify, EmptyGrid) {
  VerificationReport rep = verify_all({});
  EXPECT_TRUE(rep.entries.empty());
  EXPECT_TRUE(rep.all_agree());
}

TEST(Verify, DepthEntry) {
  VerificationReport rep = verify_all({{3, 3, 1}});
  bool found = false;
  for (const auto& e : rep.entries)
    if (e.check == "depth") {
      found = true;
      EXPECT_EQ(e.formula, 5);
      EXPECT_EQ(e.oracle, 5);
      EXPECT_TRUE(e.agree());
    }
  EXPECT_TRUE(found);
}

TEST(Verify, BudgetIsSkippedNotFailed) {
  VerifyOptions opt;
  opt.resolution.lattice_cap = 10;
  VerificationReport rep = verify_all({{3, 3, 1}}, opt);
  EXPECT_TRUE(rep.any_skipped());
  EXPECT_FALSE(rep.all_agree());
  for (const auto& e : rep.entries)
    if (e.status == CheckStatus::Skipped) EXPECT_FALSE(e.note.empty());
}

TEST(Verify, AcceptanceGridShape) {
  auto g = acceptance_grid();
  EXPECT_EQ(g.size(), 14u);
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  EXPECT_TRUE(std::find(g.begin(), g.end(), GridPoint{4, 3, 2}) != g.end());
}

TEST(Render, TableAndJson) {
  VerificationReport rep;
  VerificationEntry a;
  a.check = "match";
  a.params = {4, 7, 0};
  a.formula = 12;
  a.oracle = 12;
  a.status = CheckStatus::Agree;
  VerificationEntry b = a;
  b.check = "reg_power";
  b.params = {2, 3, 2};
  b.oracle = 3;
  b.formula = 4;
  b.status = CheckStatus::Disagree;
  rep.entries = {a, b};

  std::string table = render_table(rep);
  std::istringstream lines(table);
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  EXPECT_EQ(header.rfind("m  n  t", 0), 0u);
  EXPECT_NE(row1.find(" - "), std::string::npos);
  EXPECT_NE(row2.find("disagree"), std::string::npos);
  EXPECT_EQ(header.find("check"), row1.find("match"));
  EXPECT_NE(render_table(rep, true).find("seconds"), std::string::npos);

  Json j = report_json(rep);
  EXPECT_FALSE(j["all_agree"].get<bool>());
  ASSERT_EQ(j["entries"].size(), 2u);
  EXPECT_EQ(j["entries"][0]["t"], 0);
  EXPECT_EQ(j["entries"][1]["status"], "disagree");
  EXPECT_FALSE(j["entries"][0].contains("seconds"));
  EXPECT_TRUE(report_json(rep, true)["entries"][0].contains("seconds"));
}
