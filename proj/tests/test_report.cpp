#include <gtest/gtest.h>

#include "report.hpp"

using namespace barnette;

TEST(Report, PropertyReportShape) {
  auto j = property_report(p5_example_graph(), 5);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["vertices"], 14);
  EXPECT_TRUE(j["hamiltonian"].get<bool>());
  EXPECT_TRUE(j["p4"].get<bool>());
  EXPECT_FALSE(j["p5"].get<bool>());
  EXPECT_EQ(j["counterexamples"]["p5"]["path"].size(), 5u);
  EXPECT_EQ(j["witnesses"]["hamiltonian"]["vertices"].size(), 14u);
}

TEST(Report, NonHamiltonianHasNoWitness) {
  auto j = property_report(asano_graph(), 2);
  EXPECT_FALSE(j["hamiltonian"].get<bool>());
  EXPECT_FALSE(j["witnesses"].contains("hamiltonian"));
  EXPECT_FALSE(j.contains("p3"));
}

TEST(Report, DecompositionListsDistinctAndMultiset) {
  auto j = decomposition_report(tight_cut_decomposition(asano_graph()));
  EXPECT_EQ(j["braces"], (Json{canonical_form(c4_graph()), canonical_form(cube_graph())}));
  int total = 0;
  for (const auto& m : j["multiset"]) total += m["count"].get<int>();
  EXPECT_EQ(total, static_cast<int>(tight_cut_decomposition(asano_graph()).braces.size()));
  EXPECT_FALSE(j["trace"].empty());
}

TEST(Report, PfaffianWitnesses) {
  auto yes = pfaffian_report(cube_graph());
  EXPECT_TRUE(yes["pfaffian"].get<bool>());
  EXPECT_EQ(yes["witness"]["orientation"].size(), 12u);
  auto no = pfaffian_report(k33_graph());
  EXPECT_FALSE(no["pfaffian"].get<bool>());
  EXPECT_EQ(no["witness"]["k33_bisubdivision"]["paths"].size(), 9u);
  EXPECT_FALSE(no.contains("inconsistent"));
}

TEST(Report, CatalogCheckAndTransfer) {
  bool ok = false;
  auto j = catalog_check_json(catalog("cube"), &ok);
  EXPECT_TRUE(ok);
  EXPECT_TRUE(j["properties"]["brace"]["actual"].get<bool>());
  auto g = cube_expanded_cube();
  auto t = transfer_json(check_transfer(g, find_tight_cuts_cubic(g).front()));
  EXPECT_TRUE(t["ok"].get<bool>());
  EXPECT_EQ(t["checks"].size(), 5u);
}

TEST(Report, SurveyAndRecord) {
  auto rows = survey(12);
  auto j = survey_json(rows);
  EXPECT_EQ(j["rows"].size(), 3u);
  auto recs = generate(8);
  auto r = record_report_json(verify_record(recs[0]));
  EXPECT_TRUE(r["ok"].get<bool>());
  EXPECT_EQ(r["family_size"], 0);
}
