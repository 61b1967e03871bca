#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "properties.hpp"
#include "ringlab/harness.hpp"

using namespace ringlab;

namespace {

const ClaimResult& find(const std::vector<ClaimResult>& results, const std::string& id) {
  for (const auto& r : results)
    if (r.id == id) return r;
  throw std::runtime_error("missing " + id);
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST(Harness, DefaultCorpusShape) {
  const auto& c = props::shared_corpus();
  EXPECT_GE(c.size(), 60u);
  EXPECT_EQ(c.size(), 180u);
  EXPECT_EQ(default_atom_specs().size(), 71u);
  EXPECT_EQ(c.entry(0).origin, "atom");
  std::set<std::string> specs;
  for (const auto& e : c.entries()) {
    EXPECT_TRUE(specs.insert(e.spec).second) << "duplicate " << e.spec;
    EXPECT_EQ(e.ring->name(), e.spec);
  }
}

TEST(Harness, RegistryHasTwentyThreeClaims) {
  ASSERT_EQ(claims().size(), 23u);
  for (std::size_t i = 0; i < claims().size(); ++i) EXPECT_EQ(claims()[i].id, "C" + std::to_string(i + 1));
  try {
    verify_claim("C99", props::shared_corpus());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_claim);
  }
}

TEST(Harness, EveryClaimHoldsOnDefaultCorpus) {
  const auto results = verify_all(props::shared_corpus());
  ASSERT_EQ(results.size(), 23u);
  for (const auto& r : results) EXPECT_NE(r.status, ClaimStatus::fails) << r.id;
  EXPECT_EQ(verify_exit_code(results), 0);
  const auto& c6 = find(results, "C6");
  EXPECT_EQ(c6.status, ClaimStatus::holds);
  EXPECT_EQ(c6.checked, 4u);
}

TEST(Harness, InclusiveFormNoteIsReported) {
  const auto r = verify_claim("C11", props::shared_corpus());
  bool noted = false;
  for (const auto& n : r.notes) noted = noted || n.find("inclusive reading") != std::string::npos;
  EXPECT_TRUE(noted);
}

TEST(Harness, JobCountDoesNotChangeOutput) {
  const auto& c = props::shared_corpus();
  EXPECT_EQ(report(verify(c, "all", 1), ReportFormat::json), report(verify(c, "all", 4), ReportFormat::json));
}

TEST(Harness, ReportFormats) {
  const auto results = verify(props::shared_corpus(), "C6");
  EXPECT_EQ(report(results, ReportFormat::text).rfind("C6 holds (4 instances)\n", 0), 0u);
  auto j = nlohmann::ordered_json::parse(report(results, ReportFormat::json));
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["id"], "C6");
  EXPECT_EQ(j[0]["status"], "holds");
  EXPECT_EQ(report(results, ReportFormat::csv).rfind("id,status,checked,witnesses\nC6,holds,4,", 0), 0u);
  EXPECT_NE(report(results, ReportFormat::markdown).find("| C6 | holds | 4 |"), std::string::npos);
  EXPECT_NE(report(results, ReportFormat::text, true).find("\x1b["), std::string::npos);
  EXPECT_THROW(parse_report_format("yaml"), Error);
}

TEST(Harness, FailuresCarryWitnesses) {
  // On a corpus made only of a matrix ring the WDU-specific claims are
  // vacuous, and C6 holds with one instance.
  auto path = temp_file("ringlab_mat_corpus.txt", "# just one\nMat(2, Zn(2))\n\n");
  auto c = corpus_from_file(path.string());
  EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(c.entry(0).origin, "file");
  EXPECT_EQ(verify_claim("C6", c).checked, 1u);
  EXPECT_EQ(verify_claim("C7", c).status, ClaimStatus::vacuous);
  std::filesystem::remove(path);
}

TEST(Harness, CorpusFileErrorsNameTheLine) {
  auto path = temp_file("ringlab_bad_corpus.txt", "Zn(2)\nZn(3\n");
  try {
    corpus_from_file(path.string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(":2"), std::string::npos) << e.what();
  }
  std::filesystem::remove(path);
}

TEST(Harness, FuzzIsSeeded) {
  Corpus a = default_corpus(), b = default_corpus();
  add_fuzz(a, 10, 7);
  add_fuzz(b, 10, 7);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_GT(a.size(), 180u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.entry(i).spec, b.entry(i).spec);
  for (const auto& r : verify_all(a)) EXPECT_NE(r.status, ClaimStatus::fails) << r.id;
}
