#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "ringlab/ringlab.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  rl_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, RingLifecycleAndArithmetic) {
  rl_ring* r = nullptr;
  ASSERT_EQ(rl_ring_from_spec("Zn(9)", &r), RL_OK);
  EXPECT_EQ(rl_ring_order(r), 9u);
  EXPECT_EQ(rl_ring_characteristic(r), 9u);
  uint32_t out = 0;
  EXPECT_EQ(rl_ring_mul(r, 4, 7, &out), RL_OK);
  EXPECT_EQ(out, 1u);
  int unit = 0;
  EXPECT_EQ(rl_ring_inverse(r, 4, &unit, &out), RL_OK);
  EXPECT_TRUE(unit);
  EXPECT_EQ(out, 7u);
  EXPECT_EQ(rl_ring_inverse(r, 3, &unit, &out), RL_OK);
  EXPECT_FALSE(unit);
  EXPECT_EQ(rl_ring_add(r, 9, 0, &out), RL_ERR_INDEX_OUT_OF_RANGE);
  EXPECT_NE(std::strlen(rl_last_error()), 0u);
  char* name = nullptr;
  ASSERT_EQ(rl_ring_name(r, &name), RL_OK);
  EXPECT_EQ(take(name), "Zn(9)");
  rl_ring_free(r);
}

TEST(CApi, SetsRenderAndCopyOut) {
  rl_ring* r = nullptr;
  ASSERT_EQ(rl_ring_from_spec("Zn(9)", &r), RL_OK);
  char* s = nullptr;
  ASSERT_EQ(rl_ring_set_render(r, "delta", RL_RENDER_INDICES, &s), RL_OK);
  EXPECT_EQ(take(s), "{0, 3, 6}");
  ASSERT_EQ(rl_ring_set_render(r, "delta", RL_RENDER_JSON, &s), RL_OK);
  EXPECT_EQ(take(s), R"({"set":"delta","members":[0,3,6],"labels":["0","3","6"]})");
  size_t count = 0;
  std::vector<uint32_t> buf(2);
  ASSERT_EQ(rl_ring_set_members(r, "units", buf.data(), buf.size(), &count), RL_OK);
  EXPECT_EQ(count, 6u);
  EXPECT_EQ(buf, (std::vector<uint32_t>{1, 2}));
  EXPECT_EQ(rl_ring_set_render(r, "radical", RL_RENDER_INDICES, &s), RL_ERR_UNKNOWN_SET);
  rl_ring_free(r);
}

TEST(CApi, ErrorCodesForBadSpecs) {
  rl_ring* r = nullptr;
  EXPECT_EQ(rl_ring_from_spec("Mat(Zn(2), 2)", &r), RL_ERR_ARITY);
  EXPECT_EQ(rl_ring_from_spec("Mat(2,", &r), RL_ERR_SYNTAX);
  EXPECT_NE(std::string(rl_last_error()).find("offset"), std::string::npos);
  EXPECT_EQ(rl_ring_from_spec("Foo(2)", &r), RL_ERR_UNKNOWN_NAME);
  EXPECT_EQ(rl_ring_from_spec(nullptr, &r), RL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(r, nullptr);
  EXPECT_STREQ(rl_status_name(RL_ERR_ORDER_CAP), "order_cap");
}

TEST(CApi, OrderCap) {
  const size_t saved = rl_get_order_cap();
  rl_set_order_cap(16);
  rl_ring* r = nullptr;
  EXPECT_EQ(rl_ring_from_spec("Mat(2, Zn(3))", &r), RL_ERR_ORDER_CAP);
  rl_set_order_cap(saved);
  ASSERT_EQ(rl_ring_from_spec("Mat(2, Zn(3))", &r), RL_OK);
  rl_ring_free(r);
}

TEST(CApi, ClassifyPredicateExport) {
  rl_ring* r = nullptr;
  ASSERT_EQ(rl_ring_from_spec("Zn(3)", &r), RL_OK);
  int h = -1;
  ASSERT_EQ(rl_ring_predicate(r, "wdu", &h), RL_OK);
  EXPECT_EQ(h, 1);
  ASSERT_EQ(rl_ring_predicate(r, "du", &h), RL_OK);
  EXPECT_EQ(h, 0);
  EXPECT_EQ(rl_ring_predicate(r, "nope", &h), RL_ERR_UNKNOWN_PREDICATE);
  char* json = nullptr;
  ASSERT_EQ(rl_ring_classify(r, 1, &json), RL_OK);
  EXPECT_NE(take(json).find("\"wdu\": true"), std::string::npos);

  const auto path = (std::filesystem::temp_directory_path() / "ringlab_capi_z3.json").string();
  ASSERT_EQ(rl_ring_export_cayley(r, path.c_str()), RL_OK);
  rl_ring* back = nullptr;
  ASSERT_EQ(rl_ring_from_cayley_file(path.c_str(), &back), RL_OK);
  EXPECT_EQ(rl_ring_order(back), 3u);
  rl_ring_free(back);
  std::filesystem::remove(path);
  rl_ring_free(r);
}

TEST(CApi, CorpusAndVerify) {
  rl_corpus* c = nullptr;
  ASSERT_EQ(rl_corpus_default(&c), RL_OK);
  EXPECT_EQ(rl_corpus_size(c), 180u);
  char* spec = nullptr;
  ASSERT_EQ(rl_corpus_spec(c, 0, &spec), RL_OK);
  EXPECT_FALSE(take(spec).empty());
  EXPECT_EQ(rl_corpus_spec(c, 1000, &spec), RL_ERR_INDEX_OUT_OF_RANGE);
  char* report = nullptr;
  int failed = -1;
  ASSERT_EQ(rl_verify(c, "C6", 1, "text", 0, &report, &failed), RL_OK);
  EXPECT_EQ(failed, 0);
  EXPECT_EQ(take(report).rfind("C6 holds (4 instances)", 0), 0u);
  EXPECT_EQ(rl_verify(c, "C0", 1, "text", 0, &report, &failed), RL_ERR_UNKNOWN_CLAIM);
  EXPECT_EQ(rl_verify(c, "C6", 1, "yaml", 0, &report, &failed), RL_ERR_BAD_PARAMS);
  rl_corpus_free(c);
}
